#include "permcode/gf/polynomial.h"

#include <algorithm>
#include <sstream>

#include "permcode/core/error.h"

namespace permcode::gf {

Polynomial::Polynomial(std::uint64_t modulus) : modulus_(modulus) {}

Polynomial::Polynomial(std::vector<std::uint64_t> coefficients, std::uint64_t modulus)
    : coefficients_(std::move(coefficients)), modulus_(modulus) {
  for (auto& c : coefficients_) c %= modulus_;
  Trim();
}

Polynomial::Polynomial(const std::vector<FieldElement>& coefficients)
    : modulus_(coefficients.empty() ? 0 : coefficients.front().modulus()) {
  if (coefficients.empty()) throw ParameterError("polynomial needs a modulus");
  coefficients_.reserve(coefficients.size());
  for (const auto& c : coefficients) {
    if (c.modulus() != modulus_) throw ParameterError("mixed moduli in polynomial");
    coefficients_.push_back(c.value());
  }
  Trim();
}

Polynomial Polynomial::Constant(FieldElement c) { return Monomial(c, 0); }

Polynomial Polynomial::Monomial(FieldElement c, int degree) {
  std::vector<std::uint64_t> coefficients(degree + 1, 0);
  coefficients[degree] = c.value();
  return Polynomial(std::move(coefficients), c.modulus());
}

void Polynomial::Trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

void Polynomial::CheckSameField(const Polynomial& other) const {
  if (modulus_ != other.modulus_) throw ParameterError("polynomials over different fields");
}

FieldElement Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return FieldElement(0, modulus_);
  return FieldElement(coefficients_[power], modulus_);
}

FieldElement Polynomial::LeadingCoefficient() const {
  return is_zero() ? FieldElement(0, modulus_) : coefficient(degree());
}

FieldElement Polynomial::Evaluate(const FieldElement& x) const {
  const std::uint64_t xv = x.value() % modulus_;
  std::uint64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = (acc * xv + *it) % modulus_;
  }
  return FieldElement(acc, modulus_);
}

Polynomial Polynomial::Monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = LeadingCoefficient().Inverse();
  std::vector<std::uint64_t> out(coefficients_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coefficients_[i] * inv.value()) % modulus_;
  return Polynomial(std::move(out), modulus_);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.CheckSameField(b);
  std::vector<std::uint64_t> out(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] = a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return Polynomial(std::move(out), a.modulus_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.CheckSameField(b);
  const std::uint64_t q = a.modulus_;
  std::vector<std::uint64_t> out(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] = a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] = out[i] + q - b.coefficients_[i];
  return Polynomial(std::move(out), q);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.CheckSameField(b);
  const std::uint64_t q = a.modulus_;
  if (a.is_zero() || b.is_zero()) return Polynomial(q);
  std::vector<std::uint64_t> out(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] = (out[i + j] + a.coefficients_[i] * b.coefficients_[j]) % q;
    }
  }
  return Polynomial(std::move(out), q);
}

std::string Polynomial::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out << (i ? ", " : "") << coefficients_[i];
  out << ']';
  return out.str();
}

DivisionResult DivMod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ParameterError("polynomial division by zero");
  if (dividend.modulus() != divisor.modulus()) throw ParameterError("polynomials over different fields");
  const std::uint64_t q = divisor.modulus();
  std::vector<std::uint64_t> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial(q), dividend};
  std::vector<std::uint64_t> quot(dividend.degree() - dd + 1, 0);
  const std::uint64_t lead_inv = divisor.LeadingCoefficient().Inverse().value();
  for (int k = dividend.degree(); k >= dd; --k) {
    const std::uint64_t factor = (rem[k] * lead_inv) % q;
    quot[k - dd] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= dd; ++i) {
      const std::uint64_t sub = (factor * divisor.coefficients()[i]) % q;
      rem[k - dd + i] = (rem[k - dd + i] + q - sub) % q;
    }
  }
  return {Polynomial(std::move(quot), q), Polynomial(std::move(rem), q)};
}

Polynomial CharPolynomial(std::span<const FieldElement> labels) {
  if (labels.empty()) throw ParameterError("characteristic polynomial of an empty set");
  const std::uint64_t q = labels.front().modulus();
  std::vector<std::uint64_t> c{1};
  for (const auto& b : labels) {
    // Multiply by (X + b).
    std::vector<std::uint64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = (next[i + 1] + c[i]) % q;
      next[i] = (next[i] + c[i] * b.value()) % q;
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c), q);
}

std::vector<FieldElement> PowerSums(std::span<const FieldElement> labels, int count,
                                    std::uint64_t modulus) {
  std::vector<FieldElement> sums(count, FieldElement(0, modulus));
  for (const auto& b : labels) {
    FieldElement power = b;
    for (int i = 0; i < count; ++i) {
      sums[i] += power;
      power *= b;
    }
  }
  return sums;
}

std::vector<FieldElement> NewtonToElementary(std::span<const FieldElement> power_sums,
                                             int count) {
  if (count < 0 || static_cast<std::size_t>(count) > power_sums.size()) {
    throw ParameterError("newton: not enough power sums");
  }
  if (count == 0) return {};
  const std::uint64_t q = power_sums.front().modulus();
  if (q <= static_cast<std::uint64_t>(count)) {
    throw ParameterError("newton: field too small to invert 1.." + std::to_string(count));
  }
  std::vector<FieldElement> a(count + 1, FieldElement(0, q));
  a[0] = FieldElement(1, q);
  for (int k = 1; k <= count; ++k) {
    FieldElement acc(0, q);
    for (int i = 1; i <= k; ++i) {
      const FieldElement term = a[k - i] * power_sums[i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    a[k] = acc / FieldElement(static_cast<std::uint64_t>(k), q);
  }
  return {a.begin() + 1, a.end()};
}

Polynomial PolyGcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw ParameterError("gcd of two zero polynomials");
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = DivMod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

std::vector<FieldElement> RootSet::values() const {
  std::vector<FieldElement> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

RootSet FindRoots(const Polynomial& f) {
  if (f.is_zero()) throw ParameterError("roots of the zero polynomial are undefined");
  const std::uint64_t q = f.modulus();
  RootSet result;
  std::vector<std::uint64_t> candidates;
  if (f.degree() == 1) {
    // a1 X + a0 = 0
    candidates.push_back((-(f.coefficient(0) / f.coefficient(1))).value());
  } else if (f.degree() > 1) {
    for (std::uint64_t x = 0; x < q; ++x) {
      if (f.Evaluate(FieldElement(x, q)).is_zero()) candidates.push_back(x);
    }
  }
  int total = 0;
  for (std::uint64_t x : candidates) {
    const FieldElement r(x, q);
    const Polynomial linear({q - x, 1}, q);  // X - r
    Polynomial rest = f;
    int multiplicity = 0;
    for (;;) {
      DivisionResult d = DivMod(rest, linear);
      if (!d.remainder.is_zero()) break;
      ++multiplicity;
      rest = std::move(d.quotient);
    }
    result.roots.push_back({r, multiplicity});
    result.repeated = result.repeated || multiplicity > 1;
    total += multiplicity;
  }
  result.splits = total == f.degree();
  return result;
}

}  // namespace permcode::gf
