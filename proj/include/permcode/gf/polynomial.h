#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permcode/gf/field.h"

namespace permcode::gf {

// Dense polynomial over F_q, coefficients in ascending degree. The leading
// coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  explicit Polynomial(std::uint64_t modulus);
  Polynomial(std::vector<std::uint64_t> coefficients, std::uint64_t modulus);
  explicit Polynomial(const std::vector<FieldElement>& coefficients);

  static Polynomial Constant(FieldElement c);
  // c * X^degree
  static Polynomial Monomial(FieldElement c, int degree);

  std::uint64_t modulus() const { return modulus_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  FieldElement coefficient(int power) const;
  FieldElement LeadingCoefficient() const;
  const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }

  FieldElement Evaluate(const FieldElement& x) const;
  Polynomial Monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Coefficient list, ascending degree, e.g. "[94, 95, 1]".
  std::string ToString() const;

 private:
  void Trim();
  void CheckSameField(const Polynomial& other) const;

  std::vector<std::uint64_t> coefficients_;
  std::uint64_t modulus_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Throws ParameterError on division by the zero polynomial.
DivisionResult DivMod(const Polynomial& dividend, const Polynomial& divisor);

// f(X; B) = prod_{b in B} (X + b). Monic, degree |B|.
Polynomial CharPolynomial(std::span<const FieldElement> labels);

// (sum b, sum b^2, ..., sum b^count) over F_q.
std::vector<FieldElement> PowerSums(std::span<const FieldElement> labels, int count,
                                    std::uint64_t modulus);

// First `count` elementary symmetric functions from the first `count` power sums
// via Newton's identities: a_k = k^{-1} sum_{i=1..k} (-1)^{i-1} a_{k-i} p_i.
// Requires q > count.
std::vector<FieldElement> NewtonToElementary(std::span<const FieldElement> power_sums,
                                             int count);

// Monic greatest common divisor. Throws ParameterError when both inputs are zero.
Polynomial PolyGcd(const Polynomial& f, const Polynomial& g);

struct Root {
  FieldElement value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;   // ascending by value
  bool repeated = false;     // some root has multiplicity > 1
  bool splits = false;       // multiplicities sum to the degree

  std::vector<FieldElement> values() const;
};

// All roots in F_q by exhaustive evaluation. Throws ParameterError for the zero
// polynomial.
RootSet FindRoots(const Polynomial& f);

}  // namespace permcode::gf
