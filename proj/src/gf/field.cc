#include "permcode/gf/field.h"

#include <limits>

#include "permcode/core/error.h"

namespace permcode::gf {

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError("field modulus must lie in [2, 2^32)");
  }
  value_ = value % modulus;
}

FieldElement FieldElement::FromSigned(std::int64_t value, std::uint64_t modulus) {
  const std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return FieldElement(static_cast<std::uint64_t>(r), modulus);
}

void FieldElement::CheckSameField(const FieldElement& other) const {
  if (modulus_ != other.modulus_) throw ParameterError("field elements from different fields");
}

FieldElement FieldElement::Pow(std::uint64_t exponent) const {
  FieldElement result(1, modulus_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) throw ParameterError("zero has no multiplicative inverse");
  return Pow(modulus_ - 2);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  CheckSameField(other);
  value_ = (value_ + other.value_) % modulus_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  CheckSameField(other);
  value_ = (value_ + modulus_ - other.value_) % modulus_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  CheckSameField(other);
  value_ = (value_ * other.value_) % modulus_;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.Inverse();
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t NextPrimeAtLeast(std::uint64_t n) {
  while (!IsPrime(n)) ++n;
  return n;
}

std::string ToString(LabelingMode mode) {
  return mode == LabelingMode::kCompact ? "compact" : "paper";
}

LabelingMode ParseLabelingMode(const std::string& text) {
  if (text == "compact") return LabelingMode::kCompact;
  if (text == "paper" || text == "paper-compat") return LabelingMode::kPaperCompat;
  throw ParameterError("unknown labeling mode '" + text + "' (expected compact or paper)");
}

std::uint64_t SmallestSuitablePrime(int n, LabelingMode mode) {
  if (n < 2) throw ParameterError("suitable prime requires N >= 2");
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const std::uint64_t floor = mode == LabelingMode::kCompact ? nn * nn - nn : nn * nn - 1;
  const std::uint64_t q = NextPrimeAtLeast(floor);
  // Bertrand's postulate keeps q below 2(N^2 - N) once N >= 4.
  if (n >= 4 && q >= 2 * (nn * nn - nn)) {
    throw InternalError("suitable prime exceeded 2(N^2 - N)");
  }
  return q;
}

}  // namespace permcode::gf
