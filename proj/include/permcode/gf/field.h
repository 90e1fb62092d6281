#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace permcode::gf {

// An element of F_q. The modulus travels with the value; operations on elements
// of different fields throw ParameterError. Moduli are below 2^32 and
// products fit in 64 bits. Division assumes q is prime.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint64_t value, std::uint64_t modulus);

  // Reduces a signed integer into [0, q).
  static FieldElement FromSigned(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement Pow(std::uint64_t exponent) const;
  FieldElement Inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;

  std::string ToString() const { return std::to_string(value_); }

 private:
  void CheckSameField(const FieldElement& other) const;

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

bool IsPrime(std::uint64_t n);

// Smallest prime p >= n.
std::uint64_t NextPrimeAtLeast(std::uint64_t n);

// Injection used to label ordered pairs of [N] with field elements.
//   kCompact:     (i-1)(N-1) + (j-1) - [j > i], a bijection onto [0, N^2 - N).
//   kPaperCompat: N(i-1) + (j-1), injective only when q >= N^2 - 1.
enum class LabelingMode { kCompact, kPaperCompat };

std::string ToString(LabelingMode mode);
LabelingMode ParseLabelingMode(const std::string& text);

// Smallest prime usable with the given labeling: >= N^2 - N (compact) or
// >= N^2 - 1 (kPaperCompat). Requires N >= 2.
std::uint64_t SmallestSuitablePrime(int n, LabelingMode mode);

}  // namespace permcode::gf
