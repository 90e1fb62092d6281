#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permcode/gf/field.h"

namespace permcode::gf {

// Row-major dense matrix over F_q.
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols, std::uint64_t modulus);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }

  FieldElement at(int r, int c) const { return FieldElement(data_[Index(r, c)], modulus_); }
  void set(int r, int c, const FieldElement& v);

  std::vector<FieldElement> Multiply(const std::vector<FieldElement>& x) const;

  // Reduced-row-echelon rank.
  int Rank() const;

 private:
  std::size_t Index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_;
  int cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

// Some solution of A x = b, with every free variable set to zero, or nullopt when
// the system is inconsistent.
std::optional<std::vector<FieldElement>> LinearSolve(const FieldMatrix& a,
                                                     const std::vector<FieldElement>& b);

}  // namespace permcode::gf
