#include "permcode/gf/linear.h"

#include <utility>

#include "permcode/core/error.h"

namespace permcode::gf {
namespace {

struct Echelon {
  std::vector<std::vector<std::uint64_t>> rows;  // augmented
  std::vector<int> pivot_cols;
};

std::uint64_t InverseMod(std::uint64_t v, std::uint64_t q) {
  return FieldElement(v, q).Inverse().value();
}

// Gauss-Jordan elimination over the first `cols` columns.
Echelon Reduce(std::vector<std::vector<std::uint64_t>> m, int cols, std::uint64_t q) {
  Echelon e;
  int pivot_row = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m[r][c] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(m[pivot_row], m[found]);
    const std::uint64_t inv = InverseMod(m[pivot_row][c], q);
    for (auto& v : m[pivot_row]) v = (v * inv) % q;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) {
        m[r][k] = (m[r][k] + q - (f * m[pivot_row][k]) % q) % q;
      }
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

FieldMatrix::FieldMatrix(int rows, int cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus) {
  if (rows < 0 || cols < 0) throw ParameterError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

void FieldMatrix::set(int r, int c, const FieldElement& v) {
  if (v.modulus() != modulus_) throw ParameterError("matrix entry from another field");
  data_[Index(r, c)] = v.value();
}

std::vector<FieldElement> FieldMatrix::Multiply(const std::vector<FieldElement>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ParameterError("matrix-vector size mismatch");
  std::vector<FieldElement> out(rows_, FieldElement(0, modulus_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
  }
  return out;
}

int FieldMatrix::Rank() const {
  std::vector<std::vector<std::uint64_t>> m(rows_);
  for (int r = 0; r < rows_; ++r) m[r].assign(data_.begin() + Index(r, 0), data_.begin() + Index(r, 0) + cols_);
  return static_cast<int>(Reduce(std::move(m), cols_, modulus_).pivot_cols.size());
}

std::optional<std::vector<FieldElement>> LinearSolve(const FieldMatrix& a,
                                                     const std::vector<FieldElement>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ParameterError("right-hand side size mismatch");
  const std::uint64_t q = a.modulus();
  std::vector<std::vector<std::uint64_t>> m(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    m[r].resize(a.cols() + 1);
    for (int c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c).value();
    if (b[r].modulus() != q) throw ParameterError("right-hand side from another field");
    m[r][a.cols()] = b[r].value();
  }
  Echelon e = Reduce(std::move(m), a.cols(), q);
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (int r = rank; r < a.rows(); ++r) {
    if (e.rows[r][a.cols()] != 0) return std::nullopt;
  }
  std::vector<FieldElement> x(a.cols(), FieldElement(0, q));
  for (int r = 0; r < rank; ++r) x[e.pivot_cols[r]] = FieldElement(e.rows[r][a.cols()], q);
  return x;
}

}  // namespace permcode::gf
