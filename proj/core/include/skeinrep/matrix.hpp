#ifndef SKEINREP_MATRIX_HPP
#define SKEINREP_MATRIX_HPP

#include <optional>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

// Dense matrix over Q(zeta_2p). Row-major, exact entries.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(CycloContextPtr ctx, int rows, int cols);
  static CycloMatrix identity(const CycloContextPtr& ctx, int n);
  static CycloMatrix diagonal(const CycloContextPtr& ctx, const std::vector<CycloNum>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CycloContextPtr& context() const { return ctx_; }

  CycloNum& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const CycloNum& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<CycloNum>& data() const { return data_; }

  CycloMatrix operator+(const CycloMatrix& o) const;
  CycloMatrix operator-(const CycloMatrix& o) const;
  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix scaled(const CycloNum& c) const;
  CycloMatrix transpose() const;
  CycloMatrix conjugated() const;  // entrywise A -> A^{-1}

  bool is_zero() const;
  bool operator==(const CycloMatrix& o) const;
  bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

 private:
  CycloContextPtr ctx_;
  int rows_ = 0, cols_ = 0;
  std::vector<CycloNum> data_;
};

// Scale a row vector so that all rational coefficients become integers with
// unit content; tames coefficient growth during elimination.
void normalize_row_content(std::vector<CycloNum>& row);

struct RrefResult {
  std::vector<std::vector<CycloNum>> rows;  // reduced rows, pivot entries 1
  std::vector<int> pivot_cols;              // ascending
};

// Reduced row echelon form over the field, deterministic pivot choice
// (leftmost column, first usable row).
RrefResult rref(std::vector<std::vector<CycloNum>> rows);

std::optional<CycloMatrix> inverse(const CycloMatrix& m);

// Basis of the right kernel {x : M x = 0}, deterministic.
std::vector<std::vector<CycloNum>> kernel_basis(const CycloMatrix& m);

// Incrementally maintained reduced echelon basis of a subspace of row
// vectors; used by algebra saturation and membership tests.
class EchelonBasis {
 public:
  explicit EchelonBasis(CycloContextPtr ctx, int width)
      : ctx_(std::move(ctx)), width_(width) {}

  // Reduces v against the basis; if a nonzero remainder is left, inserts it
  // (fully reduced, pivot 1) and returns true.
  bool insert(std::vector<CycloNum> v);
  bool contains(std::vector<CycloNum> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<CycloNum>>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

 private:
  void reduce(std::vector<CycloNum>& v) const;

  CycloContextPtr ctx_;
  int width_;
  std::vector<std::vector<CycloNum>> rows_;  // kept mutually reduced
  std::vector<int> pivots_;                  // pivots_[i] = pivot column of rows_[i]
};

}  // namespace skeinrep

#endif
