#include "skeinrep/matrix.hpp"

#include <algorithm>

namespace skeinrep {

CycloMatrix::CycloMatrix(CycloContextPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)),
      rows_(rows),
      cols_(cols),
      data_(static_cast<size_t>(rows) * cols, CycloNum::zero(ctx_)) {}

CycloMatrix CycloMatrix::identity(const CycloContextPtr& ctx, int n) {
  CycloMatrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum::one(ctx);
  return m;
}

CycloMatrix CycloMatrix::diagonal(const CycloContextPtr& ctx, const std::vector<CycloNum>& d) {
  CycloMatrix m(ctx, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("matrix shape mismatch");
  CycloMatrix m(ctx_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("matrix shape mismatch");
  CycloMatrix m(ctx_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw usage_error("matrix shape mismatch in product");
  CycloMatrix m(ctx_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycloNum& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycloNum& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  return m;
}

CycloMatrix CycloMatrix::scaled(const CycloNum& c) const {
  CycloMatrix m(ctx_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
  return m;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix m(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

CycloMatrix CycloMatrix::conjugated() const {
  CycloMatrix m(ctx_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conjugate();
  return m;
}

bool CycloMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void normalize_row_content(std::vector<CycloNum>& row) {
  Integer den(1), num(0);
  for (const auto& x : row)
    for (const auto& q : x.coeffs()) {
      if (q == 0) continue;
      den = lcm(den, q.get_den());
      num = gcd(num, q.get_num());
    }
  if (num == 0) return;
  Rational scale(den, abs(num));
  scale.canonicalize();
  if (scale == 1) return;
  for (auto& x : row) x = x * scale;
}

namespace {

int find_pivot(const std::vector<CycloNum>& v) {
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) return static_cast<int>(j);
  return -1;
}

}  // namespace

RrefResult rref(std::vector<std::vector<CycloNum>> rows) {
  RrefResult out;
  for (auto& r : rows) {
    // reduce against existing pivot rows
    for (size_t k = 0; k < out.rows.size(); ++k) {
      const CycloNum& c = r[out.pivot_cols[k]];
      if (c.is_zero()) continue;
      const CycloNum f = c;
      for (size_t j = 0; j < r.size(); ++j)
        if (!out.rows[k][j].is_zero()) r[j] -= out.rows[k][j] * f;
    }
    const int piv = find_pivot(r);
    if (piv < 0) continue;
    const CycloNum inv = r[piv].inverse();
    for (auto& x : r) x = x * inv;
    // clear this column from earlier rows
    for (size_t k = 0; k < out.rows.size(); ++k) {
      const CycloNum c = out.rows[k][piv];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < r.size(); ++j)
        if (!r[j].is_zero()) out.rows[k][j] -= r[j] * c;
    }
    // keep rows sorted by pivot column
    size_t pos = 0;
    while (pos < out.pivot_cols.size() && out.pivot_cols[pos] < piv) ++pos;
    out.rows.insert(out.rows.begin() + pos, std::move(r));
    out.pivot_cols.insert(out.pivot_cols.begin() + pos, piv);
  }
  return out;
}

std::optional<CycloMatrix> inverse(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw usage_error("inverse of a non-square matrix");
  const int n = m.rows();
  const auto& ctx = m.context();
  std::vector<std::vector<CycloNum>> aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i].assign(2 * n, CycloNum::zero(ctx));
    for (int j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
    aug[i][n + i] = CycloNum::one(ctx);
  }
  RrefResult r = rref(std::move(aug));
  if (static_cast<int>(r.rows.size()) < n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (r.pivot_cols[i] != i) return std::nullopt;
  CycloMatrix inv(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.rows[i][n + j];
  return inv;
}

std::vector<std::vector<CycloNum>> kernel_basis(const CycloMatrix& m) {
  const auto& ctx = m.context();
  std::vector<std::vector<CycloNum>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    normalize_row_content(rows[i]);
  }
  RrefResult r = rref(std::move(rows));

  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : r.pivot_cols) is_pivot[p] = 1;
  std::vector<std::vector<CycloNum>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloNum> v(m.cols(), CycloNum::zero(ctx));
    v[free] = CycloNum::one(ctx);
    for (size_t k = 0; k < r.rows.size(); ++k)
      v[r.pivot_cols[k]] = -r.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(std::vector<CycloNum>& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const CycloNum c = v[pivots_[k]];
    if (c.is_zero()) continue;
    for (int j = 0; j < width_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= rows_[k][j] * c;
  }
}

bool EchelonBasis::insert(std::vector<CycloNum> v) {
  if (static_cast<int>(v.size()) != width_) throw usage_error("echelon basis width mismatch");
  normalize_row_content(v);
  reduce(v);
  const int piv = find_pivot(v);
  if (piv < 0) return false;
  const CycloNum inv = v[piv].inverse();
  for (auto& x : v) x = x * inv;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const CycloNum c = rows_[k][piv];
    if (c.is_zero()) continue;
    for (int j = 0; j < width_; ++j)
      if (!v[j].is_zero()) rows_[k][j] -= v[j] * c;
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool EchelonBasis::contains(std::vector<CycloNum> v) const {
  if (static_cast<int>(v.size()) != width_) throw usage_error("echelon basis width mismatch");
  reduce(v);
  return find_pivot(v) < 0;
}

}  // namespace skeinrep
