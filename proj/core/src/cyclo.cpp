#include "skeinrep/cyclo.hpp"

#include <algorithm>
#include <sstream>

namespace skeinrep {

namespace {

// --- dense integer/rational polynomial helpers (ascending coefficients) ---

int poly_degree(const std::vector<Rational>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

void poly_trim(std::vector<Rational>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division of integer polynomials, remainder must be zero.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
  std::vector<Integer> r = num;
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(r.size()) - 1;
  std::vector<Integer> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    Integer c = r[k + dd] / den[dd];
    q[k] = c;
    if (c != 0)
      for (int i = 0; i <= dd; ++i) r[k + i] -= c * den[i];
  }
  for (const auto& c : r)
    if (c != 0) throw error("cyclotomic polynomial division left a remainder");
  return q;
}

// n-th cyclotomic polynomial via Phi_n = (X^n - 1) / prod_{d|n, d<n} Phi_d.
std::vector<Integer> cyclotomic_polynomial(int n) {
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

// Reduce a rational polynomial mod the (monic, integer) modulus in place,
// then resize to deg(modulus).
void reduce_mod(std::vector<Rational>& a, const std::vector<Integer>& modulus) {
  const int d = static_cast<int>(modulus.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
    if (a[k] == 0) continue;
    Rational c = a[k];
    for (int i = 0; i < d; ++i) a[k - d + i] -= c * modulus[i];
    a[k] = 0;
  }
  a.resize(d, Rational(0));
}

}  // namespace

CycloContext::CycloContext(int p) : p_(p) {
  if (p < 6 || p % 2 != 0)
    throw usage_error("level p must be an even integer with p >= 6, got " + std::to_string(p));
  modulus_ = cyclotomic_polynomial(2 * p);
  degree_ = static_cast<int>(modulus_.size()) - 1;

  powers_.resize(2 * p);
  std::vector<Rational> cur(degree_, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < 2 * p; ++k) {
    powers_[k] = cur;
    // multiply by X and reduce
    cur.insert(cur.begin(), Rational(0));
    reduce_mod(cur, modulus_);
  }
}

std::shared_ptr<const CycloContext> CycloContext::make(int p) {
  return std::shared_ptr<const CycloContext>(new CycloContext(p));
}

const std::vector<Rational>& CycloContext::power_of_a(long k) const {
  long m = k % (2 * p_);
  if (m < 0) m += 2 * p_;
  return powers_[static_cast<size_t>(m)];
}

namespace {

const CycloContextPtr& merge_contexts(const CycloContextPtr& a, const CycloContextPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->level() != b->level())
    throw usage_error("cyclotomic context mismatch: p=" + std::to_string(a->level()) +
                      " vs p=" + std::to_string(b->level()));
  return a;
}

}  // namespace

CycloNum::CycloNum(CycloContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::zero(const CycloContextPtr& ctx) {
  return CycloNum(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

CycloNum CycloNum::one(const CycloContextPtr& ctx) { return from_rational(ctx, Rational(1)); }

CycloNum CycloNum::from_rational(const CycloContextPtr& ctx, const Rational& q) {
  std::vector<Rational> c(ctx->degree(), Rational(0));
  c[0] = q;
  return CycloNum(ctx, std::move(c));
}

CycloNum CycloNum::from_coeffs(const CycloContextPtr& ctx, std::vector<Rational> coeffs) {
  for (auto& q : coeffs) q.canonicalize();  // callers may pass mpq_class(n, d) raw
  reduce_mod(coeffs, ctx->modulus());
  return CycloNum(ctx, std::move(coeffs));
}

CycloNum CycloNum::a_power(const CycloContextPtr& ctx, long k) {
  return CycloNum(ctx, ctx->power_of_a(k));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (!ctx_) return false;
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycloNum::rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

CycloNum CycloNum::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return CycloNum(ctx_, std::move(c));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  const CycloContextPtr& ctx = merge_contexts(ctx_, o.ctx_);
  if (!ctx) return CycloNum();
  if (!ctx_) return o;
  if (!o.ctx_) return *this;
  std::vector<Rational> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return CycloNum(ctx, std::move(c));
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  const CycloContextPtr& ctx = merge_contexts(ctx_, o.ctx_);
  if (!ctx) return CycloNum();
  if (!ctx_ || !o.ctx_) return CycloNum::zero(ctx);
  const size_t d = coeffs_.size();
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_mod(conv, ctx->modulus());
  return CycloNum(ctx, std::move(conv));
}

CycloNum CycloNum::operator*(const Rational& q) const {
  if (!ctx_) return CycloNum();
  std::vector<Rational> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * q;
  return CycloNum(ctx_, std::move(c));
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

bool CycloNum::operator==(const CycloNum& o) const {
  if (!ctx_ || !o.ctx_) return is_zero() && o.is_zero();
  merge_contexts(ctx_, o.ctx_);
  return coeffs_ == o.coeffs_;
}

bool CycloNum::operator<(const CycloNum& o) const {
  const int pa = ctx_ ? ctx_->level() : 0;
  const int pb = o.ctx_ ? o.ctx_->level() : 0;
  if (pa != pb) return pa < pb;
  for (size_t i = 0; i < std::min(coeffs_.size(), o.coeffs_.size()); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return coeffs_.size() < o.coeffs_.size();
}

CycloNum CycloNum::inverse() const {
  if (!ctx_ || is_zero()) throw usage_error("division by zero in Q(zeta_2p)");

  // Extended Euclid on (Phi_2p, this). Invariant: r = s * this (mod Phi).
  std::vector<Rational> r0(ctx_->modulus().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx_->modulus()[i]);
  std::vector<Rational> r1 = coeffs_;
  poly_trim(r0);
  poly_trim(r1);
  std::vector<Rational> s0, s1{Rational(1)};

  while (true) {
    const int d1 = poly_degree(r1);
    if (d1 < 0) throw integrity_error("gcd with irreducible modulus vanished");
    if (d1 == 0) break;
    // r0 = q*r1 + rem
    std::vector<Rational> rem = r0;
    std::vector<Rational> q(std::max<int>(0, poly_degree(r0) - d1 + 1), Rational(0));
    for (int k = poly_degree(rem) - d1; k >= 0; --k) {
      Rational c = rem[k + d1] / r1[d1];
      q[k] = c;
      if (c != 0)
        for (int i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
    }
    poly_trim(rem);
    // s_next = s0 - q*s1
    std::vector<Rational> snext = s0;
    snext.resize(std::max(snext.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
    }
    poly_trim(snext);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }

  // r1 is a nonzero constant; inverse = s1 / r1.
  Rational c = r1[0];
  std::vector<Rational> inv(ctx_->degree(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / c;
  return CycloNum(ctx_, std::move(inv));
}

CycloNum CycloNum::conjugate() const {
  if (!ctx_) return CycloNum();
  CycloNum out = CycloNum::zero(ctx_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += CycloNum::a_power(ctx_, -static_cast<long>(i)) * coeffs_[i];
  }
  return out;
}

std::string CycloNum::to_string() const {
  if (!ctx_ || is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i == 1) os << "*A";
    if (i > 1) os << "*A^" << i;
    first = false;
  }
  return os.str();
}

CycloNum quantum_int(const CycloContextPtr& ctx, int n) {
  if (n < 0) throw usage_error("quantum integer [n] requires n >= 0");
  CycloNum out = CycloNum::zero(ctx);
  for (int t = 0; t < n; ++t) out += CycloNum::a_power(ctx, 2L * (n - 1) - 4L * t);
  return out;
}

CycloNum quantum_factorial(const CycloContextPtr& ctx, int n) {
  if (n < 0) throw usage_error("quantum factorial [n]! requires n >= 0");
  CycloNum out = CycloNum::one(ctx);
  for (int k = 2; k <= n; ++k) out *= quantum_int(ctx, k);
  return out;
}

}  // namespace skeinrep
