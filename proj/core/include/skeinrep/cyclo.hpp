#ifndef SKEINREP_CYCLO_HPP
#define SKEINREP_CYCLO_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "skeinrep/errors.hpp"

namespace skeinrep {

using Rational = mpq_class;
using Integer = mpz_class;

// Arithmetic context for the cyclotomic field Q(zeta_{2p}), p even, p >= 6.
// A denotes the residue class of X in Q[X]/Phi_{2p}(X), a primitive 2p-th
// root of unity. All scalars in the library live in one of these fields.
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> make(int p);

  int level() const { return p_; }
  int degree() const { return degree_; }  // phi(2p)

  // Coefficients of Phi_{2p}, ascending, size degree()+1, monic.
  const std::vector<Integer>& modulus() const { return modulus_; }

  // X^k mod Phi_{2p} for any integer k (taken mod 2p). Size degree().
  const std::vector<Rational>& power_of_a(long k) const;

 private:
  explicit CycloContext(int p);

  int p_;
  int degree_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<Rational>> powers_;  // 2p entries
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

// An element of Q(zeta_{2p}) in reduced power-basis form: a rational
// coefficient vector of length phi(2p). Values are immutable; arithmetic
// returns new values. A default-constructed CycloNum is the exact zero with
// no attached context and combines with values from any context.
class CycloNum {
 public:
  CycloNum() = default;

  static CycloNum zero(const CycloContextPtr& ctx);
  static CycloNum one(const CycloContextPtr& ctx);
  static CycloNum from_rational(const CycloContextPtr& ctx, const Rational& q);
  static CycloNum from_coeffs(const CycloContextPtr& ctx, std::vector<Rational> coeffs);
  // A^k for any integer k (negative allowed).
  static CycloNum a_power(const CycloContextPtr& ctx, long k);

  const CycloContextPtr& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const;  // coefficient of A^0

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;  // throws on division by zero
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

  CycloNum operator*(const Rational& q) const;

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }
  // Lexicographic order on (level, coefficients); usable as a map key.
  bool operator<(const CycloNum& o) const;

  CycloNum inverse() const;  // extended Euclid mod Phi_{2p}; throws on zero
  // The ring automorphism A -> A^{-1} (scalar conjugation of the
  // hermitian form).
  CycloNum conjugate() const;

  std::string to_string() const;  // debug form, e.g. "1/2 + 3*A^2"

 private:
  CycloNum(CycloContextPtr ctx, std::vector<Rational> coeffs);

  CycloContextPtr ctx_;              // null for the context-free zero
  std::vector<Rational> coeffs_;     // size degree(); empty for the free zero
};

// Quantum integer [n] = A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}
// and quantum factorial [n]! = [1][2]...[n]. Require n >= 0.
CycloNum quantum_int(const CycloContextPtr& ctx, int n);
CycloNum quantum_factorial(const CycloContextPtr& ctx, int n);

}  // namespace skeinrep

#endif
