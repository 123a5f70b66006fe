#ifndef SKEINREP_ALGEBRA_HPP
#define SKEINREP_ALGEBRA_HPP

#include <string>
#include <vector>

#include "skeinrep/operators.hpp"

namespace skeinrep {

// Linear basis of the unital algebra generated by a set of operators,
// kept as a canonical reduced echelon form of vectorized matrices.
class AlgebraBasis {
 public:
  const SurfaceSpec& spec() const { return spec_; }
  int space_dim() const { return dim_; }
  int rank() const { return echelon_.rank(); }
  int rounds() const { return rounds_; }
  const std::vector<CycloMatrix>& representatives() const { return reps_; }
  const EchelonBasis& echelon() const { return echelon_; }

  friend AlgebraBasis saturate(Space& sp, const std::vector<Operator>& gens);

 private:
  AlgebraBasis(SurfaceSpec spec, const CycloContextPtr& ctx, int dim)
      : spec_(std::move(spec)), dim_(dim), echelon_(ctx, dim * dim) {}

  SurfaceSpec spec_;
  int dim_;
  EchelonBasis echelon_;
  std::vector<CycloMatrix> reps_;
  int rounds_ = 0;
};

std::vector<CycloNum> vectorize(const CycloMatrix& m);

// Closure of {identity} u gens under left multiplication by the
// generators, reduced by exact elimination after every product; stops when
// one full round adds nothing. Empty gens give the scalars.
AlgebraBasis saturate(Space& sp, const std::vector<Operator>& gens);

// Exact linear membership in the saturated span.
bool contains(const Operator& x, const AlgebraBasis& basis);

// Dimension of {X : XM = MX for all generators M}; dim^2 for empty gens.
long commutant_dim(Space& sp, const std::vector<Operator>& gens);
// A basis of that commutant (the reducibility certificate).
std::vector<CycloMatrix> commutant_basis(Space& sp, const std::vector<Operator>& gens);

enum class GeneratorMode { point_pushing, curves, both };
enum class Method { saturation, commutant, both };

struct AlgebraReport {
  long dim = 0;
  long algebra_dim = -1;    // -1: not computed under the chosen method
  long commutant_dim = -1;  // -1: not computed under the chosen method
  int rounds = 0;
  bool irreducible = false;
  std::vector<std::string> generator_names;
  std::vector<CycloMatrix> certificate;  // commutant basis when reducible
};

// Assemble generators, saturate and/or compute the commutant, cross-check
// the two when both run (algebra_dim = dim^2 iff commutant_dim = 1), and
// report. Point-pushing generators are Push(delta_j), j = 2..n-1; curve
// generators are all consecutive band curves.
AlgebraReport analyze(Space& sp, GeneratorMode mode, Method method = Method::both,
                      bool with_certificate = false);

std::vector<Operator> point_push_generators(Space& sp);
std::vector<Operator> curve_generators(Space& sp);

}  // namespace skeinrep

#endif
