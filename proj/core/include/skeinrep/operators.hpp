#ifndef SKEINREP_OPERATORS_HPP
#define SKEINREP_OPERATORS_HPP

#include <string>
#include <vector>

#include "skeinrep/matrix.hpp"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/spine.hpp"

namespace skeinrep {

// A simple closed curve usable by the operator toolkit. band(i..j) encloses
// the consecutive banded points x_i..x_j of the caterpillar layout (genus 0
// only); edge(NAME) is the small curve around a spine edge; cable re-colors
// a band curve by a Chebyshev cable.
struct CurveDesc {
  enum class Kind { edge, band, cable };
  Kind kind = Kind::band;
  std::string edge_name;
  int i = 1, j = 1;
  int cable_color = 1;

  static CurveDesc edge(std::string name);
  static CurveDesc band(int i, int j);
  static CurveDesc cable(int i, int j, int color);
  std::string describe() const;
};

// Point-pushing generator: the loop of x_1 around the consecutive band
// {x_2,...,x_j}, j in 2..n-1.
struct LoopDesc {
  int j = 2;
};

// Squared norms of the orthogonal coloring basis under the hermitian form,
// in basis order.
struct HermitianData {
  std::vector<CycloNum> norms;
};

struct Operator {
  SurfaceSpec spec;
  CycloMatrix matrix;
};

// A surface with its caterpillar spine, enumerated basis, and recoupling
// tables; the shared workspace of every operator construction. Construction
// verifies that the candidate curve eigenvalues are pairwise distinct.
class Space {
 public:
  Space(SurfaceSpec spec, RecouplingPtr rc);

  const SurfaceSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Spine& spine() const { return spine_; }
  const std::vector<Coloring>& basis() const { return basis_; }
  RecouplingContext& recoupling() { return *rc_; }
  const RecouplingPtr& recoupling_ptr() const { return rc_; }
  const CycloContextPtr& cyclo() const { return rc_->cyclo(); }

 private:
  SurfaceSpec spec_;
  RecouplingPtr rc_;
  Spine spine_;
  std::vector<Coloring> basis_;
};

// Change of basis from the caterpillar to the tree reached by `moves`.
// Columns expand caterpillar basis vectors in the target tree's basis.
struct Transport {
  FusionTree tree;
  std::vector<Coloring> colorings;  // basis of the target tree, canonical order
  CycloMatrix matrix;
};
Transport fusion_transport(Space& sp, const std::vector<TreeMove>& moves);

// <G^c, G^c> computed by evaluating the double of the colored spine
// (genus 0). Off-diagonal pairings vanish; only these diagonal values are
// stored.
HermitianData basis_norms(Space& sp);

// Diagonal operator of the small curve around a spine edge.
Operator edge_curve_operator(Space& sp, const std::string& edge_name);

Operator curve_operator(Space& sp, const CurveDesc& curve);

// Dehn twist by exact spectral calculus on the curve operator: the
// Lagrange projection onto each occurring eigenvalue, weighted by the twist
// scalar of its color channel. Throws integrity_error if the spectrum
// escapes the admissible eigenvalue set.
Operator dehn_twist(Space& sp, const CurveDesc& curve);

// Push(delta_j) = T_{band(1..j)} * T_{band(2..j)}^{-1}.
Operator point_push(Space& sp, const LoopDesc& loop);

// Colors c with lambda_c in the spectrum of m; verifies that
// prod_c (m - lambda_c) vanishes.
std::vector<int> operator_spectrum_colors(Space& sp, const CycloMatrix& m);

// <M u, v> = <u, M v> for the sesquilinear form with the given basis norms.
bool self_adjoint(const HermitianData& h, const CycloMatrix& m);

}  // namespace skeinrep

#endif
