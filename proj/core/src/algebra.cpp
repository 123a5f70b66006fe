#include "skeinrep/algebra.hpp"

namespace skeinrep {

std::vector<CycloNum> vectorize(const CycloMatrix& m) { return m.data(); }

namespace {

void check_gens(const Space& sp, const std::vector<Operator>& gens) {
  for (const auto& g : gens)
    if (!(g.spec == sp.spec())) throw usage_error("generators belong to different surfaces");
}

}  // namespace

AlgebraBasis saturate(Space& sp, const std::vector<Operator>& gens) {
  check_gens(sp, gens);
  const int dim = sp.dim();
  const auto& ctx = sp.cyclo();

  AlgebraBasis basis(sp.spec(), ctx, dim);
  if (dim == 0) return basis;

  auto offer = [&basis](const CycloMatrix& m) {
    if (basis.echelon_.insert(vectorize(m))) {
      basis.reps_.push_back(m);
      return true;
    }
    return false;
  };

  offer(CycloMatrix::identity(ctx, dim));
  for (const auto& g : gens) offer(g.matrix);

  while (!gens.empty()) {
    ++basis.rounds_;
    const size_t snapshot = basis.reps_.size();
    bool grew = false;
    for (const auto& g : gens)
      for (size_t i = 0; i < snapshot; ++i)
        if (offer(g.matrix * basis.reps_[i])) grew = true;
    if (!grew || basis.rank() == dim * dim) break;
  }
  return basis;
}

bool contains(const Operator& x, const AlgebraBasis& basis) {
  if (!(x.spec == basis.spec())) throw usage_error("operator belongs to a different surface");
  return basis.echelon().contains(vectorize(x.matrix));
}

namespace {

// rows of the stacked system [X, M_i] = 0 over the dim^2 unknowns X[k][l]
CycloMatrix commutant_system(const CycloContextPtr& ctx, int d,
                             const std::vector<Operator>& gens) {
  CycloMatrix sys(ctx, static_cast<int>(gens.size()) * d * d, d * d);
  int row = 0;
  for (const auto& g : gens) {
    const CycloMatrix& m = g.matrix;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // (M X - X M)[i][j] = sum_k M[i][k] X[k][j] - sum_l X[i][l] M[l][j]
        for (int k = 0; k < d; ++k) sys.at(row, k * d + j) += m.at(i, k);
        for (int l = 0; l < d; ++l) sys.at(row, i * d + l) -= m.at(l, j);
        ++row;
      }
  }
  return sys;
}

}  // namespace

long commutant_dim(Space& sp, const std::vector<Operator>& gens) {
  check_gens(sp, gens);
  const int d = sp.dim();
  if (d == 0) return 0;
  if (gens.empty()) return static_cast<long>(d) * d;
  return static_cast<long>(kernel_basis(commutant_system(sp.cyclo(), d, gens)).size());
}

std::vector<CycloMatrix> commutant_basis(Space& sp, const std::vector<Operator>& gens) {
  check_gens(sp, gens);
  const int d = sp.dim();
  if (d == 0) return {};
  const auto& ctx = sp.cyclo();
  std::vector<CycloMatrix> out;
  if (gens.empty()) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        CycloMatrix m(ctx, d, d);
        m.at(i, j) = CycloNum::one(ctx);
        out.push_back(std::move(m));
      }
    return out;
  }
  for (const auto& v : kernel_basis(commutant_system(ctx, d, gens))) {
    CycloMatrix m(ctx, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = v[i * d + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Operator> point_push_generators(Space& sp) {
  if (sp.spec().genus != 0 || sp.spec().n() < 4)
    throw usage_error("point-pushing generators require genus 0 and n >= 4");
  std::vector<Operator> gens;
  for (int j = 2; j <= sp.spec().n() - 1; ++j) gens.push_back(point_push(sp, LoopDesc{j}));
  return gens;
}

std::vector<Operator> curve_generators(Space& sp) {
  if (sp.spec().genus != 0)
    throw usage_error("curve generators are supported for genus 0 only");
  std::vector<Operator> gens;
  for (int i = 1; i <= sp.spec().n(); ++i)
    for (int j = i; j <= sp.spec().n(); ++j)
      gens.push_back(curve_operator(sp, CurveDesc::band(i, j)));
  return gens;
}

AlgebraReport analyze(Space& sp, GeneratorMode mode, Method method, bool with_certificate) {
  AlgebraReport rep;
  rep.dim = sp.dim();

  std::vector<Operator> gens;
  auto append = [&](std::vector<Operator> more, const std::string& stem, int base) {
    for (size_t i = 0; i < more.size(); ++i)
      rep.generator_names.push_back(stem + std::to_string(base + static_cast<int>(i)));
    gens.insert(gens.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  };
  if (rep.dim > 0) {
    if (mode == GeneratorMode::point_pushing || mode == GeneratorMode::both)
      append(point_push_generators(sp), "push:delta_", 2);
    if (mode == GeneratorMode::curves || mode == GeneratorMode::both)
      append(curve_generators(sp), "curve:band_", 0);
  }

  if (rep.dim == 0) {
    // empty representation: nothing to generate, nothing commutes
    rep.algebra_dim = 0;
    rep.commutant_dim = 0;
    rep.irreducible = false;
    return rep;
  }

  if (method == Method::saturation || method == Method::both) {
    AlgebraBasis basis = saturate(sp, gens);
    rep.algebra_dim = basis.rank();
    rep.rounds = basis.rounds();
  }
  if (method == Method::commutant || method == Method::both) {
    rep.commutant_dim = commutant_dim(sp, gens);
  }
  if (method == Method::both &&
      (rep.algebra_dim == rep.dim * rep.dim) != (rep.commutant_dim == 1))
    throw integrity_error("saturation and commutant verdicts disagree");

  rep.irreducible = rep.commutant_dim >= 0 ? rep.commutant_dim == 1
                                           : rep.algebra_dim == rep.dim * rep.dim;
  if (!rep.irreducible && with_certificate) rep.certificate = commutant_basis(sp, gens);
  return rep;
}

}  // namespace skeinrep
