#include "skeinrep/operators.hpp"

#include <algorithm>
#include <map>

namespace skeinrep {

CurveDesc CurveDesc::edge(std::string name) {
  CurveDesc c;
  c.kind = Kind::edge;
  c.edge_name = std::move(name);
  return c;
}

CurveDesc CurveDesc::band(int i, int j) {
  CurveDesc c;
  c.kind = Kind::band;
  c.i = i;
  c.j = j;
  return c;
}

CurveDesc CurveDesc::cable(int i, int j, int color) {
  CurveDesc c = band(i, j);
  c.kind = Kind::cable;
  c.cable_color = color;
  return c;
}

std::string CurveDesc::describe() const {
  switch (kind) {
    case Kind::edge:
      return "edge:" + edge_name;
    case Kind::band:
      return "band:" + std::to_string(i) + ".." + std::to_string(j);
    default:
      return "cable:band:" + std::to_string(i) + ".." + std::to_string(j) + ":" +
             std::to_string(cable_color);
  }
}

Space::Space(SurfaceSpec spec, RecouplingPtr rc)
    : spec_(std::move(spec)), rc_(std::move(rc)) {
  spec_.validate();
  if (spec_.level != rc_->level())
    throw usage_error("surface level does not match recoupling context");
  spine_ = build_spine(spec_);
  basis_ = enumerate_colorings(spine_);

  // the spectral calculus below needs the candidate eigenvalues distinct
  std::vector<CycloNum> seen;
  for (int c = 0; c <= rc_->max_color(); ++c) {
    CycloNum l = rc_->curve_eigenvalue(c);
    for (const auto& other : seen)
      if (other == l)
        throw integrity_error("curve eigenvalues collide at level p=" +
                              std::to_string(spec_.level));
    seen.push_back(l);
  }
}

namespace {

int edge_color(const Spine& spine, const Coloring& col, int edge_id) {
  if (spine.edges[edge_id].fixed_color >= 0) return spine.edges[edge_id].fixed_color;
  auto it = std::find(spine.internal_edges.begin(), spine.internal_edges.end(), edge_id);
  return col.colors[it - spine.internal_edges.begin()];
}

// color of a fusion-tree node under a coloring listed in colorable-node order
struct TreeColors {
  FusionTree tree;
  SurfaceSpec spec;
  std::map<std::pair<int, int>, int> node_pos;

  TreeColors(const FusionTree& t, const SurfaceSpec& s) : tree(t), spec(s) {
    auto nodes = t.colorable_nodes();
    for (size_t i = 0; i < nodes.size(); ++i) node_pos[nodes[i]] = static_cast<int>(i);
  }

  int color(const Coloring& col, int lo, int hi) const {
    if (lo == hi) return spec.colors[lo - 1];
    if (lo == 1 && hi == tree.leaves()) return spec.colors.back();
    return col.colors[node_pos.at({lo, hi})];
  }
};

std::map<Coloring, int> index_of(const std::vector<Coloring>& cols) {
  std::map<Coloring, int> m;
  for (size_t i = 0; i < cols.size(); ++i) m.emplace(cols[i], static_cast<int>(i));
  return m;
}

}  // namespace

Transport fusion_transport(Space& sp, const std::vector<TreeMove>& moves) {
  if (sp.spec().genus != 0) throw usage_error("fusion transport requires genus 0");
  RecouplingContext& rc = sp.recoupling();
  const auto& ctx = sp.cyclo();

  FusionTree tree = FusionTree::caterpillar(sp.spec().n() - 1);
  std::vector<Coloring> cols = sp.basis();
  CycloMatrix f = CycloMatrix::identity(ctx, sp.dim());

  for (const TreeMove& mv : moves) {
    FusionTree next = tree.rotated(mv);
    std::vector<Coloring> ncols = enumerate_tree_colorings(next, sp.spec());
    std::map<Coloring, int> nindex = index_of(ncols);
    TreeColors tc(tree, sp.spec());
    TreeColors ntc(next, sp.spec());

    const auto new_nodes = next.colorable_nodes();
    CycloMatrix step(ctx, static_cast<int>(ncols.size()), static_cast<int>(cols.size()));

    for (size_t src = 0; src < cols.size(); ++src) {
      const Coloring& x = cols[src];
      const int lo = mv.lo, hi = mv.hi;
      const int m = tree.split(lo, hi);
      int xx, y, z;
      std::pair<int, int> dying, born;
      if (mv.assoc_right) {
        const int s = tree.split(lo, m);
        xx = tc.color(x, lo, s);
        y = tc.color(x, s + 1, m);
        z = tc.color(x, m + 1, hi);
        dying = {lo, m};
        born = {s + 1, hi};
      } else {
        const int s = tree.split(m + 1, hi);
        xx = tc.color(x, lo, m);
        y = tc.color(x, m + 1, s);
        z = tc.color(x, s + 1, hi);
        dying = {m + 1, hi};
        born = {lo, s};
      }
      const int d = tc.color(x, lo, hi);
      const int e_val = tc.color(x, dying.first, dying.second);

      for (int fcol = 0; fcol <= rc.max_color(); ++fcol) {
        CycloNum coeff;
        if (mv.assoc_right) {
          // |((x,y)_e, z)_d> = sum_f sixj(y,x,e; z,d,f) |(x,(y,z)_f)_d>
          if (!rc.is_admissible(y, z, fcol) || !rc.is_admissible(xx, fcol, d)) continue;
          coeff = rc.sixj({y, xx, e_val, z, d, fcol});
        } else {
          // |(x,(y,z)_e)_d> = sum_f sixj(y,z,e; x,d,f) |((x,y)_f, z)_d>
          if (!rc.is_admissible(xx, y, fcol) || !rc.is_admissible(fcol, z, d)) continue;
          coeff = rc.sixj({y, z, e_val, xx, d, fcol});
        }
        // target coloring: dying node removed, born node = fcol, rest carried
        Coloring tgt;
        tgt.colors.reserve(new_nodes.size());
        for (const auto& node : new_nodes)
          tgt.colors.push_back(node == born ? fcol
                                            : tc.color(x, node.first, node.second));
        auto it = nindex.find(tgt);
        if (it == nindex.end()) continue;
        step.at(it->second, static_cast<int>(src)) += coeff;
      }
    }
    f = step * f;
    tree = std::move(next);
    cols = std::move(ncols);
  }
  return Transport{std::move(tree), std::move(cols), std::move(f)};
}

HermitianData basis_norms(Space& sp) {
  if (sp.spec().genus != 0)
    throw usage_error("basis norms via doubled networks require genus 0");
  const SurfaceSpec& spec = sp.spec();
  const FusionTree tree = FusionTree::caterpillar(spec.n() - 1);
  TreeColors tc(tree, spec);
  RecouplingContext& rc = sp.recoupling();

  HermitianData h;
  for (const Coloring& col : sp.basis()) {
    NetworkBuilder b(spec.level);
    b.cup(0, spec.colors.back());

    auto expand = [&](auto&& self, int lo, int hi, int pos) -> int {
      if (lo == hi) return 1;
      const int m = tree.split(lo, hi);
      b.vertex_up(pos, tc.color(col, lo, m), tc.color(col, m + 1, hi));
      const int nl = self(self, lo, m, pos);
      return nl + self(self, m + 1, hi, pos + nl);
    };
    auto contract = [&](auto&& self, int lo, int hi, int pos) -> void {
      if (lo == hi) return;
      const int m = tree.split(lo, hi);
      self(self, lo, m, pos);
      self(self, m + 1, hi, pos + 1);
      b.vertex_down(pos, tc.color(col, lo, hi));
    };
    expand(expand, 1, tree.leaves(), 0);
    contract(contract, 1, tree.leaves(), 0);
    b.cap(0);
    h.norms.push_back(evaluate_network(sp.cyclo(), b.finish(), &rc.jw_cache()));
  }
  return h;
}

Operator edge_curve_operator(Space& sp, const std::string& edge_name) {
  const int id = sp.spine().edge_id(edge_name);
  RecouplingContext& rc = sp.recoupling();
  std::vector<CycloNum> diag;
  diag.reserve(sp.dim());
  for (const Coloring& col : sp.basis())
    diag.push_back(rc.curve_eigenvalue(edge_color(sp.spine(), col, id)));
  return Operator{sp.spec(), CycloMatrix::diagonal(sp.cyclo(), diag)};
}

namespace {

// moves carrying the caterpillar to a tree with [i, j] as a node
std::vector<TreeMove> band_moves(int i, int j) {
  std::vector<TreeMove> moves(j - i, TreeMove{1, j, true});
  return moves;
}

Operator band_operator(Space& sp, int i, int j) {
  const int n = sp.spec().n();
  RecouplingContext& rc = sp.recoupling();
  const auto& ctx = sp.cyclo();
  if (i < 1 || j > n || i > j) throw usage_error("band range out of bounds");

  // curve around everything bounds an empty disk on the far side
  if (i == 1 && j == n)
    return Operator{sp.spec(),
                    CycloMatrix::identity(ctx, sp.dim()).scaled(rc.curve_eigenvalue(0))};
  // single point: eigenvalue of its leg color
  if (i == j)
    return Operator{sp.spec(), CycloMatrix::identity(ctx, sp.dim())
                                   .scaled(rc.curve_eigenvalue(sp.spec().colors[i - 1]))};
  // complement of a prefix on the sphere
  if (j == n) return band_operator(sp, 1, i - 1);

  if (i == 1) {
    // already a node of the caterpillar ([1,j] for j <= n-2, the root leg else)
    TreeColors tc(FusionTree::caterpillar(n - 1), sp.spec());
    std::vector<CycloNum> diag;
    for (const Coloring& col : sp.basis())
      diag.push_back(rc.curve_eigenvalue(tc.color(col, 1, j)));
    return Operator{sp.spec(), CycloMatrix::diagonal(ctx, diag)};
  }

  Transport t = fusion_transport(sp, band_moves(i, j));
  TreeColors tc(t.tree, sp.spec());
  std::vector<CycloNum> diag;
  for (const Coloring& col : t.colorings)
    diag.push_back(rc.curve_eigenvalue(tc.color(col, i, j)));
  auto finv = inverse(t.matrix);
  if (!finv) throw integrity_error("fusion transport is singular");
  return Operator{sp.spec(), *finv * CycloMatrix::diagonal(ctx, diag) * t.matrix};
}

}  // namespace

Operator curve_operator(Space& sp, const CurveDesc& curve) {
  switch (curve.kind) {
    case CurveDesc::Kind::edge:
      return edge_curve_operator(sp, curve.edge_name);
    case CurveDesc::Kind::band: {
      if (sp.spec().genus != 0)
        throw usage_error("band curves are supported for genus 0 only");
      return band_operator(sp, curve.i, curve.j);
    }
    default: {
      if (sp.spec().genus != 0)
        throw usage_error("band curves are supported for genus 0 only");
      if (curve.cable_color < 0 || curve.cable_color > sp.recoupling().max_color())
        throw usage_error("cable color outside [0, p/2-2]");
      Operator z = band_operator(sp, curve.i, curve.j);
      CycloMatrix prev = CycloMatrix::identity(sp.cyclo(), sp.dim());
      if (curve.cable_color == 0) return Operator{sp.spec(), prev};
      CycloMatrix cur = z.matrix;
      for (int m = 1; m < curve.cable_color; ++m) {
        CycloMatrix next = z.matrix * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return Operator{sp.spec(), cur};
    }
  }
}

std::vector<int> operator_spectrum_colors(Space& sp, const CycloMatrix& m) {
  RecouplingContext& rc = sp.recoupling();
  const auto& ctx = sp.cyclo();
  const int n = m.rows();
  std::vector<int> occurring;
  for (int c = 0; c <= rc.max_color(); ++c) {
    CycloMatrix shifted = m - CycloMatrix::identity(ctx, n).scaled(rc.curve_eigenvalue(c));
    std::vector<std::vector<CycloNum>> rows(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i].push_back(shifted.at(i, j));
    if (static_cast<int>(rref(std::move(rows)).rows.size()) < n) occurring.push_back(c);
  }
  CycloMatrix prod = CycloMatrix::identity(ctx, n);
  for (int c : occurring)
    prod = prod * (m - CycloMatrix::identity(ctx, n).scaled(rc.curve_eigenvalue(c)));
  if (!prod.is_zero())
    throw integrity_error("curve operator spectrum escapes the admissible eigenvalue set");
  return occurring;
}

Operator dehn_twist(Space& sp, const CurveDesc& curve) {
  if (curve.kind == CurveDesc::Kind::cable)
    throw usage_error("dehn twist along a cable is not defined");
  Operator z = curve_operator(sp, curve);
  RecouplingContext& rc = sp.recoupling();
  const auto& ctx = sp.cyclo();
  const int n = sp.dim();
  const std::vector<int> colors = operator_spectrum_colors(sp, z.matrix);

  CycloMatrix t(ctx, n, n);
  for (int c : colors) {
    CycloMatrix proj = CycloMatrix::identity(ctx, n);
    for (int c2 : colors) {
      if (c2 == c) continue;
      CycloNum gap = rc.curve_eigenvalue(c) - rc.curve_eigenvalue(c2);
      proj = (z.matrix - CycloMatrix::identity(ctx, n).scaled(rc.curve_eigenvalue(c2)))
                 .scaled(gap.inverse()) *
             proj;
    }
    t = t + proj.scaled(rc.twist(c));
  }
  return Operator{sp.spec(), std::move(t)};
}

Operator point_push(Space& sp, const LoopDesc& loop) {
  const int n = sp.spec().n();
  if (sp.spec().genus != 0) throw usage_error("point pushing requires genus 0");
  if (n < 4) throw usage_error("point pushing requires n >= 4");
  if (loop.j < 2 || loop.j > n - 1)
    throw usage_error("point-push generator index j must lie in 2..n-1");
  Operator left = dehn_twist(sp, CurveDesc::band(1, loop.j));
  Operator right = dehn_twist(sp, CurveDesc::band(2, loop.j));
  auto rinv = inverse(right.matrix);
  if (!rinv) throw integrity_error("dehn twist is singular");
  return Operator{sp.spec(), left.matrix * *rinv};
}

bool self_adjoint(const HermitianData& h, const CycloMatrix& m) {
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (h.norms[i] * m.at(i, j).conjugate() != h.norms[j] * m.at(j, i)) return false;
  return true;
}

}  // namespace skeinrep
