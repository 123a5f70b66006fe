#include "skeinrep/spine.hpp"

#include <algorithm>

#include "skeinrep/admissible.hpp"

namespace skeinrep {

void SurfaceSpec::validate() const {
  if (genus < 0) throw usage_error("genus must be non-negative");
  if (n() < 1) throw usage_error("at least one banded point required (n >= 1)");
  for (int k : colors)
    if (k < 1) throw usage_error("banded point colors must be positive integers");
  if (level < 6 || level % 2 != 0)
    throw usage_error("level must be an even integer with p >= 6");
  const int kmax = *std::max_element(colors.begin(), colors.end());
  if (level < kmax + 4) throw usage_error("level too small: p >= max_j k_j + 4 required");
  if (genus == 0 && n() < 4)
    throw usage_error("surface too small: 2g+n >= 4 required, got 2g+n=" +
                      std::to_string(2 * genus + n()));
}

FusionTree FusionTree::caterpillar(int leaves) {
  FusionTree t;
  t.leaves_ = leaves;
  for (int j = 2; j <= leaves; ++j) t.splits_[{1, j}] = j - 1;
  return t;
}

FusionTree FusionTree::right_comb(int leaves) {
  FusionTree t;
  t.leaves_ = leaves;
  for (int j = 1; j <= leaves - 1; ++j) t.splits_[{j, leaves}] = j;
  return t;
}

FusionTree FusionTree::shaped(TreeShape shape, int leaves) {
  return shape == TreeShape::caterpillar ? caterpillar(leaves) : right_comb(leaves);
}

int FusionTree::split(int lo, int hi) const {
  auto it = splits_.find({lo, hi});
  if (it == splits_.end())
    throw usage_error("fusion tree has no node [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "]");
  return it->second;
}

std::vector<std::pair<int, int>> FusionTree::internal_nodes() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(splits_.size());
  for (const auto& [node, s] : splits_) out.push_back(node);
  return out;  // std::map iteration is already lexicographic
}

std::vector<std::pair<int, int>> FusionTree::colorable_nodes() const {
  auto out = internal_nodes();
  std::erase(out, std::make_pair(1, leaves_));
  return out;
}

FusionTree FusionTree::rotated(const TreeMove& mv) const {
  const int lo = mv.lo, hi = mv.hi;
  const int m = split(lo, hi);
  FusionTree t = *this;
  if (mv.assoc_right) {
    if (m == lo) throw usage_error("assoc_right needs an internal left child");
    const int s = split(lo, m);
    t.splits_.erase({lo, m});
    t.splits_[{lo, hi}] = s;
    t.splits_[{s + 1, hi}] = m;
  } else {
    if (m + 1 == hi) throw usage_error("assoc_left needs an internal right child");
    const int s = split(m + 1, hi);
    t.splits_.erase({m + 1, hi});
    t.splits_[{lo, hi}] = s;
    t.splits_[{lo, s}] = m;
  }
  return t;
}

int Spine::edge_id(const std::string& name) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].name == name) return static_cast<int>(i);
  throw usage_error("unknown spine edge \"" + name + "\"");
}

namespace {

Spine spine_from_tree(const FusionTree& tree, const SurfaceSpec& spec, TreeShape shape) {
  const int n = spec.n();
  if (tree.leaves() != n - 1)
    throw usage_error("fusion tree must have n-1 leaves for a surface with n banded points");
  Spine s;
  s.spec = spec;
  s.shape = shape;
  s.tree = tree;
  for (int j = 1; j <= n; ++j)
    s.edges.push_back({"leg" + std::to_string(j), spec.colors[j - 1]});
  for (int j = 1; j <= n - 1; ++j) s.node_edge[{j, j}] = j - 1;
  s.node_edge[{1, n - 1}] = n - 1;  // root carries the last leg

  int counter = 0;
  for (const auto& node : tree.colorable_nodes()) {
    ++counter;
    s.edges.push_back({"c" + std::to_string(counter), -1});
    const int id = static_cast<int>(s.edges.size()) - 1;
    s.node_edge[node] = id;
    s.internal_edges.push_back(id);
  }
  for (const auto& node : tree.internal_nodes()) {
    const int m = tree.split(node.first, node.second);
    const int left = s.node_edge.at({node.first, m});
    const int right = s.node_edge.at({m + 1, node.second});
    s.vertices.push_back({left, right, s.node_edge.at(node)});
  }
  return s;
}

Spine genus_spine(const SurfaceSpec& spec) {
  const int n = spec.n();
  const int g = spec.genus;
  Spine s;
  s.spec = spec;
  s.shape = TreeShape::caterpillar;
  for (int j = 1; j <= n; ++j)
    s.edges.push_back({"leg" + std::to_string(j), spec.colors[j - 1]});

  auto add_internal = [&s](const std::string& name) {
    s.edges.push_back({name, -1});
    const int id = static_cast<int>(s.edges.size()) - 1;
    s.internal_edges.push_back(id);
    return id;
  };

  // fuse the legs along a chain ending in the trunk edge t0
  int trunk = 0;  // leg1
  if (n >= 2) {
    int prev = 0;
    for (int i = 1; i <= n - 1; ++i) {
      const int next =
          add_internal(i < n - 1 ? "c" + std::to_string(i) : std::string("t0"));
      s.vertices.push_back({prev, i, next});
      prev = next;
    }
    trunk = prev;
  }

  // handles: g-1 stem-and-loop pairs, then a terminal loop
  for (int i = 1; i <= g - 1; ++i) {
    const int stem = add_internal("s" + std::to_string(i));
    const int loop = add_internal("l" + std::to_string(i));
    const int tnext = add_internal("t" + std::to_string(i));
    s.vertices.push_back({trunk, stem, tnext});
    s.vertices.push_back({stem, loop, loop});
    trunk = tnext;
  }
  const int last_loop = add_internal("l" + std::to_string(g));
  s.vertices.push_back({trunk, last_loop, last_loop});
  return s;
}

}  // namespace

Spine build_spine(const SurfaceSpec& spec, TreeShape shape) {
  spec.validate();
  if (spec.genus == 0)
    return spine_from_tree(FusionTree::shaped(shape, spec.n() - 1), spec, shape);
  if (shape != TreeShape::caterpillar)
    throw usage_error("alternative tree shapes are supported for genus 0 only");
  return genus_spine(spec);
}

std::vector<Coloring> enumerate_colorings(const Spine& spine) {
  const int p = spine.spec.level;
  const int cmax = p / 2 - 2;
  const int nvars = static_cast<int>(spine.internal_edges.size());

  std::vector<int> color(spine.edges.size(), -1);
  for (size_t i = 0; i < spine.edges.size(); ++i) color[i] = spine.edges[i].fixed_color;

  // position in the variable order at which each vertex becomes checkable
  std::vector<int> var_pos(spine.edges.size(), -1);
  for (int v = 0; v < nvars; ++v) var_pos[spine.internal_edges[v]] = v;
  std::vector<std::vector<int>> checks(nvars);
  std::vector<std::array<int, 3>> immediate;
  for (size_t vi = 0; vi < spine.vertices.size(); ++vi) {
    int last = -1;
    for (int e : spine.vertices[vi]) last = std::max(last, var_pos[e]);
    if (last < 0)
      immediate.push_back(spine.vertices[vi]);
    else
      checks[last].push_back(static_cast<int>(vi));
  }
  for (const auto& v : immediate)
    if (!admissible(color[v[0]], color[v[1]], color[v[2]], p)) return {};

  std::vector<Coloring> out;
  std::vector<int> assignment(nvars, 0);
  auto recurse = [&](auto&& self, int idx) -> void {
    if (idx == nvars) {
      out.push_back(Coloring{assignment});
      return;
    }
    const int edge = spine.internal_edges[idx];
    for (int c = 0; c <= cmax; ++c) {
      color[edge] = c;
      bool ok = true;
      for (int vi : checks[idx]) {
        const auto& v = spine.vertices[vi];
        if (!admissible(color[v[0]], color[v[1]], color[v[2]], p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assignment[idx] = c;
        self(self, idx + 1);
      }
    }
    color[edge] = -1;
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Coloring> enumerate_tree_colorings(const FusionTree& tree,
                                               const SurfaceSpec& spec) {
  return enumerate_colorings(spine_from_tree(tree, spec, TreeShape::caterpillar));
}

long dimension(const SurfaceSpec& spec) {
  return static_cast<long>(enumerate_colorings(build_spine(spec)).size());
}

}  // namespace skeinrep
