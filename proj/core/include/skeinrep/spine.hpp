#ifndef SKEINREP_SPINE_HPP
#define SKEINREP_SPINE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeinrep/errors.hpp"

namespace skeinrep {

// A closed orientable surface of genus g with n colored banded points,
// studied at even level p.
struct SurfaceSpec {
  int genus = 0;
  std::vector<int> colors;  // k_1..k_n, positive
  int level = 0;            // p

  int n() const { return static_cast<int>(colors.size()); }
  // Throws usage_error naming the violated condition.
  void validate() const;

  bool operator==(const SurfaceSpec&) const = default;
};

enum class TreeShape { caterpillar, right_comb };

// A move rewriting one association in a fusion tree:
// assoc_right turns ((x,y),z) into (x,(y,z)) at the node covering [lo,hi],
// assoc_left is the inverse rewrite at the same node.
struct TreeMove {
  int lo = 0, hi = 0;
  bool assoc_right = true;
};

// Full binary tree over ordered leaves 1..m. Used for genus-0 spines, with
// the surface's last leg as the root; internal node [lo,hi] carries the
// fused color of legs lo..hi. Nodes are listed in lexicographic (lo,hi)
// order; that order fixes every basis enumeration downstream.
class FusionTree {
 public:
  static FusionTree caterpillar(int leaves);
  static FusionTree right_comb(int leaves);
  static FusionTree shaped(TreeShape shape, int leaves);

  int leaves() const { return leaves_; }
  bool has_node(int lo, int hi) const { return splits_.count({lo, hi}) > 0; }
  int split(int lo, int hi) const;

  // Internal nodes (hi > lo) in canonical order; the root [1, leaves] comes
  // last in tree order but is included.
  std::vector<std::pair<int, int>> internal_nodes() const;
  // Internal nodes except the root: the colorable ones.
  std::vector<std::pair<int, int>> colorable_nodes() const;

  FusionTree rotated(const TreeMove& mv) const;  // throws if the move does not apply

  bool operator==(const FusionTree&) const = default;

 private:
  int leaves_ = 0;
  std::map<std::pair<int, int>, int> splits_;  // node interval -> split point
};

// Trivalent spine graph of (genus, n): legs carry the fixed colors k_j,
// internal edges are the coloring variables. Genus handles hang off the
// fused trunk as self-loop vertices.
struct Spine {
  SurfaceSpec spec;
  TreeShape shape = TreeShape::caterpillar;

  struct Edge {
    std::string name;
    int fixed_color = -1;  // -1: variable
  };
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> vertices;  // edge ids, self-loops repeat an id
  std::vector<int> internal_edges;           // edge ids in canonical order

  std::optional<FusionTree> tree;                     // genus 0 only
  std::map<std::pair<int, int>, int> node_edge;       // tree node -> edge id

  int edge_id(const std::string& name) const;  // throws on unknown name
};

// A p-admissible coloring: one color per internal edge, in the spine's
// canonical internal-edge order.
struct Coloring {
  std::vector<int> colors;
  bool operator==(const Coloring&) const = default;
  auto operator<=>(const Coloring&) const = default;
};

Spine build_spine(const SurfaceSpec& spec, TreeShape shape = TreeShape::caterpillar);

// All p-admissible colorings in lexicographic order of internal-edge colors.
std::vector<Coloring> enumerate_colorings(const Spine& spine);

// Colorings of an arbitrary genus-0 fusion tree (colors on colorable nodes
// in canonical node order). For the caterpillar this matches
// enumerate_colorings on the corresponding spine.
std::vector<Coloring> enumerate_tree_colorings(const FusionTree& tree,
                                               const SurfaceSpec& spec);

// Basis dimension; independent of the tree shape.
long dimension(const SurfaceSpec& spec);

}  // namespace skeinrep

#endif
