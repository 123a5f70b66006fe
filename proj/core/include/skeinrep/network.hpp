#ifndef SKEINREP_NETWORK_HPP
#define SKEINREP_NETWORK_HPP

#include <variant>
#include <vector>

#include "skeinrep/tl_diagram.hpp"

namespace skeinrep {

// Elementary pieces of one horizontal slice of a closed colored trivalent
// network. A color-c edge stands for c parallel strands; every edge of the
// network must carry a Jones-Wenzl box somewhere along its length (the
// builder below inserts one at each edge birth).
struct IdPiece {
  int color;
};
struct CupPiece {
  int color;
};
struct CapPiece {
  int color;
};
struct JwPiece {
  int color;
};
struct VertexUpPiece {
  int in, out_left, out_right;
};
struct VertexDownPiece {
  int in_left, in_right, out;
};
using NetPiece =
    std::variant<IdPiece, CupPiece, CapPiece, JwPiece, VertexUpPiece, VertexDownPiece>;

struct ColoredNetwork {
  int level = 0;
  std::vector<std::vector<NetPiece>> layers;
};

// Builds a closed network as a composition sequence of layers, tracking the
// colored boundary. Positions index boundary slots left to right. With
// `check_admissibility` every vertex triple must be p-admissible; without
// it only structural realizability and the existence of the needed
// idempotents (colors <= p/2 - 1) are enforced.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int level, bool check_admissibility = true);

  NetworkBuilder& cup(int pos, int color);
  NetworkBuilder& cap(int pos);
  NetworkBuilder& vertex_up(int pos, int out_left, int out_right);
  NetworkBuilder& vertex_down(int pos, int out);

  const std::vector<int>& boundary() const { return boundary_; }
  ColoredNetwork finish();  // boundary must be empty

 private:
  void structural_layer(int pos, int consumed, const NetPiece& piece,
                        const std::vector<int>& produced);
  void jw_layer(int pos);
  void check_color(int color) const;

  int level_;
  bool check_;
  std::vector<int> boundary_;
  ColoredNetwork net_;
};

// Exact Kauffman-bracket value of a closed network: expand idempotent
// boxes, compose layer by layer, count removed loops with delta each.
CycloNum evaluate_network(const CycloContextPtr& ctx, const ColoredNetwork& net,
                          JonesWenzlCache* cache = nullptr);

// Stock networks used as oracles.
ColoredNetwork loop_network(int color, int level, bool check = true);
ColoredNetwork theta_network(int a, int b, int c, int level, bool check = true);
// Tetrahedron with vertex triples (A,B,E), (C,D,E), (A,C,F), (B,D,F).
ColoredNetwork tet_network(int A, int B, int E, int C, int D, int F, int level,
                           bool check = true);

}  // namespace skeinrep

#endif
