#include "skeinrep/network.hpp"

#include <string>

#include "skeinrep/admissible.hpp"

namespace skeinrep {

NetworkBuilder::NetworkBuilder(int level, bool check_admissibility)
    : level_(level), check_(check_admissibility) {
  net_.level = level;
}

void NetworkBuilder::check_color(int color) const {
  if (color < 0) throw usage_error("negative edge color");
  const int bound = check_ ? level_ / 2 - 2 : level_ / 2 - 1;
  if (color > bound)
    throw usage_error("edge color " + std::to_string(color) + " exceeds bound " +
                      std::to_string(bound) + " at level p=" + std::to_string(level_));
}

void NetworkBuilder::structural_layer(int pos, int consumed, const NetPiece& piece,
                                      const std::vector<int>& produced) {
  if (pos < 0 || pos + consumed > static_cast<int>(boundary_.size()))
    throw usage_error("network layer position out of range");
  std::vector<NetPiece> layer;
  for (int i = 0; i < pos; ++i) layer.push_back(IdPiece{boundary_[i]});
  layer.push_back(piece);
  for (int i = pos + consumed; i < static_cast<int>(boundary_.size()); ++i)
    layer.push_back(IdPiece{boundary_[i]});
  net_.layers.push_back(std::move(layer));
  boundary_.erase(boundary_.begin() + pos, boundary_.begin() + pos + consumed);
  boundary_.insert(boundary_.begin() + pos, produced.begin(), produced.end());
}

void NetworkBuilder::jw_layer(int pos) {
  std::vector<NetPiece> layer;
  for (int i = 0; i < static_cast<int>(boundary_.size()); ++i) {
    if (i == pos)
      layer.push_back(JwPiece{boundary_[i]});
    else
      layer.push_back(IdPiece{boundary_[i]});
  }
  net_.layers.push_back(std::move(layer));
}

NetworkBuilder& NetworkBuilder::cup(int pos, int color) {
  check_color(color);
  structural_layer(pos, 0, CupPiece{color}, {color, color});
  jw_layer(pos);
  return *this;
}

NetworkBuilder& NetworkBuilder::cap(int pos) {
  if (pos + 1 >= static_cast<int>(boundary_.size()))
    throw usage_error("cap position out of range");
  if (boundary_[pos] != boundary_[pos + 1])
    throw usage_error("cap joins strands of different colors");
  structural_layer(pos, 2, CapPiece{boundary_[pos]}, {});
  return *this;
}

NetworkBuilder& NetworkBuilder::vertex_up(int pos, int out_left, int out_right) {
  if (pos >= static_cast<int>(boundary_.size()))
    throw usage_error("vertex position out of range");
  const int in = boundary_[pos];
  check_color(out_left);
  check_color(out_right);
  if (!triad_realizable(in, out_left, out_right))
    throw usage_error("vertex (" + std::to_string(in) + "," + std::to_string(out_left) + "," +
                      std::to_string(out_right) + ") is not realizable");
  if (check_ && !admissible(in, out_left, out_right, level_))
    throw usage_error("vertex (" + std::to_string(in) + "," + std::to_string(out_left) + "," +
                      std::to_string(out_right) + ") is inadmissible at level p=" +
                      std::to_string(level_));
  structural_layer(pos, 1, VertexUpPiece{in, out_left, out_right}, {out_left, out_right});
  jw_layer(pos);
  jw_layer(pos + 1);
  return *this;
}

NetworkBuilder& NetworkBuilder::vertex_down(int pos, int out) {
  if (pos + 1 >= static_cast<int>(boundary_.size()))
    throw usage_error("vertex position out of range");
  const int a = boundary_[pos], b = boundary_[pos + 1];
  check_color(out);
  if (!triad_realizable(out, a, b))
    throw usage_error("vertex (" + std::to_string(out) + "," + std::to_string(a) + "," +
                      std::to_string(b) + ") is not realizable");
  if (check_ && !admissible(out, a, b, level_))
    throw usage_error("vertex (" + std::to_string(out) + "," + std::to_string(a) + "," +
                      std::to_string(b) + ") is inadmissible at level p=" +
                      std::to_string(level_));
  structural_layer(pos, 2, VertexDownPiece{a, b, out}, {out});
  jw_layer(pos);
  return *this;
}

ColoredNetwork NetworkBuilder::finish() {
  if (!boundary_.empty()) throw usage_error("network has an open boundary");
  return std::move(net_);
}

namespace {

TlElement piece_element(const CycloContextPtr& ctx, const NetPiece& piece,
                        JonesWenzlCache* cache) {
  return std::visit(
      [&](const auto& p) -> TlElement {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IdPiece>)
          return TlElement::from_diagram(ctx, TlDiagram::identity(p.color));
        else if constexpr (std::is_same_v<T, CupPiece>)
          return TlElement::from_diagram(ctx, TlDiagram::cup(p.color));
        else if constexpr (std::is_same_v<T, CapPiece>)
          return TlElement::from_diagram(ctx, TlDiagram::cap(p.color));
        else if constexpr (std::is_same_v<T, JwPiece>)
          return jones_wenzl(ctx, p.color, cache);
        else if constexpr (std::is_same_v<T, VertexUpPiece>)
          return TlElement::from_diagram(ctx,
                                         TlDiagram::triad_up(p.in, p.out_left, p.out_right));
        else
          return TlElement::from_diagram(
              ctx, TlDiagram::triad_down(p.in_left, p.in_right, p.out));
      },
      piece);
}

}  // namespace

CycloNum evaluate_network(const CycloContextPtr& ctx, const ColoredNetwork& net,
                          JonesWenzlCache* cache) {
  if (ctx->level() != net.level) throw usage_error("network level does not match context");
  TlElement running = TlElement::from_diagram(ctx, TlDiagram::identity(0));
  for (const auto& layer : net.layers) {
    TlElement slice(ctx, 0, 0);
    bool started = false;
    for (const auto& piece : layer) {
      TlElement e = piece_element(ctx, piece, cache);
      slice = started ? tensor(slice, e) : e;
      started = true;
    }
    if (!started) continue;
    running = compose(running, slice);
    if (running.is_zero()) return CycloNum::zero(ctx);
  }
  if (running.top() != 0 || running.bottom() != 0)
    throw usage_error("network has an open boundary");
  return running.scalar_value();
}

ColoredNetwork loop_network(int color, int level, bool check) {
  NetworkBuilder b(level, check);
  b.cup(0, color).cap(0);
  return b.finish();
}

ColoredNetwork theta_network(int a, int b, int c, int level, bool check) {
  NetworkBuilder n(level, check);
  n.cup(0, a).vertex_up(0, b, c).vertex_down(0, a).cap(0);
  return n.finish();
}

ColoredNetwork tet_network(int A, int B, int E, int C, int D, int F, int level, bool check) {
  NetworkBuilder n(level, check);
  n.cup(0, E);                 // (E, E)
  n.vertex_up(0, A, B);        // (A, B, E)
  n.vertex_up(2, D, C);        // (A, B, D, C)
  n.vertex_down(1, F);         // (A, F, C)
  n.vertex_down(0, C);         // (C, C)
  n.cap(0);
  return n.finish();
}

}  // namespace skeinrep
