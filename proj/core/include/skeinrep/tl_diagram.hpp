#ifndef SKEINREP_TL_DIAGRAM_HPP
#define SKEINREP_TL_DIAGRAM_HPP

#include <compare>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

// A planar (noncrossing) pairing of boundary points of a rectangle:
// `bottom` points on the lower edge and `top` points on the upper edge,
// both numbered left to right. Point indices 0..bottom-1 are the bottom
// row, bottom..bottom+top-1 the top row. `match` is the pairing as an
// involution without fixed points. The encoding is canonical, so equal
// diagrams compare equal.
struct TlDiagram {
  int bottom = 0;
  int top = 0;
  std::vector<int> match;

  static TlDiagram identity(int n);
  static TlDiagram cup(int c);   // 0 -> 2c, nested arcs
  static TlDiagram cap(int c);   // 2c -> 0, nested arcs
  static TlDiagram generator(int n, int i);  // e_i in TL_n, 0 <= i <= n-2
  // Raw trivalent vertex a -> (b, c): (a+b-c)/2 through-strands to the left
  // leg, (a+c-b)/2 to the right leg, (b+c-a)/2 arcs between the legs.
  // Requires the triple to be realizable (parity and triangle inequality).
  static TlDiagram triad_up(int a, int b, int c);
  static TlDiagram triad_down(int b, int c, int a);  // (b, c) -> a

  TlDiagram transpose() const;  // flip top and bottom
  bool noncrossing() const;

  bool operator==(const TlDiagram& o) const = default;
  auto operator<=>(const TlDiagram& o) const = default;
};

// Stack `upper` on top of `lower` (lower.top must equal upper.bottom).
// Returns the number of closed loops removed and the resulting diagram.
std::pair<int, TlDiagram> compose_diagrams(const TlDiagram& lower, const TlDiagram& upper);

// Horizontal juxtaposition.
TlDiagram tensor_diagrams(const TlDiagram& a, const TlDiagram& b);

// A finite linear combination of diagrams with a fixed boundary shape.
// Closed loops produced by composition contribute a factor
// delta = -A^2 - A^{-2} each.
class TlElement {
 public:
  TlElement(CycloContextPtr ctx, int bottom, int top)
      : ctx_(std::move(ctx)), bottom_(bottom), top_(top) {}
  static TlElement from_diagram(const CycloContextPtr& ctx, const TlDiagram& d);

  const CycloContextPtr& context() const { return ctx_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::map<TlDiagram, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TlDiagram& d, const CycloNum& coeff);

  TlElement operator+(const TlElement& o) const;
  TlElement operator-(const TlElement& o) const;
  TlElement scaled(const CycloNum& c) const;

  // The coefficient of the empty diagram; only meaningful for 0 -> 0 shapes.
  CycloNum scalar_value() const;

  bool operator==(const TlElement& o) const;

 private:
  CycloContextPtr ctx_;
  int bottom_;
  int top_;
  std::map<TlDiagram, CycloNum> terms_;
};

TlElement compose(const TlElement& lower, const TlElement& upper);
TlElement tensor(const TlElement& a, const TlElement& b);

// Memoized Jones-Wenzl idempotents for one context. Thread safe.
class JonesWenzlCache {
 public:
  explicit JonesWenzlCache(CycloContextPtr ctx) : ctx_(std::move(ctx)) {}
  const CycloContextPtr& context() const { return ctx_; }
  TlElement get(int n);

 private:
  CycloContextPtr ctx_;
  std::map<int, TlElement> memo_;
  std::mutex mu_;
};

// f_n via the Wenzl recursion f_{n+1} = f_n - ([n]/[n+1]) f_n e_n f_n,
// with f_n extended by one strand. Requires 0 <= n <= p/2 - 1; past that
// a quantum-integer denominator vanishes.
TlElement jones_wenzl(const CycloContextPtr& ctx, int n, JonesWenzlCache* cache = nullptr);

}  // namespace skeinrep

#endif
