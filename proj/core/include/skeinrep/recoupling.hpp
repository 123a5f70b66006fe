#ifndef SKEINREP_RECOUPLING_HPP
#define SKEINREP_RECOUPLING_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "skeinrep/admissible.hpp"
#include "skeinrep/network.hpp"

namespace skeinrep {

// Labels of a tetrahedral network with vertex triples
// (a,b,e), (c,d,e), (a,c,f), (b,d,f).
struct ColorSix {
  int a, b, e, c, d, f;
};

// One memoized recoupling value, as stored in the advisory cache file.
struct CacheEntry {
  std::string kind;  // "delta" | "theta" | "tet"
  std::vector<int> labels;
  CycloNum value;
};

// Closed-form recoupling scalars at one level, memoized. Every value here
// is pinned against the diagrammatic oracle (evaluate_network) by the
// validation gate below before anything downstream is trusted.
class RecouplingContext {
 public:
  explicit RecouplingContext(int p);

  int level() const { return p_; }
  const CycloContextPtr& cyclo() const { return ctx_; }
  JonesWenzlCache& jw_cache() { return jw_; }
  int max_color() const { return p_ / 2 - 2; }

  bool is_admissible(int a, int b, int c) const { return admissible(a, b, c, p_); }

  // Colored loop value (-1)^c [c+1].
  CycloNum delta(int c);
  // Theta network value.
  CycloNum theta(int a, int b, int c);
  // Tetrahedral network value.
  CycloNum tet(const ColorSix& s);
  // Change-of-basis coefficient tet * delta_f / (theta(a,c,f) theta(b,d,f)).
  CycloNum sixj(const ColorSix& s);
  // Scalar of a positive curl on a color-c strand: (-1)^c A^{c^2+2c}.
  CycloNum twist(int c);
  // Eigenvalue of a small loop encircling a color-c strand:
  // -A^{2c+2} - A^{-2c-2}.
  CycloNum curve_eigenvalue(int c);

  // Advisory memo cache: dump the memoized values in a deterministic
  // order, or seed the memos from a previously dumped cache. Seeded values
  // are what recomputation would produce; the cache only saves time.
  std::vector<CacheEntry> dump_cache();
  void preload(const std::vector<CacheEntry>& entries);

 private:
  void check_color(int c, const char* what) const;

  int p_;
  CycloContextPtr ctx_;
  JonesWenzlCache jw_;
  std::mutex mu_;
  std::map<int, CycloNum> delta_memo_;
  std::map<std::array<int, 3>, CycloNum> theta_memo_;
  std::map<std::array<int, 6>, CycloNum> tet_memo_;
};

using RecouplingPtr = std::shared_ptr<RecouplingContext>;

// One closed-form-vs-oracle comparison of the validation gate.
struct GateEntry {
  std::string kind;         // "delta" | "theta" | "tet" | "admissible"
  std::vector<int> labels;
  bool pass = false;
  std::string detail;       // filled for failures
};

// Compare delta/theta/tet closed forms against diagrammatic evaluation for
// every admissible labeling with colors <= max_color, and check that the
// admissibility predicate agrees with non-vanishing of the oracle theta.
// Entries come back in a fixed deterministic order regardless of `threads`.
std::vector<GateEntry> validate_recoupling(RecouplingContext& rc, int max_color,
                                           int threads = 1);

}  // namespace skeinrep

#endif
