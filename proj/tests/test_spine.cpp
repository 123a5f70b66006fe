#include <doctest.h>

#include "skeinrep/admissible.hpp"
#include "skeinrep/spine.hpp"

using namespace skeinrep;

namespace {

SurfaceSpec spec_of(int g, std::vector<int> k, int p) { return SurfaceSpec{g, std::move(k), p}; }

}  // namespace

TEST_SUITE("spine") {

TEST_CASE("spec validation names the violated condition") {
  CHECK_NOTHROW(spec_of(0, {1, 1, 1, 1}, 6).validate());
  CHECK_NOTHROW(spec_of(1, {2}, 8).validate());  // 2g+n = 3 is fine with a handle

  try {
    spec_of(0, {1, 1, 1}, 8).validate();
    FAIL("expected rejection");
  } catch (const usage_error& e) {
    CHECK(std::string(e.what()).find("2g+n") != std::string::npos);
  }
  CHECK_THROWS_AS(spec_of(0, {1, 0, 1, 1}, 8).validate(), usage_error);  // color 0
  CHECK_THROWS_AS(spec_of(0, {1, 1, 1, 1}, 7).validate(), usage_error);  // odd level
  CHECK_THROWS_AS(spec_of(0, {1, 1, 1, 5}, 8).validate(), usage_error);  // p < k+4
  CHECK_THROWS_AS(spec_of(0, {}, 8).validate(), usage_error);            // n = 0
}

TEST_CASE("spine shapes") {
  Spine s4 = build_spine(spec_of(0, {1, 1, 1, 1}, 8));
  CHECK(s4.internal_edges.size() == 1);
  CHECK(s4.vertices.size() == 2);

  Spine s12 = build_spine(spec_of(1, {2, 2}, 8));
  CHECK(s12.internal_edges.size() == 2);  // trunk and loop
  CHECK(s12.vertices.size() == 2);

  Spine s22 = build_spine(spec_of(2, {2}, 10));
  CHECK(s22.internal_edges.size() == 4);  // 1 + 3g - 3

  CHECK_THROWS_AS(build_spine(spec_of(1, {2}, 8), TreeShape::right_comb), usage_error);
}

TEST_CASE("enumeration ground cases") {
  auto basis = enumerate_colorings(build_spine(spec_of(0, {1, 1, 1, 1}, 6)));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].colors == std::vector<int>{0});

  basis = enumerate_colorings(build_spine(spec_of(0, {1, 1, 1, 1}, 8)));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].colors == std::vector<int>{0});
  CHECK(basis[1].colors == std::vector<int>{2});

  basis = enumerate_colorings(build_spine(spec_of(1, {2}, 8)));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].colors == std::vector<int>{1});
}

TEST_CASE("dimension values") {
  CHECK(dimension(spec_of(0, {1, 1, 1, 1}, 8)) == 2);
  CHECK(dimension(spec_of(0, {2, 2, 2, 2}, 10)) == 2);
  CHECK(dimension(spec_of(0, {2, 2, 1, 1, 2}, 10)) == 3);
  CHECK(dimension(spec_of(0, {1, 1, 1, 1, 2}, 8)) == 2);
  CHECK(dimension(spec_of(0, {1, 1, 1, 1, 2}, 10)) == 3);
  // five odd colors cannot satisfy the parity rule at every vertex
  CHECK(dimension(spec_of(0, {1, 1, 1, 1, 1}, 8)) == 0);
}

TEST_CASE("enumeration agrees with exhaustive filtering") {
  for (int n = 4; n <= 5; ++n) {
    std::vector<int> k(n, 1);
    k[0] = 2;
    k[n - 1] = 1;
    for (int p : {8, 10}) {
      SurfaceSpec spec = spec_of(0, k, p);
      Spine spine = build_spine(spec);
      auto fast = enumerate_colorings(spine);

      // brute force over all assignments with colors <= 3
      std::vector<Coloring> slow;
      const int vars = static_cast<int>(spine.internal_edges.size());
      std::vector<int> a(vars, 0);
      const int bound = std::min(3, p / 2 - 2);
      while (true) {
        std::vector<int> colors(spine.edges.size(), -1);
        for (size_t e = 0; e < spine.edges.size(); ++e)
          colors[e] = spine.edges[e].fixed_color;
        for (int v = 0; v < vars; ++v) colors[spine.internal_edges[v]] = a[v];
        bool ok = true;
        for (const auto& vtx : spine.vertices)
          if (!admissible(colors[vtx[0]], colors[vtx[1]], colors[vtx[2]], p)) ok = false;
        if (ok) slow.push_back(Coloring{a});
        int idx = vars - 1;
        while (idx >= 0 && a[idx] == bound) a[idx--] = 0;
        if (idx < 0) break;
        ++a[idx];
      }
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("deterministic ordering") {
  SurfaceSpec spec = spec_of(0, {2, 2, 1, 1, 2}, 10);
  auto a = enumerate_colorings(build_spine(spec));
  auto b = enumerate_colorings(build_spine(spec));
  CHECK(a == b);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
}

TEST_CASE("dimension is invariant across tree shapes") {
  for (int n = 4; n <= 6; ++n) {
    std::vector<int> k(n, 1);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int i = 0; i < n; ++i) k[i] = (mask >> i & 1) ? 2 : 1;
      for (int p : {6, 8, 10}) {
        SurfaceSpec spec = spec_of(0, k, p);
        auto cat = enumerate_tree_colorings(FusionTree::caterpillar(n - 1), spec);
        auto comb = enumerate_tree_colorings(FusionTree::right_comb(n - 1), spec);
        CHECK(cat.size() == comb.size());
      }
    }
  }
}

TEST_CASE("tree rotations preserve leaf intervals") {
  FusionTree t = FusionTree::caterpillar(4);
  FusionTree r = t.rotated({1, 4, true});
  CHECK(r.has_node(3, 4));
  CHECK(r.has_node(1, 2));
  FusionTree back = r.rotated({1, 4, false});
  CHECK(back == t);
  CHECK_THROWS_AS(t.rotated({2, 3, true}), usage_error);
}

}  // TEST_SUITE
