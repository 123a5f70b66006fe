#include <doctest.h>

#include <cstdio>

#include "skeinrep/json_io.hpp"

using namespace skeinrep;

namespace {

Space make_space(int g, std::vector<int> k, int p) {
  return Space(SurfaceSpec{g, std::move(k), p}, std::make_shared<RecouplingContext>(p));
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("scalar serialization round-trips bit exactly") {
  auto ctx = CycloContext::make(8);
  CycloNum x = CycloNum::a_power(ctx, 5) * CycloNum::from_rational(ctx, Rational(-7, 3)) +
               CycloNum::from_rational(ctx, Rational(1, 2));
  json j = cyclo_to_json(x);
  CHECK(cyclo_from_json(j) == x);
  CHECK(cyclo_from_json(j, ctx) == x);

  // textual round trip is byte identical
  std::string text = j.dump();
  json reparsed = json::parse(text);
  CHECK(cyclo_to_json(cyclo_from_json(reparsed)).dump() == text);

  CHECK_THROWS_AS(cyclo_from_json(j, CycloContext::make(10)), usage_error);
}

TEST_CASE("rationals keep explicit denominators") {
  auto ctx = CycloContext::make(6);
  json j = cyclo_to_json(CycloNum::from_rational(ctx, Rational(3)));
  CHECK(j["coeffs"][0] == "3/1");
}

TEST_CASE("matrix serialization") {
  Space sp = make_space(0, {1, 1, 1, 1}, 8);
  CycloMatrix m = curve_operator(sp, CurveDesc::band(2, 3)).matrix;
  json j = matrix_to_json(m);
  CHECK(matrix_from_json(j, sp.cyclo()) == m);
  std::string text = j.dump();
  CHECK(matrix_to_json(matrix_from_json(json::parse(text), sp.cyclo())).dump() == text);
}

TEST_CASE("basis and norms serialization") {
  Space sp = make_space(0, {2, 2, 1, 1, 2}, 10);
  json basis = basis_to_json(sp.spine(), sp.basis());
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].contains("c1"));
  CHECK(basis[0].contains("c2"));

  HermitianData h = basis_norms(sp);
  CHECK(norms_to_json(h).size() == 3);
}

TEST_CASE("report serialization") {
  Space sp = make_space(0, {1, 1, 1, 1}, 8);
  AlgebraReport rep = analyze(sp, GeneratorMode::point_pushing);
  json j = report_to_json(rep);
  CHECK(j["dim"] == 2);
  CHECK(j["algebra_dim"] == 4);
  CHECK(j["commutant_dim"] == 1);
  CHECK(j["verdict"] == "irreducible");
}

TEST_CASE("recoupling cache file round trip") {
  const std::string path = "/tmp/skeinrep_test_cache.json";
  std::remove(path.c_str());

  RecouplingContext rc(8);
  CHECK_FALSE(load_recoupling_cache(rc, path));  // no file yet
  rc.theta(1, 1, 2);
  rc.tet({1, 1, 2, 1, 1, 2});
  for (int c = 0; c <= rc.max_color(); ++c) rc.delta(c);
  save_recoupling_cache(rc, path);

  RecouplingContext fresh(8);
  CHECK(load_recoupling_cache(fresh, path));
  CHECK(fresh.theta(1, 1, 2) == rc.theta(1, 1, 2));
  CHECK(fresh.tet({1, 1, 2, 1, 1, 2}) == rc.tet({1, 1, 2, 1, 1, 2}));

  RecouplingContext wrong_level(10);
  CHECK_FALSE(load_recoupling_cache(wrong_level, path));

  std::remove(path.c_str());
}

TEST_CASE("cached and fresh contexts produce identical downstream output") {
  const std::string path = "/tmp/skeinrep_test_cache2.json";
  std::remove(path.c_str());
  std::string with_cold, with_warm;
  {
    auto rc = std::make_shared<RecouplingContext>(8);
    Space sp(SurfaceSpec{0, {1, 1, 1, 1}, 8}, rc);
    with_cold = matrix_to_json(point_push(sp, LoopDesc{3}).matrix).dump();
    save_recoupling_cache(*rc, path);
  }
  {
    auto rc = std::make_shared<RecouplingContext>(8);
    REQUIRE(load_recoupling_cache(*rc, path));
    Space sp(SurfaceSpec{0, {1, 1, 1, 1}, 8}, rc);
    with_warm = matrix_to_json(point_push(sp, LoopDesc{3}).matrix).dump();
  }
  CHECK(with_cold == with_warm);
  std::remove(path.c_str());
}

}  // TEST_SUITE
