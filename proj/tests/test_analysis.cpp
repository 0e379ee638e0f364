#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pauliwalk/analysis.hpp"
#include "pauliwalk/walk.hpp"

using namespace pauliwalk;

namespace {

Distribution make_dist(std::initializer_list<std::pair<Coord, Real>> sites,
                       int dim = 2) {
  Distribution d;
  d.dimension = dim;
  d.axis_names = dim == 1 ? std::vector<std::string>{"x"}
                          : std::vector<std::string>{"x", "y"};
  for (const auto& [c, p] : sites) d.p[c] = p;
  return d;
}

LatticeField walk_from(LatticeKind kind, const InitialState& init,
                       std::span<const Real> thetas, int t,
                       PauliAxis line_basis = PauliAxis::Z) {
  const auto prog = make_program(kind, thetas, line_basis);
  const Coord ext = LatticeField::extent_for_steps(kind, t, init.position);
  auto f = LatticeField::from_initial_state(kind, ext, init);
  return evolve(std::move(f), prog, t);
}

}  // namespace

TEST_CASE("probabilities") {
  SUBCASE("normalized fields stay normalized") {
    const Real th[2] = {0.4, 1.0};
    const auto f = walk_from(LatticeKind::Square, InitialState{1.1, 0.3, {0, 0, 0}},
                             std::span<const Real>(th, 2), 12);
    CHECK(std::abs(probabilities(f).total() - 1.0) <= 1e-12);
  }

  SUBCASE("ballistic point mass") {
    const Real th[1] = {0.0};
    const auto f = walk_from(LatticeKind::Line, InitialState{}, std::span<const Real>(th, 1), 10);
    const auto d = probabilities(f);
    REQUIRE(d.p.size() == 1);
    CHECK(d.p.at({-10, 0, 0}) == 1.0);
  }

  SUBCASE("square one step from the symmetric state") {
    const Real th[2] = {0.0, 0.0};
    const auto f = walk_from(LatticeKind::Square, InitialState{pi / 2, pi / 2, {0, 0, 0}},
                             std::span<const Real>(th, 2), 1);
    const auto d = probabilities(f);
    REQUIRE(d.p.size() == 4);
    for (const auto& [c, p] : d.p) CHECK(std::abs(p - 0.25) <= 1e-15);
  }
}

TEST_CASE("moments") {
  const auto point = make_dist({{Coord{-7, 0, 0}, 1.0}}, 1);
  CHECK(moments(point).mean[0] == -7.0);
  CHECK(moments(point).variance[0] == 0.0);

  const auto two = make_dist({{Coord{-5, 0, 0}, 0.5}, {Coord{5, 0, 0}, 0.5}}, 1);
  CHECK(moments(two).mean[0] == 0.0);
  CHECK(moments(two).variance[0] == 25.0);

  // frozen from the t=100 run with theta = pi/4 and a |down> start
  const Real th[1] = {pi / 4};
  const auto f = walk_from(LatticeKind::Line, InitialState{}, std::span<const Real>(th, 1), 100);
  const auto m = moments(probabilities(f));
  CHECK(m.variance[0] == doctest::Approx(2089.8392444184578).epsilon(1e-10));
}

TEST_CASE("variance decreases with theta for the symmetric start") {
  Real prev = 0.0;
  bool first = true;
  for (Real theta : {pi / 12, pi / 6, pi / 4, pi / 3, 5 * pi / 12}) {
    const auto f = walk_from(LatticeKind::Line, InitialState{pi / 2, pi / 2, {0, 0, 0}},
                             std::span<const Real>(&theta, 1), 60);
    const Real var = moments(probabilities(f)).variance[0];
    if (!first) CHECK(var < prev);
    prev = var;
    first = false;
  }
}

TEST_CASE("compare metrics") {
  const auto d1 = make_dist({{Coord{0, 0, 0}, 1.0}});
  const auto d2 = make_dist({{Coord{1, 0, 0}, 1.0}});
  CHECK(compare(d1, d1, CompareMetric::MaxAbs) == 0.0);
  CHECK(compare(d1, d1, CompareMetric::TotalVariation) == 0.0);
  CHECK(compare(d1, d2, CompareMetric::TotalVariation) == 1.0);
  CHECK(compare(d1, d2, CompareMetric::MaxAbs) == 1.0);
  CHECK(compare(d2, d1, CompareMetric::TotalVariation) ==
        compare(d1, d2, CompareMetric::TotalVariation));
}

TEST_CASE("detect_symmetry") {
  SUBCASE("point-symmetric distribution matches itself under the point map") {
    const auto d = make_dist({{Coord{2, 1, 0}, 0.25},
                              {Coord{-2, -1, 0}, 0.25},
                              {Coord{0, 3, 0}, 0.25},
                              {Coord{0, -3, 0}, 0.25}});
    const auto reports = detect_symmetry(d, d, 1e-12);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].map == SymmetryMap::Point);
    CHECK(reports[0].matched);
    CHECK(reports[0].max_abs_error == 0.0);
  }

  SUBCASE("unrelated distributions match nothing") {
    const auto d1 = make_dist({{Coord{1, 2, 0}, 0.7}, {Coord{0, 0, 0}, 0.3}});
    const auto d2 = make_dist({{Coord{4, 4, 0}, 0.6}, {Coord{2, 0, 0}, 0.4}});
    for (const auto& r : detect_symmetry(d1, d2, 1e-12)) CHECK(!r.matched);
  }

  SUBCASE("triangular down/up pair is point-reflected, uniquely so at t=5") {
    const Real th[3] = {0, 0, 0};
    const auto down = probabilities(walk_from(LatticeKind::Triangular, InitialState{},
                                              std::span<const Real>(th, 3), 5));
    const auto up = probabilities(walk_from(LatticeKind::Triangular,
                                            InitialState{pi, 0, {0, 0, 0}},
                                            std::span<const Real>(th, 3), 5));
    const auto reports = detect_symmetry(down, up, 1e-12);
    CHECK(reports[0].matched);  // point
    CHECK(!reports[1].matched);
    CHECK(!reports[2].matched);
  }

  CHECK_THROWS_AS(detect_symmetry(make_dist({}, 2),
                                  Distribution{1, {"x"}, {}}, 1e-12),
                  DimensionError);
}

TEST_CASE("square recurrence oracle") {
  SUBCASE("t = 0 returns the initial amplitudes") {
    const auto f = square_recurrence_oracle(Spinor(0.6, Complex(0, 0.8)), 0);
    CHECK((f.at({0, 0, 0}) - Spinor(0.6, Complex(0, 0.8))).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("one literal iteration from (1, 0)") {
    const auto f = square_recurrence_oracle(Spinor(1, 0), 1);
    CHECK(f.at({-1, -1, 0})(0) == Complex(0.5, 0));
    CHECK(f.at({-1, -1, 0})(1) == Complex(0.5, 0));
    CHECK(f.at({-1, 1, 0})(0) == Complex(0.5, 0));
    CHECK(f.at({-1, 1, 0})(1) == Complex(-0.5, 0));
  }

  SUBCASE("matches the engine exactly for t <= 10") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<Real> uni(-1.0, 1.0);
    for (int t = 0; t <= 10; ++t) {
      Spinor init(Complex(uni(rng), uni(rng)), Complex(uni(rng), uni(rng)));
      init.normalize();
      const Real th[2] = {0.0, 0.0};
      const auto prog = make_program(LatticeKind::Square, std::span<const Real>(th, 2));
      LatticeField f(LatticeKind::Square, {t, t, 0});
      f.at({0, 0, 0}) = init;
      const auto engine = evolve(std::move(f), prog, t);
      const auto oracle = square_recurrence_oracle(init, t);
      CHECK(engine_vs_square_oracle_error(engine, oracle) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(square_recurrence_oracle(Spinor(1, 0), 13), Error);
}

TEST_CASE("grover recurrence oracle") {
  SUBCASE("t = 0") {
    const auto res = grover_recurrence_oracle(grover_initial_state(), 0);
    CHECK((res.derived.at(0, 0) - grover_initial_state()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(res.printed_vs_derived_max_abs == 0.0);
  }

  SUBCASE("derived variant reproduces the engine exactly") {
    for (int t : {1, 4, 10}) {
      const auto res = grover_recurrence_oracle(grover_initial_state(), t);
      GroverField g(t);
      g.at(0, 0) = grover_initial_state();
      const auto engine = grover_evolve(std::move(g), t);
      CHECK(max_amplitude_difference(res.derived, engine) == 0.0);
    }
  }

  SUBCASE("the printed variant differs in exactly one stencil term") {
    const auto res = grover_recurrence_oracle(grover_initial_state(), 10);
    REQUIRE(res.stencil_diffs.size() == 1);
    const auto& d = res.stencil_diffs[0];
    CHECK(d.relation == 2);
    CHECK(d.term == 3);
    CHECK(d.printed_offset == std::array<int, 2>{-1, -1});
    CHECK(d.derived_offset == std::array<int, 2>{1, -1});
    CHECK(res.printed_vs_derived_max_abs == 0.3203125);  // dyadic, exact
  }
}
