#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pauliwalk/analysis.hpp"
#include "pauliwalk/spinor_algebra.hpp"
#include "pauliwalk/walk.hpp"

using namespace pauliwalk;

namespace {

const Complex I1(0.0, 1.0);

Real max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

Mat2 coin_in_eigenbasis(Real theta) {
  Mat2 r;
  r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return r;
}

// Change-of-basis route, independent of the closed forms in build_coin.
Mat2 coin_oracle(PauliAxis basis, Real theta) {
  const auto [plus, minus] = basis_states(basis);
  Mat2 v;
  v.col(0) = plus;
  v.col(1) = minus;
  return v * coin_in_eigenbasis(theta) * v.adjoint();
}

// Outer-product sum transcription of the coin definition.
Mat2 coin_outer_sum(PauliAxis basis, Real theta) {
  const auto [plus, minus] = basis_states(basis);
  return std::cos(theta) * (plus * plus.adjoint()) +
         std::sin(theta) * (plus * minus.adjoint()) -
         std::sin(theta) * (minus * plus.adjoint()) +
         std::cos(theta) * (minus * minus.adjoint());
}

LatticeField line_field(int extent, const Spinor& s, int pos = 0) {
  LatticeField f(LatticeKind::Line, Coord{extent, 0, 0});
  f.at(Coord{pos, 0, 0}) = s;
  return f;
}

InitialState random_state(std::mt19937& rng, Coord pos = {0, 0, 0}) {
  std::uniform_real_distribution<Real> uni(0.0, 1.0);
  return InitialState{uni(rng) * pi, uni(rng) * 2.0 * pi, pos};
}

}  // namespace

TEST_CASE("build_coin matches the change-of-basis and outer-product routes") {
  CHECK(max_abs(build_coin(PauliAxis::Z, 0.0) - Mat2::Identity()) == 0.0);

  const Real h = std::sqrt(0.5);
  Mat2 expected;
  expected << h, h, -h, h;
  CHECK(max_abs(build_coin(PauliAxis::Z, pi / 4) - expected) <= 1e-15);

  for (PauliAxis b : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    for (Real theta : {0.0, 0.3, pi / 4, 1.2, pi / 2, 2.9}) {
      const Mat2 coin = build_coin(b, theta);
      CHECK(max_abs(coin - coin_oracle(b, theta)) <= 1e-15);
      CHECK(max_abs(coin - coin_outer_sum(b, theta)) <= 1e-15);
      CHECK(is_unitary(coin, 1e-15));
    }
  }
}

TEST_CASE("pauli projectors") {
  for (PauliAxis b : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const auto [plus, minus] = pauli_projectors(b);
    CHECK(max_abs(plus + minus - Mat2::Identity()) == 0.0);
    const auto [vp, vm] = basis_states(b);
    CHECK(max_abs(plus - vp * vp.adjoint()) <= 1e-15);
    CHECK(max_abs(minus - vm * vm.adjoint()) <= 1e-15);
  }
}

TEST_CASE("step_axis on the line") {
  AxisStep step;
  step.basis = PauliAxis::Z;
  step.theta = 0.0;
  step.displacement_plus = {-1, 0, 0};
  step.displacement_minus = {1, 0, 0};

  SUBCASE("identity coin is a pure shift") {
    const auto out = step_axis(line_field(3, Spinor(1, 0)), step);
    CHECK(std::abs(out.at({-1, 0, 0})(0) - 1.0) == 0.0);
    CHECK(out.total_norm_sq() == 1.0);
  }

  SUBCASE("theta = pi/2 flips and shifts") {
    step.theta = pi / 2;
    const auto out = step_axis(line_field(3, Spinor(1, 0)), step);
    CHECK(std::abs(out.at({1, 0, 0})(1) + 1.0) <= 1e-15);
    CHECK(out.at({1, 0, 0})(0) == Complex(0, 0));
  }

  SUBCASE("two Hadamard-angle steps from |down>") {
    step.theta = pi / 4;
    auto f = step_axis(step_axis(line_field(3, Spinor(1, 0)), step), step);
    CHECK(std::abs(f.at({-2, 0, 0})(0) - 0.5) <= 1e-15);
    CHECK(std::abs(f.at({0, 0, 0})(0) + 0.5) <= 1e-15);
    CHECK(std::abs(f.at({0, 0, 0})(1) + 0.5) <= 1e-15);
    CHECK(std::abs(f.at({2, 0, 0})(1) + 0.5) <= 1e-15);
    const auto d = probabilities(f);
    CHECK(std::abs(d.p.at({-2, 0, 0}) - 0.25) <= 1e-15);
    CHECK(std::abs(d.p.at({0, 0, 0}) - 0.5) <= 1e-15);
    CHECK(std::abs(d.p.at({2, 0, 0}) - 0.25) <= 1e-15);
  }

  SUBCASE("amplitude at the boundary raises ExtentOverflow") {
    CHECK_THROWS_AS(step_axis(line_field(2, Spinor(1, 0), -2), step),
                    ExtentOverflowError);
  }

  SUBCASE("norm is preserved to 1e-14 per step") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
      step.theta = 2.0 * pi * i / 20.0;
      auto f = line_field(2, random_state(rng).spinor());
      CHECK(std::abs(step_axis(f, step).total_norm_sq() - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("make_program composition orders and displacements") {
  const Real two[2] = {0.1, 0.2};
  const auto sq = make_program(LatticeKind::Square, std::span<const Real>(two, 2));
  REQUIRE(sq.steps.size() == 2);
  CHECK(sq.steps[0].basis == PauliAxis::Z);
  CHECK(sq.steps[0].theta == 0.1);
  CHECK(sq.steps[0].displacement_plus == Coord{0, -1, 0});
  CHECK(sq.steps[1].basis == PauliAxis::X);
  CHECK(sq.steps[1].displacement_plus == Coord{-1, 0, 0});

  const Real three[3] = {0.1, 0.2, 0.3};
  const auto tri = make_program(LatticeKind::Triangular, std::span<const Real>(three, 3));
  REQUIRE(tri.steps.size() == 3);
  CHECK(tri.steps[0].basis == PauliAxis::Z);
  CHECK(tri.steps[0].displacement_plus == Coord{2, 0, 0});
  CHECK(tri.steps[1].displacement_plus == Coord{1, 1, 0});
  CHECK(tri.steps[2].displacement_plus == Coord{1, -1, 0});
  for (const auto& s : tri.steps) {
    CHECK(s.displacement_minus == Coord{-s.displacement_plus[0],
                                        -s.displacement_plus[1], 0});
  }

  const auto cub = make_program(LatticeKind::Cubic, std::span<const Real>(three, 3));
  CHECK(cub.steps[0].displacement_plus == Coord{0, 0, -1});
  CHECK(cub.steps[1].displacement_plus == Coord{-1, 0, 0});
  CHECK(cub.steps[2].displacement_plus == Coord{0, -1, 0});

  const Real one[1] = {0.4};
  const auto line = make_program(LatticeKind::Line, std::span<const Real>(one, 1),
                                 PauliAxis::X);
  CHECK(line.steps[0].basis == PauliAxis::X);
  CHECK(line.steps[0].displacement_plus == Coord{-1, 0, 0});

  CHECK_THROWS_AS(make_program(LatticeKind::Square, std::span<const Real>(three, 3)),
                  BadAxisCountError);

  const auto kag = make_program(LatticeKind::Kagome, std::span<const Real>(three, 3));
  CHECK(kag.steps.empty());
  CHECK(kag.kagome_thetas == std::array<Real, 3>{0.1, 0.2, 0.3});
}

TEST_CASE("evolve") {
  SUBCASE("t = 0 leaves the field unchanged") {
    const Real th[1] = {0.3};
    const auto prog = make_program(LatticeKind::Line, std::span<const Real>(th, 1));
    auto f = line_field(2, Spinor(0.6, Complex(0, 0.8)));
    const auto out = evolve(f, prog, 0);
    CHECK((out.at({0, 0, 0}) - f.at({0, 0, 0})).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("theta = 0 walk is ballistic") {
    const Real th[1] = {0.0};
    const auto prog = make_program(LatticeKind::Line, std::span<const Real>(th, 1));
    const auto out = evolve(line_field(25, Spinor(1, 0)), prog, 25);
    CHECK(std::norm(out.at({-25, 0, 0})(0)) == 1.0);
  }

  SUBCASE("negative step counts are rejected") {
    const Real th[1] = {0.0};
    const auto prog = make_program(LatticeKind::Line, std::span<const Real>(th, 1));
    CHECK_THROWS_AS(evolve(line_field(2, Spinor(1, 0)), prog, -1), Error);
  }

  SUBCASE("off-sublattice initial positions are rejected") {
    CHECK_THROWS_AS(LatticeField::from_initial_state(LatticeKind::Triangular, {4, 2, 0},
                                                     InitialState{0, 0, {1, 0, 0}}),
                    OffSublatticeError);
    CHECK_THROWS_AS(LatticeField::from_initial_state(LatticeKind::Kagome, {4, 2, 0},
                                                     InitialState{0, 0, {0, 0, 0}}),
                    OffSublatticeError);
  }

  SUBCASE("triangular single step spreads into four quarters") {
    const Real th[3] = {0, 0, 0};
    const auto prog = make_program(LatticeKind::Triangular, std::span<const Real>(th, 3));
    LatticeField f(LatticeKind::Triangular, {4, 2, 0});
    f.at({0, 0, 0}) = Spinor(1, 0);
    const auto d = probabilities(evolve(f, prog, 1));
    REQUIRE(d.p.size() == 4);
    CHECK(std::abs(d.p.at({4, 0, 0}) - 0.25) <= 1e-14);
    CHECK(std::abs(d.p.at({2, 2, 0}) - 0.25) <= 1e-14);
    CHECK(std::abs(d.p.at({2, -2, 0}) - 0.25) <= 1e-14);
    CHECK(std::abs(d.p.at({0, 0, 0}) - 0.25) <= 1e-14);
  }
}

TEST_CASE("kagome site classification") {
  CHECK(kagome_site_type(0, 0) == KagomeSiteType::Hole);
  CHECK(kagome_site_type(2, 0) == KagomeSiteType::P);
  CHECK(kagome_site_type(1, 1) == KagomeSiteType::Q);
  CHECK_THROWS_AS(kagome_site_type(1, 0), OffSublatticeError);

  // Exhaustive over |x|,|y| <= 20: each type's two axes connect only to
  // non-hole sites, following the p->q->o->p cycle.
  auto shifted = [](int x, int y, PauliAxis a, int sign) {
    switch (a) {
      case PauliAxis::Z: return std::pair{x + 2 * sign, y};
      case PauliAxis::X: return std::pair{x + sign, y + sign};
      case PauliAxis::Y: return std::pair{x + sign, y - sign};
    }
    return std::pair{x, y};
  };
  auto axes_of = [](KagomeSiteType t) -> std::array<PauliAxis, 2> {
    switch (t) {
      case KagomeSiteType::P: return {PauliAxis::X, PauliAxis::Y};  // S, T
      case KagomeSiteType::Q: return {PauliAxis::Y, PauliAxis::Z};  // T, R
      case KagomeSiteType::O: return {PauliAxis::Z, PauliAxis::X};  // R, S
      default: throw Error("hole");
    }
  };
  auto expected_neighbor = [](KagomeSiteType t, PauliAxis a) {
    // Y: p<->q, Z: q<->o, X: o<->p
    if (a == PauliAxis::Y) return t == KagomeSiteType::P ? KagomeSiteType::Q : KagomeSiteType::P;
    if (a == PauliAxis::Z) return t == KagomeSiteType::Q ? KagomeSiteType::O : KagomeSiteType::Q;
    return t == KagomeSiteType::O ? KagomeSiteType::P : KagomeSiteType::O;
  };
  for (int x = -20; x <= 20; ++x) {
    for (int y = -20; y <= 20; ++y) {
      if (((x + y) % 2 + 2) % 2 != 0) continue;
      const auto t = kagome_site_type(x, y);
      if (t == KagomeSiteType::Hole) continue;
      for (PauliAxis a : axes_of(t)) {
        for (int sign : {1, -1}) {
          const auto [nx, ny] = shifted(x, y, a, sign);
          CHECK(kagome_site_type(nx, ny) == expected_neighbor(t, a));
        }
      }
    }
  }
}

TEST_CASE("step_kagome cycles the sublattices") {
  const Coord origin{2, 0, 0};
  const Coord ext = LatticeField::extent_for_steps(LatticeKind::Kagome, 12, origin);
  auto f = LatticeField::from_initial_state(LatticeKind::Kagome, ext,
                                            InitialState{0, 0, origin});
  CHECK(kagome_support_type(f) == KagomeSiteType::P);
  CHECK(kagome_step_order(KagomeSiteType::P) ==
        std::array<PauliAxis, 3>{PauliAxis::Y, PauliAxis::Z, PauliAxis::X});
  CHECK(kagome_step_order(KagomeSiteType::Q) ==
        std::array<PauliAxis, 3>{PauliAxis::Z, PauliAxis::X, PauliAxis::Y});
  CHECK(kagome_step_order(KagomeSiteType::O) ==
        std::array<PauliAxis, 3>{PauliAxis::X, PauliAxis::Y, PauliAxis::Z});

  SUBCASE("first sub-step moves support to q-type sites") {
    AxisStep y_step;
    y_step.basis = PauliAxis::Y;
    y_step.theta = 0.0;
    y_step.displacement_plus = {1, -1, 0};
    y_step.displacement_minus = {-1, 1, 0};
    CHECK(kagome_support_type(step_axis(f, y_step)) == KagomeSiteType::Q);
  }

  SUBCASE("full steps return to p and conserve norm") {
    const std::array<Real, 3> thetas{0.2, 0.0, 0.5};
    for (int t = 0; t < 12; ++t) {
      f = step_kagome(f, thetas);
      CHECK(kagome_support_type(f) == KagomeSiteType::P);
    }
    CHECK(std::abs(f.total_norm_sq() - 1.0) <= 1e-12);
  }

  SUBCASE("mixed support is rejected") {
    auto bad = f;
    bad.at({1, 1, 0}) = Spinor(0, 1);  // q site while (2,0) is p
    CHECK_THROWS_AS(step_kagome(bad, {0, 0, 0}), MixedSublatticeSupportError);
  }
}

TEST_CASE("grover walk") {
  SUBCASE("one step from the Grover initial state") {
    GroverField g(2);
    g.at(0, 0) = grover_initial_state();
    const auto out = grover_step(g);
    CHECK(std::abs(out.at(-1, -1)(0) + 0.5) <= 1e-15);
    CHECK(std::abs(out.at(-1, 1)(1) - 0.5) <= 1e-15);
    CHECK(std::abs(out.at(1, -1)(2) - 0.5) <= 1e-15);
    CHECK(std::abs(out.at(1, 1)(3) + 0.5) <= 1e-15);
    const auto d = probabilities(out);
    for (const auto& [c, p] : d.p) CHECK(std::abs(p - 0.25) <= 1e-15);
    CHECK(d.p.size() == 4);
  }

  SUBCASE("zero field stays zero") {
    GroverField g(2);
    CHECK(grover_step(g).total_norm_sq() == 0.0);
  }

  SUBCASE("norm conserved over 50 steps") {
    GroverField g(50);
    g.at(0, 0) = grover_initial_state();
    g = grover_evolve(std::move(g), 50);
    CHECK(std::abs(g.total_norm_sq() - 1.0) <= 1e-12);
  }

  SUBCASE("boundary overflow is detected") {
    GroverField g(1);
    g.at(1, 1) = grover_initial_state();
    CHECK_THROWS_AS(grover_step(g), ExtentOverflowError);
  }
}

TEST_CASE("walk properties: locality, parity, linearity") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<Real> uni(0.0, 1.0);

  SUBCASE("probability stays inside the displacement cone") {
    const int t = 8;
    const Real th[2] = {uni(rng) * pi, uni(rng) * pi};
    const auto prog = make_program(LatticeKind::Square, std::span<const Real>(th, 2));
    auto f = LatticeField::from_initial_state(LatticeKind::Square, {t + 3, t + 3, 0},
                                              random_state(rng));
    const auto d = probabilities(evolve(std::move(f), prog, t));
    for (const auto& [c, p] : d.p) {
      CHECK(std::abs(c[0]) <= t);
      CHECK(std::abs(c[1]) <= t);
    }
  }

  SUBCASE("triangular support stays on x+y even sites") {
    const int t = 6;
    const Real th[3] = {uni(rng), uni(rng), uni(rng)};
    const auto prog = make_program(LatticeKind::Triangular, std::span<const Real>(th, 3));
    const Coord ext = LatticeField::extent_for_steps(LatticeKind::Triangular, t, {0, 0, 0});
    auto f = LatticeField::from_initial_state(LatticeKind::Triangular, ext,
                                              random_state(rng));
    const auto d = probabilities(evolve(std::move(f), prog, t));
    for (const auto& [c, p] : d.p) CHECK(((c[0] + c[1]) % 2 + 2) % 2 == 0);
  }

  SUBCASE("evolution is linear in the field") {
    const int t = 4;
    const Real th[2] = {0.3, 1.1};
    const auto prog = make_program(LatticeKind::Square, std::span<const Real>(th, 2));
    LatticeField f1(LatticeKind::Square, {t + 2, t + 2, 0});
    LatticeField f2(LatticeKind::Square, {t + 2, t + 2, 0});
    for (int i = 0; i < 5; ++i) {
      const int x = static_cast<int>(uni(rng) * 3) - 1;
      const int z = static_cast<int>(uni(rng) * 3) - 1;
      f1.at({x, z, 0}) += Spinor(Complex(uni(rng), uni(rng)), Complex(uni(rng), uni(rng)));
      f2.at({x, z, 0}) += Spinor(Complex(uni(rng), uni(rng)), Complex(uni(rng), uni(rng)));
    }
    const Complex a(0.3, -0.4), b(0.8, 0.1);
    LatticeField combo(LatticeKind::Square, {t + 2, t + 2, 0});
    for (int x = -(t + 2); x <= t + 2; ++x) {
      for (int z = -(t + 2); z <= t + 2; ++z) {
        combo.at({x, z, 0}) = a * f1.at({x, z, 0}) + b * f2.at({x, z, 0});
      }
    }
    const auto e1 = evolve(f1, prog, t);
    const auto e2 = evolve(f2, prog, t);
    const auto ec = evolve(combo, prog, t);
    Real worst = 0.0;
    for (int x = -(t + 2); x <= t + 2; ++x) {
      for (int z = -(t + 2); z <= t + 2; ++z) {
        const Spinor want = a * e1.at({x, z, 0}) + b * e2.at({x, z, 0});
        worst = std::max(worst, (ec.at({x, z, 0}) - want).cwiseAbs().maxCoeff());
      }
    }
    CHECK(worst <= 1e-12);
  }

  SUBCASE("norm conserved for random angles on every lattice") {
    for (LatticeKind kind : {LatticeKind::Line, LatticeKind::Square,
                             LatticeKind::Cubic, LatticeKind::Triangular,
                             LatticeKind::Kagome}) {
      const int t = kind == LatticeKind::Cubic ? 6 : 10;
      std::vector<Real> th(lattice_axis_count(kind));
      for (Real& v : th) v = uni(rng) * pi;
      const auto prog = make_program(kind, th);
      const Coord origin = kind == LatticeKind::Kagome ? Coord{2, 0, 0} : Coord{0, 0, 0};
      const Coord ext = LatticeField::extent_for_steps(kind, t, origin);
      auto f = LatticeField::from_initial_state(kind, ext, random_state(rng, origin));
      CHECK(std::abs(evolve(std::move(f), prog, t).total_norm_sq() - 1.0) <= 1e-12);
    }
  }
}
