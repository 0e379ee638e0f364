#pragma once

#include <span>
#include <vector>

#include "pauliwalk/lattice.hpp"
#include "pauliwalk/types.hpp"

namespace pauliwalk {

/// One coin+shift sub-step: the +/- eigencomponents of pauli(basis) move by
/// displacement_plus / displacement_minus.
struct AxisStep {
  PauliAxis basis = PauliAxis::Z;
  Real theta = 0.0;
  Coord displacement_plus{0, 0, 0};
  Coord displacement_minus{0, 0, 0};
};

/// Ordered sub-steps of one full walk step, first entry applied first.
/// Kagome sub-steps are generated per sublattice at stepping time, so the
/// program only records the per-axis angles (indexed Z, X, Y).
struct WalkProgram {
  LatticeKind kind = LatticeKind::Line;
  std::vector<AxisStep> steps;
  std::array<Real, 3> kagome_thetas{0.0, 0.0, 0.0};
};

/// Coin B(theta) expressed in the computational basis; in the eigenbasis of
/// pauli(basis) its matrix is [[cos,sin],[-sin,cos]].
Mat2 build_coin(PauliAxis basis, Real theta);

/// |+><+| and |-><-| of pauli(axis), exact half-integer entries.
std::pair<Mat2, Mat2> pauli_projectors(PauliAxis axis);

WalkProgram make_program(LatticeKind kind, std::span<const Real> thetas,
                         PauliAxis line_basis = PauliAxis::Z);

void step_axis_into(LatticeField& dst, const LatticeField& src, const AxisStep& step);
LatticeField step_axis(const LatticeField& field, const AxisStep& step);

LatticeField evolve(LatticeField field, const WalkProgram& program, int t);

/// Sub-step order for a full kagome step starting from the given sublattice.
std::array<PauliAxis, 3> kagome_step_order(KagomeSiteType type);

/// Sublattice carrying all of the field's support; throws on mixed support.
KagomeSiteType kagome_support_type(const LatticeField& field);

LatticeField step_kagome(const LatticeField& field, const std::array<Real, 3>& thetas);

Mat4 grover_coin();
Vec4 grover_initial_state();  // (|0> - |1> - |2> + |3>)/2

void grover_step_into(GroverField& dst, const GroverField& src);
GroverField grover_step(const GroverField& g);
GroverField grover_evolve(GroverField g, int t);

}  // namespace pauliwalk
