#pragma once

#include <utility>

#include "pauliwalk/types.hpp"

namespace pauliwalk {

/// sigma_x = [[0,1],[1,0]], sigma_y = [[0,-i],[i,0]], sigma_z = [[1,0],[0,-1]].
Mat2 pauli(PauliAxis axis);

/// (plus, minus) eigenpair of pauli(axis): sigma|+> = +|+>, sigma|-> = -|->.
std::pair<Spinor, Spinor> basis_states(PauliAxis axis);

bool is_unitary(const Mat2& m, Real tol);
bool is_hermitian(const Mat2& m, Real tol);
bool is_traceless(const Mat2& m, Real tol);

/// Eigendecomposition of a 2x2 unitary. Ordering: smaller principal argument
/// of the eigenvalue first; ties broken lexicographically on the eigenvector
/// after its first nonzero component is phase-normalized to be real positive.
struct UnitaryEigen {
  Complex lambda1, lambda2;
  Spinor v1, v2;
  bool degenerate = false;
};

UnitaryEigen eig_unitary(const Mat2& u);

/// Hermitian H with exp(-iH) = U, eigenphases in the principal branch
/// (-pi, pi]. Degenerate U = e^{i phi} I maps to -phi*I, except U = -I which
/// maps to pi*sigma_z.
Mat2 log_unitary(const Mat2& u);

/// exp(-iH) for Hermitian H, closed form via H = a*I + b*(n.sigma).
Mat2 exp_hermitian(const Mat2& h);

/// R = exp(-i*angle*pauli(axis)), evaluated exactly.
Mat2 rotation_gate(PauliAxis axis, Real angle);

enum class DaggerSide { Left, Right };

/// R^dag M R (Left) or R M R^dag (Right) with R = rotation_gate(axis, angle).
Mat2 rotate_conjugate(const Mat2& m, PauliAxis axis, Real angle, DaggerSide side);

}  // namespace pauliwalk
