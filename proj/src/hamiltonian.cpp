#include "pauliwalk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "pauliwalk/spinor_algebra.hpp"
#include "pauliwalk/walk.hpp"

namespace pauliwalk {

namespace {

const Complex kI(0.0, 1.0);

Mat2 mat(Complex a11, Complex a12, Complex a21, Complex a22) {
  Mat2 m;
  m << a11, a12, a21, a22;
  return m;
}

}  // namespace

Mat2 momentum_shift(PauliAxis basis, Real k) {
  const auto [plus, minus] = pauli_projectors(basis);
  return std::exp(-kI * k) * plus + std::exp(kI * k) * minus;
}

Mat2 momentum_step_unitary(PauliAxis basis, Real theta, Real k) {
  return momentum_shift(basis, k) * build_coin(basis, theta);
}

Real dispersion(Real theta, Real k) {
  return std::acos(std::clamp(std::cos(theta) * std::cos(k), -1.0, 1.0));
}

DispersionCurve sample_dispersion(Real theta, int n) {
  DispersionCurve curve;
  curve.theta = theta;
  curve.samples.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int j = 1; j <= n; ++j) {
    const Real k = -pi + 2.0 * pi * j / (n + 1);
    curve.samples.push_back({k, dispersion(theta, k)});
  }
  return curve;
}

MomentumHamiltonian effective_hamiltonian_k(PauliAxis basis, Real theta, Real k) {
  const Mat2 w = momentum_step_unitary(basis, theta, k);
  MomentumHamiltonian out;
  out.degenerate_branch = eig_unitary(w).degenerate;
  out.matrix = log_unitary(w);
  return out;
}

Mat2 closed_form_hamiltonian_k(PauliAxis basis, Real theta, Real k) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  const Real sk = std::sin(k);
  const Real ck = std::cos(k);
  const Real omega = dispersion(theta, k);
  const Real so = std::sin(omega);

  Real prefactor;
  if (so < 1e-6) {
    if (omega < 0.5 * pi) {
      // omega/sin(omega) -> 1 + omega^2/6 + 7 omega^4/360 near omega = 0
      const Real o2 = omega * omega;
      prefactor = 1.0 + o2 / 6.0 + 7.0 * o2 * o2 / 360.0;
    } else {
      // The prefactor diverges at omega = pi while every entry vanishes;
      // return the branch-continuous value from the logarithm.
      return effective_hamiltonian_k(basis, theta, k).matrix;
    }
  } else {
    prefactor = omega / so;
  }

  Mat2 core;
  switch (basis) {
    case PauliAxis::Z:
      core = mat(c * sk, -kI * s * std::exp(-kI * k),
                 -kI * s * std::exp(kI * k), c * sk);
      break;
    case PauliAxis::X:
      core = mat(Complex(c * sk, -s * ck), s * sk,
                 -s * sk, Complex(c * sk, s * ck));
      break;
    case PauliAxis::Y:
      core = mat(Complex(c * sk, -s * ck), -kI * s * sk,
                 -kI * s * sk, Complex(c * sk, s * ck));
      break;
  }
  return prefactor * core * pauli(basis);
}

DiracForm dirac_form(PauliAxis basis, Real theta) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  DiracForm f;
  f.basis = basis;
  switch (basis) {
    case PauliAxis::Z:
      f.alpha = mat(c, s, s, -c);
      f.beta = mat(0, Complex(0, -1), Complex(0, 1), 0);
      break;
    case PauliAxis::X:
      f.alpha = mat(s, c, c, -s);
      f.beta = mat(0, Complex(0, 1), Complex(0, -1), 0);
      break;
    case PauliAxis::Y:
      f.alpha = mat(s, Complex(0, -c), Complex(0, c), -s);
      f.beta = mat(0, 1, 1, 0);
      break;
  }
  return f;
}

DiracPauliForm rotate_to_dirac(const DiracForm& form, Real theta) {
  const DiracForm expected = dirac_form(form.basis, theta);
  if ((form.alpha - expected.alpha).cwiseAbs().maxCoeff() > 1e-12 ||
      (form.beta - expected.beta).cwiseAbs().maxCoeff() > 1e-12) {
    throw NotFromDiracFormError("rotate_to_dirac: matrices do not match dirac_form");
  }
  DiracPauliForm out;
  out.velocity = 1.0;
  const Real half = 0.5 * theta;
  switch (form.basis) {
    case PauliAxis::Z:
      out.alpha = rotate_conjugate(form.alpha, PauliAxis::Y, half, DaggerSide::Left);
      out.beta = rotate_conjugate(form.beta, PauliAxis::Y, half, DaggerSide::Left);
      out.mass = std::sin(theta);
      break;
    case PauliAxis::X:
      out.alpha = rotate_conjugate(form.alpha, PauliAxis::Y, half, DaggerSide::Right);
      out.beta = rotate_conjugate(form.beta, PauliAxis::Y, half, DaggerSide::Right);
      out.mass = -std::sin(theta);
      break;
    case PauliAxis::Y:
      out.alpha = rotate_conjugate(form.alpha, PauliAxis::X, half, DaggerSide::Left);
      out.beta = rotate_conjugate(form.beta, PauliAxis::X, half, DaggerSide::Left);
      out.mass = std::sin(theta);
      break;
  }
  return out;
}

CompositeHamiltonian composite_hamiltonian(LatticeKind kind, Real theta, bool rotated) {
  if (kind != LatticeKind::Square && kind != LatticeKind::Cubic) {
    throw Error("composite_hamiltonian: only square and cubic lattices compose");
  }
  CompositeHamiltonian out;
  out.rotated = rotated;
  std::vector<PauliAxis> axes = kind == LatticeKind::Square
                                    ? std::vector<PauliAxis>{PauliAxis::X, PauliAxis::Z}
                                    : std::vector<PauliAxis>{PauliAxis::X, PauliAxis::Y,
                                                             PauliAxis::Z};
  out.beta_sum = Mat2::Zero();
  for (PauliAxis a : axes) {
    const DiracForm f = dirac_form(a, theta);
    if (rotated) {
      const DiracPauliForm r = rotate_to_dirac(f, theta);
      out.alphas.push_back(r.alpha);
      out.beta_sum += r.beta;
    } else {
      out.alphas.push_back(f.alpha);
      out.beta_sum += f.beta;
    }
  }
  if (kind == LatticeKind::Square && !rotated &&
      out.beta_sum.cwiseAbs().maxCoeff() != 0.0) {
    throw Error("composite_hamiltonian: beta_x + beta_z must cancel exactly");
  }
  out.mass_term = out.beta_sum * std::sin(theta);
  return out;
}

TriangularTerms triangular_terms(Real theta) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  TriangularTerms t;
  t.theta = theta;

  t.axis_r.d_x = 2.0 * mat(c, s, s, -c);
  t.axis_r.d_y = Mat2::Zero();
  t.axis_r.d_xx = mat(0, -s, s, 0);
  t.axis_r.d_xy = Mat2::Zero();
  t.axis_r.beta = mat(0, Complex(0, 1), Complex(0, -1), 0);

  t.axis_s.d_x = mat(s, c, c, -s);
  t.axis_s.d_y = t.axis_s.d_x;
  t.axis_s.d_xx = Mat2::Zero();
  t.axis_s.d_xy = mat(0, Complex(0, -s), Complex(0, s), 0);
  t.axis_s.beta = mat(0, Complex(0, -1), Complex(0, 1), 0);

  t.axis_t.d_x = mat(s, Complex(0, c), Complex(0, -c), -s);
  t.axis_t.d_y = mat(-s, Complex(0, -c), Complex(0, c), s);
  t.axis_t.d_xx = Mat2::Zero();
  t.axis_t.d_xy = mat(0, Complex(0, s), Complex(0, -s), 0);
  t.axis_t.beta = mat(0, -1, 1, 0);

  return t;
}

CliffordReport clifford_report(const Mat2& a, const Mat2& b, Real tol) {
  CliffordReport r;
  r.hermitian_a = is_hermitian(a, tol);
  r.hermitian_b = is_hermitian(b, tol);
  r.a_squares_to_identity =
      ((a * a) - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
  r.b_squares_to_identity =
      ((b * b) - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
  r.anticommute = ((a * b) + (b * a)).cwiseAbs().maxCoeff() <= tol;
  return r;
}

std::vector<TriangularAuditEntry> triangular_audit(Real theta) {
  const TriangularTerms t = triangular_terms(theta);
  std::vector<TriangularAuditEntry> out;
  auto add = [&out](const char* axis, const char* name, const Mat2& m, const Mat2& beta) {
    out.push_back({axis, name, m, clifford_report(m, beta)});
  };
  // alpha_z^1 enters the Hamiltonian as 2*alpha_z^1 d/dx; strip the factor.
  add("R", "alpha_z_1", 0.5 * t.axis_r.d_x, t.axis_r.beta);
  add("R", "alpha_z_2", t.axis_r.d_xx, t.axis_r.beta);
  add("S", "alpha_x_1", t.axis_s.d_x, t.axis_s.beta);
  add("S", "alpha_x_2", t.axis_s.d_y, t.axis_s.beta);
  add("S", "alpha_x_3", t.axis_s.d_xy, t.axis_s.beta);
  add("T", "alpha_y_1", t.axis_t.d_x, t.axis_t.beta);
  add("T", "alpha_y_2", t.axis_t.d_y, t.axis_t.beta);
  add("T", "alpha_y_3", t.axis_t.d_xy, t.axis_t.beta);
  return out;
}

LatticeField apply_trig_shift(const LatticeField& field1d, TrigShift which,
                              StencilBoundary boundary) {
  if (field1d.dimension() != 1) {
    throw DimensionError("apply_trig_shift: field must be one-dimensional");
  }
  const int r = field1d.extent()[0];
  if (boundary == StencilBoundary::Zero) {
    if (field1d.at(Coord{-r, 0, 0}).squaredNorm() > 0.0 ||
        field1d.at(Coord{r, 0, 0}).squaredNorm() > 0.0) {
      throw ExtentOverflowError("apply_trig_shift: stencil would cross the boundary");
    }
  }
  const int n = 2 * r + 1;
  auto wrap = [&](int z) {
    if (z > r) return z - n;
    if (z < -r) return z + n;
    return z;
  };
  LatticeField out(field1d.kind(), field1d.extent());
  for (int z = -r; z <= r; ++z) {
    Spinor left = Spinor::Zero();
    Spinor right = Spinor::Zero();
    if (boundary == StencilBoundary::Periodic) {
      left = field1d.at(Coord{wrap(z - 1), 0, 0});
      right = field1d.at(Coord{wrap(z + 1), 0, 0});
    } else {
      if (z - 1 >= -r) left = field1d.at(Coord{z - 1, 0, 0});
      if (z + 1 <= r) right = field1d.at(Coord{z + 1, 0, 0});
    }
    if (which == TrigShift::SinP) {
      out.at(Coord{z, 0, 0}) = 0.5 * kI * (left - right);
    } else {
      out.at(Coord{z, 0, 0}) = 0.5 * (left + right);
    }
  }
  return out;
}

Mat2 printed_y_step_unitary(Real theta, Real k) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  const Complex em = 0.5 * std::exp(-kI * k);
  const Complex ep = 0.5 * std::exp(kI * k);
  const Mat2 block_minus = mat(c + s, Complex(0, -c) + Complex(0, s),
                               Complex(0, c) + Complex(0, s), c - s);
  // (2,1) of this block is printed as -i cos(theta) + sin(theta).
  const Mat2 block_plus = mat(c - s, Complex(0, c) + Complex(0, s),
                              Complex(0, -c) + s, c + s);
  return em * block_minus + ep * block_plus;
}

TranscriptionCheck check_printed_y_unitary(Real theta, Real k) {
  const Mat2 diff = printed_y_step_unitary(theta, k) -
                    momentum_step_unitary(PauliAxis::Y, theta, k);
  TranscriptionCheck out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Real d = std::abs(diff(i, j));
      if (d > out.max_abs_diff) {
        out.max_abs_diff = d;
        out.row = i;
        out.col = j;
      }
    }
  }
  return out;
}

}  // namespace pauliwalk
