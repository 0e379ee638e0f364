#include "pauliwalk/spinor_algebra.hpp"

#include <cmath>

namespace pauliwalk {

namespace {

constexpr Real kUnitaryTol = 1e-12;
constexpr Real kHermitianTol = 1e-12;
// Below this eigenvalue gap the eigenvector solve is ill-conditioned; a 2x2
// unitary with coinciding eigenvalues is a phase times the identity.
constexpr Real kDegenerateGap = 1e-9;

const Complex kI(0.0, 1.0);

// Make the first nonzero component real positive.
Spinor phase_normalize(Spinor v) {
  Complex lead = std::abs(v(0)) > 1e-12 ? v(0) : v(1);
  Real mag = std::abs(lead);
  if (mag > 0.0) v *= std::conj(lead) / mag;
  return v;
}

bool vector_less(const Spinor& a, const Spinor& b) {
  for (int i = 0; i < 2; ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

Spinor eigenvector_for(const Mat2& u, Complex lambda) {
  // Rows of (U - lambda*I) are proportional; both null-vector candidates are
  // formed and the better conditioned one kept.
  Spinor a(u(0, 1), lambda - u(0, 0));
  Spinor b(lambda - u(1, 1), u(1, 0));
  Spinor v = a.norm() >= b.norm() ? a : b;
  return phase_normalize(v.normalized());
}

}  // namespace

Mat2 pauli(PauliAxis axis) {
  Mat2 m;
  switch (axis) {
    case PauliAxis::X:
      m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
      break;
    case PauliAxis::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case PauliAxis::Z:
      m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
      break;
  }
  return m;
}

std::pair<Spinor, Spinor> basis_states(PauliAxis axis) {
  const Real s = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case PauliAxis::X:
      return {Spinor(Complex(s, 0), Complex(s, 0)),
              Spinor(Complex(s, 0), Complex(-s, 0))};
    case PauliAxis::Y:
      return {Spinor(Complex(s, 0), Complex(0, s)),
              Spinor(Complex(s, 0), Complex(0, -s))};
    case PauliAxis::Z:
      return {Spinor(Complex(1, 0), Complex(0, 0)),
              Spinor(Complex(0, 0), Complex(1, 0))};
  }
  throw Error("unreachable pauli axis");
}

bool is_unitary(const Mat2& m, Real tol) {
  return ((m.adjoint() * m) - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Mat2& m, Real tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_traceless(const Mat2& m, Real tol) {
  return std::abs(m.trace()) <= tol;
}

UnitaryEigen eig_unitary(const Mat2& u) {
  if (!is_unitary(u, kUnitaryTol)) {
    throw NotUnitaryError("eig_unitary: matrix is not unitary");
  }
  const Complex tr = u.trace();
  const Complex det = u.determinant();
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  Complex l1 = 0.5 * (tr + disc);
  Complex l2 = 0.5 * (tr - disc);

  UnitaryEigen out;
  if (std::abs(l1 - l2) < kDegenerateGap) {
    out.degenerate = true;
    out.lambda1 = out.lambda2 = 0.5 * (l1 + l2);
    out.v1 = Spinor(1, 0);
    out.v2 = Spinor(0, 1);
    return out;
  }

  Spinor v1 = eigenvector_for(u, l1);
  Spinor v2 = eigenvector_for(u, l2);
  bool swap;
  const Real a1 = std::arg(l1);
  const Real a2 = std::arg(l2);
  if (a1 != a2) {
    swap = a1 > a2;
  } else {
    swap = vector_less(v2, v1);
  }
  if (swap) {
    std::swap(l1, l2);
    std::swap(v1, v2);
  }
  out.lambda1 = l1;
  out.lambda2 = l2;
  out.v1 = v1;
  out.v2 = v2;
  return out;
}

Mat2 log_unitary(const Mat2& u) {
  const UnitaryEigen eig = eig_unitary(u);
  if (eig.degenerate) {
    const Real phi = std::arg(eig.lambda1);
    if (std::abs(phi) > pi - kDegenerateGap) {
      return pi * pauli(PauliAxis::Z);  // U = -I, documented branch choice
    }
    return -phi * Mat2::Identity();
  }
  auto phase = [](Complex lambda) {
    Real t = -std::arg(lambda);
    if (t <= -pi) t += 2.0 * pi;  // keep eigenphase in (-pi, pi]
    return t;
  };
  Mat2 h = phase(eig.lambda1) * (eig.v1 * eig.v1.adjoint()) +
           phase(eig.lambda2) * (eig.v2 * eig.v2.adjoint());
  return 0.5 * (h + Mat2(h.adjoint()));
}

Mat2 exp_hermitian(const Mat2& h) {
  if (!is_hermitian(h, kHermitianTol)) {
    throw NotHermitianError("exp_hermitian: matrix is not Hermitian");
  }
  const Real a = 0.5 * h.trace().real();
  const Mat2 b = h - a * Mat2::Identity();
  const Real w = b(0, 0).real();
  const Real ur = b(1, 0).real();
  const Real ui = b(1, 0).imag();
  const Real r = std::sqrt(w * w + ur * ur + ui * ui);
  Real sinc;
  if (r < 1e-8) {
    sinc = 1.0 - r * r / 6.0;
  } else {
    sinc = std::sin(r) / r;
  }
  const Complex scale = std::exp(-kI * a);
  return scale * (std::cos(r) * Mat2::Identity() - kI * sinc * b);
}

Mat2 rotation_gate(PauliAxis axis, Real angle) {
  return std::cos(angle) * Mat2::Identity() - kI * std::sin(angle) * pauli(axis);
}

Mat2 rotate_conjugate(const Mat2& m, PauliAxis axis, Real angle, DaggerSide side) {
  const Mat2 r = rotation_gate(axis, angle);
  if (side == DaggerSide::Left) return r.adjoint() * m * r;
  return r * m * r.adjoint();
}

}  // namespace pauliwalk
