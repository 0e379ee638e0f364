#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pauliwalk/lattice.hpp"
#include "pauliwalk/types.hpp"

namespace pauliwalk {

/// S(k) = e^{-ik}|+><+| + e^{+ik}|-><-| in the computational basis.
/// Plane-wave convention: e^{+iP} acts as e^{+ik} on psi_k(z) = e^{ikz}.
Mat2 momentum_shift(PauliAxis basis, Real k);

/// W(k) = S(k) * B(theta), the step operator under e^{+-iP} -> e^{+-ik}.
Mat2 momentum_step_unitary(PauliAxis basis, Real theta, Real k);

/// omega(theta, k) = arccos(cos(theta) cos(k)) in [0, pi].
Real dispersion(Real theta, Real k);

struct DispersionCurve {
  Real theta = 0.0;
  std::vector<std::array<Real, 2>> samples;  // (k, omega)
};

/// Uniform interior grid k_j = -pi + 2 pi j / (n+1), j = 1..n.
DispersionCurve sample_dispersion(Real theta, int n);

struct MomentumHamiltonian {
  Mat2 matrix;  // Hermitian, exp(-i matrix) = W(k)
  bool degenerate_branch = false;
};

/// H(k) from the principal logarithm of W(k). The degenerate flag marks
/// cos(theta) cos(k) = +-1 where the branch is fixed by continuity.
MomentumHamiltonian effective_hamiltonian_k(PauliAxis basis, Real theta, Real k);

/// Literal transcription of the closed-form H(k) with the trailing Pauli
/// factor; the omega/sin(omega) prefactor uses its series limit near omega=0.
Mat2 closed_form_hamiltonian_k(PauliAxis basis, Real theta, Real k);

/// alpha/beta pair of the differential-operator form H = -i alpha d/dj + beta sin(theta).
struct DiracForm {
  PauliAxis basis = PauliAxis::Z;
  Mat2 alpha, beta;
  std::optional<Real> mass;      // filled by rotate_to_dirac
  std::optional<Real> velocity;  // filled by rotate_to_dirac
};

DiracForm dirac_form(PauliAxis basis, Real theta);

struct DiracPauliForm {
  Mat2 alpha;  // pauli(basis) after the half-angle rotation
  Mat2 beta;   // +- the partner Pauli matrix
  Real mass = 0.0;
  Real velocity = 1.0;
};

/// Applies the half-angle rotation that maps alpha onto pauli(basis):
/// Z-basis R_y(theta/2) dagger-left, X-basis R_y(theta/2) dagger-right,
/// Y-basis R_x(theta/2) dagger-left. Mass is sin(theta) for Z and Y,
/// -sin(theta) for X.
DiracPauliForm rotate_to_dirac(const DiracForm& form, Real theta);

struct CompositeHamiltonian {
  std::vector<Mat2> alphas;  // axis order x, (y,) z
  Mat2 beta_sum;             // sum of per-axis beta matrices
  Mat2 mass_term;            // beta_sum * sin(theta)
  bool rotated = false;
};

/// Square: (alpha_x, alpha_z, beta_x + beta_z); the beta sum cancels exactly.
/// Cubic: (alpha_x, alpha_y, alpha_z, beta_y); mass term beta_y sin(theta).
CompositeHamiltonian composite_hamiltonian(LatticeKind kind, Real theta,
                                           bool rotated = false);

/// Coefficient matrices of one triangular-lattice axis Hamiltonian,
/// H = -i (d_x dx + d_y dy + d_xx dxx + d_xy dxy) + beta sin(theta).
/// Stored as printed; several are not Hermitian (see triangular_audit).
struct TriangularAxisTerms {
  Mat2 d_x, d_y, d_xx, d_xy;
  Mat2 beta;
};

struct TriangularTerms {
  Real theta = 0.0;
  TriangularAxisTerms axis_r;  // Z translation basis, P_z -> 2 P_x
  TriangularAxisTerms axis_s;  // X translation basis, P_x -> P_x + P_y
  TriangularAxisTerms axis_t;  // Y translation basis, P_y -> P_x - P_y
};

TriangularTerms triangular_terms(Real theta);

struct CliffordReport {
  bool hermitian_a = false;
  bool hermitian_b = false;
  bool a_squares_to_identity = false;
  bool b_squares_to_identity = false;
  bool anticommute = false;

  bool all() const {
    return hermitian_a && hermitian_b && a_squares_to_identity &&
           b_squares_to_identity && anticommute;
  }
};

CliffordReport clifford_report(const Mat2& a, const Mat2& b, Real tol = 1e-13);

struct TriangularAuditEntry {
  const char* axis;
  const char* name;
  Mat2 matrix;
  CliffordReport report;  // matrix paired with its axis beta
};

/// Clifford flags for every first/second-order coefficient matrix against its
/// axis mass matrix. Some flags fail by transcription; they are reported, not
/// corrected.
std::vector<TriangularAuditEntry> triangular_audit(Real theta);

enum class TrigShift { SinP, CosP };
enum class StencilBoundary { Zero, Periodic };

/// Central-difference action on a 1D field:
/// sin(P): (i/2)[psi(z-1) - psi(z+1)], cos(P): (1/2)[psi(z-1) + psi(z+1)].
LatticeField apply_trig_shift(const LatticeField& field1d, TrigShift which,
                              StencilBoundary boundary = StencilBoundary::Zero);

/// The Y-basis step unitary exactly as printed, including the entry that is
/// inconsistent with the coin/shift construction.
Mat2 printed_y_step_unitary(Real theta, Real k);

struct TranscriptionCheck {
  Real max_abs_diff = 0.0;
  int row = 0;
  int col = 0;
};

/// Entrywise deviation of the printed Y-basis matrix from the constructed one.
TranscriptionCheck check_printed_y_unitary(Real theta, Real k);

}  // namespace pauliwalk
