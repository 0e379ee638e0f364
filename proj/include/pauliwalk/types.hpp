#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pauliwalk {

using Real = double;
using Complex = std::complex<Real>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

inline constexpr Real pi = std::numbers::pi_v<Real>;

/// Quantization axis; its Pauli eigenstates serve as translation states.
enum class PauliAxis { X, Y, Z };

inline const char* to_string(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return "x";
    case PauliAxis::Y: return "y";
    case PauliAxis::Z: return "z";
  }
  return "?";
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};
struct NotHermitianError : Error {
  using Error::Error;
};
struct ExtentOverflowError : Error {
  using Error::Error;
};
struct BadAxisCountError : Error {
  using Error::Error;
};
struct OffSublatticeError : Error {
  using Error::Error;
};
struct MixedSublatticeSupportError : Error {
  using Error::Error;
};
struct NotFromDiracFormError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace pauliwalk
