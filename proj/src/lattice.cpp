#include "pauliwalk/lattice.hpp"

#include <cmath>
#include <cstdlib>

namespace pauliwalk {

int lattice_dimension(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Line: return 1;
    case LatticeKind::Square: return 2;
    case LatticeKind::Cubic: return 3;
    case LatticeKind::Triangular: return 2;
    case LatticeKind::Kagome: return 2;
  }
  return 0;
}

int lattice_axis_count(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Line: return 1;
    case LatticeKind::Square: return 2;
    case LatticeKind::Cubic: return 3;
    case LatticeKind::Triangular: return 3;
    case LatticeKind::Kagome: return 3;
  }
  return 0;
}

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Line: return "line";
    case LatticeKind::Square: return "square";
    case LatticeKind::Cubic: return "cubic";
    case LatticeKind::Triangular: return "triangular";
    case LatticeKind::Kagome: return "kagome";
  }
  return "?";
}

LatticeKind lattice_from_string(const std::string& name) {
  if (name == "line") return LatticeKind::Line;
  if (name == "square") return LatticeKind::Square;
  if (name == "cubic") return LatticeKind::Cubic;
  if (name == "triangular") return LatticeKind::Triangular;
  if (name == "kagome") return LatticeKind::Kagome;
  throw Error("unknown lattice kind: " + name);
}

std::vector<std::string> axis_labels(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Line: return {"x"};
    case LatticeKind::Square: return {"x", "z"};
    case LatticeKind::Cubic: return {"x", "y", "z"};
    case LatticeKind::Triangular:
    case LatticeKind::Kagome: return {"x", "y"};
  }
  return {};
}

const char* to_string(KagomeSiteType t) {
  switch (t) {
    case KagomeSiteType::O: return "o";
    case KagomeSiteType::P: return "p";
    case KagomeSiteType::Q: return "q";
    case KagomeSiteType::Hole: return "hole";
  }
  return "?";
}

KagomeSiteType kagome_site_type(int x, int y) {
  if (((x + y) % 2 + 2) % 2 != 0) {
    throw OffSublatticeError("kagome_site_type: x+y must be even");
  }
  const int u = (x - y) / 2;
  const int um = ((u % 2) + 2) % 2;
  const int vm = ((y % 2) + 2) % 2;
  if (um == 0 && vm == 0) return KagomeSiteType::Hole;
  if (um == 1 && vm == 0) return KagomeSiteType::P;
  if (um == 0 && vm == 1) return KagomeSiteType::Q;
  return KagomeSiteType::O;
}

Spinor InitialState::spinor() const {
  const Complex phase = std::exp(Complex(0.0, eta));
  return Spinor(Complex(std::cos(0.5 * delta), 0.0),
                phase * std::sin(0.5 * delta));
}

LatticeField::LatticeField(LatticeKind kind, Coord extent)
    : kind_(kind), dimension_(lattice_dimension(kind)), extent_{0, 0, 0} {
  for (int i = 0; i < dimension_; ++i) extent_[i] = extent[i];
  std::int64_t n = 1;
  for (int i = dimension_ - 1; i >= 0; --i) {
    stride_[i] = n;
    n *= 2 * extent_[i] + 1;
  }
  data_.assign(n, Spinor::Zero());
}

LatticeField LatticeField::from_initial_state(LatticeKind kind, Coord extent,
                                              const InitialState& init) {
  LatticeField f(kind, extent);
  if (!f.in_range(init.position)) {
    throw ExtentOverflowError("initial position outside field extent");
  }
  if (kind == LatticeKind::Triangular || kind == LatticeKind::Kagome) {
    const int parity = ((init.position[0] + init.position[1]) % 2 + 2) % 2;
    if (parity != 0) {
      throw OffSublatticeError("initial position must have x+y even");
    }
    if (kind == LatticeKind::Kagome &&
        kagome_site_type(init.position[0], init.position[1]) == KagomeSiteType::Hole) {
      throw OffSublatticeError("initial position is a kagome hole site");
    }
  }
  f.at(init.position) = init.spinor();
  return f;
}

bool LatticeField::in_range(const Coord& c) const {
  for (int i = 0; i < dimension_; ++i) {
    if (c[i] < -extent_[i] || c[i] > extent_[i]) return false;
  }
  return true;
}

std::int64_t LatticeField::index(const Coord& c) const {
  std::int64_t idx = 0;
  for (int i = 0; i < dimension_; ++i) {
    idx += static_cast<std::int64_t>(c[i] + extent_[i]) * stride_[i];
  }
  return idx;
}

Coord LatticeField::coord(std::int64_t idx) const {
  Coord c{0, 0, 0};
  for (int i = 0; i < dimension_; ++i) {
    c[i] = static_cast<int>(idx / stride_[i]) % (2 * extent_[i] + 1) - extent_[i];
  }
  return c;
}

Real LatticeField::total_norm_sq() const {
  Real n = 0.0;
  for (const Spinor& s : data_) n += std::norm(s(0)) + std::norm(s(1));
  return n;
}

void LatticeField::set_zero() {
  for (Spinor& s : data_) s.setZero();
}

Coord LatticeField::extent_for_steps(LatticeKind kind, int steps, const Coord& origin) {
  Coord r{0, 0, 0};
  const int d = lattice_dimension(kind);
  switch (kind) {
    case LatticeKind::Line:
    case LatticeKind::Square:
    case LatticeKind::Cubic:
      for (int i = 0; i < d; ++i) r[i] = steps + std::abs(origin[i]);
      break;
    case LatticeKind::Triangular:
    case LatticeKind::Kagome:
      // Per full step: x shifts by at most 2+1+1, y by at most 1+1.
      r[0] = 4 * steps + std::abs(origin[0]);
      r[1] = 2 * steps + std::abs(origin[1]);
      break;
  }
  return r;
}

GroverField::GroverField(int extent) : extent_(extent) {
  const std::int64_t n = 2 * extent + 1;
  data_.assign(n * n, Vec4::Zero());
}

bool GroverField::in_range(int x, int z) const {
  return x >= -extent_ && x <= extent_ && z >= -extent_ && z <= extent_;
}

std::int64_t GroverField::index(int x, int z) const {
  return static_cast<std::int64_t>(x + extent_) * (2 * extent_ + 1) + (z + extent_);
}

Real GroverField::total_norm_sq() const {
  Real n = 0.0;
  for (const Vec4& v : data_) {
    n += std::norm(v(0)) + std::norm(v(1)) + std::norm(v(2)) + std::norm(v(3));
  }
  return n;
}

void GroverField::set_zero() {
  for (Vec4& v : data_) v.setZero();
}

}  // namespace pauliwalk
