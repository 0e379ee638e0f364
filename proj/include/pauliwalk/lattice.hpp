#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pauliwalk/types.hpp"

namespace pauliwalk {

enum class LatticeKind { Line, Square, Cubic, Triangular, Kagome };

int lattice_dimension(LatticeKind kind);
int lattice_axis_count(LatticeKind kind);  // number of coin/shift sub-steps
const char* to_string(LatticeKind kind);
LatticeKind lattice_from_string(const std::string& name);

/// Coordinate labels used in file headers: line {x}, square {x,z},
/// cubic {x,y,z}, triangular/kagome {x,y}.
std::vector<std::string> axis_labels(LatticeKind kind);

using Coord = std::array<int, 3>;

/// Kagome sublattice classes. With u = (x-y)/2, v = y on the (x+y)-even
/// sublattice: (u,v) mod 2 = (0,0) hole, (1,0) p, (0,1) q, (1,1) o.
enum class KagomeSiteType { O, P, Q, Hole };

const char* to_string(KagomeSiteType t);

KagomeSiteType kagome_site_type(int x, int y);  // throws OffSublatticeError

/// cos(delta/2)|down> + e^{i eta} sin(delta/2)|up> placed at `position`.
struct InitialState {
  Real delta = 0.0;
  Real eta = 0.0;
  Coord position{0, 0, 0};

  Spinor spinor() const;
};

/// Origin-centered dense array of spinors, sites at c[i] in [-extent[i], extent[i]].
class LatticeField {
 public:
  LatticeField() = default;
  LatticeField(LatticeKind kind, Coord extent);

  static LatticeField from_initial_state(LatticeKind kind, Coord extent,
                                         const InitialState& init);

  LatticeKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const Coord& extent() const { return extent_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  bool in_range(const Coord& c) const;
  std::int64_t index(const Coord& c) const;
  Coord coord(std::int64_t idx) const;

  Spinor& at(const Coord& c) { return data_[index(c)]; }
  const Spinor& at(const Coord& c) const { return data_[index(c)]; }

  Spinor* data() { return data_.data(); }
  const Spinor* data() const { return data_.data(); }

  Real total_norm_sq() const;
  void set_zero();

  /// Safe extent for t full steps from `origin` (cone bound per axis).
  static Coord extent_for_steps(LatticeKind kind, int steps, const Coord& origin);

 private:
  LatticeKind kind_ = LatticeKind::Line;
  int dimension_ = 1;
  Coord extent_{0, 0, 0};
  std::array<std::int64_t, 3> stride_{0, 0, 0};
  std::vector<Spinor> data_;
};

/// Four-component field for the Grover reference walk on the square lattice.
class GroverField {
 public:
  GroverField() = default;
  explicit GroverField(int extent);

  int extent() const { return extent_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  bool in_range(int x, int z) const;
  std::int64_t index(int x, int z) const;

  Vec4& at(int x, int z) { return data_[index(x, z)]; }
  const Vec4& at(int x, int z) const { return data_[index(x, z)]; }

  Vec4* data() { return data_.data(); }
  const Vec4* data() const { return data_.data(); }

  Real total_norm_sq() const;
  void set_zero();

 private:
  int extent_ = 0;
  std::vector<Vec4> data_;
};

}  // namespace pauliwalk
