#include "pauliwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pauliwalk/parallel.hpp"
#include "pauliwalk/spinor_algebra.hpp"

namespace pauliwalk {

namespace {

struct GatherTerm {
  Mat2 kernel;          // projector * coin
  Coord disp{0, 0, 0};  // destination = source + disp
  std::int64_t offset = 0;
  Coord lo{0, 0, 0};  // valid destination box
  Coord hi{0, 0, 0};
};

template <typename F>
void for_each_in_box(int dim, const Coord& lo, const Coord& hi, F&& f) {
  for (int i = 0; i < dim; ++i) {
    if (lo[i] > hi[i]) return;
  }
  Coord c{lo};
  while (true) {
    f(c);
    int i = dim - 1;
    for (; i >= 0; --i) {
      if (++c[i] <= hi[i]) break;
      c[i] = lo[i];
    }
    if (i < 0) break;
  }
}

// Sites whose shifted image would leave the array, per term. The walk's
// support cone keeps these exactly zero when the extent is sufficient.
void check_outgoing(const LatticeField& src, const Mat2& kernel, const Coord& disp) {
  const int dim = src.dimension();
  for (int axis = 0; axis < dim; ++axis) {
    const int d = disp[axis];
    if (d == 0) continue;
    Coord lo{0, 0, 0};
    Coord hi{0, 0, 0};
    for (int i = 0; i < dim; ++i) {
      lo[i] = -src.extent()[i];
      hi[i] = src.extent()[i];
    }
    if (d > 0) {
      lo[axis] = src.extent()[axis] - d + 1;
    } else {
      hi[axis] = -src.extent()[axis] - d - 1;
    }
    for_each_in_box(dim, lo, hi, [&](const Coord& c) {
      if ((kernel * src.at(c)).squaredNorm() > 0.0) {
        throw ExtentOverflowError("step_axis: amplitude would cross the boundary");
      }
    });
  }
}

Coord negate(const Coord& c) { return Coord{-c[0], -c[1], -c[2]}; }

Coord displacement_plus_for(LatticeKind kind, PauliAxis basis) {
  // "+" eigenstates move toward negative coordinates on line/square/cubic;
  // triangular/kagome use the two-axis shift table.
  switch (kind) {
    case LatticeKind::Line:
      return Coord{-1, 0, 0};
    case LatticeKind::Square:
      if (basis == PauliAxis::Z) return Coord{0, -1, 0};
      if (basis == PauliAxis::X) return Coord{-1, 0, 0};
      throw Error("square lattice has no Y-axis sub-step");
    case LatticeKind::Cubic:
      if (basis == PauliAxis::Z) return Coord{0, 0, -1};
      if (basis == PauliAxis::X) return Coord{-1, 0, 0};
      return Coord{0, -1, 0};
    case LatticeKind::Triangular:
    case LatticeKind::Kagome:
      if (basis == PauliAxis::Z) return Coord{2, 0, 0};
      if (basis == PauliAxis::X) return Coord{1, 1, 0};
      return Coord{1, -1, 0};
  }
  throw Error("unreachable lattice kind");
}

AxisStep axis_step_for(LatticeKind kind, PauliAxis basis, Real theta) {
  AxisStep s;
  s.basis = basis;
  s.theta = theta;
  s.displacement_plus = displacement_plus_for(kind, basis);
  s.displacement_minus = negate(s.displacement_plus);
  return s;
}

}  // namespace

Mat2 build_coin(PauliAxis basis, Real theta) {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  Mat2 m;
  switch (basis) {
    case PauliAxis::Z:
      m << Complex(c, 0), Complex(s, 0), Complex(-s, 0), Complex(c, 0);
      break;
    case PauliAxis::X:
      m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
      break;
    case PauliAxis::Y:
      m << Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0);
      break;
  }
  return m;
}

std::pair<Mat2, Mat2> pauli_projectors(PauliAxis axis) {
  Mat2 plus, minus;
  switch (axis) {
    case PauliAxis::Z:
      plus << 1, 0, 0, 0;
      minus << 0, 0, 0, 1;
      break;
    case PauliAxis::X:
      plus << 0.5, 0.5, 0.5, 0.5;
      minus << 0.5, -0.5, -0.5, 0.5;
      break;
    case PauliAxis::Y:
      plus << Complex(0.5, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0.5, 0);
      minus << Complex(0.5, 0), Complex(0, 0.5), Complex(0, -0.5), Complex(0.5, 0);
      break;
  }
  return {plus, minus};
}

WalkProgram make_program(LatticeKind kind, std::span<const Real> thetas,
                         PauliAxis line_basis) {
  const std::size_t want = static_cast<std::size_t>(lattice_axis_count(kind));
  if (thetas.size() != want) {
    throw BadAxisCountError("make_program: expected " + std::to_string(want) +
                            " theta values for " + std::string(to_string(kind)) +
                            ", got " + std::to_string(thetas.size()));
  }
  WalkProgram p;
  p.kind = kind;
  switch (kind) {
    case LatticeKind::Line:
      p.steps.push_back(axis_step_for(kind, line_basis, thetas[0]));
      break;
    case LatticeKind::Square:
      p.steps.push_back(axis_step_for(kind, PauliAxis::Z, thetas[0]));
      p.steps.push_back(axis_step_for(kind, PauliAxis::X, thetas[1]));
      break;
    case LatticeKind::Cubic:
    case LatticeKind::Triangular:
      p.steps.push_back(axis_step_for(kind, PauliAxis::Z, thetas[0]));
      p.steps.push_back(axis_step_for(kind, PauliAxis::X, thetas[1]));
      p.steps.push_back(axis_step_for(kind, PauliAxis::Y, thetas[2]));
      break;
    case LatticeKind::Kagome:
      p.kagome_thetas = {thetas[0], thetas[1], thetas[2]};
      break;
  }
  return p;
}

void step_axis_into(LatticeField& dst, const LatticeField& src, const AxisStep& step) {
  if (dst.kind() != src.kind() || dst.extent() != src.extent()) {
    throw Error("step_axis: destination field geometry mismatch");
  }
  const int dim = src.dimension();
  const Coord& ext = src.extent();

  const auto [pplus, pminus] = pauli_projectors(step.basis);
  const Mat2 coin = build_coin(step.basis, step.theta);

  GatherTerm terms[2];
  terms[0].kernel = pplus * coin;
  terms[0].disp = step.displacement_plus;
  terms[1].kernel = pminus * coin;
  terms[1].disp = step.displacement_minus;
  for (GatherTerm& t : terms) {
    std::int64_t stride = 1;
    for (int i = dim - 1; i >= 0; --i) {
      t.offset += t.disp[i] * stride;
      stride *= 2 * ext[i] + 1;
    }
    for (int i = 0; i < dim; ++i) {
      t.lo[i] = -ext[i] + std::max(0, t.disp[i]);
      t.hi[i] = ext[i] + std::min(0, t.disp[i]);
    }
    check_outgoing(src, t.kernel, t.disp);
  }

  const int last = dim - 1;
  const std::int64_t ncols = 2 * ext[last] + 1;
  const std::int64_t nrows = src.size() / ncols;
  std::array<std::int64_t, 3> outer_size{1, 1, 1};
  for (int i = 0; i < last; ++i) outer_size[i] = 2 * ext[i] + 1;

  const Spinor* sbase = src.data();
  Spinor* dbase = dst.data();

  const std::int64_t min_rows = std::max<std::int64_t>(1, 65536 / ncols);
  parallel_for(nrows, [&](std::int64_t row_begin, std::int64_t row_end) {
    for (std::int64_t row = row_begin; row < row_end; ++row) {
      // Outer coordinates of this row, axis dim-2 varying fastest.
      bool act[2] = {true, true};
      std::int64_t rem = row;
      for (int i = last - 1; i >= 0; --i) {
        const int ci = static_cast<int>(rem % outer_size[i]) - ext[i];
        rem /= outer_size[i];
        for (int t = 0; t < 2; ++t) {
          if (ci < terms[t].lo[i] || ci > terms[t].hi[i]) act[t] = false;
        }
      }
      // Column ranges of each term on the fastest axis.
      std::int64_t clo[2], chi[2];
      for (int t = 0; t < 2; ++t) {
        if (act[t]) {
          clo[t] = terms[t].lo[last];
          chi[t] = terms[t].hi[last];
        } else {
          clo[t] = 1;  // empty
          chi[t] = 0;
        }
      }
      std::array<std::int64_t, 6> cuts{-ext[last], ext[last] + 1, clo[0],
                                       chi[0] + 1, clo[1], chi[1] + 1};
      std::sort(cuts.begin(), cuts.end());
      Spinor* drow = dbase + row * ncols + ext[last];
      const Spinor* s0 = sbase + row * ncols + ext[last] - terms[0].offset;
      const Spinor* s1 = sbase + row * ncols + ext[last] - terms[1].offset;
      for (int seg = 0; seg + 1 < 6; ++seg) {
        std::int64_t a = std::max<std::int64_t>(cuts[seg], -ext[last]);
        std::int64_t b = std::min<std::int64_t>(cuts[seg + 1], ext[last] + 1);
        if (a >= b) continue;
        const bool in0 = a >= clo[0] && a <= chi[0];
        const bool in1 = a >= clo[1] && a <= chi[1];
        if (in0 && in1) {
          for (std::int64_t j = a; j < b; ++j) {
            drow[j] = terms[0].kernel * s0[j] + terms[1].kernel * s1[j];
          }
        } else if (in0) {
          for (std::int64_t j = a; j < b; ++j) drow[j] = terms[0].kernel * s0[j];
        } else if (in1) {
          for (std::int64_t j = a; j < b; ++j) drow[j] = terms[1].kernel * s1[j];
        } else {
          for (std::int64_t j = a; j < b; ++j) drow[j].setZero();
        }
      }
    }
  }, min_rows);
}

LatticeField step_axis(const LatticeField& field, const AxisStep& step) {
  LatticeField out(field.kind(), field.extent());
  step_axis_into(out, field, step);
  return out;
}

LatticeField evolve(LatticeField field, const WalkProgram& program, int t) {
  if (program.kind != field.kind()) {
    throw Error("evolve: program lattice kind does not match field");
  }
  if (t < 0) throw Error("evolve: negative step count");
  if (program.kind == LatticeKind::Kagome) {
    for (int n = 0; n < t; ++n) field = step_kagome(field, program.kagome_thetas);
    return field;
  }
  LatticeField buf(field.kind(), field.extent());
  for (int n = 0; n < t; ++n) {
    for (const AxisStep& s : program.steps) {
      step_axis_into(buf, field, s);
      std::swap(field, buf);
    }
  }
  return field;
}

std::array<PauliAxis, 3> kagome_step_order(KagomeSiteType type) {
  // Sublattice cycle under the shifts: Y maps p<->q, Z maps q<->o, X maps o<->p.
  switch (type) {
    case KagomeSiteType::P:
      return {PauliAxis::Y, PauliAxis::Z, PauliAxis::X};
    case KagomeSiteType::Q:
      return {PauliAxis::Z, PauliAxis::X, PauliAxis::Y};
    case KagomeSiteType::O:
      return {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
    case KagomeSiteType::Hole:
      break;
  }
  throw OffSublatticeError("kagome_step_order: hole sites carry no amplitude");
}

KagomeSiteType kagome_support_type(const LatticeField& field) {
  bool found = false;
  KagomeSiteType type = KagomeSiteType::Hole;
  const Coord& ext = field.extent();
  for (int x = -ext[0]; x <= ext[0]; ++x) {
    for (int y = -ext[1]; y <= ext[1]; ++y) {
      if (field.at(Coord{x, y, 0}).squaredNorm() == 0.0) continue;
      if (((x + y) % 2 + 2) % 2 != 0) {
        throw MixedSublatticeSupportError("support off the x+y even sublattice");
      }
      const KagomeSiteType t = kagome_site_type(x, y);
      if (t == KagomeSiteType::Hole) {
        throw MixedSublatticeSupportError("support on a kagome hole site");
      }
      if (!found) {
        type = t;
        found = true;
      } else if (t != type) {
        throw MixedSublatticeSupportError("support spans multiple sublattice types");
      }
    }
  }
  if (!found) throw MixedSublatticeSupportError("field has no support");
  return type;
}

LatticeField step_kagome(const LatticeField& field, const std::array<Real, 3>& thetas) {
  if (field.kind() != LatticeKind::Kagome) {
    throw Error("step_kagome: field is not on the kagome lattice");
  }
  const KagomeSiteType type = kagome_support_type(field);
  const auto order = kagome_step_order(type);
  auto theta_for = [&thetas](PauliAxis a) {
    switch (a) {
      case PauliAxis::Z: return thetas[0];
      case PauliAxis::X: return thetas[1];
      case PauliAxis::Y: return thetas[2];
    }
    return 0.0;
  };
  LatticeField cur = field;
  LatticeField buf(field.kind(), field.extent());
  for (PauliAxis axis : order) {
    step_axis_into(buf, cur, axis_step_for(LatticeKind::Kagome, axis, theta_for(axis)));
    std::swap(cur, buf);
  }
  return cur;
}

Mat4 grover_coin() {
  Mat4 g;
  g << -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1;
  return 0.5 * g;
}

Vec4 grover_initial_state() {
  return 0.5 * Vec4(1, -1, -1, 1);
}

void grover_step_into(GroverField& dst, const GroverField& src) {
  if (dst.extent() != src.extent()) {
    throw Error("grover_step: destination field geometry mismatch");
  }
  const int r = src.extent();
  const Mat4 g = grover_coin();
  // Component i shifts diagonally: |0> (-1,-1), |1> (-1,+1), |2> (+1,-1), |3> (+1,+1).
  const int dx[4] = {-1, -1, 1, 1};
  const int dz[4] = {-1, 1, -1, 1};

  dst.set_zero();
  for (int x = -r; x <= r; ++x) {
    for (int z = -r; z <= r; ++z) {
      const Vec4& v = src.at(x, z);
      if (v.squaredNorm() == 0.0) continue;
      const Vec4 coined = g * v;
      for (int i = 0; i < 4; ++i) {
        if (std::norm(coined(i)) == 0.0) continue;
        const int nx = x + dx[i];
        const int nz = z + dz[i];
        if (!src.in_range(nx, nz)) {
          throw ExtentOverflowError("grover_step: amplitude would cross the boundary");
        }
        dst.at(nx, nz)(i) = coined(i);
      }
    }
  }
}

GroverField grover_step(const GroverField& g) {
  GroverField out(g.extent());
  grover_step_into(out, g);
  return out;
}

GroverField grover_evolve(GroverField g, int t) {
  if (t < 0) throw Error("grover_evolve: negative step count");
  GroverField buf(g.extent());
  for (int n = 0; n < t; ++n) {
    grover_step_into(buf, g);
    std::swap(g, buf);
  }
  return g;
}

}  // namespace pauliwalk
