#include "pauliwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pauliwalk {

namespace {

constexpr int kOracleMaxSteps = 12;

Coord apply_map(SymmetryMap m, const Coord& c) {
  switch (m) {
    case SymmetryMap::Point: return Coord{-c[0], -c[1], 0};
    case SymmetryMap::MirrorX: return Coord{-c[0], c[1], 0};
    case SymmetryMap::MirrorY: return Coord{c[0], -c[1], 0};
  }
  return c;
}

Real lookup(const Distribution& d, const Coord& c) {
  const auto it = d.p.find(c);
  return it == d.p.end() ? 0.0 : it->second;
}

}  // namespace

Real Distribution::total() const {
  Real sum = 0.0;
  for (const auto& [c, v] : p) sum += v;
  return sum;
}

Distribution probabilities(const LatticeField& field) {
  Distribution d;
  d.dimension = field.dimension();
  d.axis_names = axis_labels(field.kind());
  const Coord& ext = field.extent();
  Coord c{0, 0, 0};
  for (int x = -ext[0]; x <= ext[0]; ++x) {
    c[0] = x;
    for (int y = -ext[1]; y <= ext[1]; ++y) {
      c[1] = y;
      for (int z = -ext[2]; z <= ext[2]; ++z) {
        c[2] = z;
        const Real p = field.at(c).squaredNorm();
        if (p > 0.0) d.p.emplace(c, p);
      }
    }
  }
  return d;
}

Distribution probabilities(const GroverField& field) {
  Distribution d;
  d.dimension = 2;
  d.axis_names = {"x", "z"};
  const int r = field.extent();
  for (int x = -r; x <= r; ++x) {
    for (int z = -r; z <= r; ++z) {
      const Real p = field.at(x, z).squaredNorm();
      if (p > 0.0) d.p.emplace(Coord{x, z, 0}, p);
    }
  }
  return d;
}

Moments moments(const Distribution& d) {
  Moments m;
  m.dimension = d.dimension;
  const Real total = d.total();
  if (total <= 0.0) return m;
  for (int i = 0; i < d.dimension; ++i) {
    Real mean = 0.0;
    for (const auto& [c, p] : d.p) mean += p * c[i];
    mean /= total;
    Real var = 0.0;
    for (const auto& [c, p] : d.p) {
      const Real dx = c[i] - mean;
      var += p * dx * dx;
    }
    m.mean[i] = mean;
    m.variance[i] = var / total;
  }
  return m;
}

Real compare(const Distribution& a, const Distribution& b, CompareMetric metric) {
  std::set<Coord> support;
  for (const auto& [c, p] : a.p) support.insert(c);
  for (const auto& [c, p] : b.p) support.insert(c);
  Real max_abs = 0.0;
  Real tv = 0.0;
  for (const Coord& c : support) {
    const Real diff = std::abs(lookup(a, c) - lookup(b, c));
    max_abs = std::max(max_abs, diff);
    tv += diff;
  }
  return metric == CompareMetric::MaxAbs ? max_abs : 0.5 * tv;
}

const char* to_string(SymmetryMap m) {
  switch (m) {
    case SymmetryMap::Point: return "point";
    case SymmetryMap::MirrorX: return "mirror_x";
    case SymmetryMap::MirrorY: return "mirror_y";
  }
  return "?";
}

std::vector<SymmetryReport> detect_symmetry(const Distribution& a,
                                            const Distribution& b, Real tol) {
  if (a.dimension != 2 || b.dimension != 2) {
    throw DimensionError("detect_symmetry: distributions must be two-dimensional");
  }
  std::vector<SymmetryReport> reports;
  for (SymmetryMap m : {SymmetryMap::Point, SymmetryMap::MirrorX, SymmetryMap::MirrorY}) {
    std::set<Coord> support;
    for (const auto& [c, p] : a.p) support.insert(c);
    for (const auto& [c, p] : b.p) support.insert(apply_map(m, c));
    Real err = 0.0;
    for (const Coord& c : support) {
      err = std::max(err, std::abs(lookup(a, c) - lookup(b, apply_map(m, c))));
    }
    reports.push_back({m, err, err <= tol});
  }
  return reports;
}

LatticeField square_recurrence_oracle(const Spinor& init, int t) {
  if (t < 0 || t > kOracleMaxSteps) {
    throw Error("square_recurrence_oracle: t must be in [0, 12]");
  }
  const Coord ext{t, t, 0};
  LatticeField cur(LatticeKind::Square, ext);
  cur.at(Coord{0, 0, 0}) = init;
  LatticeField next(LatticeKind::Square, ext);
  auto read = [](const LatticeField& f, int a, int b) {
    const Coord c{a, b, 0};
    return f.in_range(c) ? f.at(c) : Spinor(Spinor::Zero());
  };
  for (int step = 0; step < t; ++step) {
    next.set_zero();
    for (int x = -t; x <= t; ++x) {
      for (int z = -t; z <= t; ++z) {
        const Spinor pp = read(cur, x + 1, z + 1);
        const Spinor pm = read(cur, x + 1, z - 1);
        const Spinor mp = read(cur, x - 1, z + 1);
        const Spinor mm = read(cur, x - 1, z - 1);
        Spinor v;
        v(0) = 0.5 * (pp(0) + pm(0) + mp(1) - mm(1));
        v(1) = 0.5 * (pp(0) - pm(0) + mp(1) + mm(1));
        next.at(Coord{x, z, 0}) = v;
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

Real engine_vs_square_oracle_error(const LatticeField& engine,
                                   const LatticeField& oracle) {
  const int r = oracle.extent()[0];
  if (engine.extent()[0] < r || engine.extent()[1] < r) {
    throw Error("engine field extent smaller than oracle extent");
  }
  Real err = 0.0;
  for (int a = -r; a <= r; ++a) {
    for (int b = -r; b <= r; ++b) {
      // The printed relations carry the operator recurrence with the two
      // position slots swapped; oracle (a, b) corresponds to engine (b, a).
      const Spinor diff = engine.at(Coord{b, a, 0}) - oracle.at(Coord{a, b, 0});
      err = std::max(err, diff.cwiseAbs().maxCoeff());
    }
  }
  return err;
}

namespace {

struct GroverStencil {
  // reads[i][j]: amplitude beta^(j+1) at offset (dx, dz), weight w.
  struct Term {
    Real w;
    int dx, dz;
  };
  Term reads[4][4];
};

GroverStencil derived_grover_stencil() {
  GroverStencil s;
  const int dx[4] = {-1, -1, 1, 1};
  const int dz[4] = {-1, 1, -1, 1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // Component i gathers the coined amplitude from the site it moved from.
      s.reads[i][j] = {i == j ? -0.5 : 0.5, -dx[i], -dz[i]};
    }
  }
  return s;
}

GroverStencil printed_grover_stencil() {
  GroverStencil s = derived_grover_stencil();
  // As printed, the beta^(3) term of the second relation reads (x-1, z-1).
  s.reads[1][2].dx = -1;
  s.reads[1][2].dz = -1;
  return s;
}

GroverField iterate_grover_stencil(const GroverStencil& s, const Vec4& init, int t) {
  GroverField cur(t);
  cur.at(0, 0) = init;
  GroverField next(t);
  for (int step = 0; step < t; ++step) {
    next.set_zero();
    for (int x = -t; x <= t; ++x) {
      for (int z = -t; z <= t; ++z) {
        Vec4 v = Vec4::Zero();
        for (int i = 0; i < 4; ++i) {
          Complex acc(0, 0);
          for (int j = 0; j < 4; ++j) {
            const auto& term = s.reads[i][j];
            const int sx = x + term.dx;
            const int sz = z + term.dz;
            if (cur.in_range(sx, sz)) acc += term.w * cur.at(sx, sz)(j);
          }
          v(i) = acc;
        }
        next.at(x, z) = v;
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

GroverOracleResult grover_recurrence_oracle(const Vec4& init, int t) {
  if (t < 0 || t > kOracleMaxSteps) {
    throw Error("grover_recurrence_oracle: t must be in [0, 12]");
  }
  const GroverStencil printed = printed_grover_stencil();
  const GroverStencil derived = derived_grover_stencil();

  GroverOracleResult out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto& a = printed.reads[i][j];
      const auto& b = derived.reads[i][j];
      if (a.dx != b.dx || a.dz != b.dz || a.w != b.w) {
        out.stencil_diffs.push_back(
            {i + 1, j + 1, {a.dx, a.dz}, {b.dx, b.dz}});
      }
    }
  }
  out.printed = iterate_grover_stencil(printed, init, t);
  out.derived = iterate_grover_stencil(derived, init, t);
  out.printed_vs_derived_max_abs = max_amplitude_difference(out.printed, out.derived);
  return out;
}

Real max_amplitude_difference(const GroverField& a, const GroverField& b) {
  if (a.extent() != b.extent()) {
    throw Error("max_amplitude_difference: field extents differ");
  }
  Real err = 0.0;
  const int r = a.extent();
  for (int x = -r; x <= r; ++x) {
    for (int z = -r; z <= r; ++z) {
      err = std::max(err, (a.at(x, z) - b.at(x, z)).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

}  // namespace pauliwalk
