#pragma once

#include <map>
#include <string>
#include <vector>

#include "pauliwalk/lattice.hpp"
#include "pauliwalk/types.hpp"

namespace pauliwalk {

/// Sitewise probabilities keyed by coordinates (lexicographic order).
struct Distribution {
  int dimension = 0;
  std::vector<std::string> axis_names;
  std::map<Coord, Real> p;

  Real total() const;
};

Distribution probabilities(const LatticeField& field);
Distribution probabilities(const GroverField& field);

struct Moments {
  int dimension = 0;
  std::array<Real, 3> mean{0, 0, 0};
  std::array<Real, 3> variance{0, 0, 0};
};

Moments moments(const Distribution& d);

enum class CompareMetric { MaxAbs, TotalVariation };

Real compare(const Distribution& a, const Distribution& b, CompareMetric metric);

enum class SymmetryMap { Point, MirrorX, MirrorY };

const char* to_string(SymmetryMap m);

struct SymmetryReport {
  SymmetryMap map = SymmetryMap::Point;
  Real max_abs_error = 0.0;
  bool matched = false;
};

/// Tests a(site) against b(map(site)) for the three lattice reflections.
std::vector<SymmetryReport> detect_symmetry(const Distribution& a,
                                            const Distribution& b, Real tol);

/// Literal iteration of the coupled theta=0 square-walk relations. The index
/// pair of the printed relations is transposed relative to the step-operator
/// composition; engine_vs_square_oracle_error applies the pinned swap.
LatticeField square_recurrence_oracle(const Spinor& init, int t);

Real engine_vs_square_oracle_error(const LatticeField& engine,
                                   const LatticeField& oracle);

struct GroverStencilDiff {
  int relation = 0;  // 1-based, relation for beta^(relation)
  int term = 0;      // 1-based, coefficient of beta^(term)
  std::array<int, 2> printed_offset{0, 0};
  std::array<int, 2> derived_offset{0, 0};
};

struct GroverOracleResult {
  GroverField printed;  // quadrupled relations exactly as printed
  GroverField derived;  // relations re-derived from the coin and shift
  std::vector<GroverStencilDiff> stencil_diffs;
  Real printed_vs_derived_max_abs = 0.0;
};

GroverOracleResult grover_recurrence_oracle(const Vec4& init, int t);

Real max_amplitude_difference(const GroverField& a, const GroverField& b);

}  // namespace pauliwalk
