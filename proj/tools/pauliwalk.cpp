// Command-line front end: walk simulation, Hamiltonian reports, verification.
#include <cstdio>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pauliwalk/analysis.hpp"
#include "pauliwalk/hamiltonian.hpp"
#include "pauliwalk/io.hpp"
#include "pauliwalk/parallel.hpp"
#include "pauliwalk/spinor_algebra.hpp"
#include "pauliwalk/walk.hpp"

namespace pw = pauliwalk;

namespace {

struct UsageError : pw::Error {
  using pw::Error::Error;
};

struct RunConfig {
  std::string command;
  pw::LatticeKind lattice = pw::LatticeKind::Line;
  int steps = 0;
  std::vector<pw::Real> thetas;
  std::string init = "down";
  pw::Real delta = 0.0;
  pw::Real eta = 0.0;
  pw::Coord origin{0, 0, 0};
  pw::PauliAxis basis = pw::PauliAxis::Z;
  std::string out = "-";
  pw::FileFormat format = pw::FileFormat::Csv;
};

pw::PauliAxis axis_from_string(const std::string& s) {
  if (s == "x") return pw::PauliAxis::X;
  if (s == "y") return pw::PauliAxis::Y;
  if (s == "z") return pw::PauliAxis::Z;
  throw UsageError("--basis must be one of x, y, z (got '" + s + "')");
}

std::vector<pw::Real> parse_theta_list(const std::string& s) {
  std::vector<pw::Real> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--theta expects comma-separated reals (got '" + tok + "')");
    }
  }
  return out;
}

pw::Coord parse_origin(const std::string& s, int dim) {
  pw::Coord c{0, 0, 0};
  std::stringstream ss(s);
  std::string tok;
  int n = 0;
  while (std::getline(ss, tok, ',')) {
    if (n >= dim) throw UsageError("--origin has more coordinates than the lattice");
    try {
      c[n++] = std::stoi(tok);
    } catch (const std::exception&) {
      throw UsageError("--origin expects comma-separated integers (got '" + tok + "')");
    }
  }
  if (n != dim) throw UsageError("--origin needs " + std::to_string(dim) + " coordinates");
  return c;
}

pw::InitialState initial_state(const RunConfig& cfg) {
  pw::InitialState st;
  st.position = cfg.origin;
  if (cfg.init == "down") {
    st.delta = 0.0;
  } else if (cfg.init == "up") {
    st.delta = pw::pi;
  } else if (cfg.init == "symmetric") {
    st.delta = 0.5 * pw::pi;
    st.eta = 0.5 * pw::pi;
  } else if (cfg.init == "custom") {
    st.delta = cfg.delta;
    st.eta = cfg.eta;
  } else {
    throw UsageError("--init must be down, up, symmetric or custom");
  }
  return st;
}

void validate_origin(const RunConfig& cfg) {
  if (cfg.lattice == pw::LatticeKind::Triangular || cfg.lattice == pw::LatticeKind::Kagome) {
    if (((cfg.origin[0] + cfg.origin[1]) % 2 + 2) % 2 != 0) {
      throw UsageError("--origin must have x+y even on this lattice");
    }
    if (cfg.lattice == pw::LatticeKind::Kagome &&
        pw::kagome_site_type(cfg.origin[0], cfg.origin[1]) == pw::KagomeSiteType::Hole) {
      throw UsageError("--origin is a kagome hole site");
    }
  }
}

pw::RunMeta meta_for(const RunConfig& cfg) {
  pw::RunMeta m;
  m.lattice = pw::to_string(cfg.lattice);
  m.steps = cfg.steps;
  m.thetas = cfg.thetas;
  m.init = cfg.init;
  return m;
}

class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw pw::IoError("cannot open for writing: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_simulate(RunConfig cfg) {
  const int axes = pw::lattice_axis_count(cfg.lattice);
  if (cfg.thetas.empty()) cfg.thetas.assign(axes, 0.0);
  if (static_cast<int>(cfg.thetas.size()) != axes) {
    throw UsageError("--theta needs " + std::to_string(axes) + " values for " +
                     std::string(pw::to_string(cfg.lattice)));
  }
  validate_origin(cfg);
  const auto program = pw::make_program(cfg.lattice, cfg.thetas, cfg.basis);
  const pw::Coord ext = pw::LatticeField::extent_for_steps(cfg.lattice, cfg.steps, cfg.origin);
  auto field = pw::LatticeField::from_initial_state(cfg.lattice, ext, initial_state(cfg));
  field = pw::evolve(std::move(field), program, cfg.steps);
  const pw::RunMeta meta = meta_for(cfg);
  OutputStream os(cfg.out);
  pw::write_field(field, cfg.format, os.get(), &meta);
  return 0;
}

int cmd_grover(RunConfig cfg) {
  pw::GroverField g(cfg.steps);
  g.at(0, 0) = pw::grover_initial_state();
  g = pw::grover_evolve(std::move(g), cfg.steps);
  pw::RunMeta meta;
  meta.lattice = "square";
  meta.steps = cfg.steps;
  meta.init = "grover-4s";
  OutputStream os(cfg.out);
  pw::write_distribution(pw::probabilities(g), cfg.format, os.get(), &meta);
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& metric) {
  pw::CompareMetric m;
  if (metric == "max_abs") {
    m = pw::CompareMetric::MaxAbs;
  } else if (metric == "total_variation") {
    m = pw::CompareMetric::TotalVariation;
  } else {
    throw UsageError("--metric must be max_abs or total_variation");
  }
  const auto da = pw::read_distribution(a);
  const auto db = pw::read_distribution(b);
  std::printf("%s\n", pw::format_double(pw::compare(da.dist, db.dist, m)).c_str());
  return 0;
}

void hamiltonian_row(std::ostream& os, pw::PauliAxis basis, pw::Real theta, pw::Real k,
                     pw::FileFormat format, bool first) {
  const pw::Mat2 w = pw::momentum_step_unitary(basis, theta, k);
  const auto eff = pw::effective_hamiltonian_k(basis, theta, k);
  const pw::Mat2 closed = pw::closed_form_hamiltonian_k(basis, theta, k);
  const pw::Real omega = pw::dispersion(theta, k);
  const pw::Real exp_err = (pw::exp_hermitian(eff.matrix) - w).cwiseAbs().maxCoeff();
  const pw::Real closed_err = (closed - eff.matrix).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<pw::Mat2> es(eff.matrix);
  using pw::format_double;
  if (format == pw::FileFormat::Csv) {
    os << format_double(k) << "," << format_double(omega) << ","
       << (eff.degenerate_branch ? 1 : 0) << "," << format_double(exp_err) << ","
       << format_double(closed_err) << "," << format_double(es.eigenvalues()(0)) << ","
       << format_double(es.eigenvalues()(1));
    if (basis == pw::PauliAxis::Y) {
      os << "," << format_double(pw::check_printed_y_unitary(theta, k).max_abs_diff);
    }
    os << "\n";
  } else {
    if (!first) os << ",";
    os << "{\"k\":" << format_double(k) << ",\"omega\":" << format_double(omega)
       << ",\"degenerate\":" << (eff.degenerate_branch ? "true" : "false")
       << ",\"exp_roundtrip_error\":" << format_double(exp_err)
       << ",\"closed_vs_log_error\":" << format_double(closed_err)
       << ",\"eigenvalues\":[" << format_double(es.eigenvalues()(0)) << ","
       << format_double(es.eigenvalues()(1)) << "]";
    if (basis == pw::PauliAxis::Y) {
      const auto chk = pw::check_printed_y_unitary(theta, k);
      os << ",\"printed_y_max_abs_diff\":" << format_double(chk.max_abs_diff);
    }
    os << "}";
  }
}

int cmd_hamiltonian(pw::PauliAxis basis, pw::Real theta, bool have_k, pw::Real k,
                    int samples, bool audit, const std::string& out,
                    pw::FileFormat format) {
  OutputStream osw(out);
  std::ostream& os = osw.get();
  if (audit) {
    const auto entries = pw::triangular_audit(theta);
    os << "axis,matrix,hermitian_a,hermitian_b,a_squares_to_identity,"
          "b_squares_to_identity,anticommute\n";
    for (const auto& e : entries) {
      os << e.axis << "," << e.name << "," << e.report.hermitian_a << ","
         << e.report.hermitian_b << "," << e.report.a_squares_to_identity << ","
         << e.report.b_squares_to_identity << "," << e.report.anticommute << "\n";
    }
    return 0;
  }
  std::vector<pw::Real> ks;
  if (have_k) {
    ks.push_back(k);
  } else {
    for (int j = 1; j <= samples; ++j) ks.push_back(-pw::pi + 2.0 * pw::pi * j / (samples + 1));
  }
  if (format == pw::FileFormat::Csv) {
    os << "k,omega,degenerate,exp_roundtrip_error,closed_vs_log_error,eig_lo,eig_hi";
    if (basis == pw::PauliAxis::Y) os << ",printed_y_max_abs_diff";
    os << "\n";
    for (pw::Real kk : ks) hamiltonian_row(os, basis, theta, kk, format, false);
  } else {
    os << "{\"basis\":\"" << pw::to_string(basis) << "\",\"theta\":"
       << pw::format_double(theta) << ",\"rows\":[";
    bool first = true;
    for (pw::Real kk : ks) {
      hamiltonian_row(os, basis, theta, kk, format, first);
      first = false;
    }
    os << "]}\n";
  }
  return 0;
}

int cmd_dispersion(pw::Real theta, int samples, const std::string& out,
                   pw::FileFormat format) {
  const auto curve = pw::sample_dispersion(theta, samples);
  OutputStream osw(out);
  std::ostream& os = osw.get();
  if (format == pw::FileFormat::Csv) {
    os << "k,omega\n";
    for (const auto& [k, w] : curve.samples) {
      os << pw::format_double(k) << "," << pw::format_double(w) << "\n";
    }
  } else {
    os << "{\"theta\":" << pw::format_double(curve.theta) << ",\"samples\":[";
    bool first = true;
    for (const auto& [k, w] : curve.samples) {
      if (!first) os << ",";
      first = false;
      os << "[" << pw::format_double(k) << "," << pw::format_double(w) << "]";
    }
    os << "]}\n";
  }
  return 0;
}

int cmd_heatmap(const std::string& in, const std::string& out, bool log_scale,
                int cell_px, const std::string& colormap) {
  const auto loaded = pw::read_distribution(in);
  pw::HeatmapOptions opt;
  opt.log_scale = log_scale;
  opt.cell_px = cell_px;
  if (colormap == "gray") {
    opt.colormap = pw::HeatmapOptions::Colormap::Gray;
  } else if (colormap == "blue-yellow") {
    opt.colormap = pw::HeatmapOptions::Colormap::BlueYellow;
  } else {
    throw UsageError("--colormap must be gray or blue-yellow");
  }
  std::ostringstream cfg;
  cfg << "pauliwalk heatmap in=" << in << " log_scale=" << (log_scale ? 1 : 0)
      << " cell_px=" << cell_px << " colormap=" << colormap;
  if (loaded.meta) {
    cfg << " source={lattice=" << loaded.meta->lattice << " steps=" << loaded.meta->steps
        << " init=" << loaded.meta->init << "}";
  }
  opt.config_comment = cfg.str();
  pw::render_heatmap_file(loaded.dist, out, opt);
  return 0;
}

int check(bool ok, const std::string& label, const std::string& detail) {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  return ok ? 0 : 1;
}

int verify_dirac(const std::string& basis_arg, bool have_theta, pw::Real theta) {
  std::vector<pw::PauliAxis> bases;
  if (basis_arg == "all") {
    bases = {pw::PauliAxis::X, pw::PauliAxis::Y, pw::PauliAxis::Z};
  } else {
    bases = {axis_from_string(basis_arg)};
  }
  std::vector<pw::Real> thetas;
  if (have_theta) {
    thetas.push_back(theta);
  } else {
    for (int i = 0; i < 20; ++i) thetas.push_back(pw::pi * i / 20.0);
  }
  int failures = 0;
  for (pw::PauliAxis b : bases) {
    pw::Real worst_alpha = 0, worst_mass = 0;
    bool clifford_ok = true;
    for (pw::Real th : thetas) {
      const auto form = pw::dirac_form(b, th);
      clifford_ok = clifford_ok && pw::clifford_report(form.alpha, form.beta).all();
      const auto rot = pw::rotate_to_dirac(form, th);
      worst_alpha = std::max(worst_alpha,
                             (rot.alpha - pw::pauli(b)).cwiseAbs().maxCoeff());
      worst_mass = std::max(worst_mass, std::abs(std::abs(rot.mass) - std::abs(std::sin(th))));
    }
    failures += check(clifford_ok, std::string("dirac clifford flags, basis ") + pw::to_string(b),
                      clifford_ok ? "all true" : "some flag false");
    failures += check(worst_alpha <= 1e-13,
                      std::string("rotation maps alpha to pauli, basis ") + pw::to_string(b),
                      "max error " + pw::format_double(worst_alpha));
    failures += check(worst_mass <= 1e-15,
                      std::string("mass magnitude |sin(theta)|, basis ") + pw::to_string(b),
                      "max error " + pw::format_double(worst_mass));
  }
  const auto sq = pw::composite_hamiltonian(pw::LatticeKind::Square, have_theta ? theta : 0.7);
  failures += check(sq.beta_sum.cwiseAbs().maxCoeff() == 0.0,
                    "square beta_x + beta_z cancels exactly", "");
  return failures == 0 ? 0 : 1;
}

int verify_grover_equivalence(int steps) {
  const pw::Real th[2] = {0.0, 0.0};
  const auto prog = pw::make_program(pw::LatticeKind::Square, std::span<const pw::Real>(th, 2));
  auto f = pw::LatticeField::from_initial_state(
      pw::LatticeKind::Square, {steps, steps, 0},
      pw::InitialState{0.5 * pw::pi, 0.5 * pw::pi, {0, 0, 0}});
  const auto two = pw::probabilities(pw::evolve(std::move(f), prog, steps));
  pw::GroverField g(steps);
  g.at(0, 0) = pw::grover_initial_state();
  const auto four = pw::probabilities(pw::grover_evolve(std::move(g), steps));
  const pw::Real err = pw::compare(two, four, pw::CompareMetric::MaxAbs);
  return check(err <= 1e-10, "two-state square walk matches Grover walk, t=" +
                                 std::to_string(steps),
               "sitewise max_abs " + pw::format_double(err));
}

int verify_recurrence(int steps) {
  int failures = 0;
  {
    const pw::Spinor init(1, 0);
    pw::Real worst = 0;
    for (int t = 0; t <= steps; ++t) {
      const pw::Real th[2] = {0.0, 0.0};
      const auto prog = pw::make_program(pw::LatticeKind::Square, std::span<const pw::Real>(th, 2));
      pw::LatticeField f(pw::LatticeKind::Square, {t, t, 0});
      f.at({0, 0, 0}) = init;
      const auto engine = pw::evolve(std::move(f), prog, t);
      worst = std::max(worst, pw::engine_vs_square_oracle_error(
                                  engine, pw::square_recurrence_oracle(init, t)));
    }
    failures += check(worst <= 1e-12, "square engine matches coupled iterative relations",
                      "max amplitude diff " + pw::format_double(worst));
  }
  {
    const auto res = pw::grover_recurrence_oracle(pw::grover_initial_state(), steps);
    pw::GroverField g(steps);
    g.at(0, 0) = pw::grover_initial_state();
    const auto engine = pw::grover_evolve(std::move(g), steps);
    const pw::Real derived_err = pw::max_amplitude_difference(res.derived, engine);
    failures += check(derived_err <= 1e-12, "grover engine matches operator-derived relations",
                      "max amplitude diff " + pw::format_double(derived_err));
    failures += check(!res.stencil_diffs.empty(),
                      "printed quadrupled relations differ from operator-derived ones", "");
    for (const auto& d : res.stencil_diffs) {
      std::printf("  relation %d, beta^(%d) term: printed offset (%d,%d), derived (%d,%d)\n",
                  d.relation, d.term, d.printed_offset[0], d.printed_offset[1],
                  d.derived_offset[0], d.derived_offset[1]);
    }
    std::printf("  printed-vs-derived amplitude max_abs at t=%d: %s\n", steps,
                pw::format_double(res.printed_vs_derived_max_abs).c_str());
  }
  return failures == 0 ? 0 : 1;
}

int verify_symmetry(int steps) {
  const pw::Coord ext = pw::LatticeField::extent_for_steps(pw::LatticeKind::Triangular, steps,
                                                           {0, 0, 0});
  const pw::Real th0[3] = {0, 0, 0};
  const pw::Real th1[3] = {0, 0.25 * pw::pi, 0};
  const auto p0 = pw::make_program(pw::LatticeKind::Triangular, std::span<const pw::Real>(th0, 3));
  const auto p1 = pw::make_program(pw::LatticeKind::Triangular, std::span<const pw::Real>(th1, 3));
  auto down = pw::LatticeField::from_initial_state(pw::LatticeKind::Triangular, ext,
                                                   pw::InitialState{0, 0, {0, 0, 0}});
  auto up = pw::LatticeField::from_initial_state(pw::LatticeKind::Triangular, ext,
                                                 pw::InitialState{pw::pi, 0, {0, 0, 0}});
  auto up_coin = up;
  const auto d_down = pw::probabilities(pw::evolve(std::move(down), p0, steps));
  const auto d_up = pw::probabilities(pw::evolve(std::move(up), p0, steps));
  const auto d_coin = pw::probabilities(pw::evolve(std::move(up_coin), p1, steps));

  const auto reports = pw::detect_symmetry(d_down, d_up, 1e-12);
  int matched = 0;
  for (const auto& r : reports) {
    std::printf("  %s: max_abs_error %s matched=%d\n", pw::to_string(r.map),
                pw::format_double(r.max_abs_error).c_str(), r.matched ? 1 : 0);
    if (r.matched) ++matched;
  }
  int failures = check(matched == 1 && reports[0].matched,
                       "down/up distributions related by the point reflection",
                       "matched candidates: " + std::to_string(matched));
  const pw::Real diff = pw::compare(d_up, d_coin, pw::CompareMetric::MaxAbs);
  failures += check(diff > 0.01, "coin on the S axis alters the distribution",
                    "max_abs " + pw::format_double(diff));
  return failures == 0 ? 0 : 1;
}

int verify_kagome(int steps) {
  const pw::Coord origin{2, 0, 0};
  const pw::Coord ext = pw::LatticeField::extent_for_steps(pw::LatticeKind::Kagome, steps, origin);
  auto f = pw::LatticeField::from_initial_state(pw::LatticeKind::Kagome, ext,
                                                pw::InitialState{0, 0, origin});
  const std::array<pw::Real, 3> thetas{0, 0, 0};
  auto hole_prob = [&ext](const pw::LatticeField& field) {
    pw::Real worst = 0;
    for (int x = -ext[0]; x <= ext[0]; ++x) {
      for (int y = -ext[1]; y <= ext[1]; ++y) {
        if (((x + y) % 2 + 2) % 2 != 0 &&
            field.at({x, y, 0}).squaredNorm() > 0.0) {
          return 1.0;  // off-sublattice support counts as a violation
        }
        if (((x + y) % 2 + 2) % 2 == 0 &&
            pw::kagome_site_type(x, y) == pw::KagomeSiteType::Hole) {
          worst = std::max(worst, field.at({x, y, 0}).squaredNorm());
        }
      }
    }
    return worst;
  };
  bool full_ok = true, sub_ok = true;
  pw::Real worst_hole = 0;
  for (int t = 0; t < steps; ++t) {
    const auto order = pw::kagome_step_order(pw::kagome_support_type(f));
    const pw::KagomeSiteType expected[2] = {pw::KagomeSiteType::Q, pw::KagomeSiteType::O};
    for (int s = 0; s < 3; ++s) {
      pw::AxisStep step;
      step.basis = order[s];
      step.theta = thetas[order[s] == pw::PauliAxis::Z ? 0 : order[s] == pw::PauliAxis::X ? 1 : 2];
      step.displacement_plus = order[s] == pw::PauliAxis::Z   ? pw::Coord{2, 0, 0}
                               : order[s] == pw::PauliAxis::X ? pw::Coord{1, 1, 0}
                                                              : pw::Coord{1, -1, 0};
      step.displacement_minus = {-step.displacement_plus[0], -step.displacement_plus[1], 0};
      f = pw::step_axis(f, step);
      worst_hole = std::max(worst_hole, hole_prob(f));
      const auto type = pw::kagome_support_type(f);
      if (s < 2 && type != expected[s]) sub_ok = false;
      if (s == 2 && type != pw::KagomeSiteType::P) full_ok = false;
    }
  }
  int failures = check(full_ok, "support returns to p-type sites after every full step", "");
  failures += check(sub_ok, "sub-steps visit q-type then o-type sites", "");
  failures += check(worst_hole <= 1e-30, "hole sites never carry probability",
                    "worst " + pw::format_double(worst_hole));
  const pw::Real norm_err = std::abs(1.0 - f.total_norm_sq());
  failures += check(norm_err <= 1e-12, "norm conserved over " + std::to_string(steps) + " steps",
                    "|1-norm| " + pw::format_double(norm_err));
  return failures == 0 ? 0 : 1;
}

int cmd_bench() {
  using clock = std::chrono::steady_clock;
  std::printf("threads: %d\n", pw::thread_cap());
  {
    const int t = 200;
    const pw::Real th[2] = {0, 0};
    const auto prog = pw::make_program(pw::LatticeKind::Square, std::span<const pw::Real>(th, 2));
    auto f = pw::LatticeField::from_initial_state(
        pw::LatticeKind::Square, {t, t, 0}, pw::InitialState{0.5 * pw::pi, 0.5 * pw::pi, {0, 0, 0}});
    const auto start = clock::now();
    f = pw::evolve(std::move(f), prog, t);
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    const double updates = static_cast<double>(f.size()) * 2.0 * t;
    std::printf("square t=%d: %.3f s, %.3e site-updates/s (norm %.15f)\n", t, secs,
                updates / secs, f.total_norm_sq());
  }
  {
    const int t = 60;
    const pw::Real th[3] = {0, 0, 0};
    const auto prog = pw::make_program(pw::LatticeKind::Cubic, std::span<const pw::Real>(th, 3));
    auto f = pw::LatticeField::from_initial_state(
        pw::LatticeKind::Cubic, {t, t, t}, pw::InitialState{0.5 * pw::pi, 0.5 * pw::pi, {0, 0, 0}});
    const auto start = clock::now();
    f = pw::evolve(std::move(f), prog, t);
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    const double updates = static_cast<double>(f.size()) * 3.0 * t;
    std::printf("cubic t=%d: %.3f s, %.3e site-updates/s (norm %.15f)\n", t, secs,
                updates / secs, f.total_norm_sq());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-state discrete-time quantum walks driven by Pauli-basis translation states"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string basis_str = "z";
  std::string init_str = "down";
  std::string origin_str;
  std::string theta_str;
  std::string format_str = "csv";
  bool have_delta = false, have_eta = false;

  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output path, - for stdout");
    sub->add_option("--format", format_str, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* sim = app.add_subcommand("simulate", "evolve a walk and write the field");
  std::string lattice_str = "line";
  sim->add_option("--lattice", lattice_str, "line, square, cubic, triangular, kagome")
      ->required()
      ->check(CLI::IsMember({"line", "square", "cubic", "triangular", "kagome"}));
  sim->add_option("--steps", cfg.steps, "number of full walk steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sim->add_option("--theta", theta_str, "per-axis coin angles, comma separated (default 0)");
  sim->add_option("--init", init_str, "down, up, symmetric, custom");
  auto* dopt = sim->add_option("--delta", cfg.delta, "custom init polar angle");
  auto* eopt = sim->add_option("--eta", cfg.eta, "custom init phase");
  sim->add_option("--origin", origin_str, "start site (default 0,...; kagome 2,0)");
  sim->add_option("--basis", basis_str, "translation basis for the line lattice");
  add_output_flags(sim);

  auto* grv = app.add_subcommand("grover", "four-state Grover reference walk");
  grv->add_option("--steps", cfg.steps, "number of steps")->required()
      ->check(CLI::NonNegativeNumber);
  add_output_flags(grv);

  auto* cmp = app.add_subcommand("compare", "compare two distribution files");
  std::string file_a, file_b, metric_str = "max_abs";
  cmp->add_option("--a", file_a)->required();
  cmp->add_option("--b", file_b)->required();
  cmp->add_option("--metric", metric_str, "max_abs or total_variation");

  auto* ham = app.add_subcommand("hamiltonian", "momentum-space Hamiltonian report");
  pw::Real ham_theta = 0.0, ham_k = 0.0;
  int ham_samples = 64;
  bool ham_audit = false;
  ham->add_option("--basis", basis_str, "x, y or z");
  ham->add_option("--theta", ham_theta, "coin angle")->required();
  auto* kopt = ham->add_option("--k", ham_k, "single quasi-momentum point");
  ham->add_option("--samples", ham_samples, "interior k-grid size")
      ->check(CLI::PositiveNumber);
  ham->add_flag("--audit-triangular", ham_audit, "print the triangular coefficient audit");
  add_output_flags(ham);

  auto* dsp = app.add_subcommand("dispersion", "omega(k) samples");
  pw::Real dsp_theta = 0.0;
  int dsp_samples = 64;
  dsp->add_option("--theta", dsp_theta, "coin angle")->required();
  dsp->add_option("--samples", dsp_samples, "interior k-grid size")
      ->check(CLI::PositiveNumber);
  add_output_flags(dsp);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->require_subcommand(1);
  auto* vd = ver->add_subcommand("dirac", "Clifford algebra and rotation checks");
  std::string vd_basis = "all";
  pw::Real vd_theta = 0.0;
  vd->add_option("--basis", vd_basis, "x, y, z or all");
  auto* vd_theta_opt = vd->add_option("--theta", vd_theta, "single angle (default: 20-point grid)");
  auto* vg = ver->add_subcommand("grover-equivalence", "two-state vs Grover distribution");
  int vg_steps = 50;
  vg->add_option("--steps", vg_steps)->check(CLI::PositiveNumber);
  auto* vr = ver->add_subcommand("recurrence", "engine vs iterative relations");
  int vr_steps = 10;
  vr->add_option("--steps", vr_steps)->check(CLI::Range(1, 12));
  auto* vs = ver->add_subcommand("symmetry", "triangular reflection and coin contrast");
  int vs_steps = 40;
  vs->add_option("--steps", vs_steps)->check(CLI::PositiveNumber);
  auto* vk = ver->add_subcommand("kagome", "sublattice cycle and hole avoidance");
  int vk_steps = 50;
  vk->add_option("--steps", vk_steps)->check(CLI::PositiveNumber);

  auto* hm = app.add_subcommand("heatmap", "render a 2D distribution as SVG");
  std::string hm_in, hm_out, hm_colormap = "gray";
  bool hm_log = false;
  int hm_cell = 4;
  hm->add_option("--in", hm_in, "distribution file (csv or json)")->required();
  hm->add_option("--out", hm_out, "output SVG path")->required();
  hm->add_flag("--log-scale", hm_log, "log10 intensity clamped to [-8, 0]");
  hm->add_option("--cell-px", hm_cell, "cell size in pixels")->check(CLI::PositiveNumber);
  hm->add_option("--colormap", hm_colormap, "gray or blue-yellow");

  auto* bench = app.add_subcommand("bench", "stepping-kernel throughput");
  (void)bench;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.format = pw::format_from_string(format_str);
    have_delta = dopt->count() > 0;
    have_eta = eopt->count() > 0;
    if (sim->parsed()) {
      cfg.lattice = pw::lattice_from_string(lattice_str);
      cfg.basis = axis_from_string(basis_str);
      cfg.init = init_str;
      if ((have_delta || have_eta) && cfg.init != "custom") {
        throw UsageError("--delta/--eta require --init custom");
      }
      if (sim->count("--basis") > 0 && cfg.lattice != pw::LatticeKind::Line) {
        throw UsageError("--basis applies to the line lattice only");
      }
      if (!theta_str.empty()) cfg.thetas = parse_theta_list(theta_str);
      if (!origin_str.empty()) {
        cfg.origin = parse_origin(origin_str, pw::lattice_dimension(cfg.lattice));
      } else if (cfg.lattice == pw::LatticeKind::Kagome) {
        cfg.origin = {2, 0, 0};  // (0,0) is a hole site
      }
      return cmd_simulate(cfg);
    }
    if (grv->parsed()) return cmd_grover(cfg);
    if (cmp->parsed()) return cmd_compare(file_a, file_b, metric_str);
    if (ham->parsed()) {
      return cmd_hamiltonian(axis_from_string(basis_str), ham_theta, kopt->count() > 0,
                             ham_k, ham_samples, ham_audit, cfg.out, cfg.format);
    }
    if (dsp->parsed()) return cmd_dispersion(dsp_theta, dsp_samples, cfg.out, cfg.format);
    if (ver->parsed()) {
      if (vd->parsed()) return verify_dirac(vd_basis, vd_theta_opt->count() > 0, vd_theta);
      if (vg->parsed()) return verify_grover_equivalence(vg_steps);
      if (vr->parsed()) return verify_recurrence(vr_steps);
      if (vs->parsed()) return verify_symmetry(vs_steps);
      if (vk->parsed()) return verify_kagome(vk_steps);
    }
    if (hm->parsed()) return cmd_heatmap(hm_in, hm_out, hm_log, hm_cell, hm_colormap);
    if (bench->parsed()) return cmd_bench();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const pw::OffSublatticeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const pw::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
