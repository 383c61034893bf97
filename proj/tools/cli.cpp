#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qudit/invariants.hpp"
#include "qudit/io.hpp"
#include "qudit/orbit_space.hpp"
#include "qudit/state_space.hpp"
#include "qudit/su_algebra.hpp"

namespace qudit::cli {
namespace {

using io::Json;

struct Options {
  int N = 0;
  std::vector<double> xi;
  std::vector<double> spectrum;
  std::optional<double> radius;
  std::vector<double> angles;
  std::string mode = "spectrum-haar";
  std::uint64_t seed = 1;
  double tol = kPositivityTol;
  bool csv = false;
  std::string out_path;
  bool inverse = false;
  int count = 1;
  int samples = 1000;
  std::string name;
};

struct UsageError : Error {
  using Error::Error;
};

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) row += ',';
    row += csv_number(values[i]);
  }
  return row;
}

void require_N(const Options& o, int min = 2) {
  if (o.N < min) throw UsageError("--N must be given and >= " + std::to_string(min));
}

Spectrum spectrum_option(const Options& o) {
  if (static_cast<int>(o.spectrum.size()) != o.N) {
    throw UsageError("--spectrum needs " + std::to_string(o.N) + " comma-separated values");
  }
  return Spectrum(o.spectrum);
}

// ── commands ────────────────────────────────────────────────────────────────

int cmd_basis(const Options& o, std::ostream& out) {
  require_N(o);
  out << io::to_json(*shared_basis(o.N)).dump() << '\n';
  return kExitOk;
}

int cmd_tensors(const Options& o, std::ostream& out) {
  require_N(o);
  const auto tensors = shared_structure_constants(o.N);
  if (o.csv) {
    out << "kind,i,j,k,value\n";
    for (const auto& [kind, entries] : {std::pair{"d", &tensors->d}, std::pair{"f", &tensors->f}}) {
      for (const auto& [key, value] : *entries) {
        out << kind << ',' << key[0] + 1 << ',' << key[1] + 1 << ',' << key[2] + 1 << ',' << csv_number(value)
            << '\n';
      }
    }
    return kExitOk;
  }
  out << io::to_json(*tensors).dump() << '\n';
  return kExitOk;
}

void emit_verdict(const StateClassification& c, const Options& o, std::ostream& out) {
  if (o.csv) {
    out << (c.is_state ? "true" : "false") << ',' << c.rank << ',' << c.stratum << ',' << csv_number(c.margin)
        << '\n';
  } else {
    out << io::to_json(c).dump() << '\n';
  }
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  if (o.csv) out << "is_state,rank,stratum,margin\n";
  if (!o.xi.empty()) {
    require_N(o);
    const auto c = check_state_bloch(BlochVector(o.N, o.xi), o.tol);
    emit_verdict(c, o, out);
    return c.is_state ? kExitOk : kExitNotState;
  }
  bool all_states = true;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception& e) {
      throw DomainError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    const HermitianMatrix rho = io::state_from_json(record);
    if (o.N != 0 && rho.dim() != o.N) {
      throw DimensionMismatch("line " + std::to_string(line_no) + ": record has N = " + std::to_string(rho.dim()));
    }
    const auto c = check_state_bloch(to_bloch(rho), o.tol);
    all_states = all_states && c.is_state;
    emit_verdict(c, o, out);
  }
  if (line_no == 0) throw UsageError("check: give --xi or JSON records on stdin");
  return all_states ? kExitOk : kExitNotState;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  require_N(o);
  std::optional<BlochVector> xi;
  if (!o.xi.empty()) {
    xi.emplace(o.N, o.xi);
  } else if (!o.spectrum.empty()) {
    const Spectrum s = spectrum_option(o);
    RealVector diag = Eigen::Map<const RealVector>(s.values().data(), o.N);
    xi.emplace(to_bloch(HermitianMatrix(diag.cast<Complex>().asDiagonal())));
  } else {
    throw UsageError("invariants: give --xi or --spectrum");
  }
  const HermitianMatrix rho = from_bloch(*xi);
  const TraceInvariants t = trace_invariants(rho, o.N);
  const CasimirValues c = casimirs(*xi, *shared_structure_constants(o.N));
  out << io::invariants_record(t, &c).dump() << '\n';
  return kExitOk;
}

int cmd_param(const Options& o, std::ostream& out) {
  require_N(o);
  if (o.inverse) {
    if (!o.radius) throw UsageError("param --inverse needs --r");
    OrbitCoordinates c;
    c.dim = o.N;
    c.radius = *o.radius;
    c.angles = o.angles;
    const OrbitSpectrum s = spectrum_from_orbit(c);
    if (o.csv) {
      out << "r_1";
      for (int i = 2; i <= o.N; ++i) out << ",r_" << i;
      out << '\n' << csv_row(s.sorted.values()) << '\n';
      return kExitOk;
    }
    out << Json{{"N", o.N},
                {"spectrum", s.sorted.values()},
                {"raw", s.raw},
                {"valid", s.valid},
                {"ordered", ordered_domain_check(c)},
                {"convention", c.convention}}
               .dump()
        << '\n';
    return kExitOk;
  }
  const Spectrum s = spectrum_option(o);
  const OrbitCoordinates c = orbit_from_spectrum(s);
  if (o.csv) {
    out << "radius";
    for (std::size_t i = 0; i < c.angles.size(); ++i) out << (i == 0 ? ",phi" : ",theta_" + std::to_string(i));
    out << '\n';
    std::vector<double> row{c.radius};
    row.insert(row.end(), c.angles.begin(), c.angles.end());
    out << csv_row(row) << '\n';
    return kExitOk;
  }
  Json j = io::to_json(c);
  j["t2"] = purity_from_radius(o.N, c.radius);
  j["stratum"] = io::to_json(classify_spectrum(s));
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_boundary(const Options& o, std::ostream& out) {
  require_N(o);
  if (o.N != 3 && o.N != 4) throw UsageError("boundary: --N must be 3 or 4");
  if (!o.radius) throw UsageError("boundary: --r is required");
  const double r = *o.radius;
  Json j{{"N", o.N}, {"r", r}, {"t2", purity_from_radius(o.N, r)}};
  if (!o.angles.empty()) {
    OrbitCoordinates c;
    c.dim = o.N;
    c.radius = r;
    c.angles = o.angles;
    j["ordered"] = ordered_domain_check(c);
    j["stratum"] = io::to_json(rank_strata(c));
  }
  Json eff = Json::object();
  const std::vector<NestedKind> kinds =
      o.N == 3 ? std::vector{NestedKind::QubitInQutrit}
               : std::vector{NestedKind::QutritInQuatrit, NestedKind::QubitInQutritInQuatrit};
  for (const NestedKind k : kinds) {
    if (r >= nested_threshold(k) - 1e-12) {
      eff[to_string(k)] = effective_radius(k, r);
    } else {
      eff[to_string(k)] = nullptr;
    }
  }
  j["effective_radius"] = std::move(eff);
  if (o.N == 3) {
    j["intersection"] = io::to_json(qutrit_intersection_arc(r));
  } else {
    j["intersection"] = io::to_json(quatrit_intersection_polyhedron(r));
    j["transition_radii"] = quatrit_transition_radii();
    if (r >= 1.0 / 3.0 - 1e-12) j["rank3_cos_theta"] = quatrit_rank3_cos_theta(r);
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_N(o);
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const auto states = sample_states(o.N, o.count, parse_sampling_mode(o.mode), o.seed);
  if (o.csv) {
    out << "index";
    for (int i = 1; i <= o.N; ++i) out << ",r_" << i;
    out << '\n';
    for (std::size_t k = 0; k < states.size(); ++k) {
      out << k << ',' << csv_row(eig_oracle(states[k]).values()) << '\n';
    }
    return kExitOk;
  }
  for (const auto& rho : states) out << Json{{"N", o.N}, {"rho", io::matrix_to_json(rho.matrix())}}.dump() << '\n';
  return kExitOk;
}

void figure_header(std::ostream& out, const std::string& name, const std::string& columns) {
  out << "# figure=" << name << ",convention=" << kAngleConvention << '\n' << columns << '\n';
}

int cmd_figure(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw UsageError("--samples must be >= 1");
  std::mt19937_64 rng(o.seed);
  constexpr double pi = std::numbers::pi;
  if (o.name == "qutrit-triangle") {
    const auto basis = shared_basis(3);
    figure_header(out, o.name, "I3,I8");
    for (int i = 0; i < o.samples; ++i) {
      const Spectrum s(uniform_simplex(3, rng));
      const RealVector I = cartan_coordinates(s.values(), *basis);
      out << csv_row({I(0), I(1)}) << '\n';
    }
  } else if (o.name == "qutrit-rank2-curve") {
    figure_header(out, o.name, "phi,r,x,y");
    for (int i = 0; i < o.samples; ++i) {
      const double phi = pi / 2 + pi * i / std::max(1, o.samples - 1);
      const double r = qutrit_rank2_radius(phi);
      out << csv_row({phi, r, r * std::cos(phi), r * std::sin(phi)}) << '\n';
    }
  } else if (o.name == "qutrit-arc") {
    const double r = o.radius.value_or(0.25);
    const ArcReport arc = qutrit_intersection_arc(r);
    figure_header(out, o.name, "phi,r1,r2,r3");
    for (int i = 0; i < o.samples; ++i) {
      const double psi = arc.psi_begin + arc.angular_extent * i / std::max(1, o.samples - 1);
      OrbitCoordinates c;
      c.dim = 3;
      c.radius = r;
      c.angles = {3 * psi};
      std::vector<double> row{3 * psi};
      const auto raw = spectrum_from_orbit(c).raw;
      row.insert(row.end(), raw.begin(), raw.end());
      out << csv_row(row) << '\n';
    }
  } else if (o.name == "quatrit-slice") {
    const auto basis = shared_basis(4);
    figure_header(out, o.name, "I3,I8,I15");
    for (int i = 0; i < o.samples; ++i) {
      std::vector<double> p = uniform_simplex(3, rng);
      p.push_back(0.0);
      const Spectrum s(p);
      const RealVector I = cartan_coordinates(s.values(), *basis);
      out << csv_row({I(0), I(1), I(2)}) << '\n';
    }
  } else if (o.name == "quatrit-polyhedron") {
    std::vector<double> radii;
    if (o.radius) {
      radii.push_back(*o.radius);
    } else {
      for (int i = 1; i <= o.samples; ++i) radii.push_back(static_cast<double>(i) / o.samples);
    }
    Json polys = Json::array();
    for (const double r : radii) polys.push_back(io::to_json(quatrit_intersection_polyhedron(r)));
    out << Json{{"figure", o.name},
                {"convention", kAngleConvention},
                {"transition_radii", quatrit_transition_radii()},
                {"polyhedra", std::move(polys)}}
               .dump()
        << '\n';
  } else {
    throw UsageError("unknown figure '" + o.name +
                     "' (qutrit-triangle, qutrit-rank2-curve, qutrit-arc, quatrit-slice, quatrit-polyhedron)");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qudit state space: su(N) algebra, positivity tests and orbit-space coordinates", "qudit"};
  app.require_subcommand(1);
  Options o;

  auto add_N = [&o](CLI::App* sub) { sub->add_option("--N", o.N, "Number of levels"); };
  auto add_out = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    sub->add_flag("--csv", o.csv, "CSV instead of JSON");
  };
  auto add_list = [](CLI::App* sub, const std::string& flag, std::vector<double>& target, const std::string& help) {
    sub->add_option(flag, target, help)->delimiter(',')->allow_extra_args(false);
  };

  auto* basis = app.add_subcommand("basis", "Generalized Gell-Mann basis as JSON");
  add_N(basis);
  add_out(basis);

  auto* tensors = app.add_subcommand("tensors", "Structure constants d_ijk and f_ijk");
  add_N(tensors);
  add_out(tensors);

  auto* check = app.add_subcommand("check", "Positivity verdict for a Bloch vector or JSON records on stdin");
  add_N(check);
  add_list(check, "--xi", o.xi, "Bloch vector components");
  check->add_option("--tol", o.tol, "Positivity tolerance");
  add_out(check);

  auto* inv = app.add_subcommand("invariants", "Trace invariants, S_k, discriminant and Casimirs");
  add_N(inv);
  add_list(inv, "--xi", o.xi, "Bloch vector components");
  add_list(inv, "--spectrum", o.spectrum, "Eigenvalues");
  add_out(inv);

  auto* param = app.add_subcommand("param", "Spectrum <-> (radius, angles)");
  add_N(param);
  add_list(param, "--spectrum", o.spectrum, "Eigenvalues");
  param->add_option("--r", o.radius, "Bloch radius");
  add_list(param, "--angles", o.angles, "Angles [phi, theta_1, ...]");
  param->add_flag("--inverse", o.inverse, "Map (radius, angles) to a spectrum");
  add_out(param);

  auto* boundary = app.add_subcommand("boundary", "Boundary strata and nested radii for N = 3, 4");
  add_N(boundary);
  boundary->add_option("--r", o.radius, "Bloch radius");
  add_list(boundary, "--angles", o.angles, "Angles [phi, theta_1, ...]");
  add_out(boundary);

  auto* sample = app.add_subcommand("sample", "Seeded random states");
  add_N(sample);
  sample->add_option("--count", o.count, "Number of states");
  sample->add_option("--mode", o.mode, "bloch-rejection | spectrum-haar");
  sample->add_option("--seed", o.seed, "RNG seed");
  add_out(sample);

  auto* figure = app.add_subcommand("figure", "CSV/JSON data behind the orbit-space figures");
  figure->add_option("--name", o.name, "Figure name")->required();
  figure->add_option("--samples", o.samples, "Number of rows");
  figure->add_option("--seed", o.seed, "RNG seed");
  figure->add_option("--r", o.radius, "Bloch radius (qutrit-arc, quatrit-polyhedron)");
  add_out(figure);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qudit: " << e.what() << '\n';
    return kExitError;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "qudit: cannot open " << o.out_path << " for writing\n";
      return kExitError;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    if (basis->parsed()) return cmd_basis(o, sink);
    if (tensors->parsed()) return cmd_tensors(o, sink);
    if (check->parsed()) return cmd_check(o, in, sink);
    if (inv->parsed()) return cmd_invariants(o, sink);
    if (param->parsed()) return cmd_param(o, sink);
    if (boundary->parsed()) return cmd_boundary(o, sink);
    if (sample->parsed()) return cmd_sample(o, sink);
    if (figure->parsed()) return cmd_figure(o, sink);
  } catch (const std::exception& e) {
    err << "qudit: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qudit::cli
