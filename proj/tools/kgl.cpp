// kgl: command-line front end for the Klein-Gordon lattice toolkit.
//
// Exit codes: 0 success, 2 usage or invalid input, 3 numeric failure or a
// failed check, 4 search budget exceeded, 5 output not writable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kg/action_angle.hpp"
#include "kg/appendix.hpp"
#include "kg/dynamics.hpp"
#include "kg/kam.hpp"
#include "kg/normal_form.hpp"
#include "kg/observables.hpp"
#include "kg/report.hpp"
#include "kg/resonance.hpp"

namespace {

using namespace kg;

constexpr const char* kVersion = "kgl 1.0.0";

enum ExitCode { kOk = 0, kUsage = 2, kNumeric = 3, kBudget = 4, kIo = 5 };

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string output;
  std::string config;
  bool no_timestamp = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--config", c.config, "key=value file; command-line flags take precedence");
  sub->add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp for byte-identical reruns");
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

using Settings = std::vector<std::pair<std::string, std::string>>;

void write_output(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw OutputError("cannot open '" + c.output + "' for writing");
  out << text;
  if (!out.flush()) throw OutputError("failed writing '" + c.output + "'");
}

Node structured_header(const std::string& command, const Settings& s, const Common& c) {
  Node root;
  root.add("command", command);
  root.add("version", kVersion);
  if (!c.no_timestamp) root.add("timestamp", timestamp());
  Node& cfg = root.add("config");
  for (const auto& [k, v] : s) cfg.add(k, v);
  return root;
}

std::vector<std::string> csv_preamble(const std::string& command, const Settings& s, const Common& c) {
  std::vector<std::string> p{"command=" + command, std::string("version=") + kVersion};
  if (!c.no_timestamp) p.push_back("timestamp=" + timestamp());
  for (const auto& [k, v] : s) p.push_back(k + "=" + v);
  return p;
}

std::string fmt(double x) { return format_double(x); }

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- config file merge ------------------------------------------------------

// Reads key=value lines and appends "--key=value" for every key the user did
// not pass explicitly, so command-line flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file '" + path + "'");
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(line_no) + " is not key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!given) args.push_back(flag + "=" + value);
  }
  return args;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  int n = 0;
  double a = 1.0;
};

int run_spectrum(const SpectrumArgs& x, const Common& c) {
  if (x.n < 2) throw InvalidInput("spectrum needs --n >= 2");
  const FrequencySpectrum w = frequencies(x.n, x.a);
  Table t;
  t.preamble = csv_preamble("spectrum", {{"n", std::to_string(x.n)}, {"a", fmt(x.a)}}, c);
  t.header = {"k", "omega", "omega_squared"};
  for (int k = 1; k <= x.n; ++k) t.rows.push_back({std::to_string(k), fmt(w(k)), fmt(w(k) * w(k))});
  write_output(c, emit_csv(t));
  return kOk;
}

// --- simulate ---------------------------------------------------------------

struct LatticeArgs {
  int n = 5;
  double a = 1.0;
  double beta = 1.0;
  std::string boundary = "periodic";

  LatticeParams params() const {
    LatticeParams p;
    p.n_particles = n;
    p.a = a;
    p.beta = beta;
    p.boundary = parse_boundary(boundary);
    p.validate();
    return p;
  }
  void settings(Settings& s) const {
    s.emplace_back("n", std::to_string(n));
    s.emplace_back("a", fmt(a));
    s.emplace_back("beta", fmt(beta));
    s.emplace_back("boundary", boundary);
  }
};

void add_lattice(CLI::App* sub, LatticeArgs& l) {
  sub->add_option("--n", l.n, "Number of particles (N, or interior n for dirichlet)");
  sub->add_option("--a", l.a, "On-site quadratic coefficient a > 0");
  sub->add_option("--beta", l.beta, "On-site quartic coefficient");
  sub->add_option("--boundary", l.boundary, "periodic or dirichlet");
}

// Seeded initial state: eps times a unit vector in the scaled phonon chart
// (periodic), or in (q, p) directly (dirichlet).
LatticeState seeded_state(const LatticeParams& p, std::uint64_t seed, double amplitude) {
  ModalState dir = random_unit_modal(p.n_particles, seed);
  if (p.boundary == Boundary::periodic) {
    for (std::size_t k = 0; k < dir.size(); ++k) {
      dir.Q[k] *= amplitude;
      dir.P[k] *= amplitude;
    }
    return PhononBasis(p.n_particles, p.a).from_scaled(dir);
  }
  LatticeState s(static_cast<std::size_t>(p.n_particles));
  for (std::size_t k = 0; k < s.size(); ++k) {
    s.q[k] = amplitude * dir.Q[k];
    s.p[k] = amplitude * dir.P[k];
  }
  return s;
}

struct SimulateArgs {
  LatticeArgs lattice;
  double dt = 0.01;
  long long steps = 1000;
  long long record_every = 10;
  std::string scheme = "harmonic_split";
  std::uint64_t seed = 1;
  double amplitude = 0.1;
};

int run_simulate(const SimulateArgs& x, const Common& c) {
  const LatticeParams p = x.lattice.params();
  IntegratorConfig ic;
  ic.dt = x.dt;
  ic.steps = x.steps;
  ic.record_every = x.record_every;
  ic.scheme = parse_scheme(x.scheme);
  ic.validate();
  const LatticeState s0 = seeded_state(p, x.seed, x.amplitude);
  const TimeSeries ts = integrate(p, s0, ic, {{"H", [&](const LatticeState& s) { return hamiltonian(p, s); }}});

  Settings s;
  x.lattice.settings(s);
  s.emplace_back("dt", fmt(x.dt));
  s.emplace_back("steps", std::to_string(x.steps));
  s.emplace_back("record_every", std::to_string(x.record_every));
  s.emplace_back("scheme", to_string(ic.scheme));
  s.emplace_back("seed", std::to_string(x.seed));
  s.emplace_back("amplitude", fmt(x.amplitude));
  Table t;
  t.preamble = csv_preamble("simulate", s, c);
  t.header = {"t", "H"};
  for (int j = 1; j <= p.n_particles; ++j) t.header.push_back("q" + std::to_string(j));
  for (int j = 1; j <= p.n_particles; ++j) t.header.push_back("p" + std::to_string(j));
  for (std::size_t i = 0; i < ts.t.size(); ++i) {
    std::vector<std::string> row{fmt(ts.t[i]), fmt(ts.values[0][i])};
    for (double q : ts.states[i].q) row.push_back(fmt(q));
    for (double v : ts.states[i].p) row.push_back(fmt(v));
    t.rows.push_back(std::move(row));
  }
  write_output(c, emit_csv(t));
  return kOk;
}

// --- drift ------------------------------------------------------------------

struct DriftArgs {
  LatticeArgs lattice;
  std::vector<double> eps{0.02, 0.05, 0.1, 0.2};
  double horizon = 1.0;
  double dt = 0.0;
  std::uint64_t seed = DriftConfig{}.seed;
  std::string scheme = "harmonic_split";
};

int run_drift(const DriftArgs& x, const Common& c) {
  const LatticeParams p = x.lattice.params();
  DriftConfig dc;
  dc.eps = x.eps;
  dc.horizon_c = x.horizon;
  dc.dt = x.dt;
  dc.seed = x.seed;
  dc.scheme = parse_scheme(x.scheme);
  const DriftReport r = drift_experiment(p, dc);

  Settings s;
  x.lattice.settings(s);
  s.emplace_back("eps", join(x.eps));
  s.emplace_back("horizon", fmt(x.horizon));
  s.emplace_back("dt", fmt(r.dt));
  s.emplace_back("seed", std::to_string(x.seed));
  s.emplace_back("scheme", to_string(dc.scheme));
  Node root = structured_header("drift", s, c);
  Node& rows = root.add("rows");
  for (const auto& row : r.rows) {
    Node& n = rows.add("row");
    n.add("eps", fmt(row.eps));
    n.add("observable", row.observable);
    n.add("initial", fmt(row.initial));
    n.add("max_deviation", fmt(row.max_deviation));
    n.add("drift", fmt(row.drift));
  }
  Node& slopes = root.add("slopes");
  for (const auto& sl : r.slopes) {
    Node& n = slopes.add("slope");
    n.add("observable", sl.observable);
    n.add("value", fmt(sl.slope));
    n.add("points", std::to_string(sl.points));
    n.add("monotone", yes_no(sl.monotone));
  }
  if (!r.warnings.empty()) {
    Node& w = root.add("warnings");
    for (const auto& msg : r.warnings) w.add("warning", msg);
  }
  write_output(c, emit_structured(root));
  return kOk;
}

// --- resonances -------------------------------------------------------------

struct ResonanceArgs {
  int n = 5;
  double a = 1.0;
  double tol = 1e-20;
  int max_order = 4;
  int budget = 64;
  bool allow_large = false;
};

Node tuple_node(const ResonanceTuple& t) {
  Node n("tuple");
  n.add("kind", to_string(t.kind));
  n.add("indices", join(t.indices));
  n.add("residual", fmt(t.residual));
  n.add("residual_check", fmt(t.residual_check));
  n.add("trivial", yes_no(t.trivial));
  return n;
}

int run_resonances(const ResonanceArgs& x, const Common& c) {
  ResonanceSearch rs;
  rs.n_sites = x.n;
  rs.a = x.a;
  rs.tol = x.tol;
  rs.max_order = x.max_order;
  rs.budget = x.budget;
  rs.allow_large = x.allow_large;
  const auto all = find_resonances(rs);

  Settings s{{"n", std::to_string(x.n)}, {"a", fmt(x.a)}, {"tol", fmt(x.tol)},
             {"max_order", std::to_string(x.max_order)}, {"budget", std::to_string(x.budget)},
             {"allow_large", yes_no(x.allow_large)}};
  Node root = structured_header("resonances", s, c);
  Node& rel = root.add("relations");
  for (const auto& t : all) rel.add(tuple_node(t));
  if (x.max_order == 4) {
    const AssertionReport ar = verify_assertion(rs);
    Node& a = root.add("assertion");
    a.add("result", ar.pass ? "PASS" : "FAIL");
    a.add("order4_relations", std::to_string(ar.tuples.size()));
    a.add("nontrivial", std::to_string(ar.nontrivial));
    a.add("type4", std::to_string(ar.type4_count));
    a.add("sum_filter_hits", std::to_string(ar.sum_filter_hits));
    a.add("max_recheck_delta", fmt(ar.max_recheck_delta));
    a.add("note", ar.note);
  }
  write_output(c, emit_structured(root));
  return kOk;
}

// --- kam --------------------------------------------------------------------

struct KamArgs {
  int n = 3;
  double a = 1.0;
  double beta = 1.0;
  bool odd = false;
  bool dirichlet = false;
};

void matrix_node(Node& parent, const std::string& key, const Eigen::MatrixXd& m) {
  Node& n = parent.add(key);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    n.add("row", join(row));
  }
}

int run_kam(const KamArgs& x, const Common& c) {
  if (x.odd && x.dirichlet) throw InvalidInput("choose one of --odd and --dirichlet");
  const bool dirichlet = x.dirichlet;
  Settings s{{"n", std::to_string(x.n)}, {"a", fmt(x.a)}, {"beta", fmt(x.beta)},
             {"mode", dirichlet ? "dirichlet" : "odd"}};
  Node root = structured_header("kam", s, c);
  KamReport r;
  if (dirichlet) {
    if (x.n < 1) throw InvalidInput("--n must be >= 1 for --dirichlet");
    r = kam_hessian_dirichlet(frequencies(2 * x.n + 2, x.a), x.beta, x.n);
  } else {
    if (x.n < 3) throw InvalidInput("--n must be an odd number >= 3");
    r = kam_hessians_odd(frequencies(x.n, x.a), x.beta);
  }
  matrix_node(root, "hessian_a", r.hessian_a);
  root.add("det_a", fmt(r.det_a));
  if (!dirichlet) {
    matrix_node(root, "hessian_b", r.hessian_b);
    root.add("det_b", fmt(r.det_b));
    root.add("det_full", fmt(r.det_full));
    root.add("closed_form_det", fmt(*r.closed_form_det));
    root.add("det_full_over_closed_form", fmt(r.det_full / *r.closed_form_det));
    root.add("prefactor_ratio", fmt(*r.prefactor_ratio));
  } else {
    Node& f = root.add("template");
    for (Eigen::Index i = 0; i < r.integer_template->rows(); ++i) {
      std::string row;
      for (Eigen::Index j = 0; j < r.integer_template->cols(); ++j)
        row += (j ? " " : "") + std::to_string((*r.integer_template)(i, j));
      f.add("row", row);
    }
    root.add("template_det", r.template_det->str());
  }
  root.add("nondegenerate", yes_no(r.nondegenerate));
  write_output(c, emit_structured(root));
  return kOk;
}

// --- residue ----------------------------------------------------------------

struct ResidueArgs {
  int order = 12;
  int shift = kPoleSeriesShift;
  std::vector<std::string> evals;
};

std::pair<Rational, Rational> parse_eval(const std::string& spec) {
  std::optional<Rational> a, g3;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("--eval expects a=<r>,g3=<r>, got '" + spec + "'");
    const std::string key = item.substr(0, eq);
    const Rational v = parse_rational(item.substr(eq + 1));
    if (key == "a")
      a = v;
    else if (key == "g3")
      g3 = v;
    else
      throw InvalidInput("unknown symbol '" + key + "' in --eval");
  }
  if (!a || !g3) throw InvalidInput("--eval needs both a and g3");
  return {*a, *g3};
}

int run_residue(const ResidueArgs& x, const Common& c) {
  std::vector<std::pair<Rational, Rational>> points;
  for (const auto& e : x.evals) points.push_back(parse_eval(e));
  const ResidueCertificate cert = residue_certificate(x.order, x.shift);
  const LameSystem sys = lame_fundamental(Polynomial::a(), x.order, x.shift);

  Settings s{{"order", std::to_string(x.order)}, {"shift", std::to_string(x.shift)}};
  for (const auto& e : x.evals) s.emplace_back("eval", e);
  Node root = structured_header("residue", s, c);
  Node& series = root.add("series");
  Node& u = series.add("u");
  for (int k = -1; k < std::min(x.order, 8); k += 2) u.add("s^" + std::to_string(k), sys.u.coefficient(k).str());
  Node& y1 = series.add("y1");
  for (int k = -2; k < std::min(x.order, 6); k += 2) y1.add("s^" + std::to_string(k), sys.y1.coefficient(k).str());
  series.add("wronskian", sys.wronskian.str());

  root.add("residue", cert.residue.str());
  root.add("reference", cert.reference.str());
  root.add("proportional", yes_no(cert.factor.has_value()));
  if (cert.factor) root.add("factor", to_string(*cert.factor));
  root.add("residue_positive_at_g3_1", yes_no(cert.positive_at_g3_one));
  for (std::size_t i = 0; i < points.size(); ++i) {
    Node& e = root.add("evaluation");
    e.add("a", to_string(points[i].first));
    e.add("g3", to_string(points[i].second));
    e.add("residue_value", to_string(cert.residue.evaluate(points[i].first, points[i].second)));
    e.add("reference_value", to_string(cert.reference.evaluate(points[i].first, points[i].second)));
  }
  write_output(c, emit_structured(root));
  return kOk;
}

// --- symmetry ---------------------------------------------------------------

struct SymmetryArgs {
  LatticeArgs lattice;
  std::uint64_t seed = 1;
  double amplitude = 0.5;
  double dt = 0.01;
  long long steps = 1000;
  double tol = 1e-10;
};

double max_abs_diff(const LatticeState& x, const LatticeState& y) {
  double d = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    d = std::max({d, std::abs(x.q[j] - y.q[j]), std::abs(x.p[j] - y.p[j])});
  return d;
}

int run_symmetry(const SymmetryArgs& x, const Common& c) {
  LatticeParams p = x.lattice.params();
  if (p.boundary != Boundary::periodic) throw InvalidInput("symmetry checks need --boundary periodic");
  const int n = p.n_particles;
  const LatticeState s = seeded_state(p, x.seed, x.amplitude);

  LatticeState rn = s;
  for (int i = 0; i < n; ++i) rn = apply_R(rn);
  const bool rn_id = rn.q == s.q && rn.p == s.p;
  const LatticeState ss = apply_S(apply_S(s));
  const bool s2_id = ss.q == s.q && ss.p == s.p;
  const LatticeState sr = apply_S(apply_R(s)), rs = apply_R_inverse(apply_S(s));
  const bool dihedral = sr.q == rs.q && sr.p == rs.p;

  const double h = hamiltonian(p, s);
  const double dh_r = std::abs(hamiltonian(p, apply_R(s)) - h) / std::max(std::abs(h), 1e-300);
  const double dh_s = std::abs(hamiltonian(p, apply_S(s)) - h) / std::max(std::abs(h), 1e-300);

  const PhononBasis basis(n, p.a);
  auto h4 = [&](const LatticeState& y) {
    return h4bar_periodic(hopf_from_modal(basis.to_scaled(y)), basis.spectrum(), p.beta);
  };
  const double h4s = h4(s);
  const double scale4 = std::max(std::abs(h4s), 1e-300);
  const double dh4_r = std::abs(h4(apply_R(s)) - h4s) / scale4;
  const double dh4_s = std::abs(h4(apply_S(s)) - h4s) / scale4;

  const HarmonicSplitStepper stepper(p, x.dt);
  LatticeState a = s, b = apply_R(s), cs = apply_S(s);
  double flow_r = 0.0, flow_s = 0.0;
  for (long long i = 0; i < x.steps; ++i) {
    stepper.step(a);
    stepper.step(b);
    stepper.step(cs);
    flow_r = std::max(flow_r, max_abs_diff(b, apply_R(a)));
    flow_s = std::max(flow_s, max_abs_diff(cs, apply_S(a)));
  }

  Settings set;
  x.lattice.settings(set);
  set.emplace_back("seed", std::to_string(x.seed));
  set.emplace_back("amplitude", fmt(x.amplitude));
  set.emplace_back("dt", fmt(x.dt));
  set.emplace_back("steps", std::to_string(x.steps));
  set.emplace_back("tol", fmt(x.tol));
  Node root = structured_header("symmetry", set, c);
  Node& g = root.add("group");
  g.add("R_power_N_identity", yes_no(rn_id));
  g.add("S_squared_identity", yes_no(s2_id));
  g.add("SR_equals_Rinv_S", yes_no(dihedral));
  Node& inv = root.add("invariance");
  inv.add("H_rel_change_R", fmt(dh_r));
  inv.add("H_rel_change_S", fmt(dh_s));
  inv.add("H4bar_rel_change_R", fmt(dh4_r));
  inv.add("H4bar_rel_change_S", fmt(dh4_s));
  Node& fl = root.add("flow");
  fl.add("max_commutator_R", fmt(flow_r));
  fl.add("max_commutator_S", fmt(flow_s));
  const bool pass = rn_id && s2_id && dihedral && dh_r <= 1e-12 && dh_s <= 1e-12 && dh4_r <= 1e-12 &&
                    dh4_s <= 1e-12 && flow_r <= x.tol && flow_s <= x.tol;
  root.add("result", pass ? "PASS" : "FAIL");
  write_output(c, emit_structured(root));
  return pass ? kOk : kNumeric;
}

// --- normalform-eval ----------------------------------------------------------

struct NormalFormArgs {
  int n = 5;
  double a = 1.0;
  double beta = 1.0;
  std::vector<double> Q, P;
  std::uint64_t seed = 1;
  double amplitude = 1.0;
};

int run_normalform(const NormalFormArgs& x, const Common& c) {
  if (x.n < 2) throw InvalidInput("--n must be >= 2");
  const FrequencySpectrum w = frequencies(x.n, x.a);
  ModalState m;
  if (!x.Q.empty() || !x.P.empty()) {
    if (x.Q.size() != static_cast<std::size_t>(x.n) || x.P.size() != static_cast<std::size_t>(x.n))
      throw InvalidInput("--Q and --P must both have N entries");
    m = ModalState(static_cast<std::size_t>(x.n), true);
    m.Q = x.Q;
    m.P = x.P;
  } else {
    m = random_unit_modal(x.n, x.seed);
    for (std::size_t k = 0; k < m.size(); ++k) {
      m.Q[k] *= x.amplitude;
      m.P[k] *= x.amplitude;
    }
  }
  const HopfCoordinates h = hopf_from_modal(m);

  Settings s{{"n", std::to_string(x.n)}, {"a", fmt(x.a)}, {"beta", fmt(x.beta)},
             {"Q", join(m.Q)}, {"P", join(m.P)}};
  Node root = structured_header("normalform-eval", s, c);
  Node& hp = root.add("hopf");
  for (int k = 1; k <= h.pairs(); ++k) {
    Node& pk = hp.add("pair");
    pk.add("k", std::to_string(k));
    pk.add("a", fmt(h.ak(k)));
    pk.add("b", fmt(h.bk(k)));
    pk.add("c", fmt(h.ck(k)));
    pk.add("d", fmt(h.dk(k)));
  }
  if (h.a_half) hp.add("a_half", fmt(*h.a_half));
  hp.add("a_N", fmt(h.a_N));
  root.add("H2", fmt(h2_hopf(h, w)));
  root.add("H4bar", fmt(h4bar_periodic(h, w, x.beta)));
  if (x.n % 2 == 1) root.add("H4bar_odd", fmt(h4bar_odd(h, w, x.beta)));
  const Observable h4 = observables::h4bar(w, x.beta);
  Node& br = root.add("brackets_with_H4bar");
  for (const auto& o : observables::normal_form_integrals(w))
    br.add(o.name(), fmt(poisson_bracket(o, h4, m)));
  write_output(c, emit_structured(root));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon lattice: phonons, normal forms, resonances and series certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Phonon frequencies omega_k");
  sp->add_option("--n", spectrum.n, "Number of sites N >= 2")->required();
  sp->add_option("--a", spectrum.a, "On-site quadratic coefficient");
  add_common(sp, common);

  SimulateArgs simulate;
  auto* si = app.add_subcommand("simulate", "Integrate the lattice from a seeded state");
  add_lattice(si, simulate.lattice);
  si->add_option("--dt", simulate.dt);
  si->add_option("--steps", simulate.steps);
  si->add_option("--record-every", simulate.record_every);
  si->add_option("--scheme", simulate.scheme, "harmonic_split or verlet");
  si->add_option("--seed", simulate.seed);
  si->add_option("--amplitude", simulate.amplitude);
  add_common(si, common);

  DriftArgs drift;
  auto* dr = app.add_subcommand("drift", "Drift of the normal-form integrals versus amplitude");
  add_lattice(dr, drift.lattice);
  dr->add_option("--eps", drift.eps, "Comma-separated increasing amplitudes")->delimiter(',');
  dr->add_option("--horizon", drift.horizon, "T(eps) = horizon / eps");
  dr->add_option("--dt", drift.dt, "Time step; 0 selects min(0.01, 0.05 / max omega)");
  dr->add_option("--seed", drift.seed);
  dr->add_option("--scheme", drift.scheme, "harmonic_split or verlet");
  add_common(dr, common);

  ResonanceArgs res;
  auto* rs = app.add_subcommand("resonances", "Frequency relations up to order four");
  rs->add_option("--n", res.n)->required();
  rs->add_option("--a", res.a);
  rs->add_option("--tol", res.tol);
  rs->add_option("--max-order", res.max_order);
  rs->add_option("--budget", res.budget, "Largest N searched without --allow-large");
  rs->add_flag("--allow-large", res.allow_large);
  add_common(rs, common);

  KamArgs kam;
  auto* km = app.add_subcommand("kam", "Action Hessians and nondegeneracy");
  km->add_option("--n", kam.n, "N (odd) or interior n with --dirichlet");
  km->add_option("--a", kam.a);
  km->add_option("--beta", kam.beta);
  km->add_flag("--odd", kam.odd, "Odd-N periodic normal form (default)");
  km->add_flag("--dirichlet", kam.dirichlet, "Fixed-endpoint normal form");
  add_common(km, common);

  ResidueArgs residue;
  auto* re = app.add_subcommand("residue", "Pole series and logarithmic residue certificate");
  re->add_option("--order", residue.order, "Truncation order");
  re->add_option("--shift", residue.shift, "Linear coefficient shift of the pole series");
  re->add_option("--eval", residue.evals, "Evaluate at a=<r>,g3=<r> (repeatable)");
  add_common(re, common);

  SymmetryArgs sym;
  auto* sy = app.add_subcommand("symmetry", "R/S group relations and invariance checks");
  add_lattice(sy, sym.lattice);
  sy->add_option("--seed", sym.seed);
  sy->add_option("--amplitude", sym.amplitude);
  sy->add_option("--dt", sym.dt);
  sy->add_option("--steps", sym.steps);
  sy->add_option("--tol", sym.tol, "Flow commutation tolerance");
  add_common(sy, common);

  NormalFormArgs nf;
  auto* ne = app.add_subcommand("normalform-eval", "Hopf variables, normal form and integral brackets");
  ne->add_option("--n", nf.n);
  ne->add_option("--a", nf.a);
  ne->add_option("--beta", nf.beta);
  ne->add_option("--Q", nf.Q, "Scaled phonon positions")->delimiter(',');
  ne->add_option("--P", nf.P, "Scaled phonon momenta")->delimiter(',');
  ne->add_option("--seed", nf.seed);
  ne->add_option("--amplitude", nf.amplitude);
  add_common(ne, common);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*sp) return run_spectrum(spectrum, common);
    if (*si) return run_simulate(simulate, common);
    if (*dr) return run_drift(drift, common);
    if (*rs) return run_resonances(res, common);
    if (*km) return run_kam(kam, common);
    if (*re) return run_residue(residue, common);
    if (*sy) return run_symmetry(sym, common);
    if (*ne) return run_normalform(nf, common);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const NumericFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const SeriesUnderflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
