// isingqsp: dataset-emitting command line front end. Every subcommand writes
// one deterministic table (CSV) or document (JSON) whose header records the
// exact configuration, library version, and the conventions in effect, so a
// run can be reproduced byte for byte from its own output.

#include "isingqsp/bb1.hpp"
#include "isingqsp/boxrec.hpp"
#include "isingqsp/chebyshev.hpp"
#include "isingqsp/cluster.hpp"
#include "isingqsp/floquet.hpp"
#include "isingqsp/io.hpp"
#include "isingqsp/momentum.hpp"
#include "isingqsp/poly.hpp"
#include "isingqsp/rng.hpp"
#include "isingqsp/solve.hpp"
#include "isingqsp/spin.hpp"
#include "isingqsp/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using isingqsp::io::fmt17;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("grid sizes must be >= 1");
  std::vector<double> xs(static_cast<std::size_t>(n));
  if (n == 1) {
    xs[0] = a;
    return xs;
  }
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return xs;
}

// Ordered key/value description of one run; rendered identically into CSV
// comments and the JSON "meta" object.
struct Meta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> notes;

  void add(const std::string& key, const std::string& v) {
    config.emplace_back(key, v);
  }
  void add(const std::string& key, int v) { add(key, std::to_string(v)); }
  void add(const std::string& key, double v) { add(key, fmt17(v)); }
};

std::vector<std::string> meta_comments(const Meta& m) {
  std::vector<std::string> out;
  out.push_back(std::string("isingqsp ") + isingqsp::library_version());
  out.push_back("command: " + m.command);
  std::string cfg = "config:";
  for (const auto& [k, v] : m.config) cfg += " " + k + "=" + v;
  out.push_back(cfg);
  for (const std::string& n : m.notes) out.push_back("note: " + n);
  return out;
}

ordered_json meta_json(const Meta& m) {
  ordered_json meta;
  meta["tool"] = "isingqsp";
  meta["version"] = isingqsp::library_version();
  meta["command"] = m.command;
  ordered_json cfg;
  for (const auto& [k, v] : m.config) cfg[k] = v;
  meta["config"] = std::move(cfg);
  meta["notes"] = m.notes;
  return meta;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path == "-" || out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string render_csv(const Meta& m, const isingqsp::io::Csv& table) {
  isingqsp::io::Csv full = table;
  std::vector<std::string> head = meta_comments(m);
  full.comments.insert(full.comments.begin(), head.begin(), head.end());
  std::ostringstream os;
  isingqsp::io::write_csv(os, full);
  return os.str();
}

std::string render_json(ordered_json doc) { return doc.dump(2) + "\n"; }

// ===== subcommand payloads =====

struct GridFlags {
  int k_points = 201;
  int eps_points = 201;
  double eps_min = 0.01;
  double eps_max = 0.49;
};

struct CommonFlags {
  std::string out = "-";
  std::string format = "csv";
};

int run_chebyshev(int degree, const CommonFlags& io) {
  isingqsp::CanonicalPhases c;
  c.Phi.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  const isingqsp::PolyPair pq = isingqsp::extract_poly(c);
  Meta m;
  m.command = "chebyshev";
  m.add("degree", degree);
  m.notes = {"canonical picture: V_k = e^{i Phi_0 sz} prod_{r=1..d} "
             "e^{-i k sx} e^{i Phi_r sz}",
             "all-zero phases leave <0|V_k|0> = T_degree(cos k); rows list "
             "the recovered Chebyshev coefficients of that entry"};
  isingqsp::io::Csv t;
  t.header = {"n", "recovered_re", "recovered_im", "target", "abs_dev"};
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 0; n < pq.P.size(); ++n) {
    const double target = (n == static_cast<std::size_t>(degree)) ? 1.0 : 0.0;
    const double dev = std::abs(pq.P[n] - isingqsp::cplx(target, 0.0));
    t.rows.push_back({static_cast<double>(n), pq.P[n].real(), pq.P[n].imag(),
                      target, dev});
    if (io.format == "json")
      rows.push_back({{"n", n},
                      {"recovered_re", pq.P[n].real()},
                      {"recovered_im", pq.P[n].imag()},
                      {"target", target},
                      {"abs_dev", dev}});
  }
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["coefficients"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

int run_floquet_scan(const GridFlags& g, const CommonFlags& io) {
  const auto ks = linspace(-kPi, kPi, g.k_points);
  const auto epss = linspace(g.eps_min, g.eps_max, g.eps_points);
  const auto recs = isingqsp::floquet_scan(ks, epss);
  Meta m;
  m.command = "floquet-scan";
  m.add("k", g.k_points);
  m.add("eps", g.eps_points);
  m.add("eps-min", g.eps_min);
  m.add("eps-max", g.eps_max);
  m.notes = {"F_k = e^{i (pi/2)(sz cos k - sx sin k)} e^{-i pi (1 - 2 eps) "
             "sz}, one period of the constant-phase sequence",
             "mu_1 <= mu_2 are the quasienergies, principal branch (-pi, pi]",
             "k runs over [-pi, pi], eps over [eps-min, eps-max], both "
             "endpoint-inclusive"};
  isingqsp::io::Csv t;
  t.header = {"k", "eps", "mu_1", "mu_2", "lambda_mod_1", "lambda_mod_2"};
  ordered_json rows = ordered_json::array();
  for (const auto& r : recs) {
    const auto& mu = *r.mu;
    t.rows.push_back(
        {r.k, r.eps, mu[0], mu[1], r.lambda_mods[0], r.lambda_mods[1]});
    if (io.format == "json")
      rows.push_back({{"k", r.k},
                      {"eps", r.eps},
                      {"mu_1", mu[0]},
                      {"mu_2", mu[1]},
                      {"lambda_mod_1", r.lambda_mods[0]},
                      {"lambda_mod_2", r.lambda_mods[1]}});
  }
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["records"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

int run_dual_region(const GridFlags& g, const CommonFlags& io) {
  const auto ks = linspace(-kPi, kPi, g.k_points);
  const auto epss = linspace(g.eps_min, g.eps_max, g.eps_points);
  const auto recs = isingqsp::dual_floquet_scan(ks, epss);
  Meta m;
  m.command = "dual-region";
  m.add("k", g.k_points);
  m.add("eps", g.eps_points);
  m.add("eps-min", g.eps_min);
  m.add("eps-max", g.eps_max);
  m.notes = {"dual sequence: roles of signal and processing angles swapped; "
             "the dual signal angle is complex away from eps = 1/4",
             "unitary = both eigenvalue moduli within 1e-6 of 1 (spectral "
             "condition); quasienergies are nan outside that region",
             "determinant stays 1 everywhere (traceless generator)"};
  isingqsp::io::Csv t;
  t.header = {"k",       "eps",  "lambda_mod_1", "lambda_mod_2",
              "unitary", "mu_1", "mu_2"};
  ordered_json rows = ordered_json::array();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : recs) {
    const double m1 = r.mu ? (*r.mu)[0] : nan;
    const double m2 = r.mu ? (*r.mu)[1] : nan;
    t.rows.push_back({r.k, r.eps, r.lambda_mods[0], r.lambda_mods[1],
                      r.unitary ? 1.0 : 0.0, m1, m2});
    if (io.format == "json") {
      ordered_json row = {{"k", r.k},
                          {"eps", r.eps},
                          {"lambda_mod_1", r.lambda_mods[0]},
                          {"lambda_mod_2", r.lambda_mods[1]},
                          {"unitary", r.unitary}};
      if (r.mu) {
        row["mu_1"] = m1;
        row["mu_2"] = m2;
      } else {
        row["mu_1"] = nullptr;
        row["mu_2"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
  }
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["records"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

int run_bb1(int k_points, const CommonFlags& io) {
  const auto ks = linspace(-kPi, kPi, k_points);
  Meta m;
  m.command = "bb1";
  m.add("k", k_points);
  m.notes = {"composite sequence Phi = (pi/2, -chi, 2chi, 0, -2chi, chi), "
             "chi = arccos(-1/4)/2",
             "R_plain = cos^2 k (bare signal); R_bb1 = transition "
             "probability after the composite sequence"};
  isingqsp::io::Csv t;
  t.header = {"k", "R_plain", "R_bb1"};
  ordered_json rows = ordered_json::array();
  for (double k : ks) {
    const auto r = isingqsp::bb1_response(k);
    t.rows.push_back({k, r.R_plain, r.R_bb1});
    if (io.format == "json")
      rows.push_back({{"k", k}, {"R_plain", r.R_plain}, {"R_bb1", r.R_bb1}});
  }
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["records"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

int run_cluster(const isingqsp::ClusterParams& p, int k_points, int degree,
                const CommonFlags& io) {
  const auto ks = linspace(-kPi / 2, kPi / 2, k_points);
  const auto curve = isingqsp::cluster_response_curve(p, ks);
  Meta m;
  m.command = "cluster";
  m.add("g", p.g0);
  m.add("J", p.J);
  m.add("gamma", p.gamma);
  m.add("T", p.T);
  m.add("k", k_points);
  m.add("degree", degree);
  m.notes = {"response = cos^2(Omega_k T) with Omega_k the band energy of "
             "the four-site-period cluster chain",
             "k runs over [-pi/2, pi/2] (one full period of cos 4k is pi/2)"};
  std::optional<isingqsp::ClusterFit> fit;
  if (degree > 0) {
    fit = isingqsp::qsp_approximate_cluster(p, degree);
    m.add("max_error", fit->max_error);
    m.notes.push_back(
        "response_qsp squares the real part of <+|V_k|+> for the fitted "
        "degree-" +
        std::to_string(degree) + " phase sequence");
  }
  isingqsp::io::Csv t;
  t.header = {"k", "response"};
  if (fit) t.header.push_back("response_qsp");
  ordered_json rows = ordered_json::array();
  for (const auto& [k, resp] : curve) {
    std::vector<double> row = {k, resp};
    if (fit) {
      const double v =
          isingqsp::plus_expectation(isingqsp::qsp_canonical(k, fit->phases))
              .real();
      row.push_back(v * v);
    }
    t.rows.push_back(row);
    if (io.format == "json") {
      ordered_json jr = {{"k", k}, {"response", resp}};
      if (fit) jr["response_qsp"] = row.back();
      rows.push_back(std::move(jr));
    }
  }
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    if (fit) {
      doc["fit"] = {{"degree", degree},
                    {"max_error", fit->max_error},
                    {"Phi", fit->phases.Phi}};
    }
    doc["records"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    if (fit) {
      // phases as comments so the CSV stays a single flat table
      std::string line = "Phi:";
      for (double v : fit->phases.Phi) line += " " + fmt17(v);
      m.notes.push_back(line);
    }
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

int run_reverse(double w, int nmax, double T, int k_points,
                const CommonFlags& io) {
  isingqsp::BoxModel model = isingqsp::box_fourier_coeffs(w, nmax);
  model.T = T;
  const auto terms = isingqsp::re_hamiltonian_terms(model);
  Meta m;
  m.command = "reverse";
  m.add("w", w);
  m.add("nmax", nmax);
  m.add("T", T);
  m.add("k", k_points);
  m.notes = {"G_n integrates sinc(w t) J_n(t) over the whole real line; the "
             "box has period pi in k, so odd G_n vanish",
             "dispersion convention: Omega_k T = pi - w G_0 - 2w sum_{m>=1} "
             "(-1)^m cos(2mk) G_{2m} = pi (1 - box) at equal truncation",
             "truncation: coefficients kept through n = " +
                 std::to_string(nmax)};
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["w"] = model.w;
    doc["T"] = model.T;
    doc["n_max"] = nmax;
    doc["G"] = model.G;
    ordered_json jt = ordered_json::array();
    for (const auto& t : terms)
      jt.push_back(
          {{"range", t.range}, {"coeff", t.coeff}, {"pauli", t.pauli}});
    doc["terms"] = std::move(jt);
    emit(io.out, render_json(std::move(doc)));
    return 0;
  }
  for (const auto& t : terms) {
    std::ostringstream line;
    line << "term range=" << t.range << " coeff=" << fmt17(t.coeff) << "  "
         << t.pauli;
    m.notes.push_back(line.str());
  }
  isingqsp::io::Csv t;
  t.header = {"k", "box", "omega_T"};
  for (double k : linspace(-kPi, kPi, k_points))
    t.rows.push_back({k, isingqsp::box_reconstruct(k, model),
                      isingqsp::re_dispersion(k, model) * model.T});
  emit(io.out, render_csv(m, t));
  return 0;
}

int run_oracle_compare(int N, int trials, std::uint64_t seed, int max_degree,
                       const CommonFlags& io) {
  if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("--degree must be >= 1");
  isingqsp::Rng rng(seed);
  Meta m;
  m.command = "oracle-compare";
  m.add("N", N);
  m.add("trials", trials);
  m.add("seed", static_cast<int>(seed));
  m.add("degree", max_degree);
  m.notes = {"each trial draws a random program (theta, phi_0..phi_d) with d "
             "<= degree and compares the dense chain's all-up survival "
             "amplitude magnitude against the momentum-block product",
             "site 1 is the least significant bit; spin up is bit value 0"};
  isingqsp::io::Csv t;
  t.header = {"trial", "degree", "theta", "mismatch"};
  ordered_json rows = ordered_json::array();
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const int d =
        1 + static_cast<int>(rng.uniform() * max_degree) % max_degree;
    isingqsp::PhaseProgram prog;
    prog.theta = (2.0 * rng.uniform() - 1.0) * kPi;
    prog.phi.resize(static_cast<std::size_t>(d) + 1);
    for (double& v : prog.phi) v = (2.0 * rng.uniform() - 1.0) * kPi;
    isingqsp::DenseState st = isingqsp::make_all_up(N);
    isingqsp::qsp_spin(st, prog);
    const double dense = std::abs(st.amp[0]);
    const double block =
        std::abs(isingqsp::predict_vacuum_amplitude(prog, N));
    const double mismatch = std::abs(dense - block);
    worst = std::max(worst, mismatch);
    t.rows.push_back(
        {static_cast<double>(trial), static_cast<double>(d), prog.theta,
         mismatch});
    if (io.format == "json")
      rows.push_back({{"trial", trial},
                      {"degree", d},
                      {"theta", prog.theta},
                      {"mismatch", mismatch}});
  }
  const bool pass = worst <= 1e-8;
  m.add("max_mismatch", worst);
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["N"] = N;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["max_mismatch"] = worst;
    doc["pass"] = pass;
    doc["records"] = std::move(rows);
    emit(io.out, render_json(std::move(doc)));
  } else {
    emit(io.out, render_csv(m, t));
  }
  if (!pass) {
    std::cerr << "oracle-compare: dense/block mismatch " << fmt17(worst)
              << " exceeds 1e-8\n";
    return 1;
  }
  return 0;
}

int run_solve_phases(const isingqsp::ClusterParams& p, int degree,
                     const CommonFlags& io) {
  const isingqsp::ClusterFit fit = isingqsp::qsp_approximate_cluster(p, degree);
  Meta m;
  m.command = "solve-phases";
  m.add("g", p.g0);
  m.add("J", p.J);
  m.add("gamma", p.gamma);
  m.add("T", p.T);
  m.add("degree", degree);
  m.add("max_error", fit.max_error);
  m.notes = {"target: cos(Omega_k T) of the cluster chain, projected onto "
             "Chebyshev degree " +
                 std::to_string(degree) +
                 " in cos k and pulled inside the unit ball",
             "canonical picture: V_k = e^{i Phi_0 sz} prod_{r=1..d} "
             "e^{-i k sx} e^{i Phi_r sz}",
             "max_error is the sup over k of |<+|V_k|+> - cos(Omega_k T)|"};
  if (io.format == "json") {
    ordered_json doc;
    doc["meta"] = meta_json(m);
    doc["degree"] = degree;
    doc["max_error"] = fit.max_error;
    doc["Phi"] = fit.phases.Phi;
    emit(io.out, render_json(std::move(doc)));
  } else {
    isingqsp::io::Csv t;
    t.header = {"r", "Phi"};
    for (std::size_t r = 0; r < fit.phases.Phi.size(); ++r)
      t.rows.push_back({static_cast<double>(r), fit.phases.Phi[r]});
    emit(io.out, render_csv(m, t));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum signal processing toolkit for the transverse-field "
               "Ising chain"};
  app.require_subcommand(1);

  CommonFlags io;
  GridFlags grid;
  isingqsp::ClusterParams cp;
  int degree = 6;
  int k_points = 401;
  int N = 8;
  int trials = 25;
  std::uint64_t seed = 7;
  double w = 0.75;
  int nmax = 40;
  double box_T = 1.0;

  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--out", io.out, "output path ('-' = stdout)");
    sub->add_option("--format", io.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--k", grid.k_points, "number of k samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eps", grid.eps_points, "number of eps samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eps-min", grid.eps_min, "lower eps bound");
    sub->add_option("--eps-max", grid.eps_max, "upper eps bound");
  };
  const auto add_cluster_params = [&](CLI::App* sub) {
    sub->add_option("--g", cp.g0, "field strength g0");
    sub->add_option("--J", cp.J, "coupling J");
    sub->add_option("--gamma", cp.gamma, "anisotropy gamma");
    sub->add_option("--T", cp.T, "evolution time T");
  };

  CLI::App* cheb = app.add_subcommand(
      "chebyshev", "recover T_d from the all-zero phase sequence");
  cheb->add_option("--degree", degree, "polynomial degree d")
      ->check(CLI::PositiveNumber);
  add_io(cheb);

  CLI::App* flo = app.add_subcommand(
      "floquet-scan", "quasienergy spectrum of the periodic sequence");
  add_grid(flo);
  add_io(flo);

  CLI::App* dual = app.add_subcommand(
      "dual-region", "spectrum and unitarity region of the space-time dual");
  add_grid(dual);
  add_io(dual);

  CLI::App* bb1 = app.add_subcommand(
      "bb1", "composite-pulse transition probabilities");
  bb1->add_option("--k", k_points, "number of k samples")
      ->check(CLI::PositiveNumber);
  add_io(bb1);

  CLI::App* clu = app.add_subcommand(
      "cluster", "cluster-chain response curve and optional phase fit");
  add_cluster_params(clu);
  clu->add_option("--k", k_points, "number of k samples")
      ->check(CLI::PositiveNumber);
  int fit_degree = 0;
  clu->add_option("--degree", fit_degree,
                  "even fit degree (0 = curve only)");
  add_io(clu);

  CLI::App* rev = app.add_subcommand(
      "reverse", "box-response Fourier model and reverse-engineered terms");
  rev->add_option("--w", w, "box half-width in cos k")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  rev->add_option("--nmax", nmax, "highest Fourier order")
      ->check(CLI::NonNegativeNumber);
  rev->add_option("--T", box_T, "time scale")->check(CLI::PositiveNumber);
  rev->add_option("--k", k_points, "number of k samples for the CSV curve")
      ->check(CLI::PositiveNumber);
  add_io(rev);

  CLI::App* ora = app.add_subcommand(
      "oracle-compare", "dense spin chain versus momentum-block product");
  ora->add_option("--N", N, "chain length (even, 4..14)");
  ora->add_option("--trials", trials, "number of random programs")
      ->check(CLI::PositiveNumber);
  ora->add_option("--seed", seed, "random seed");
  int ora_degree = 8;
  ora->add_option("--degree", ora_degree, "maximum program degree")
      ->check(CLI::PositiveNumber);
  add_io(ora);

  CLI::App* sol = app.add_subcommand(
      "solve-phases", "solve canonical phases for a cluster-response target");
  add_cluster_params(sol);
  int solve_degree = 12;
  sol->add_option("--degree", solve_degree, "even target degree")
      ->check(CLI::PositiveNumber);
  add_io(sol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help/version exit cleanly, bad flags are usage errors
  }

  try {
    if (cheb->parsed()) return run_chebyshev(degree, io);
    if (flo->parsed()) return run_floquet_scan(grid, io);
    if (dual->parsed()) return run_dual_region(grid, io);
    if (bb1->parsed()) return run_bb1(k_points, io);
    if (clu->parsed()) return run_cluster(cp, k_points, fit_degree, io);
    if (rev->parsed()) return run_reverse(w, nmax, box_T, k_points, io);
    if (ora->parsed())
      return run_oracle_compare(N, trials, seed, ora_degree, io);
    if (sol->parsed()) return run_solve_phases(cp, solve_degree, io);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
