#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <gmp.h>
#include <json.hpp>

#include "fuzzyd/basis.hpp"
#include "fuzzyd/convergence.hpp"
#include "fuzzyd/harmonics.hpp"
#include "fuzzyd/operators.hpp"
#include "fuzzyd/realization.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace fuzzyd;

namespace {

constexpr const char* kVersion = "0.1.0";

// thrown for anything that should exit with status 2
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  int D = 0;
  int Lambda = -1;
  double k = 0;
  std::string schedule;
};

void add_config_flags(CLI::App* app, ConfigFlags& f) {
  app->add_option("--d", f.D, "ambient dimension D (>= 3)")->required();
  app->add_option("--lambda", f.Lambda, "energy cutoff Lambda (>= 0)")->required();
  auto* k = app->add_option("--k", f.k, "confining parameter k");
  auto* s = app->add_option("--schedule", f.schedule, "k(Lambda) schedule: consistency | strong-x | product | power:A (A >= 2)");
  k->excludes(s);
  s->excludes(k);
}

FuzzyConfig resolve(const ConfigFlags& f) {
  try {
    double k = f.k;
    if (f.k == 0) {
      // at Lambda = 0 every x is zero and k plays no role
      k = f.Lambda == 0 ? 1.0 : k_schedule(f.schedule.empty() ? "consistency" : f.schedule, f.D, f.Lambda);
    }
    return make_config(f.D, f.Lambda, k);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

json config_json(const FuzzyConfig& c, const ConfigFlags& f) {
  return {{"D", c.D}, {"Lambda", c.Lambda}, {"k", c.k}, {"schedule", f.k != 0 ? "explicit" : (f.schedule.empty() ? "consistency" : f.schedule)},
          {"dim", dimension(c.D, c.Lambda)}};
}

json versions() {
  return {{"fuzzyd", kVersion},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." + std::to_string(EIGEN_MINOR_VERSION)},
          {"gmp", gmp_version},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
          {"cli11", CLI11_VERSION}};
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << s;
}

void write_json(const fs::path& p, const json& j) { write_text(p, j.dump(1) + "\n"); }

struct Manifest {
  json j;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json outputs = json::array();

  void add(const fs::path& p) { outputs.push_back(p.filename().string()); }
  void write(const fs::path& dir) {
    j["outputs"] = outputs;
    j["versions"] = versions();
    j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json(dir / "manifest.json", j);
  }
};

fs::path make_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out + ": " + ec.message());
  return dir;
}

int cmd_build(const ConfigFlags& f, const std::string& out, bool sqrt2) {
  const FuzzyConfig cfg = resolve(f);
  const fs::path dir = make_dir(out);
  Manifest m;
  m.j = {{"command", "build"}, {"config", config_json(cfg, f)}, {"sqrt2", sqrt2}};
  auto emit = [&](const std::string& name, const json& j) {
    write_json(dir / name, j);
    m.add(dir / name);
  };
  const Algebra alg = build_algebra(cfg);
  emit("basis.json", alg.basis.to_json());
  for (int j = 2; j <= cfg.D; ++j)
    for (int h = 1; h < j; ++h) emit("L_" + std::to_string(h) + "_" + std::to_string(j) + ".json", alg.Lhj(h, j).to_json());
  for (int h = 1; h <= cfg.D; ++h) emit("x_" + std::to_string(h) + ".json", alg.x[h].to_json());
  emit("x_plus.json", build_position_pm(cfg, +1, sqrt2).to_json());
  emit("x_minus.json", build_position_pm(cfg, -1, sqrt2).to_json());
  for (int p = 2; p <= cfg.D; ++p) {
    emit("casimir_" + std::to_string(p) + ".json", build_casimir(cfg, p).to_json());
    for (int lab = 0; lab <= cfg.Lambda; ++lab) {
      emit("projector_" + std::to_string(p) + "_" + std::to_string(lab) + ".json", build_casimir_projector(cfg, p, lab).to_json());
    }
  }
  emit("projector_top.json", build_top_projector(cfg).to_json());
  emit("parity.json", build_parity(cfg).to_json());
  m.write(dir);
  std::cout << "built D=" << cfg.D << " Lambda=" << cfg.Lambda << " k=" << cfg.k << " dim=" << alg.basis.size() << " ("
            << m.outputs.size() << " operator files) in " << dir.string() << "\n";
  return 0;
}

struct Tolerances {
  AlgebraTolerances algebra;
  HarmonicTolerances harmonics;
  IsomorphismTolerances iso;
  double product = 1e-9;
};

VerificationReport harmonics_suite(int D, int l_max, const Tolerances& tol) {
  VerificationReport rep = verify_harmonics(D, l_max, tol.harmonics);
  double parseval = 0, pointwise = 0, rem = 0;
  std::vector<Chain> low;
  for (int l = 0; l <= std::min(l_max, 1); ++l)
    for (const auto& c : chains_with_top(D, l)) low.push_back(c);
  for (const auto& a : low)
    for (const auto& b : low) {
      ProductCheck pc = check_product(a, b, D);
      parseval = std::max(parseval, pc.parseval);
      pointwise = std::max(pointwise, pc.pointwise);
      rem = std::max(rem, pc.remainder);
    }
  rep.add("product expansion Parseval", parseval, tol.product, "all pairs with l <= 1");
  rep.add("product expansion pointwise", pointwise, tol.product, "200 random sphere points");
  rep.add("product expansion r^2 division remainder", rem, tol.product);
  return rep;
}

int cmd_verify(const ConfigFlags& f, const std::string& suite, int l_max, const std::string& out, const Tolerances& tol) {
  const FuzzyConfig cfg = resolve(f);
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (suite == "algebra" || suite == "all") rep.append(verify_algebra(cfg, tol.algebra), suite == "all" ? "algebra: " : "");
  if (suite == "harmonics" || suite == "all")
    rep.append(harmonics_suite(cfg.D, l_max >= 0 ? l_max : std::max(1, cfg.Lambda + 1), tol), suite == "all" ? "harmonics: " : "");
  if (suite == "isomorphism" || suite == "all") rep.append(verify_isomorphism(cfg, tol.iso), suite == "all" ? "isomorphism: " : "");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << rep.to_text();
  if (!out.empty()) {
    const fs::path dir = make_dir(out);
    Manifest m;
    m.j = {{"command", "verify"}, {"suite", suite}, {"config", config_json(cfg, f)}, {"all_pass", rep.all_pass()}};
    json r = rep.to_json();
    r["suite"] = suite;
    r["config"] = config_json(cfg, f);
    write_json(dir / "report.json", r);
    write_text(dir / "report.csv", rep.to_csv());
    write_text(dir / "report.txt", rep.to_text());
    for (auto n : {"report.json", "report.csv", "report.txt"}) m.add(dir / n);
    m.write(dir);
  }
  std::cerr << "verify " << suite << ": " << (rep.all_pass() ? "pass" : "FAIL") << " (" << secs << " s)\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_converge(int D, int lambda_max, const std::string& schedule, const std::string& mode, int coord, const std::string& out) {
  Schedule s;
  std::vector<int> lambdas;
  try {
    if (D < 3) throw std::invalid_argument("D must be >= 3");
    if (lambda_max < 2) throw std::invalid_argument("--lambda-max must be >= 2");
    if (coord < 1 || coord > D) throw std::invalid_argument("--coord must lie in 1..D");
    s = parse_schedule(schedule);
    for (int l = 1; l <= lambda_max; ++l) {
      lambdas.push_back(l);
      make_config(D, l, k_schedule(s, D, l));
    }
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  std::string csv;
  if (mode == "x") {
    csv = to_csv(x_convergence_diagnostic(D, lambdas, s));
  } else {
    const HarmonicCoeffs f = coordinate_coeffs(D, coord);
    csv = to_csv(product_convergence_diagnostic(f, f, D, lambdas, s));
  }
  if (out.empty()) {
    std::cout << csv;
    return 0;
  }
  const fs::path dir = make_dir(out);
  const std::string name = mode == "x" ? "x_convergence.csv" : "product_convergence.csv";
  write_text(dir / name, csv);
  Manifest m;
  m.j = {{"command", "converge"}, {"D", D}, {"lambda_max", lambda_max}, {"schedule", s.name()}, {"mode", mode}, {"coord", coord}};
  m.add(dir / name);
  m.write(dir);
  std::cout << "wrote " << (dir / name).string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator builds, verification suites and convergence diagnostics for O(D)-equivariant fuzzy hyperspheres"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ConfigFlags bflags, vflags;
  std::string bout = "fuzzyd_out", vout, suite = "all", cout_dir, cschedule = "strong-x", mode = "x";
  bool sqrt2 = false;
  int l_max = -1, cD = 3, lambda_max = 6, coord = 3;
  Tolerances tol;

  auto* build = app.add_subcommand("build", "write all L_{h,j}, x_h, Casimirs and projectors as JSON");
  add_config_flags(build, bflags);
  build->add_option("--out", bout, "output directory")->capture_default_str();
  build->add_flag("--sqrt2", sqrt2, "divide x_+- by sqrt 2");

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
  add_config_flags(verify, vflags);
  verify->add_option("--suite", suite, "algebra | harmonics | isomorphism | all")
      ->check(CLI::IsMember({"algebra", "harmonics", "isomorphism", "all"}))
      ->capture_default_str();
  verify->add_option("--l-max", l_max, "largest harmonic degree checked (default Lambda+1)");
  verify->add_option("--out", vout, "write report.json/.csv/.txt here");
  auto& A = tol.algebra;
  verify->add_option("--tol-structure", A.structure, "so(D) structure constants")->capture_default_str();
  verify->add_option("--tol-snyder-interior", A.snyder_interior, "interior Snyder blocks")->capture_default_str();
  verify->add_option("--tol-snyder", A.snyder, "full Snyder relation")->capture_default_str();
  verify->add_option("--tol-covariance", A.covariance, "[L, x] covariance")->capture_default_str();
  verify->add_option("--tol-hermitian", A.hermitian, "hermiticity")->capture_default_str();
  verify->add_option("--tol-x2", A.x2, "x^2 spectrum")->capture_default_str();
  verify->add_option("--tol-casimir", A.casimir, "Casimir spectra")->capture_default_str();
  verify->add_option("--tol-minimal-poly", A.minimal_poly, "Casimir minimal polynomial")->capture_default_str();
  verify->add_option("--tol-nilpotency", A.nilpotency, "ladder nilpotency")->capture_default_str();
  verify->add_option("--tol-gram", tol.harmonics.gram, "harmonic Gram matrix")->capture_default_str();
  verify->add_option("--tol-csco", tol.harmonics.csco, "harmonic CSCO eigenvalues")->capture_default_str();
  verify->add_option("--tol-position", tol.harmonics.position, "ladder vs sphere-integral t_h elements")->capture_default_str();
  verify->add_option("--tol-product", tol.product, "product expansion checks")->capture_default_str();
  verify->add_option("--tol-realization", tol.iso.position, "so(D+1) realization of x_h")->capture_default_str();
  verify->add_option("--tol-adjoint", tol.iso.adjoint, "adjoint compatibility")->capture_default_str();
  verify->add_option("--tol-p", tol.iso.p_consistency, "p recursion consistency")->capture_default_str();

  auto* converge = app.add_subcommand("converge", "convergence diagnostics as CSV (D,Lambda,k,metric,value)");
  converge->add_option("--d", cD, "ambient dimension D")->capture_default_str();
  converge->add_option("--lambda-max", lambda_max, "diagnose Lambda = 1..max (>= 2)")->capture_default_str();
  converge->add_option("--schedule", cschedule, "k(Lambda) schedule")->capture_default_str();
  converge->add_option("--mode", mode, "x | product")->check(CLI::IsMember({"x", "product"}))->capture_default_str();
  converge->add_option("--coord", coord, "product mode uses f = g = t_coord")->capture_default_str();
  converge->add_option("--out", cout_dir, "output directory (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(bflags, bout, sqrt2);
    if (*verify) return cmd_verify(vflags, suite, l_max, vout, tol);
    return cmd_converge(cD, lambda_max, cschedule, mode, coord, cout_dir);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
