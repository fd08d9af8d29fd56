#include "fuzzyd/convergence.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fuzzyd/coefficients.hpp"
#include "fuzzyd/harmonics.hpp"
#include "fuzzyd/operators.hpp"
#include "fuzzyd/parallel.hpp"

namespace fuzzyd {

std::string Schedule::name() const {
  switch (kind) {
    case ScheduleKind::Consistency: return "consistency";
    case ScheduleKind::StrongX: return "strong-x";
    case ScheduleKind::Product: return "product";
    default: {
      std::ostringstream os;
      os << "power:" << alpha;
      return os.str();
    }
  }
}

Schedule parse_schedule(const std::string& s) {
  if (s == "consistency") return {ScheduleKind::Consistency, 2.0};
  if (s == "strong-x") return {ScheduleKind::StrongX, 2.0};
  if (s == "product") return {ScheduleKind::Product, 2.0};
  std::string arg;
  if (s.rfind("power:", 0) == 0)
    arg = s.substr(6);
  else if (s.rfind("power(", 0) == 0 && s.size() > 7 && s.back() == ')')
    arg = s.substr(6, s.size() - 7);
  else
    throw std::invalid_argument("unknown schedule '" + s + "'");
  std::size_t used = 0;
  double a = 0;
  try {
    a = std::stod(arg, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad power exponent '" + arg + "'");
  }
  if (used != arg.size()) throw std::invalid_argument("bad power exponent '" + arg + "'");
  if (!(a >= 2.0)) throw std::invalid_argument("power schedule needs alpha >= 2 to respect the consistency bound");
  return {ScheduleKind::Power, a};
}

double log_k_schedule(const Schedule& s, int D, int La) {
  if (D < 3 || La < 1) throw std::invalid_argument("k schedule needs D >= 3 and Lambda >= 1");
  const double E = std::log(double(La) * (La + D - 2));
  const double b = std::log(b_value(La, D));
  switch (s.kind) {
    case ScheduleKind::Consistency: return 2 * E;
    case ScheduleKind::Power: return s.alpha * E;
    case ScheduleKind::StrongX: return std::log(double(La)) + 2 * std::log(double(dimension(D, La))) + b;
    case ScheduleKind::Product: {
      double r = 2 * std::log(double(La)) + 3 * std::log(double(dimension(D, 2 * La)));
      r += D * std::lgamma(2.0 * La + 1) + La * D * std::log(2.0);
      double df = 0;  // log (2L+1)!!
      for (int o = 3; o <= 2 * La + 1; o += 2) df += std::log(double(o));
      return r + 2 * D * df + b + 0.5 * std::log(double(dimension(D, La)));
    }
  }
  throw std::logic_error("unhandled schedule");
}

double k_schedule(const Schedule& s, int D, int La) {
  if (D < 3 || La < 1) throw std::invalid_argument("k schedule needs D >= 3 and Lambda >= 1");
  const double E = double(La) * (La + D - 2);
  switch (s.kind) {
    case ScheduleKind::Consistency: return E * E;
    case ScheduleKind::Power: return std::pow(E, s.alpha);
    case ScheduleKind::StrongX: {
      const double n = double(dimension(D, La));
      return La * n * n * b_value(La, D);
    }
    default: return std::exp(log_k_schedule(s, D, La));
  }
}
double k_schedule(const std::string& name, int D, int La) { return k_schedule(parse_schedule(name), D, La); }

namespace {

std::vector<bool> level_mask(const BasisMap& b, int l) {
  std::vector<bool> m;
  for (const auto& c : b.chains()) m.push_back(c[0] == l);
  return m;
}

}  // namespace

XDiagnosticRow x_diagnostic(const FuzzyConfig& cfg) {
  cfg.validate();
  const int La = cfg.Lambda, D = cfg.D;
  XDiagnosticRow row;
  row.D = D;
  row.Lambda = La;
  row.k = cfg.k;
  BasisMap basis(D, La);
  const auto top = level_mask(basis, La), below = level_mask(basis, La - 1);
  for (int h = 1; h <= D; ++h) {
    SparseOperator diff = build_position(cfg, h) - build_multiplication(cfg, h);
    SparseOperator bnd = diff.masked(top, below) + diff.masked(below, top);
    row.deviation = std::max(row.deviation, op_norm(diff));
    row.boundary = std::max(row.boundary, op_norm(bnd));
    row.interior = std::max(row.interior, op_norm(diff - bnd));
  }
  double bsum = b_value(La + 1, D) + 2 * b_value(La, D) + (La >= 1 ? b_value(La - 1, D) : 0.0);
  row.bound = bsum / (4 * cfg.k);
  return row;
}

std::vector<XDiagnosticRow> x_convergence_diagnostic(int D, const std::vector<int>& lambdas, const Schedule& s) {
  std::vector<XDiagnosticRow> rows(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    rows[i] = x_diagnostic(make_config(D, lambdas[i], k_schedule(s, D, lambdas[i])));
  });
  return rows;
}

HarmonicCoeffs coordinate_coeffs(int D, int h) {
  HarmonicCoeffs f;
  const Polynomial t = Polynomial::coordinate(D, h);
  for (const auto& Y : harmonic_basis(D, 1)) {
    cd v = sphere_inner(Y.poly, t);
    if (std::abs(v) > 1e-15) f[Y.chain] = v;
  }
  return f;
}

namespace {

HarmonicCoeffs product_coeffs(const HarmonicCoeffs& f, const HarmonicCoeffs& g, int D) {
  HarmonicCoeffs out;
  for (const auto& [a, u] : f)
    for (const auto& [b, v] : g)
      for (const auto& [c, w] : multiply_harmonics(a, b, D)) out[c] += u * v * w;
  return out;
}

// fixed family on levels <= 1
std::vector<HarmonicCoeffs> test_vectors(int D) {
  std::vector<Chain> chains;
  for (int l = 0; l <= 1; ++l)
    for (const auto& c : chains_with_top(D, l)) chains.push_back(c);
  std::vector<HarmonicCoeffs> out;
  for (const auto& c : chains) out.push_back({{c, 1.0}});
  std::mt19937_64 rng(20240611u);
  std::normal_distribution<double> N(0.0, 1.0);
  for (int r = 0; r < 5; ++r) {
    HarmonicCoeffs v;
    double s = 0;
    for (const auto& c : chains) {
      cd z(N(rng), N(rng));
      v[c] = z;
      s += std::norm(z);
    }
    for (auto& [c, z] : v) z /= std::sqrt(s);
    out.push_back(std::move(v));
  }
  return out;
}

Eigen::VectorXcd embed(const HarmonicCoeffs& v, const BasisMap& basis) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(basis.size());
  for (const auto& [c, z] : v) x[basis.index_of(c)] = z;
  return x;
}

// || y - v ||, y in H_Lambda, v possibly reaching beyond it
double distance(const Eigen::VectorXcd& y, const HarmonicCoeffs& v, const BasisMap& basis) {
  Eigen::VectorXcd d = y;
  double outside = 0;
  for (const auto& [c, z] : v) {
    if (basis.contains(c))
      d[basis.index_of(c)] -= z;
    else
      outside += std::norm(z);
  }
  return std::sqrt(d.squaredNorm() + outside);
}

double sup_norm(const HarmonicCoeffs& f, int D) {
  double m = 0;
  for (const auto& x : sphere_points(D, 4000, 7u)) {
    cd s = 0;
    for (const auto& [c, v] : f) s += v * harmonic(c, D).poly.evaluate(x);
    m = std::max(m, std::abs(s));
  }
  return m;
}

}  // namespace

ProductDiagnosticRow product_diagnostic(const HarmonicCoeffs& f, const HarmonicCoeffs& g, const FuzzyConfig& cfg) {
  cfg.validate();
  if (cfg.Lambda < 1) throw std::invalid_argument("product diagnostic needs Lambda >= 1");
  const int D = cfg.D;
  ProductDiagnosticRow row;
  row.D = D;
  row.Lambda = cfg.Lambda;
  row.k = cfg.k;
  BasisMap basis(D, cfg.Lambda);
  FuzzyHarmonics fh(cfg);
  const Eigen::MatrixXcd F = fh.function(f).dense();
  const Eigen::MatrixXcd G = fh.function(g).dense();
  const Eigen::MatrixXcd FG = fh.function(product_coeffs(f, g, D)).dense();
  const Eigen::MatrixXcd Dp = F * G - FG;
  for (const auto& v : test_vectors(D)) {
    Eigen::VectorXcd x = embed(v, basis);
    row.product_residual = std::max(row.product_residual, (Dp * x).norm());
    row.f_residual = std::max(row.f_residual, distance(F * x, product_coeffs(f, v, D), basis));
  }
  row.f_op_norm = op_norm(SparseOperator::from_dense(F));
  double l2 = 0;
  for (const auto& [c, v] : f) l2 += std::norm(v);
  row.f_bound = std::sqrt(l2) + 2 * sup_norm(f, D);
  return row;
}

std::vector<ProductDiagnosticRow> product_convergence_diagnostic(const HarmonicCoeffs& f, const HarmonicCoeffs& g, int D,
                                                                 const std::vector<int>& lambdas, const Schedule& s) {
  // warm the harmonic cache before going parallel
  int top = 2;
  for (const auto& [c, v] : f) top = std::max(top, c[0] + 1);
  for (const auto& [c, v] : g) top = std::max(top, c[0] + 1);
  for (int l = 0; l <= top; ++l) harmonic_basis(D, l);
  std::vector<ProductDiagnosticRow> rows(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    rows[i] = product_diagnostic(f, g, make_config(D, lambdas[i], k_schedule(s, D, lambdas[i])));
  });
  return rows;
}

namespace {

void line(std::ostringstream& os, int D, int La, double k, const char* metric, double v) {
  os << D << ',' << La << ',' << k << ',' << metric << ',' << v << '\n';
}

}  // namespace

std::string to_csv(const std::vector<XDiagnosticRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "D,Lambda,k,metric,value\n";
  for (const auto& r : rows) {
    line(os, r.D, r.Lambda, r.k, "x_deviation", r.deviation);
    line(os, r.D, r.Lambda, r.k, "x_boundary", r.boundary);
    line(os, r.D, r.Lambda, r.k, "x_interior", r.interior);
    line(os, r.D, r.Lambda, r.k, "x_bound", r.bound);
  }
  return os.str();
}

std::string to_csv(const std::vector<ProductDiagnosticRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "D,Lambda,k,metric,value\n";
  for (const auto& r : rows) {
    line(os, r.D, r.Lambda, r.k, "product_residual", r.product_residual);
    line(os, r.D, r.Lambda, r.k, "f_residual", r.f_residual);
    line(os, r.D, r.Lambda, r.k, "f_op_norm", r.f_op_norm);
    line(os, r.D, r.Lambda, r.k, "f_bound", r.f_bound);
  }
  return os.str();
}

}  // namespace fuzzyd
