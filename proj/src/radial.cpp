#include "fuzzyd/radial.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fuzzyd/coefficients.hpp"

namespace fuzzyd {

RadialParams radial_params(int l, const FuzzyConfig& cfg) {
  cfg.validate();
  if (l < 0) throw std::invalid_argument("radial_params: l < 0");
  const double k = cfg.k;
  const double b = b_value(l, cfg.D), b0 = b_value(0, cfg.D);
  RadialParams p;
  p.k_lD = 3.0 * b + 2.0 * k;
  p.r_tilde = (4.0 * b + 2.0 * k) / (3.0 * b + 2.0 * k);
  p.V0 = -std::sqrt(3.0 * b0 + 2.0 * k) - 2.0 * b0 * (k + b0) / (3.0 * b0 + 2.0 * k);
  p.E0l = std::sqrt(p.k_lD) + p.V0 + 2.0 * b * (k + b) / (3.0 * b + 2.0 * k);
  p.M = std::pow(p.k_lD, 0.125) / std::pow(M_PI, 0.25);
  return p;
}

std::function<double(double)> radial_g(int l, const FuzzyConfig& cfg) {
  RadialParams p = radial_params(l, cfg);
  double s = std::sqrt(p.k_lD);
  return [p, s](double r) { return p.M * std::exp(-s * (r - p.r_tilde) * (r - p.r_tilde) / 2.0); };
}

std::function<double(double)> radial_wavefunction(int l, const FuzzyConfig& cfg) {
  auto g = radial_g(l, cfg);
  double e = (cfg.D - 1) / 2.0;
  return [g, e](double r) { return g(r) / std::pow(r, e); };
}

const GaussHermite& gauss_hermite(int n) {
  static std::mutex mu;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("gauss_hermite: n < 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) J(i, i - 1) = J(i - 1, i) = std::sqrt(i / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussHermite gh;
  const double mu0 = std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    gh.nodes.push_back(es.eigenvalues()(i));
    double v = es.eigenvectors()(0, i);
    gh.weights.push_back(mu0 * v * v);
  }
  return cache.emplace(n, std::move(gh)).first->second;
}

double radial_overlap(int l, int lp, const FuzzyConfig& cfg, RadialWeight w, int nodes) {
  if (std::abs(l - lp) != 1) throw std::domain_error("radial_overlap: need |l - lp| = 1");
  if (l < 0 || lp < 0 || l > cfg.Lambda || lp > cfg.Lambda)
    throw std::domain_error("radial_overlap: level out of range");
  RadialParams a = radial_params(l, cfg), b = radial_params(lp, cfg);
  const double sa = std::sqrt(a.k_lD), sb = std::sqrt(b.k_lD), s = sa + sb;
  const double rhat = (sa * a.r_tilde + sb * b.r_tilde) / s;
  const double dr = a.r_tilde - b.r_tilde;
  // g_l g_lp = M M' exp(-(s/2)(r - rhat)^2) exp(-(sa sb / (2s)) dr^2)
  const double pref = a.M * b.M * std::exp(-sa * sb * dr * dr / (2.0 * s)) * std::sqrt(2.0 / s);
  const GaussHermite& gh = gauss_hermite(nodes);
  double acc = 0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    double r = rhat + gh.nodes[i] * std::sqrt(2.0 / s);
    acc += gh.weights[i] * (w == RadialWeight::r ? r : 1.0);
  }
  return pref * acc;
}

double radial_norm(int l, const FuzzyConfig& cfg) {
  auto g = radial_g(l, cfg);
  RadialParams p = radial_params(l, cfg);
  double width = 40.0 / std::pow(p.k_lD, 0.25);
  double lo = std::max(0.0, p.r_tilde - width), hi = p.r_tilde + width;
  auto f2 = [&](double r) { double v = g(r); return v * v; };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f2, lo, hi, 15, 1e-14);
}

double radial_overlap_leading(int l, int lp, const FuzzyConfig& cfg, RadialWeight w) {
  if (w == RadialWeight::unit) return 1.0;
  return 1.0 + (b_value(l, cfg.D) + b_value(lp, cfg.D)) / (4.0 * cfg.k);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double u = std::log(x[i]), v = std::log(std::abs(y[i]));
    sx += u;
    sy += v;
    sxx += u * u;
    sxy += u * v;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace fuzzyd
