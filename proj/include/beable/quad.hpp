#pragma once

// Adaptive quadrature and the symmetric-exclusion principal value.
//
// A principal-value integrand is described by its smooth numerator g and the
// list of simple poles p_j, the full integrand being g(k) / prod_j (k - p_j).
// Around each pole the analytic residue term is subtracted; what remains of
// it under the symmetric window is exactly zero, so only smooth pieces are
// ever handed to the quadrature. Halving every exclusion window moves work
// between the window and bulk pieces without changing the exact value, which
// yields a computable convergence certificate.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "beable/defs.hpp"

namespace beable {

struct PVQuadratureConfig {
  double exclusion_halfwidth = 0;  // 0 picks 0.3 min(|p|, 1) per pole
  int grid_points = 15;            // adaptive bisection depth
  double outer_cutoff = 0;         // range when the integrand gives none
  double tolerance = 1e-10;
};

struct KernelValue {
  double value = 0;
  double error_estimate = 0;
};

struct PVIntegrand {
  std::function<double(double)> numerator;  // smooth g
  double lower = 0, upper = 0;  // both 0: symmetric range from outer_cutoff
  // Extend past the finite range where the integrand decays and has no
  // further poles. The upper end always extends; the lower end only when it
  // is nonzero, so a lower bound of 0 keeps the half-line convention.
  bool tails = false;
};

inline double integrate_smooth(const std::function<double(double)>& f, double lo,
                               double hi, const PVQuadratureConfig& cfg = {}) {
  using boost::math::quadrature::gauss_kronrod;
  if (std::isinf(hi)) {
    boost::math::quadrature::exp_sinh<double> es;
    double err = 0;
    return es.integrate(f, lo, hi, cfg.tolerance, &err);
  }
  double err = 0;
  return gauss_kronrod<double, 15>::integrate(f, lo, hi, cfg.grid_points,
                                              cfg.tolerance, &err);
}

namespace detail {

// Integrate [a, b] in panels that grow geometrically away from features of
// scale wl at the left end and wr at the right end, so no single panel spans
// more than a bounded multiple of its local feature size.
inline double integrate_chunked(const std::function<double(double)>& f, double a,
                                double b, double wl, double wr,
                                const PVQuadratureConfig& cfg) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a, b};
  if (wl > 0)
    for (double d = 7 * wl; a + d < b; d *= 8) cuts.push_back(a + d);
  if (wr > 0)
    for (double d = 7 * wr; b - d > a; d *= 8) cuts.push_back(b - d);
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] > cuts[i - 1]) total += integrate_smooth(f, cuts[i - 1], cuts[i], cfg);
  return total;
}

inline double pv_pass(const PVIntegrand& spec, const std::vector<double>& poles,
                      const PVQuadratureConfig& cfg, double lo, double hi,
                      double window_scale) {
  auto f = [&](double k) {
    double den = 1;
    for (double p : poles) den *= k - p;
    return spec.numerator(k) / den;
  };
  // window halfwidths: configured or |p|-scaled, clipped to stay inside the
  // domain and away from the neighboring poles
  std::vector<double> w(poles.size());
  for (size_t j = 0; j < poles.size(); ++j) {
    double base = cfg.exclusion_halfwidth > 0
                      ? cfg.exclusion_halfwidth
                      : 0.3 * std::min(std::abs(poles[j]) > 0 ? std::abs(poles[j]) : 1.0,
                                       1.0);
    base *= window_scale;
    base = std::min(base, 0.9 * (poles[j] - lo));
    base = std::min(base, 0.9 * (hi - poles[j]));
    for (size_t i = 0; i < poles.size(); ++i)
      if (i != j) base = std::min(base, 0.45 * std::abs(poles[j] - poles[i]));
    require(base > 0, "pv_integral: exclusion window collapsed");
    w[j] = base;
  }
  double total = 0;
  // pole windows: the subtracted residue term integrates to exactly zero on
  // a symmetric window, so only the folded sum f(p+s) + f(p-s) remains
  for (size_t j = 0; j < poles.size(); ++j) {
    const double p = poles[j];
    auto folded = [&](double s) { return f(p + s) + f(p - s); };
    total += integrate_smooth(folded, 0, w[j], cfg);
  }
  // smooth bulk between the windows, in panels scaled to the window widths
  double a = lo;
  double wa = 0;
  for (size_t j = 0; j < poles.size(); ++j) {
    total += integrate_chunked(f, a, poles[j] - w[j], wa, w[j], cfg);
    a = poles[j] + w[j];
    wa = w[j];
  }
  total += integrate_chunked(f, a, hi, wa, 0, cfg);
  if (spec.tails) {
    total += integrate_smooth(f, hi, std::numeric_limits<double>::infinity(), cfg);
    if (lo != 0) {
      auto mirror = [&](double k) { return f(-k); };
      total += integrate_smooth(mirror, -lo,
                                std::numeric_limits<double>::infinity(), cfg);
    }
  }
  return total;
}

}  // namespace detail

inline KernelValue pv_integral(const PVIntegrand& f, const std::vector<double>& poles,
                               const PVQuadratureConfig& cfg = {}) {
  double lo = f.lower, hi = f.upper;
  if (lo == 0 && hi == 0) {
    require(cfg.outer_cutoff > 0, "pv_integral: no integration range given");
    lo = -cfg.outer_cutoff;
    hi = cfg.outer_cutoff;
  }
  require(lo < hi, "pv_integral: empty range");
  std::vector<double> ps = poles;
  std::sort(ps.begin(), ps.end());
  for (size_t j = 0; j < ps.size(); ++j) {
    require(ps[j] > lo && ps[j] < hi, "pv_integral: pole outside the open range");
    require(j == 0 || ps[j] > ps[j - 1], "pv_integral: poles must be distinct");
  }
  if (ps.empty()) {
    double v = integrate_smooth(f.numerator, lo, hi, cfg);
    if (f.tails) {
      v += integrate_smooth(f.numerator, hi, std::numeric_limits<double>::infinity(),
                            cfg);
      if (lo != 0) {
        auto mirror = [&](double k) { return f.numerator(-k); };
        v += integrate_smooth(mirror, -lo, std::numeric_limits<double>::infinity(),
                              cfg);
      }
    }
    return {v, cfg.tolerance * (1 + std::abs(v))};
  }
  const double full = detail::pv_pass(f, ps, cfg, lo, hi, 1.0);
  const double half = detail::pv_pass(f, ps, cfg, lo, hi, 0.5);
  const double err = std::abs(full - half) + 1e-15 * (1 + std::abs(half));
  if (err > 1e-6 * (1 + std::abs(half)))
    throw numeric_error(
        "pv_integral: exclusion-window halving did not converge; the integrand "
        "is not resolved at the requested tolerance");
  return {half, err};
}

}  // namespace beable
