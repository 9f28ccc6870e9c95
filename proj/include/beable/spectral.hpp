#pragma once

// Filtered-moment spectral layer: weight functions and their transforms, the
// principal-value kernels G_hh and G_rs in one and four dimensions, the
// electromagnetic gauge kernels, admissibility classification, and the
// laboratory bound chain.

#include <Eigen/Dense>
#include <cstdint>

#include "beable/quad.hpp"

namespace beable {

enum class WeightKind { box, gauss, modulated_gauss, modulated_gauss_4d };

// Unit-mass window: the time integral (4-volume integral for the 4d kind)
// of the weight is 1. normalization carries the prefactor that enforces it.
struct WeightFunction {
  WeightKind kind;
  double tau;            // time width
  double kbar = 0;       // modulation frequency
  double a = 0;          // spatial width, 4d kind only
  double center = 0;     // time offset, enters correlation matrices
  double normalization = 0;
};

inline WeightFunction box_weight(double tau, double center = 0) {
  require(tau > 0, "box_weight: tau must be > 0");
  return {WeightKind::box, tau, 0, 0, center, 1.0 / tau};
}

inline WeightFunction gauss_weight(double tau, double center = 0) {
  require(tau > 0, "gauss_weight: tau must be > 0");
  return {WeightKind::gauss, tau, 0, 0, center, 1.0 / (tau * std::sqrt(M_PI))};
}

inline WeightFunction modulated_weight(double tau, double kbar, double center = 0) {
  require(tau > 0 && kbar >= 0, "modulated_weight: need tau > 0, kbar >= 0");
  // the cosine eats part of the mass; restore it so the transform keeps the
  // plain e^{-tau^2 k^2/4} cosh(k kbar tau^2/2) shape
  return {WeightKind::modulated_gauss, tau, kbar, 0, center,
          std::exp(tau * tau * kbar * kbar / 4) / (tau * std::sqrt(M_PI))};
}

inline WeightFunction modulated_weight_4d(double tau, double kbar, double a) {
  require(tau > 0 && kbar >= 0 && a > 0,
          "modulated_weight_4d: need tau > 0, kbar >= 0, a > 0");
  const double tnorm = std::exp(tau * tau * kbar * kbar / 4) / (tau * std::sqrt(M_PI));
  const double snorm = 1.0 / (a * a * a * std::pow(M_PI, 1.5));
  return {WeightKind::modulated_gauss_4d, tau, kbar, a, 0, tnorm * snorm};
}

inline bool is_time_kind(const WeightFunction& h) {
  return h.kind != WeightKind::modulated_gauss_4d;
}

// h(t - center) in the time domain
inline double weight_value_time(const WeightFunction& h, double t) {
  require(is_time_kind(h), "weight_value_time: needs a time-domain kind");
  const double s = t - h.center;
  switch (h.kind) {
    case WeightKind::box:
      return std::abs(s) <= h.tau / 2 ? h.normalization : 0.0;
    case WeightKind::gauss:
      return h.normalization * std::exp(-s * s / (h.tau * h.tau));
    default:
      return h.normalization * std::exp(-s * s / (h.tau * h.tau)) *
             std::cos(h.kbar * s);
  }
}

// closed-form transform h~(k) = (1/sqrt(2 pi)) Int h(t) e^{ikt} dt, centered
inline double weight_fourier(const WeightFunction& h, double k) {
  require(is_time_kind(h), "weight_fourier: needs a time-domain kind");
  const double pref = 1.0 / std::sqrt(2 * M_PI);
  switch (h.kind) {
    case WeightKind::box: {
      const double x = k * h.tau / 2;
      return pref * (std::abs(x) < 1e-8 ? 1 - x * x / 6 : std::sin(x) / x);
    }
    case WeightKind::gauss:
      return pref * std::exp(-h.tau * h.tau * k * k / 4);
    default:
      return pref * std::exp(-h.tau * h.tau * k * k / 4) *
             std::cosh(k * h.kbar * h.tau * h.tau / 2);
  }
}

inline double ft_modulated(const WeightFunction& h, double k) {
  require(h.kind == WeightKind::modulated_gauss,
          "ft_modulated: weight is not a modulated Gaussian");
  return weight_fourier(h, k);
}

// location of the positive-k maximum of the modulated transform
inline double ft_modulated_argmax(const WeightFunction& h) {
  require(h.kind == WeightKind::modulated_gauss,
          "ft_modulated_argmax: weight is not a modulated Gaussian");
  double lo = 0, hi = h.kbar + 4 / h.tau;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 120; ++it) {
    if (ft_modulated(h, c) < ft_modulated(h, d))
      lo = c;
    else
      hi = d;
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  return 0.5 * (lo + hi);
}

namespace detail {

inline double time_kernel_cutoff(const WeightFunction& h, double omega) {
  // box transforms decay only algebraically; push the range out and let the
  // tail integration finish the job
  if (h.kind == WeightKind::box) return std::max(2000.0 / h.tau, 3 * omega);
  return std::max(h.kbar + 9 / h.tau, 3 * omega);
}

}  // namespace detail

// G_hh = Int dk |h~(k)|^2 P 1/(k^2 - omega^2) over the whole line.
// The sign decides admissibility of h in the modified formalism.
inline KernelValue g_hh_time(const WeightFunction& h, double omega,
                             const PVQuadratureConfig& cfg = {}) {
  require(is_time_kind(h), "g_hh_time: needs a time-domain kind");
  require(omega > 0, "g_hh_time: omega must be > 0");
  PVIntegrand f;
  f.numerator = [h, omega](double k) {
    const double ht = weight_fourier(h, k);
    return ht * ht / (k + omega);
  };
  f.lower = 0;
  f.upper = detail::time_kernel_cutoff(h, omega);
  f.tails = h.kind == WeightKind::box;
  KernelValue half = pv_integral(f, {omega}, cfg);
  return {2 * half.value, 2 * half.error_estimate};
}

// finite-observation cross-check of g_hh_time: Fourier sum over the discrete
// frequencies k_n = 2 pi n / T; bins landing on the pole are skipped
inline double g_hh_time_discrete(const WeightFunction& h, double omega, double T) {
  require(is_time_kind(h), "g_hh_time_discrete: needs a time-domain kind");
  require(omega > 0 && T > 0, "g_hh_time_discrete: need omega > 0, T > 0");
  const double K = detail::time_kernel_cutoff(h, omega);
  const double dk = 2 * M_PI / T;
  const long nmax = long(K / dk) + 1;
  const double h0 = weight_fourier(h, 0);
  double sum = -h0 * h0 / (omega * omega);
  for (long n = 1; n <= nmax; ++n) {
    const double k = n * dk;
    if (std::abs(k - omega) < 1e-12 * std::max(omega, 1.0)) continue;
    const double ht = weight_fourier(h, k);
    sum += 2 * ht * ht / (k * k - omega * omega);
  }
  return dk * sum;
}

// G_rs = Int dk h~_r h~_s cos(k (t_r - t_s)) P 1/(k^2 - omega^2)
inline RMat g_rs_matrix(const std::vector<WeightFunction>& hs, double omega,
                        const PVQuadratureConfig& cfg = {}) {
  require(!hs.empty(), "g_rs_matrix: empty weight list");
  require(omega > 0, "g_rs_matrix: omega must be > 0");
  double K = 3 * omega;
  for (const WeightFunction& h : hs) {
    require(is_time_kind(h), "g_rs_matrix: needs time-domain kinds");
    K = std::max(K, detail::time_kernel_cutoff(h, omega));
  }
  const int n = int(hs.size());
  RMat G(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      const double delta = hs[r].center - hs[s].center;
      PVIntegrand f;
      f.numerator = [&, delta, r, s](double k) {
        return weight_fourier(hs[r], k) * weight_fourier(hs[s], k) *
               std::cos(k * delta) / (k + omega);
      };
      f.lower = 0;
      f.upper = K;
      f.tails = hs[r].kind == WeightKind::box || hs[s].kind == WeightKind::box;
      G(r, s) = G(s, r) = 2 * pv_integral(f, {omega}, cfg).value;
    }
  return G;
}

enum class Formalism { original, modified };

// Variance of the filtered beable coordinate: intrinsic monitoring part plus
// the quantum variance of the filtered operator.
inline double variance_filtered(const WeightFunction& h, double coupling,
                                double quantum_var, Formalism formalism,
                                double omega, const PVQuadratureConfig& cfg = {}) {
  require(coupling > 0, "variance_filtered: coupling must be > 0");
  if (formalism == Formalism::original) {
    require(h.kind == WeightKind::box,
            "variance_filtered: original formalism assumes a box window");
    return 1.0 / (2 * coupling * h.tau) + quantum_var;
  }
  const double ghh = g_hh_time(h, omega, cfg).value;
  require(ghh > 0,
          "variance_filtered: weight is not admissible, the filtered kernel "
          "G_hh is not positive");
  return ghh / coupling + quantum_var;
}

// Envelope factor of the filtered classical oscillation: filtering
// C cos(omega t) through h multiplies the amplitude by sqrt(2 pi) h~(omega).
inline double mean_filtered_attenuation(const WeightFunction& h, double omega) {
  require(h.kind == WeightKind::modulated_gauss,
          "mean_filtered_attenuation: weight is not a modulated Gaussian");
  require(omega >= 0, "mean_filtered_attenuation: omega must be >= 0");
  return std::exp(-omega * omega * h.tau * h.tau / 4) *
         std::cosh(h.kbar * omega * h.tau * h.tau / 2);
}

namespace detail {

// P Int_0^inf numer(k) e^{-a^2 k^2/2} / (c - k^2) dk.
// For c <= 0 the denominator never vanishes; for c > 0 the pole at sqrt(c)
// is handled by the exclusion-window machinery.
inline double radial_kernel(const std::function<double(double)>& numer, double c,
                            double a, const PVQuadratureConfig& cfg,
                            double window_scale) {
  const double K0 = 19.0 / a;
  if (c <= 0) {
    auto f = [&](double k) {
      return numer(k) * std::exp(-0.5 * a * a * k * k) / (c - k * k);
    };
    return integrate_smooth(f, 0, K0, cfg);
  }
  const double s = std::sqrt(c);
  PVIntegrand g;
  g.numerator = [&numer, a, s](double k) {
    return -numer(k) * std::exp(-0.5 * a * a * k * k) / (k + s);
  };
  g.lower = 0;
  g.upper = K0 + 2 * s;
  PVQuadratureConfig c2 = cfg;
  c2.exclusion_halfwidth = 0.5 * s * window_scale;
  return pv_integral(g, {s}, c2).value;
}

// same radial integral with the pole softened to x/(x^2 + eta^2); the
// Lorentzian core is integrated on its own subinterval so the adaptive
// quadrature resolves it
inline double radial_reg(const std::function<double(double)>& numer, double c,
                         double a, double eta, const PVQuadratureConfig& cfg) {
  auto f = [&](double k) {
    const double x = c - k * k;
    return numer(k) * std::exp(-0.5 * a * a * k * k) * x / (x * x + eta * eta);
  };
  if (c <= 0) return integrate_smooth(f, 0, 19.0 / a, cfg);
  const double s = std::sqrt(c), K = 19.0 / a + 2 * s;
  const double hw = std::max(5 * eta / (2 * s), 1e-3 * s);
  const double lo = std::max(0.0, s - hw), hi = std::min(K, s + hw);
  return detail::integrate_chunked(f, 0, lo, 0, hw, cfg) +
         integrate_smooth(f, lo, hi, cfg) +
         detail::integrate_chunked(f, hi, K, hw, 0, cfg);
}

// shared outer k0 integral of the factorized 4d kernels
inline double spectral_outer(const WeightFunction& h, double m,
                             const std::function<double(double)>& radial_of_c,
                             const PVQuadratureConfig& cfg) {
  const double tau = h.tau, kbar = h.kbar;
  auto F = [&](double k0) {
    const double gm = std::exp(-tau * tau * (k0 - kbar) * (k0 - kbar) / 4);
    const double gp = std::exp(-tau * tau * (k0 + kbar) * (k0 + kbar) / 4);
    return (gm + gp) * (gm + gp) * 4 * M_PI * radial_of_c(k0 * k0 - m * m);
  };
  const double Kout = kbar + 9 / tau;
  // the radial kernel has a square-root kink where c changes sign; keep it
  // at a panel boundary
  double v;
  if (m > 0 && m < Kout)
    v = integrate_smooth(F, 0, m, cfg) + integrate_smooth(F, m, Kout, cfg);
  else
    v = integrate_smooth(F, 0, Kout, cfg);
  const double pref =
      0.25 * std::exp(0.5 * kbar * kbar * tau * tau) / std::pow(2 * M_PI, 4);
  return 2 * pref * v;
}

}  // namespace detail

// 4d scalar kernel Int d^4k |h~(k)|^2 P 1/(k0^2 - |k|^2 - m^2), reduced by
// the Gaussian spatial factorization to nested one-dimensional quadratures.
inline KernelValue g_hh_scalar_4d(const WeightFunction& h, double m,
                                  const PVQuadratureConfig& cfg = {}) {
  require(h.kind == WeightKind::modulated_gauss_4d,
          "g_hh_scalar_4d: needs the 4d modulated kind");
  require(m >= 0, "g_hh_scalar_4d: mass must be >= 0");
  auto numer = [](double k) { return k * k; };
  auto value_at = [&](double wscale) {
    return detail::spectral_outer(
        h, m,
        [&](double c) { return detail::radial_kernel(numer, c, h.a, cfg, wscale); },
        cfg);
  };
  const double v1 = value_at(1.0), v2 = value_at(0.5);
  const double err = std::abs(v1 - v2) + 1e-14 * (1 + std::abs(v2));
  if (err > 1e-5 * (1 + std::abs(v2)))
    throw numeric_error("g_hh_scalar_4d: window halving did not converge");
  return {v2, err};
}

// deterministic reference for the Monte-Carlo cross-check: the same kernel
// with the pole softened to x/(x^2 + eta^2)
inline double g_hh_scalar_4d_reg(const WeightFunction& h, double m, double eta,
                                 const PVQuadratureConfig& cfg = {}) {
  require(h.kind == WeightKind::modulated_gauss_4d,
          "g_hh_scalar_4d_reg: needs the 4d modulated kind");
  require(m >= 0 && eta > 0, "g_hh_scalar_4d_reg: need m >= 0, eta > 0");
  auto numer = [](double k) { return k * k; };
  return detail::spectral_outer(
      h, m, [&](double c) { return detail::radial_reg(numer, c, h.a, eta, cfg); },
      cfg);
}

struct McEstimate {
  double mean = 0;
  double std_error = 0;
};

// importance-sampled Monte-Carlo estimate of the eta-regularized 4d kernel:
// k0 from the two-lobe Gaussian matching |h~|^2, spatial k from the width-a
// Gaussian
inline McEstimate g_hh_scalar_4d_mc(const WeightFunction& h, double m, double eta,
                                    int n_per_batch, int batches, uint64_t seed) {
  require(h.kind == WeightKind::modulated_gauss_4d,
          "g_hh_scalar_4d_mc: needs the 4d modulated kind");
  require(n_per_batch > 1 && batches > 1, "g_hh_scalar_4d_mc: need n, batches > 1");
  require(eta > 0, "g_hh_scalar_4d_mc: eta must be > 0");
  const double tau = h.tau, kbar = h.kbar, a = h.a;
  const double pref =
      0.25 * std::exp(0.5 * kbar * kbar * tau * tau) / std::pow(2 * M_PI, 4);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gs;
  std::vector<double> batch_means(batches, 0.0);
  for (int b = 0; b < batches; ++b) {
    double acc = 0;
    for (int i = 0; i < n_per_batch; ++i) {
      const double sgn = (rng() & 1) ? 1.0 : -1.0;
      const double k0 = gs(rng) / tau + sgn * kbar;
      double kx = gs(rng) / a, ky = gs(rng) / a, kz = gs(rng) / a;
      const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
      const double gm = std::exp(-tau * tau * (k0 - kbar) * (k0 - kbar) / 4);
      const double gp = std::exp(-tau * tau * (k0 + kbar) * (k0 + kbar) / 4);
      const double p1 = 0.5 * (tau / std::sqrt(2 * M_PI)) * (gm * gm + gp * gp);
      const double p2 = std::sqrt(2 / M_PI) * a * a * a * k * k *
                        std::exp(-0.5 * a * a * k * k);
      const double x = k0 * k0 - m * m - k * k;
      const double kreg = x / (x * x + eta * eta);
      acc += pref * (gm + gp) * (gm + gp) * std::exp(-0.5 * a * a * k * k) * kreg *
             4 * M_PI * k * k / (p1 * p2);
    }
    batch_means[b] = acc / n_per_batch;
  }
  McEstimate out;
  for (double v : batch_means) out.mean += v;
  out.mean /= batches;
  double var = 0;
  for (double v : batch_means) var += (v - out.mean) * (v - out.mean);
  out.std_error = std::sqrt(var / (batches - 1) / batches);
  return out;
}

enum class EmGauge { coulomb, lorentz };

// Momentum-space photon kernel G^{mu nu}(k), metric (+,-,-,-).
inline Eigen::Matrix4d em_kernel(const Eigen::Vector4d& k, EmGauge gauge,
                                 double lambda = 1.0) {
  const double kk = k(1) * k(1) + k(2) * k(2) + k(3) * k(3);
  const double k2 = k(0) * k(0) - kk;
  Eigen::Matrix4d G = Eigen::Matrix4d::Zero();
  if (gauge == EmGauge::coulomb) {
    if (kk <= 0)
      throw numeric_error("em_kernel: Coulomb gauge needs a nonzero spatial k");
    if (k2 == 0)
      throw numeric_error("em_kernel: kernel undefined on the light cone");
    G(0, 0) = 1.0 / kk;
    for (int i = 1; i < 4; ++i)
      for (int j = 1; j < 4; ++j)
        G(i, j) = ((i == j ? 1.0 : 0.0) - k(i) * k(j) / kk) / k2;
    return G;
  }
  if (k2 == 0)
    throw numeric_error("em_kernel: kernel undefined on the light cone");
  Eigen::Matrix4d metric = Eigen::Matrix4d::Zero();
  metric.diagonal() << 1, -1, -1, -1;
  G = (metric - (1 - lambda) * (k * k.transpose()) / k2) / k2;
  return G;
}

// Sign audit of the transverse-current kernel. Positive value means timelike
// modes dominate and the spectrum is admissible; j_form_value carries the
// opposite raw sign convention of the unreduced current form.
struct AdmissibilityReport {
  double value = 0;
  double j_form_value = 0;
  bool admissible = false;
};

inline AdmissibilityReport em_admissibility(const WeightFunction& j_spectrum,
                                            const PVQuadratureConfig& cfg = {}) {
  require(j_spectrum.kind == WeightKind::modulated_gauss_4d,
          "em_admissibility: needs the transverse 4d descriptor");
  const double v = (2.0 / 3.0) * g_hh_scalar_4d(j_spectrum, 0.0, cfg).value;
  return {v, -v, v > 0};
}

enum class FieldComponent { electric, magnetic };

// Intrinsic filtered field variance (1/2 gamma) Int d^4k w(k) |h~|^2 P 1/k^2
// with w = k0^2 - k_i^2 (electric) or the curl weight (magnetic). The caller
// is responsible for admissibility of h; the integral itself is defined
// either way.
inline double em_field_variance_intrinsic(double gamma, const WeightFunction& h,
                                          FieldComponent component,
                                          const PVQuadratureConfig& cfg = {}) {
  require(gamma > 0, "em_field_variance_intrinsic: gamma must be > 0");
  require(h.kind == WeightKind::modulated_gauss_4d,
          "em_field_variance_intrinsic: needs the 4d modulated kind");
  auto radial = [&](double c) {
    std::function<double(double)> numer;
    if (component == FieldComponent::electric)
      numer = [c](double k) { return (c - k * k / 3) * k * k; };
    else
      numer = [](double k) { return (2.0 / 3.0) * k * k * k * k; };
    return detail::radial_kernel(numer, c, h.a, cfg, 1.0);
  };
  return detail::spectral_outer(h, 0.0, radial, cfg) / (2 * gamma);
}

// laboratory bound: monitoring strength needed to keep the intrinsic field
// variance below the ambient scale E_typ^2
inline double gamma_lower_bound(double E_typ_sq, double tau, double a) {
  require(E_typ_sq > 0 && tau > 0 && a > 0,
          "gamma_lower_bound: all arguments must be > 0");
  return 0.2 / (E_typ_sq * tau * a * a * a);
}

struct SBDensity {
  double erg_cm3 = 0;     // 7.56e-15 T^4
  double natural_cm4 = 0;  // 2.39e2 T^4, via hbar c = 3.1615e-17 erg cm
};

inline SBDensity stefan_boltzmann_density(double T) {
  require(T >= 0, "stefan_boltzmann_density: temperature must be >= 0");
  const double T4 = T * T * T * T;
  return {7.56e-15 * T4, 2.39e2 * T4};
}

}  // namespace beable
