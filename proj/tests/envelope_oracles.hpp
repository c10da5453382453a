#pragma once

// Test-only oracles for the envelope solver. Nothing here goes through the
// library's FFT or stepping code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "spinalfven/dispersion.hpp"
#include "spinalfven/nls_solver.hpp"
#include "spinalfven/plasma.hpp"

namespace spinalfven::testing {

using cvec = std::vector<std::complex<double>>;

/// Focusing coefficients of a left-hand carrier (k c_A / omega_ci = 0.1) in a
/// weakly magnetized hydrogen plasma.
struct PhysicalCase {
  PlasmaComposition comp;
  DerivedQuantities dq;
  CarrierWave carrier;
  NlsCoefficients coeffs;
};

inline PhysicalCase physical_case(double n0 = 1e25, double te = 1e5, double b0 = 1e-3,
                                  Polarization pol = Polarization::LeftHand, double hall = 0.1,
                                  const PhysicalConstants& k = codata2018) {
  PhysicalCase pc{};
  pc.comp = hydrogen_plasma(n0, te, te, b0, k);
  pc.dq = derive(pc.comp, k);
  pc.carrier = dispersion(hall * pc.dq.omega_ci / pc.dq.alfven_speed, pol, pc.dq);
  pc.coeffs = nls_coefficients(pc.carrier, pc.dq, pc.comp, k);
  return pc;
}

/// Second derivative by a direct O(N^2) discrete Fourier transform.
inline cvec naive_spectral_second_derivative(const cvec& f, double length) {
  const std::size_t n = f.size();
  const double two_pi = 2.0 * std::numbers::pi;
  cvec spectrum(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += f[j] * std::polar(1.0, -two_pi * static_cast<double>((m * j) % n) / static_cast<double>(n));
    }
    spectrum[m] = acc / static_cast<double>(n);
  }
  cvec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      auto signed_m = static_cast<double>(m);
      if (m >= n / 2) signed_m -= static_cast<double>(n);
      const double kappa = two_pi * signed_m / length;
      acc += -kappa * kappa * spectrum[m] *
             std::polar(1.0, two_pi * static_cast<double>((m * j) % n) / static_cast<double>(n));
    }
    out[j] = acc;
  }
  return out;
}

/// Hand-written analytic soliton A sech(zeta / W) exp(i Q A^2 t / 2 B0^2) with
/// W = (B0 / A) sqrt(v_g' / Q), centred at zeta = 0 on the grid [-L/2, L/2).
/// `images` adds copies shifted by +-L, ..., +-images L, which removes the
/// derivative jump the bare sech tail leaves at the periodic seam.
inline cvec analytic_soliton(double a, const NlsCoefficients& c, double b0, std::size_t n, double length,
                             double t, int images = 0) {
  const double w = (b0 / a) * std::sqrt(2.0 * c.dispersion_coeff / c.nonlinear_coeff);
  const double phase = c.nonlinear_coeff * a * a * t / (2.0 * b0 * b0);
  cvec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double zeta = -0.5 * length + length * static_cast<double>(j) / static_cast<double>(n);
    double profile = 0.0;
    for (int m = -images; m <= images; ++m) profile += a / std::cosh((zeta + m * length) / w);
    out[j] = std::polar(profile, phase);
  }
  return out;
}

/// max |residual| / max |term| of the envelope equation for the analytic
/// soliton, with the time derivative taken from its exact phase rotation.
inline double soliton_residual(double a, const NlsCoefficients& c, double b0, std::size_t n, double length,
                               int images = 0) {
  const cvec f = analytic_soliton(a, c, b0, n, length, 0.0, images);
  const cvec fzz = naive_spectral_second_derivative(f, length);
  const double lambda = c.nonlinear_coeff * a * a / (2.0 * b0 * b0);
  double worst = 0.0;
  double largest = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> time_term = -lambda * f[j];  // i d/dt of f e^{i lambda t}
    const std::complex<double> disp = c.dispersion_coeff * fzz[j];
    const std::complex<double> nonlin = c.nonlinear_coeff * std::norm(f[j]) / (b0 * b0) * f[j];
    worst = std::max(worst, std::abs(time_term + disp + nonlin));
    largest = std::max({largest, std::abs(time_term), std::abs(disp), std::abs(nonlin)});
  }
  return worst / largest;
}

inline double linf(const cvec& a, const cvec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double l2(const cvec& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

/// |DFT bin m| / N by direct summation.
inline double mode_amplitude(const cvec& f, std::size_t m) {
  const std::size_t n = f.size();
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((m * j) % n) / static_cast<double>(n));
  }
  return std::abs(acc) / static_cast<double>(n);
}

struct GrowthMeasurement {
  double rate;          // 1/s, least-squares slope of ln|mode|
  double window_start;  // s
  double window_end;    // s
  std::size_t samples;
  bool saturated;       // mode reached the nonlinear threshold
};

/// Seeds A0 (1 + eps cos(kappa_m zeta)) and fits the exponential growth rate
/// of mode m. The fit window opens when the mode has grown threefold (the
/// decaying eigenmode has died out) and closes when it reaches 1e-2 A0; if the
/// mode never grows that far the whole record is fitted.
inline GrowthMeasurement measure_growth(const NlsCoefficients& c, double b0, double a0, double length,
                                        std::size_t n, std::size_t mode, double eps, double dt,
                                        std::size_t steps, std::size_t stride = 10) {
  const Grid grid{n, length};
  SplitStepSolver solver(initialize_uniform(a0, eps, mode, c, b0, grid));
  std::vector<double> t;
  std::vector<double> amp;
  for (std::size_t s = 0; s <= steps; ++s) {
    if (s % stride == 0) {
      t.push_back(solver.time());
      amp.push_back(mode_amplitude(solver.amplitude(), mode));
    }
    if (s < steps) solver.step(dt);
  }
  std::size_t first = 0;
  std::size_t last = amp.size();
  bool saturated = false;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if (amp[i] > 3.0 * amp[0] && first == 0) first = i;
    if (amp[i] > 1e-2 * a0) {
      last = i;
      saturated = true;
      break;
    }
  }
  if (!saturated || first == 0 || last <= first + 2) {
    first = 0;
    last = amp.size();
  }
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double count = static_cast<double>(last - first);
  for (std::size_t i = first; i < last; ++i) {
    const double y = std::log(amp[i]);
    st += t[i];
    sy += y;
    stt += t[i] * t[i];
    sty += t[i] * y;
  }
  const double slope = (count * sty - st * sy) / (count * stt - st * st);
  return {slope, t[first], t[last - 1], last - first, saturated};
}

}  // namespace spinalfven::testing
