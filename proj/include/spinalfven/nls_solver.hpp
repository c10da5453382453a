#pragma once

// Split-step spectral integrator for the Alfven envelope equation
//
//   i dB/dt + (v_g'/2) d^2B/dzeta^2 + Q (|B|^2 / B0^2) B = 0
//
// on a periodic grid in the comoving coordinate zeta = z - v_g t.
//
// Internally the field is stored as u = B / B0 with lengths measured in a
// reference length l (default: the box length) and time in t_ref = l^2 / |v_g'|
// (or 1/|Q| for a dispersionless run). SI values only cross the class
// boundary.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "spinalfven/dispersion.hpp"
#include "spinalfven/errors.hpp"
#include "spinalfven/fft.hpp"

namespace spinalfven {

struct Grid {
  std::size_t points;  // N, power of two, >= 16
  double length;       // L, m

  double spacing() const { return length / static_cast<double>(points); }
  /// Grid covers [-L/2, L/2).
  double coordinate(std::size_t j) const {
    return -0.5 * length + static_cast<double>(j) * spacing();
  }
  /// Wavenumber of FFT bin j: 2 pi j / L for j < N/2, 2 pi (j - N) / L otherwise.
  /// The Nyquist bin j = N/2 maps to -pi N / L.
  double wavenumber(std::size_t j) const {
    const auto n = static_cast<std::ptrdiff_t>(points);
    auto m = static_cast<std::ptrdiff_t>(j);
    if (m >= n / 2) m -= n;
    return 2.0 * std::numbers::pi * static_cast<double>(m) / length;
  }
};

inline void validate(const Grid& g) {
  if (g.points < 16 || (g.points & (g.points - 1)) != 0) {
    throw ValidationError("grid_points", "must be a power of two >= 16");
  }
  if (!(g.length > 0.0) || !std::isfinite(g.length)) {
    throw ValidationError("domain_length", "must be finite and > 0");
  }
}

struct EnvelopeState {
  Grid grid;
  std::vector<std::complex<double>> amplitude;  // B_1(zeta_j), T
  double time = 0.0;                            // s
  std::size_t step_index = 0;
  NlsCoefficients coefficients;
  double background_field;  // B0, T
};

inline void validate(const EnvelopeState& s) {
  validate(s.grid);
  if (s.amplitude.size() != s.grid.points) {
    throw ValidationError("amplitude", "length must equal grid_points");
  }
  if (!(s.background_field > 0.0) || !std::isfinite(s.background_field)) {
    throw ValidationError("background_field", "must be finite and > 0");
  }
  if (!std::isfinite(s.coefficients.dispersion_coeff) ||
      !std::isfinite(s.coefficients.nonlinear_coeff)) {
    throw ValidationError("coefficients", "must be finite");
  }
}

struct ConservedDiagnostics {
  double norm;         // int |B|^2 dzeta, T^2 m
  double momentum;     // Im int B* dB/dzeta dzeta, T^2
  double hamiltonian;  // (v_g'/2) int |dB|^2 - (Q / 2 B0^2) int |B|^4
  double gradient_norm = 0.0;  // int |dB/dzeta|^2 dzeta, T^2 / m

  /// sqrt(norm * gradient_norm) bounds |momentum|; used to scale its drift
  /// when the momentum itself is zero.
  double momentum_scale() const { return std::sqrt(norm * gradient_norm); }
};

struct SolverOptions {
  double cfl_safety = 2.0;
  bool dealias = false;           // 2/3-rule filter applied with the linear substep
  double reference_length = 0.0;  // m; 0 selects the box length
};

namespace detail {

inline ConservedDiagnostics conserved_quantities(std::span<const std::complex<double>> b,
                                                 const Grid& grid, const NlsCoefficients& c,
                                                 double b0, FftWorkspace& scratch) {
  const std::size_t n = grid.points;
  const double dx = grid.spacing();
  double norm = 0.0;
  double quartic = 0.0;
  auto data = scratch.data();
  for (std::size_t j = 0; j < n; ++j) {
    const double a2 = std::norm(b[j]);
    norm += a2;
    quartic += a2 * a2;
    data[j] = b[j];
  }
  scratch.forward();
  // Parseval: int |f|^2 = L sum |f_hat_j / N|^2.
  const double inv_n = 1.0 / static_cast<double>(n);
  double gradient = 0.0;
  double momentum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double kappa = grid.wavenumber(j);
    const double p = std::norm(data[j] * inv_n);
    gradient += kappa * kappa * p;
    if (j != n / 2) momentum += kappa * p;
  }
  ConservedDiagnostics d{};
  d.norm = norm * dx;
  d.momentum = momentum * grid.length;
  d.hamiltonian = c.dispersion_coeff * gradient * grid.length -
                  c.nonlinear_coeff / (2.0 * b0 * b0) * quartic * dx;
  d.gradient_norm = gradient * grid.length;
  return d;
}

}  // namespace detail

inline ConservedDiagnostics diagnostics(const EnvelopeState& state) {
  validate(state);
  FftWorkspace scratch(state.grid.points);
  return detail::conserved_quantities(state.amplitude, state.grid, state.coefficients,
                                      state.background_field, scratch);
}

inline double max_amplitude(std::span<const std::complex<double>> b) {
  double m = 0.0;
  for (const auto& v : b) m = std::max(m, std::abs(v));
  return m;
}

/// Largest |dt| accepted by the stepper: safety * dx^2 / |v_g'|. Infinite when
/// v_g' = 0.
inline double max_time_step(const Grid& grid, const NlsCoefficients& c, double safety = 2.0) {
  const double vgp = std::abs(c.group_dispersion());
  if (vgp == 0.0) return std::numeric_limits<double>::infinity();
  const double dx = grid.spacing();
  return safety * dx * dx / vgp;
}

/// Owns one envelope and its FFT plans. Single-owner mutable state; separate
/// instances may run concurrently.
class SplitStepSolver {
 public:
  explicit SplitStepSolver(const EnvelopeState& initial, SolverOptions options = {})
      : grid_(initial.grid),
        coeffs_(initial.coefficients),
        b0_(initial.background_field),
        options_(options),
        time_(initial.time),
        step_index_(initial.step_index),
        field_((validate(initial), initial.grid.points)),
        scratch_(initial.grid.points) {
    if (!(options_.cfl_safety > 0.0)) throw ValidationError("cfl_safety", "must be > 0");
    if (options_.reference_length < 0.0 || !std::isfinite(options_.reference_length)) {
      throw ValidationError("reference_length", "must be finite and >= 0");
    }
    const double ref_length =
        options_.reference_length > 0.0 ? options_.reference_length : grid_.length;
    const double vgp = std::abs(coeffs_.group_dispersion());
    const double q = std::abs(coeffs_.nonlinear_coeff);
    if (vgp > 0.0) {
      time_unit_ = ref_length * ref_length / vgp;
    } else if (q > 0.0) {
      time_unit_ = 1.0 / q;
    } else {
      time_unit_ = 1.0;
    }
    scaled_dispersion_ = coeffs_.dispersion_coeff * time_unit_ / (ref_length * ref_length);
    scaled_nonlinear_ = coeffs_.nonlinear_coeff * time_unit_;

    const std::size_t n = grid_.points;
    scaled_kappa_sq_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double kappa = grid_.wavenumber(j) * ref_length;
      scaled_kappa_sq_[j] = kappa * kappa;
    }
    keep_mode_.assign(n, true);
    if (options_.dealias) {
      const auto cutoff = static_cast<std::ptrdiff_t>(n / 3);
      for (std::size_t j = 0; j < n; ++j) {
        auto m = static_cast<std::ptrdiff_t>(j);
        if (m >= static_cast<std::ptrdiff_t>(n / 2)) m -= static_cast<std::ptrdiff_t>(n);
        keep_mode_[j] = std::abs(m) <= cutoff;
      }
    }

    auto u = field_.data();
    for (std::size_t j = 0; j < n; ++j) u[j] = initial.amplitude[j] / b0_;
  }

  const Grid& grid() const { return grid_; }
  const NlsCoefficients& coefficients() const { return coeffs_; }
  double time() const { return time_; }
  std::size_t step_index() const { return step_index_; }
  double max_time_step() const { return spinalfven::max_time_step(grid_, coeffs_, options_.cfl_safety); }

  /// One Strang step: half nonlinear rotation, exact linear propagation in
  /// Fourier space, half nonlinear rotation. A negative `dt` integrates
  /// backwards in time.
  void step(double dt) {
    if (!std::isfinite(dt) || dt == 0.0) throw ValidationError("dt", "must be finite and non-zero");
    if (std::abs(dt) > max_time_step() * (1.0 + 1e-12)) {
      throw ValidationError("dt", "exceeds the step guard safety * dx^2 / |v_g'| = " +
                                      fmt::format("{:.6g}", max_time_step()) + " s");
    }
    const double h = dt / time_unit_;
    if (h != cached_step_) rebuild_linear_multiplier(h);

    auto u = field_.data();
    nonlinear_rotation(u, 0.5 * h);
    field_.forward();
    for (std::size_t j = 0; j < u.size(); ++j) u[j] *= linear_multiplier_[j];
    field_.backward();
    nonlinear_rotation(u, 0.5 * h);

    ++step_index_;
    time_ += dt;
    for (const auto& v : u) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw BlowUpError(step_index_);
    }
  }

  void advance(double dt, std::size_t steps) {
    for (std::size_t i = 0; i < steps; ++i) step(dt);
  }

  /// Current amplitude in tesla.
  std::vector<std::complex<double>> amplitude() const {
    std::vector<std::complex<double>> out(grid_.points);
    auto u = field_.data();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = u[j] * b0_;
    return out;
  }

  EnvelopeState state() const {
    return EnvelopeState{grid_, amplitude(), time_, step_index_, coeffs_, b0_};
  }

  ConservedDiagnostics diagnostics() {
    const auto b = amplitude();
    return detail::conserved_quantities(b, grid_, coeffs_, b0_, scratch_);
  }

 private:
  void nonlinear_rotation(std::span<std::complex<double>> u, double h) const {
    const double rate = scaled_nonlinear_ * h;
    for (auto& v : u) v *= std::polar(1.0, rate * std::norm(v));
  }

  void rebuild_linear_multiplier(double h) {
    const std::size_t n = grid_.points;
    const double inv_n = 1.0 / static_cast<double>(n);
    linear_multiplier_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      linear_multiplier_[j] =
          keep_mode_[j] ? std::polar(inv_n, -scaled_dispersion_ * scaled_kappa_sq_[j] * h)
                        : std::complex<double>(0.0, 0.0);
    }
    cached_step_ = h;
  }

  Grid grid_;
  NlsCoefficients coeffs_;
  double b0_;
  SolverOptions options_;
  double time_;
  std::size_t step_index_;
  FftWorkspace field_;
  FftWorkspace scratch_;
  double time_unit_ = 1.0;
  double scaled_dispersion_ = 0.0;
  double scaled_nonlinear_ = 0.0;
  std::vector<double> scaled_kappa_sq_;
  std::vector<bool> keep_mode_;
  std::vector<std::complex<double>> linear_multiplier_;
  double cached_step_ = std::numeric_limits<double>::quiet_NaN();
};

/// Value-semantics single step.
inline EnvelopeState step(const EnvelopeState& state, double dt, SolverOptions options = {}) {
  SplitStepSolver solver(state, options);
  solver.step(dt);
  return solver.state();
}

struct SolitonSpec {
  double peak_amplitude;  // A, T
  double center = 0.0;    // zeta0, m
  double phase = 0.0;     // rad
};

/// Width W = (B0 / A) sqrt(v_g' / Q) of the bright soliton; requires Q v_g' > 0.
inline double soliton_width(double peak_amplitude, const NlsCoefficients& c, double b0) {
  return (b0 / peak_amplitude) * std::sqrt(c.group_dispersion() / c.nonlinear_coeff);
}

/// Peak amplitude giving a soliton of width `width`.
inline double soliton_amplitude_for_width(double width, const NlsCoefficients& c, double b0) {
  return (b0 / width) * std::sqrt(c.group_dispersion() / c.nonlinear_coeff);
}

inline void check_soliton(const SolitonSpec& spec, const NlsCoefficients& c, double b0,
                          const Grid& grid) {
  validate(grid);
  if (!(spec.peak_amplitude > 0.0) || !std::isfinite(spec.peak_amplitude)) {
    throw ValidationError("peak_amplitude", "must be finite and > 0");
  }
  if (!std::isfinite(spec.center) || !std::isfinite(spec.phase)) {
    throw ValidationError("soliton", "center and phase must be finite");
  }
  const double product = c.nonlinear_coeff * c.group_dispersion();
  if (!(product > 0.0)) {
    throw ValidationError(
        "soliton",
        "no bright soliton: requires Q v_g' > 0 but Q = " + fmt::format("{:.6g}", c.nonlinear_coeff) +
            " rad/s, v_g' = " + fmt::format("{:.6g}", c.group_dispersion()) +
            " m^2/s (spin correction factor 1 - (2 mu_B B0 / m_i c_A^2)^2 = " +
            fmt::format("{:.6g}", c.spin_correction_factor) + ")");
  }
  const double w = soliton_width(spec.peak_amplitude, c, b0);
  if (!(10.0 * w < grid.length)) {
    throw ValidationError("soliton", "width " + fmt::format("{:.6g}", w) +
                                         " m does not fit the box: need 10 W < L");
  }
  if (!(w > 4.0 * grid.spacing())) {
    throw ValidationError("soliton", "width " + fmt::format("{:.6g}", w) +
                                         " m is under-resolved: need W > 4 L / N");
  }
}

/// Analytic soliton A sech((zeta - zeta0)/W) exp(i (phase0 + Q A^2 t / (2 B0^2)))
/// sampled on the grid, measuring zeta - zeta0 to the nearest periodic image.
inline std::vector<std::complex<double>> soliton_profile(const SolitonSpec& spec,
                                                         const NlsCoefficients& c, double b0,
                                                         const Grid& grid, double t = 0.0) {
  const double a = spec.peak_amplitude;
  const double w = soliton_width(a, c, b0);
  const double phase = spec.phase + c.nonlinear_coeff * a * a * t / (2.0 * b0 * b0);
  const std::complex<double> carrier = std::polar(a, phase);
  std::vector<std::complex<double>> out(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) {
    double d = grid.coordinate(j) - spec.center;
    d -= grid.length * std::round(d / grid.length);
    out[j] = carrier / std::cosh(d / w);
  }
  return out;
}

inline EnvelopeState initialize_soliton(const SolitonSpec& spec, const NlsCoefficients& c,
                                        double b0, const Grid& grid) {
  check_soliton(spec, c, b0, grid);
  EnvelopeState s{grid, soliton_profile(spec, c, b0, grid), 0.0, 0, c, b0};
  validate(s);
  return s;
}

/// Uniform background A0 (1 + eps cos(2 pi m (zeta - zeta_min) / L)).
inline EnvelopeState initialize_uniform(double background_amplitude, double relative_perturbation,
                                        std::size_t mode, const NlsCoefficients& c, double b0,
                                        const Grid& grid) {
  validate(grid);
  if (!(background_amplitude > 0.0) || !std::isfinite(background_amplitude)) {
    throw ValidationError("background_amplitude", "must be finite and > 0");
  }
  if (!std::isfinite(relative_perturbation)) {
    throw ValidationError("perturbation", "must be finite");
  }
  if (mode == 0 || mode >= grid.points / 2) {
    throw ValidationError("mode", "must lie in [1, N/2)");
  }
  EnvelopeState s{grid, std::vector<std::complex<double>>(grid.points), 0.0, 0, c, b0};
  for (std::size_t j = 0; j < grid.points; ++j) {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(mode * j) /
                       static_cast<double>(grid.points);
    s.amplitude[j] = background_amplitude * (1.0 + relative_perturbation * std::cos(arg));
  }
  validate(s);
  return s;
}

/// Growth rate of a sideband kappa on a uniform background of amplitude A0:
///   Gamma = |kappa| sqrt(max(0, Q v_g' A0^2 / B0^2 - (v_g' kappa / 2)^2)).
inline double modulational_instability_rate(const NlsCoefficients& c, double b0,
                                            double background_amplitude, double kappa) {
  const double vgp = c.group_dispersion();
  const double focusing = c.nonlinear_coeff * vgp;
  if (!(focusing > 0.0)) return 0.0;
  const double a = background_amplitude / b0;
  const double half = 0.5 * vgp * kappa;
  return std::abs(kappa) * std::sqrt(std::max(0.0, focusing * a * a - half * half));
}

}  // namespace spinalfven
