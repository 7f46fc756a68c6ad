#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aggsim/channel.hpp"
#include "aggsim/stats.hpp"

namespace aggsim {

// Aggregate coherent-gain statistic for m co-located transmitters at range r:
//   X = (r^-alpha / B) * integral of [ sum_i |H_i(f)|^2 / sqrt(E_i) ]^2 df
// where E_i is the band-average energy of channel i.  The per-channel
// 1/sqrt(E_i) normalization models transmit power control.  When
// energies_out is non-null it receives the per-channel E_i values.
double compute_x(const ChannelParams& params,
                 const std::vector<FadingChannel>& channels, double r,
                 std::vector<double>* energies_out = nullptr);

// Large-m prediction for E[X]: (k_mu * m)^2 * r^-alpha.
double predicted_mean(std::size_t m, double r, double alpha, double k_mu = 1.0);

// Finite-m refinement m*(m+1)*r^-alpha; the +m comes from the fourth moment
// of the Rayleigh envelope (E|H|^4 = 2).
double predicted_mean_finite(std::size_t m, double r, double alpha);

// Variance constant: k_sigma = Var(E_i) = (2/B) * integral over [0, B/2] of
// (1 - f/B) * phi(f)^2 df.  For the triangular phi this equals
// delta/(3B) - delta^2/(24 B^2).
double k_sigma(const ChannelParams& params);

// Alternate variance constant assembled from Gauss hypergeometric factors
// that collapse to polynomials (2F1(-1,-1;1;z) = 1+z):
//   (8/B) * [ integral over [0, B/2] of (1 - f/B)(1 - phi^4) df  -  1 ]
// It is dimensionally consistent only at B = 1 (phi == 0 gives 3 - 8/B)
// and is retained for side-by-side comparison, not used in predictions.
double k_sigma_hyp(const ChannelParams& params);

// Prediction for Var(X): m^3 * k_sigma * r^-2alpha.
double predicted_var(const ChannelParams& params, std::size_t m, double r);

// Interference localization constant
//   K0 = (1/B) * integral over [-delta/2, delta/2] of
//        sinc(2 pi (delta+B) f / (delta B)) * phi(f)^2 df,
// computed by interval-doubling quadrature; value always in (0, delta/B].
Quadrature k0_constant(double bandwidth, double delta);
Quadrature k0_constant(const ChannelParams& params);

struct NoisePowers {
    double interference = 0.0;  // sigma_I^2
    double noise = 0.0;         // sigma_N^2
};

// Residual interference and thermal noise seen by a receiver protected by a
// quiet zone of radius rho0, conditioned on gain statistic x:
//   sigma_I^2 = 2 pi P (1 + B/delta) K0 / ((alpha-2) rho0^(alpha-2)) * x
//   sigma_N^2 = B N0 * x
NoisePowers interference_and_noise(const ChannelParams& params, double power,
                                   double rho0, double k0, double x);

// Link rate with effective bandwidth W = delta*B/(delta+B) (natural log):
//   W * ln(1 + P x / (W N0 + 2 pi P K0 / ((alpha-2) rho0^(alpha-2))))
double trc_rate(const ChannelParams& params, double power, double rho0,
                double k0, double x);

struct McConfig {
    std::size_t nodes = 64;      // m
    double range = 1.0;          // r
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    double power = 1.0;          // P, used for the per-trial rate
    double rho0 = 1.0;           // quiet-zone radius for the rate
};

struct TrcLinkStats {
    Moments moments;               // sample moments of X
    double predicted_mean = 0.0;   // (k_mu=1) m^2 r^-alpha
    double predicted_mean_finite = 0.0;
    double predicted_var = 0.0;
    double k_mu_estimate = 0.0;    // sample mean of sqrt(E_i)
    double k_sigma = 0.0;
    double k0 = 0.0;
    double ks_distance = 0.0;      // KS distance of standardized X to normal
    double mean_rate = 0.0;        // average trc_rate over trials
    std::vector<double> samples;   // X per trial, in trial order
};

// Deterministic Monte Carlo over trials.  Channel i in trial t is seeded
// with derive_seed(master_seed, t, i), so results are identical for any
// thread count and any trial execution order.
TrcLinkStats monte_carlo_x(const ChannelParams& params, const McConfig& config);

}  // namespace aggsim
