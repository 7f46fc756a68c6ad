// Copyright 2026 The Artifact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aggsim/trc_link.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aggsim/kernels.hpp"
#include "aggsim/parallel.hpp"
#include "aggsim/rng.hpp"

namespace aggsim {

namespace {

// Trapezoid weights on the native grid: full interior, half endpoints.
double grid_sum(const double* v, std::size_t n) {
    const double s = kernels::active().reduce_sum(v, n);
    return s - 0.5 * (v[0] + v[n - 1]);
}

}  // namespace

double compute_x(const ChannelParams& params,
                 const std::vector<FadingChannel>& channels, double r,
                 std::vector<double>* energies_out) {
    if (channels.empty()) throw std::invalid_argument("compute_x: no channels");
    if (!(r > 0.0)) throw std::invalid_argument("compute_x: r must be > 0");
    const std::size_t n = params.freq_bins;
    const auto& k = kernels::active();
    std::vector<double> p(n), acc(n, 0.0);
    if (energies_out) energies_out->clear();
    for (const auto& ch : channels) {
        if (ch.response.size() != n)
            throw std::invalid_argument("compute_x: response length != freq_bins");
        k.abs_sq(ch.response.data(), p.data(), n);
        const double e = grid_sum(p.data(), n) * params.df() / params.bandwidth;
        if (energies_out) energies_out->push_back(e);
        k.axpy(1.0 / std::sqrt(e), p.data(), acc.data(), n);
    }
    double quad = k.reduce_dot(acc.data(), acc.data(), n);
    quad -= 0.5 * (acc[0] * acc[0] + acc[n - 1] * acc[n - 1]);
    return std::pow(r, -params.alpha) / params.bandwidth * quad * params.df();
}

double predicted_mean(std::size_t m, double r, double alpha, double k_mu) {
    const double km = k_mu * static_cast<double>(m);
    return km * km * std::pow(r, -alpha);
}

double predicted_mean_finite(std::size_t m, double r, double alpha) {
    const double md = static_cast<double>(m);
    return md * (md + 1.0) * std::pow(r, -alpha);
}

double k_sigma(const ChannelParams& params) {
    const double b = params.bandwidth;
    const auto f = [&](double u) {
        const double phi = autocorrelation_phi(params, u);
        return (1.0 - u / b) * phi * phi;
    };
    return 2.0 / b * integrate_refined(f, 0.0, params.delta / 2.0).value;
}

double k_sigma_hyp(const ChannelParams& params) {
    const double b = params.bandwidth;
    const auto f = [&](double u) {
        const double p2 = autocorrelation_phi(params, u) * autocorrelation_phi(params, u);
        // (1 - phi^2) * 2F1(-1,-1;1;phi^2), with 2F1(-1,-1;1;z) = 1 + z.
        return (1.0 - u / b) * (1.0 - p2) * (1.0 + p2);
    };
    return 8.0 / b * (integrate_refined(f, 0.0, b / 2.0).value - 1.0);
}

double predicted_var(const ChannelParams& params, std::size_t m, double r) {
    const double md = static_cast<double>(m);
    return md * md * md * k_sigma(params) * std::pow(r, -2.0 * params.alpha);
}

Quadrature k0_constant(double bandwidth, double delta) {
    if (!(bandwidth > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("k0_constant: need positive bandwidth and delta");
    const double rate = 2.0 * std::numbers::pi * (delta + bandwidth) / (delta * bandwidth);
    const auto f = [&](double u) {
        double phi = 1.0 - 2.0 * std::abs(u) / delta;
        if (phi < 0.0) phi = 0.0;
        return sinc(rate * u) * phi * phi;
    };
    Quadrature q = integrate_refined(f, -delta / 2.0, delta / 2.0);
    q.value /= bandwidth;
    return q;
}

Quadrature k0_constant(const ChannelParams& params) {
    return k0_constant(params.bandwidth, params.delta);
}

NoisePowers interference_and_noise(const ChannelParams& params, double power,
                                   double rho0, double k0, double x) {
    NoisePowers np;
    const double guard = (params.alpha - 2.0) * std::pow(rho0, params.alpha - 2.0);
    np.interference = 2.0 * std::numbers::pi * power *
                      (1.0 + params.bandwidth / params.delta) * k0 / guard * x;
    np.noise = params.bandwidth * params.noise_density * x;
    return np;
}

double trc_rate(const ChannelParams& params, double power, double rho0,
                double k0, double x) {
    const double w = params.delta * params.bandwidth / (params.delta + params.bandwidth);
    const double guard = (params.alpha - 2.0) * std::pow(rho0, params.alpha - 2.0);
    const double denom =
        w * params.noise_density + 2.0 * std::numbers::pi * power * k0 / guard;
    return w * std::log1p(power * x / denom);
}

TrcLinkStats monte_carlo_x(const ChannelParams& params, const McConfig& config) {
    params.validate();
    if (config.nodes == 0 || config.trials == 0)
        throw std::invalid_argument("monte_carlo_x: nodes and trials must be positive");

    TrcLinkStats out;
    out.k_sigma = k_sigma(params);
    out.k0 = k0_constant(params).value;
    out.predicted_mean = predicted_mean(config.nodes, config.range, params.alpha);
    out.predicted_mean_finite =
        predicted_mean_finite(config.nodes, config.range, params.alpha);
    out.predicted_var = predicted_var(params, config.nodes, config.range);

    out.samples.assign(config.trials, 0.0);
    std::vector<double> sqrt_e(config.trials, 0.0);
    std::vector<double> rates(config.trials, 0.0);

    parallel_for_index(config.trials, [&](std::size_t t) {
        std::vector<FadingChannel> channels(config.nodes);
        for (std::size_t i = 0; i < config.nodes; ++i)
            channels[i] = sample_channel(
                params, derive_seed(config.master_seed, t, i));
        std::vector<double> energies;
        const double x = compute_x(params, channels, config.range, &energies);
        out.samples[t] = x;
        double se = 0.0;
        for (double e : energies) se += std::sqrt(e);
        sqrt_e[t] = se / static_cast<double>(config.nodes);
        rates[t] = trc_rate(params, config.power, config.rho0, out.k0, x);
    });

    out.moments = compute_moments(out.samples);
    out.ks_distance = ks_normal_distance(out.samples);
    double km = 0.0, rm = 0.0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        km += sqrt_e[t];
        rm += rates[t];
    }
    out.k_mu_estimate = km / static_cast<double>(config.trials);
    out.mean_rate = rm / static_cast<double>(config.trials);
    return out;
}

}  // namespace aggsim
