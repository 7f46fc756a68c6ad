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

#include "aggsim/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aggsim/stats.hpp"

namespace aggsim {

double baseline_lifetime(const ChannelParams& params, double n, double lambda,
                         double e0, double c2) {
    if (!(n > 0.0) || !(lambda > 0.0) || !(e0 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("baseline_lifetime: arguments must be positive");
    const double b = params.bandwidth;
    const double z = c2 * n * lambda / b;
    if (z > 700.0)  // expm1 would overflow; e^z dominates the -1 exactly here
        return std::exp(std::log(e0 / (b * params.noise_density)) - z);
    return e0 / (b * params.noise_density * std::expm1(z));
}

double relay_fraction(const TrafficMap& map) {
    std::int64_t best = 0;
    for (std::int64_t y = -map.half; y <= map.half; ++y)
        for (std::int64_t x = -map.half; x <= map.half; ++x) {
            if (x == 0 && y == 0) continue;
            best = std::max(best, map.load_at(x, y));
        }
    return static_cast<double>(best) / static_cast<double>(map.node_count());
}

PowerProfile trc_power_profile(const ChannelParams& params, const Partition& part,
                               double lambda) {
    if (!part.valid)
        throw std::invalid_argument("trc_power_profile: invalid partition");
    if (!(lambda > 0.0))
        throw std::invalid_argument("trc_power_profile: lambda must be positive");
    const double b = params.bandwidth;
    const double n0 = params.noise_density;
    const double w = params.delta * b / (params.delta + b);
    const double k_prime = 1.0;
    const double n = part.n;

    PowerProfile pp;
    const double inner = (2.0 * part.d - part.big_r) * (2.0 * part.d - part.big_r);
    pp.gather = b * n0 * std::expm1(inner * lambda / b);
    pp.gather_linear = n0 * inner * lambda;

    const double intra_load =
        lambda * part.big_r * part.big_r + 16.0 * n * lambda / (part.clusters + 4.0);
    pp.intra = w * n0 * std::expm1(intra_load / w);
    pp.intra_linear = n0 * intra_load;

    const double gain = std::pow(part.big_r, 4.0) * std::pow(part.d_prime, -params.alpha);
    pp.inter = w * k_prime * n0 / gain * std::expm1(48.0 * n * lambda / w);
    pp.inter_linear = 48.0 * k_prime * n0 * n * lambda / gain;

    pp.peak = std::max(pp.gather, pp.intra + pp.inter);
    return pp;
}

double trc_lifetime(double e0, const PowerProfile& profile) {
    return e0 / profile.peak;
}

double lifetime_exponent(double beta, double gamma, double alpha) {
    return std::min(1.0 - 2.0 * beta,
                    std::min(4.0 * gamma - alpha * beta, beta - gamma));
}

LifetimeSweep lifetime_experiment(const ChannelParams& params,
                                  const LifetimeConfig& config) {
    if (config.points_per_decade == 0 || config.log10_n_max <= config.log10_n_min)
        throw std::invalid_argument("lifetime_experiment: bad sweep range");
    LifetimeSweep sweep;
    sweep.predicted_exponent =
        lifetime_exponent(config.beta, config.gamma, params.alpha);

    const double step = 1.0 / static_cast<double>(config.points_per_decade);
    std::vector<double> log_n, log_norm;
    sweep.ratio_monotone = true;
    double prev_ratio = 0.0;
    for (double e = config.log10_n_min; e <= config.log10_n_max + 1e-9; e += step) {
        LifetimePoint pt;
        pt.n = std::pow(10.0, e);
        pt.lambda = config.lambda_scale / (pt.n * std::log(pt.n));
        const Partition part = make_partition(pt.n, config.beta, config.gamma);
        pt.baseline = baseline_lifetime(params, pt.n, pt.lambda, config.e0, config.c2);
        pt.trc = trc_lifetime(config.e0, trc_power_profile(params, part, pt.lambda));
        pt.ratio = pt.trc / pt.baseline;
        pt.normalized = pt.trc * pt.n * pt.lambda / config.e0;
        if (!sweep.points.empty() && pt.ratio <= prev_ratio)
            sweep.ratio_monotone = false;
        prev_ratio = pt.ratio;
        log_n.push_back(std::log(pt.n));
        log_norm.push_back(std::log(pt.normalized));
        sweep.points.push_back(pt);
    }
    const LineFit fit = fit_line(log_n, log_norm);
    sweep.slope = fit.slope;
    sweep.intercept = fit.intercept;
    sweep.c3 = std::exp(fit.intercept);
    return sweep;
}

}  // namespace aggsim
