// Copyright (c) 2026 The aggsim Authors. All Rights Reserved.
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

#include "aggsim/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "aggsim/kernels.hpp"
#include "aggsim/rng.hpp"

namespace aggsim {

std::size_t ChannelParams::window_bins() const {
    return static_cast<std::size_t>(std::llround((delta / 2.0) / df()));
}

ChannelParams ChannelParams::with_resolution(double bandwidth, double delta,
                                             std::size_t bins_per_half_delta) {
    if (!(bandwidth > 0.0) || !(delta > 0.0) || delta > bandwidth)
        throw std::invalid_argument("with_resolution: need 0 < delta <= bandwidth");
    if (bins_per_half_delta < 8)
        throw std::invalid_argument("with_resolution: need at least 8 bins per delta/2");
    ChannelParams p;
    p.bandwidth = bandwidth;
    p.delta = delta;
    const double steps = bandwidth / (delta / 2.0) * static_cast<double>(bins_per_half_delta);
    const long long rounded = std::llround(steps);
    if (std::abs(steps - static_cast<double>(rounded)) > 1e-9 * steps)
        throw std::invalid_argument(
            "with_resolution: 2*bandwidth/delta*bins_per_half_delta must be an integer");
    p.freq_bins = static_cast<std::size_t>(rounded) + 1;
    return p;
}

void ChannelParams::validate() const {
    if (!(bandwidth > 0.0)) throw std::invalid_argument("ChannelParams: bandwidth must be > 0");
    if (!(delta > 0.0) || delta > bandwidth)
        throw std::invalid_argument("ChannelParams: need 0 < delta <= bandwidth");
    if (!(alpha > 2.0)) throw std::invalid_argument("ChannelParams: alpha must be > 2");
    if (!(noise_density > 0.0))
        throw std::invalid_argument("ChannelParams: noise_density must be > 0");
    if (freq_bins < 2) throw std::invalid_argument("ChannelParams: freq_bins must be >= 2");
    const double w = (delta / 2.0) / df();
    if (std::abs(w - std::llround(w)) > 1e-6 * w)
        throw std::invalid_argument(
            "ChannelParams: delta/2 must be a whole number of grid steps");
    if (window_bins() < 8)
        throw std::invalid_argument("ChannelParams: fewer than 8 bins span delta/2");
}

double autocorrelation_phi(const ChannelParams& params, double f_lag) {
    const double a = std::abs(f_lag);
    if (a >= params.delta / 2.0) return 0.0;
    return 1.0 - 2.0 * a / params.delta;
}

FadingChannel sample_channel(const ChannelParams& params, std::uint64_t rng_seed) {
    params.validate();
    const std::size_t n = params.freq_bins;
    const std::size_t w = params.window_bins();
    Xoshiro256pp rng(rng_seed);
    std::vector<std::complex<double>> g(n + w - 1);
    for (auto& z : g) z = rng.complex_normal();
    FadingChannel ch;
    ch.response.resize(n);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < w; ++j) acc += g[j];
    const double norm = 1.0 / std::sqrt(static_cast<double>(w));
    ch.response[0] = acc * norm;
    for (std::size_t k = 1; k < n; ++k) {
        acc += g[k + w - 1] - g[k - 1];
        ch.response[k] = acc * norm;
    }
    return ch;
}

double path_loss_gain(const ChannelParams& params, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("path_loss_gain: r must be > 0");
    return std::pow(r, -params.alpha);
}

double channel_energy(const ChannelParams& params, const FadingChannel& channel) {
    const std::size_t n = channel.response.size();
    if (n != params.freq_bins)
        throw std::invalid_argument("channel_energy: response length != freq_bins");
    const auto& k = kernels::active();
    std::vector<double> p(n);
    k.abs_sq(channel.response.data(), p.data(), n);
    const double sum = k.reduce_sum(p.data(), n) - 0.5 * (p.front() + p.back());
    return sum * params.df() / params.bandwidth;
}

}  // namespace aggsim
