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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace aggsim {

// Frequency-domain model of a wide-sense-stationary Rayleigh fading channel.
// H(f) is sampled on freq_bins equally spaced points covering [-B/2, B/2]
// (both endpoints included), unit average power, and autocorrelation
// phi(f) = max(0, 1 - 2|f|/delta): zero beyond half the coherence bandwidth.
struct ChannelParams {
    double bandwidth = 1.0;      // B > 0
    double delta = 1.0 / 64.0;   // coherence bandwidth, 0 < delta <= B
    double alpha = 3.0;          // path-loss exponent, > 2
    double noise_density = 1.0;  // N0 > 0
    std::size_t freq_bins = 1025;

    double df() const { return bandwidth / static_cast<double>(freq_bins - 1); }

    // Moving-average window in bins; equals half a coherence interval.
    std::size_t window_bins() const;

    // freq_bins chosen so that delta/2 is exactly bins_per_half_delta grid
    // steps; the resolution floor is 8.
    static ChannelParams with_resolution(double bandwidth, double delta,
                                         std::size_t bins_per_half_delta = 8);

    // Throws std::invalid_argument when any constraint fails.
    void validate() const;
};

struct FadingChannel {
    std::vector<std::complex<double>> response;  // H(f_k), k = 0..freq_bins-1
};

// Triangular autocorrelation of the synthesized channel process.
double autocorrelation_phi(const ChannelParams& params, double f_lag);

// Deterministic draw: one seed, one channel. The triangular autocorrelation
// is realized exactly by a width-W rectangular moving average over i.i.d.
// unit circular complex Gaussians, renormalized to unit power.
FadingChannel sample_channel(const ChannelParams& params, std::uint64_t rng_seed);

// Large-scale attenuation r^-alpha; requires r > 0.
double path_loss_gain(const ChannelParams& params, double r);

// E = (1/B) * integral of |H(f)|^2 df, trapezoidal rule on the native grid.
double channel_energy(const ChannelParams& params, const FadingChannel& channel);

}  // namespace aggsim
