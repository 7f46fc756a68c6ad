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

#include <cmath>
#include <complex>
#include <vector>

#include "aggsim/channel.hpp"
#include "aggsim/rng.hpp"
#include "doctest.h"

using namespace aggsim;

TEST_CASE("with_resolution builds a consistent grid") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 64.0, 8);
    CHECK(p.freq_bins == 1025);
    CHECK(p.window_bins() == 8);
    CHECK(p.df() == doctest::Approx(1.0 / 1024.0).epsilon(1e-15));
    CHECK_NOTHROW(p.validate());

    const ChannelParams q = ChannelParams::with_resolution(2.0, 0.5, 16);
    CHECK(q.freq_bins == 8 * 16 + 1);
    CHECK(q.window_bins() == 16);
    CHECK_NOTHROW(q.validate());

    CHECK_THROWS_AS(ChannelParams::with_resolution(1.0, 0.3, 8), std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::with_resolution(1.0, 1.0 / 64.0, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(ChannelParams::with_resolution(1.0, 2.0, 8), std::invalid_argument);
}

TEST_CASE("validate rejects inconsistent parameter sets") {
    ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 8.0, 8);
    CHECK_NOTHROW(p.validate());
    ChannelParams bad = p;
    bad.alpha = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.delta = 0.1007;  // delta/2 no longer a whole number of grid steps
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.freq_bins = 65;  // window shrinks to 4 bins
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.noise_density = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("channel draws are deterministic in the seed") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 16.0, 8);
    const FadingChannel a = sample_channel(p, 77);
    const FadingChannel b = sample_channel(p, 77);
    const FadingChannel c = sample_channel(p, 78);
    REQUIRE(a.response.size() == p.freq_bins);
    bool identical = true, distinct = false;
    for (std::size_t k = 0; k < p.freq_bins; ++k) {
        identical = identical && a.response[k] == b.response[k];
        distinct = distinct || a.response[k] != c.response[k];
    }
    CHECK(identical);
    CHECK(distinct);
}

TEST_CASE("synthesized channel has unit power and the triangular correlation") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 16.0, 8);
    const std::size_t w = p.window_bins();
    const std::size_t n = p.freq_bins;
    const std::size_t seeds = 400;

    double power = 0.0;
    // Lags 0, W/2, W, 2W should give phi = 1, 0.5, 0, 0.
    const std::size_t lags[] = {0, w / 2, w, 2 * w};
    std::complex<double> corr[4] = {};
    std::size_t corr_n[4] = {};
    for (std::size_t s = 0; s < seeds; ++s) {
        const FadingChannel ch = sample_channel(p, derive_seed(5, s));
        for (std::size_t k = 0; k < n; ++k) power += std::norm(ch.response[k]);
        for (int li = 0; li < 4; ++li) {
            const std::size_t l = lags[li];
            for (std::size_t k = 0; k + l < n; ++k) {
                corr[li] += ch.response[k] * std::conj(ch.response[k + l]);
                ++corr_n[li];
            }
        }
    }
    power /= static_cast<double>(seeds * n);
    CHECK(power == doctest::Approx(1.0).epsilon(0.03));

    const double expected[] = {1.0, 0.5, 0.0, 0.0};
    for (int li = 0; li < 4; ++li) {
        const std::complex<double> r = corr[li] / static_cast<double>(corr_n[li]);
        CHECK(std::abs(r - expected[li]) < 0.05);
        const double phi = autocorrelation_phi(p, static_cast<double>(lags[li]) * p.df());
        CHECK(phi == doctest::Approx(expected[li]).epsilon(1e-12));
    }
}

TEST_CASE("autocorrelation_phi is the compactly supported triangle") {
    ChannelParams p;
    p.bandwidth = 2.0;
    p.delta = 0.5;
    CHECK(autocorrelation_phi(p, 0.0) == 1.0);
    CHECK(autocorrelation_phi(p, 0.125) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(autocorrelation_phi(p, 0.25) == 0.0);
    CHECK(autocorrelation_phi(p, 5.0) == 0.0);
    CHECK(autocorrelation_phi(p, -0.125) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("band-average channel energy concentrates at 1") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 8.0, 8);
    double mean = 0.0;
    const std::size_t seeds = 400;
    for (std::size_t s = 0; s < seeds; ++s) {
        const double e = channel_energy(p, sample_channel(p, derive_seed(11, s)));
        CHECK(e > 0.0);
        mean += e;
    }
    mean /= static_cast<double>(seeds);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("path loss is r^-alpha") {
    ChannelParams p;
    p.alpha = 3.0;
    CHECK(path_loss_gain(p, 2.0) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(path_loss_gain(p, 1.0) == 1.0);
    CHECK_THROWS_AS(path_loss_gain(p, 0.0), std::invalid_argument);
}
