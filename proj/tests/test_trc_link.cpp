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
#include <numbers>
#include <vector>

#include "aggsim/channel.hpp"
#include "aggsim/rng.hpp"
#include "aggsim/trc_link.hpp"
#include "doctest.h"

using namespace aggsim;

TEST_CASE("compute_x matches a plain-loop reimplementation") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0, 8);
    ChannelParams pp = p;
    pp.alpha = 2.5;
    std::vector<FadingChannel> ch;
    for (std::uint64_t i = 0; i < 3; ++i) ch.push_back(sample_channel(pp, 50 + i));
    const double r = 1.7;

    // Independent evaluation: trapezoid sums written out longhand.
    const std::size_t n = pp.freq_bins;
    auto band = [&](const std::vector<double>& v) {
        double s = 0.5 * (v.front() + v.back());
        for (std::size_t k = 1; k + 1 < n; ++k) s += v[k];
        return s * pp.df();
    };
    std::vector<double> acc(n, 0.0);
    for (const auto& c : ch) {
        std::vector<double> pwr(n);
        for (std::size_t k = 0; k < n; ++k) pwr[k] = std::norm(c.response[k]);
        const double e = band(pwr) / pp.bandwidth;
        for (std::size_t k = 0; k < n; ++k) acc[k] += pwr[k] / std::sqrt(e);
    }
    std::vector<double> acc2(n);
    for (std::size_t k = 0; k < n; ++k) acc2[k] = acc[k] * acc[k];
    const double direct = std::pow(r, -pp.alpha) / pp.bandwidth * band(acc2);

    std::vector<double> energies;
    const double x = compute_x(pp, ch, r, &energies);
    CHECK(x == doctest::Approx(direct).epsilon(1e-12));
    REQUIRE(energies.size() == 3);
    for (double e : energies) CHECK(e > 0.0);
}

TEST_CASE("mean and variance predictions are the documented polynomials") {
    CHECK(predicted_mean(64, 1.0, 3.0) == doctest::Approx(4096.0));
    CHECK(predicted_mean(64, 2.0, 3.0) == doctest::Approx(512.0));
    CHECK(predicted_mean(10, 1.0, 3.0, 0.5) == doctest::Approx(25.0));
    CHECK(predicted_mean_finite(64, 1.0, 3.0) == doctest::Approx(4160.0));

    ChannelParams p;
    p.bandwidth = 1.0;
    p.delta = 1.0 / 64.0;
    // Closed form for the triangular correlation: d/(3B) - d^2/(24 B^2).
    const double closed = p.delta / 3.0 - p.delta * p.delta / 24.0;
    CHECK(k_sigma(p) == doctest::Approx(closed).epsilon(1e-9));
    p.bandwidth = 2.0;
    p.delta = 0.5;
    const double closed2 =
        p.delta / (3.0 * p.bandwidth) -
        p.delta * p.delta / (24.0 * p.bandwidth * p.bandwidth);
    CHECK(k_sigma(p) == doctest::Approx(closed2).epsilon(1e-9));

    CHECK(predicted_var(p, 64, 1.0) ==
          doctest::Approx(64.0 * 64.0 * 64.0 * k_sigma(p)).epsilon(1e-12));
    p.alpha = 3.0;
    CHECK(predicted_var(p, 8, 2.0) ==
          doctest::Approx(512.0 * k_sigma(p) * std::pow(2.0, -6.0)).epsilon(1e-12));
}

TEST_CASE("alternate variance constant reduces to 3 - 8/B as the triangle vanishes") {
    ChannelParams p;
    p.bandwidth = 4.0;
    p.delta = 1e-7;
    CHECK(k_sigma_hyp(p) == doctest::Approx(3.0 - 8.0 / p.bandwidth).epsilon(1e-5));
    p.bandwidth = 1.0;
    p.delta = 1e-7;
    CHECK(k_sigma_hyp(p) == doctest::Approx(-5.0).epsilon(1e-5));
}

TEST_CASE("k0 quadrature against an independent Simpson evaluation") {
    const double bandwidth = 1.0, delta = 0.25;
    const double rate = 2.0 * std::numbers::pi * (delta + bandwidth) / (delta * bandwidth);
    const auto f = [&](double u) {
        const double phi = std::max(0.0, 1.0 - 2.0 * std::abs(u) / delta);
        const double s = rate * u;
        const double sc = std::abs(s) < 1e-12 ? 1.0 : std::sin(s) / s;
        return sc * phi * phi;
    };
    const std::size_t n = 1 << 16;
    const double h = delta / static_cast<double>(n);
    double simpson = f(-delta / 2.0) + f(delta / 2.0);
    for (std::size_t i = 1; i < n; ++i)
        simpson += (i % 2 ? 4.0 : 2.0) * f(-delta / 2.0 + h * static_cast<double>(i));
    simpson *= h / 3.0 / bandwidth;

    const Quadrature q = k0_constant(bandwidth, delta);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(simpson).epsilon(1e-8));
    CHECK(q.value <= delta / bandwidth);
    CHECK(q.value > 0.0);
}

TEST_CASE("k0 stays within its envelope over random geometries") {
    Xoshiro256pp rng(31);
    for (int i = 0; i < 25; ++i) {
        const double bandwidth = 0.5 + 4.0 * rng.uniform();
        const double delta = bandwidth * (0.01 + 0.99 * rng.uniform());
        const Quadrature q = k0_constant(bandwidth, delta);
        CAPTURE(bandwidth);
        CAPTURE(delta);
        CHECK(q.converged);
        CHECK(q.value <= delta / bandwidth * (1.0 + 1e-12));
        CHECK(q.value > 0.0);
    }
}

TEST_CASE("interference, noise, and rate formulas match longhand arithmetic") {
    ChannelParams p;
    p.bandwidth = 2.0;
    p.delta = 0.25;
    p.alpha = 3.5;
    p.noise_density = 0.7;
    const double power = 1.3, rho0 = 2.2, k0 = 0.05, x = 10.0;

    const NoisePowers np = interference_and_noise(p, power, rho0, k0, x);
    const double guard = (p.alpha - 2.0) * std::pow(rho0, p.alpha - 2.0);
    CHECK(np.interference ==
          doctest::Approx(2.0 * std::numbers::pi * power * (1.0 + p.bandwidth / p.delta) *
                          k0 / guard * x)
              .epsilon(1e-14));
    CHECK(np.noise == doctest::Approx(p.bandwidth * p.noise_density * x).epsilon(1e-14));

    const double w = p.delta * p.bandwidth / (p.delta + p.bandwidth);
    const double expected =
        w * std::log(1.0 + power * x /
                               (w * p.noise_density +
                                2.0 * std::numbers::pi * power * k0 / guard));
    CHECK(trc_rate(p, power, rho0, k0, x) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("monte carlo is deterministic and tracks its finite-size mean") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 8.0, 8);
    McConfig mc;
    mc.nodes = 8;
    mc.range = 1.5;
    mc.trials = 300;
    mc.master_seed = 4242;

    const TrcLinkStats a = monte_carlo_x(p, mc);
    const TrcLinkStats b = monte_carlo_x(p, mc);
    REQUIRE(a.samples.size() == mc.trials);
    for (std::size_t t = 0; t < mc.trials; ++t) CHECK(a.samples[t] == b.samples[t]);

    // m(m+1) r^-alpha with r = 1.5, alpha = 3.
    CHECK(a.predicted_mean_finite == doctest::Approx(72.0 / 3.375).epsilon(1e-12));
    CHECK(a.moments.mean ==
          doctest::Approx(a.predicted_mean_finite).epsilon(0.15));
    CHECK(a.k_mu_estimate == doctest::Approx(1.0).epsilon(0.05));
    CHECK(a.moments.variance > 0.0);
    CHECK(a.mean_rate > 0.0);
    CHECK(a.ks_distance < 0.2);
}

TEST_CASE("changing the master seed changes the draw") {
    const ChannelParams p = ChannelParams::with_resolution(1.0, 1.0 / 8.0, 8);
    McConfig mc;
    mc.nodes = 4;
    mc.trials = 10;
    mc.master_seed = 1;
    const TrcLinkStats a = monte_carlo_x(p, mc);
    mc.master_seed = 2;
    const TrcLinkStats b = monte_carlo_x(p, mc);
    bool differs = false;
    for (std::size_t t = 0; t < mc.trials; ++t)
        differs = differs || a.samples[t] != b.samples[t];
    CHECK(differs);
}
