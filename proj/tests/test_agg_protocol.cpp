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
#include <cstdint>
#include <vector>

#include "aggsim/agg_protocol.hpp"
#include "doctest.h"

using namespace aggsim;

TEST_CASE("slot assignment tiles a 2(k+1)-periodic lattice") {
    for (int k : {0, 1, 2, 3}) {
        const std::int64_t period = 2 * (k + 1);
        CHECK(frame_slots(k) == static_cast<std::size_t>(period * period));
        for (std::int64_t y = -period; y <= period; ++y)
            for (std::int64_t x = -period; x <= period; ++x) {
                const int s = slot_of(x, y, k);
                CHECK(s >= 0);
                CHECK(s < static_cast<int>(frame_slots(k)));
                CHECK(slot_of(x + period, y, k) == s);
                CHECK(slot_of(x, y + period, k) == s);
                CHECK(slot_of(x - 5 * period, y + 3 * period, k) == s);
            }
        // Within one period, every cell gets a distinct slot.
        std::vector<bool> used(frame_slots(k), false);
        for (std::int64_t y = 0; y < period; ++y)
            for (std::int64_t x = 0; x < period; ++x) {
                const int s = slot_of(x, y, k);
                CHECK(!used[static_cast<std::size_t>(s)]);
                used[static_cast<std::size_t>(s)] = true;
            }
    }
}

TEST_CASE("interference constant matches a 2D brute-force lattice sum") {
    for (double alpha : {2.5, 3.0, 4.0}) {
        const std::int64_t radius = 1500;
        double brute = 0.0;
        // Direct sum over co-slot offsets; 8t cells per Chebyshev shell is a
        // consequence here, not an input.
        for (std::int64_t j = -radius; j <= radius; ++j)
            for (std::int64_t i = -radius; i <= radius; ++i) {
                if (i == 0 && j == 0) continue;
                const double shell =
                    static_cast<double>(std::max(std::llabs(i), std::llabs(j)));
                brute += std::pow(2.0 * shell - 1.0, -alpha);
            }
        // Add the midpoint-rule estimate of everything past the cut.
        const double u0 = 2.0 * (static_cast<double>(radius) + 0.5) - 1.0;
        brute += 2.0 * (std::pow(u0, 2.0 - alpha) / (alpha - 2.0) +
                        std::pow(u0, 1.0 - alpha) / (alpha - 1.0));
        const double k1 = tdma_interference_constant(alpha);
        CAPTURE(alpha);
        CHECK(k1 == doctest::Approx(brute).epsilon(1e-4));
    }
    CHECK_THROWS_AS(tdma_interference_constant(2.0), std::invalid_argument);
}

TEST_CASE("partial shell sums are consistent with the full constant") {
    const double alpha = 3.0;
    const double k1 = tdma_interference_constant(alpha);
    CHECK(tdma_interference_partial(alpha, 10) < k1);
    CHECK(tdma_interference_partial(alpha, 2000) ==
          doctest::Approx(k1).epsilon(1e-3));
    CHECK(tdma_interference_partial(alpha, 1) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("broadcast rate bound is the documented closed form") {
    ChannelParams p;
    p.bandwidth = 2.0;
    p.alpha = 3.0;
    p.noise_density = 0.5;
    const double k1 = tdma_interference_constant(p.alpha);
    const int k = 1;
    const double cell = 1.5, power = 2.0;
    const double reach = cell * (k + 1);
    const double expected =
        p.bandwidth / 16.0 *
        std::log(1.0 + power / (p.bandwidth * p.noise_density *
                                    std::pow(reach, p.alpha) +
                                k1 * power));
    CHECK(tdma_broadcast_rate(p, k, cell, power) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("built schedule always beats its own bound") {
    ChannelParams p;
    p.bandwidth = 1.0;
    p.noise_density = 1.0;
    for (double alpha : {2.5, 3.0, 4.0}) {
        p.alpha = alpha;
        for (int k : {0, 1, 2}) {
            const ScheduleCheck sc = measure_schedule(p, k, 1.0, 1.0);
            CAPTURE(alpha);
            CAPTURE(k);
            CHECK(sc.frame_length == frame_slots(k));
            CHECK(sc.spacing_ok);
            CHECK(sc.bound_ok);
            CHECK(sc.worst_sinr >= sc.bound_sinr);
            CHECK(sc.bound_sinr > 0.0);
        }
    }
}

TEST_CASE("partition arithmetic at n = 1e6") {
    const Partition part = make_partition(1e6, 0.35, 0.30);
    CHECK(part.valid);
    CHECK(part.d == doctest::Approx(std::pow(10.0, 2.1)).epsilon(1e-12));
    CHECK(part.big_r == doctest::Approx(std::pow(10.0, 1.8)).epsilon(1e-12));
    CHECK(part.clusters == doctest::Approx(15.286908105283709).epsilon(1e-12));
    CHECK(part.n1 == doctest::Approx(31697.863849222221).epsilon(1e-9));
    CHECK(part.d_prime ==
          doctest::Approx(part.d + part.big_r / std::sqrt(2.0)).epsilon(1e-12));
    const double ring = std::sqrt(2.0) * part.d + 2.0 * part.big_r;
    CHECK(part.n3 == doctest::Approx(1e6 - ring * ring).epsilon(1e-12));

    // Too-aggressive inner region leaves no outer nodes.
    CHECK_FALSE(make_partition(1e4, 0.45, 0.30).valid);
    CHECK_THROWS_AS(make_partition(1e6, 0.6, 0.3), std::invalid_argument);
}

TEST_CASE("phase rates satisfy the relay-link identity") {
    ChannelParams p;
    p.bandwidth = 1.0;
    p.delta = 1.0;
    p.alpha = 3.0;
    p.noise_density = 1.0;
    const Partition part = make_partition(1e8, 0.35, 0.30);
    const RateBreakdown rb = achievable_rate(p, part, 1.0);

    // Independent evaluation of the transport phase straight from its
    // definition, not through r_inter.
    const double w = p.delta * p.bandwidth / (p.delta + p.bandwidth);
    const double arg = std::pow(part.big_r, 4.0) *
                       std::pow(part.d_prime, -p.alpha) / (w * p.noise_density);
    const double direct = w / (48.0 * part.n) * std::log1p(arg);
    CHECK(rb.lambda_transport == doctest::Approx(direct).epsilon(1e-12));
    CHECK(rb.lambda_transport ==
          doctest::Approx(rb.r_inter * part.clusters / (16.0 * part.n)).epsilon(1e-12));

    CHECK(rb.achievable ==
          doctest::Approx(std::min({rb.lambda_gather, rb.lambda_transport,
                                    rb.lambda_deliver})));
    CHECK(rb.achievable <= rb.genie);
    CHECK(rb.genie ==
          doctest::Approx(p.bandwidth *
                          std::log1p(part.n * part.n / (p.bandwidth * p.noise_density)) /
                          part.n)
              .epsilon(1e-12));
    CHECK(rb.lambda_gather > 0.0);
    CHECK(rb.lambda_deliver > 0.0);
}
