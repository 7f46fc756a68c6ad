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

#include "aggsim/agg_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace aggsim {

namespace {

// integral of 8t(2t-1)^-alpha dt from t0 to infinity, via u = 2t-1:
// 2*(u0^(2-alpha)/(alpha-2) + u0^(1-alpha)/(alpha-1)) at u0 = 2*t0-1.
double shell_integral(double alpha, double t0) {
    const double u0 = 2.0 * t0 - 1.0;
    return 2.0 * (std::pow(u0, 2.0 - alpha) / (alpha - 2.0) +
                  std::pow(u0, 1.0 - alpha) / (alpha - 1.0));
}

// Midpoint-rule estimate of the shell sum past shell T (error O(T^-4)).
double shell_tail_estimate(double alpha, std::size_t last_shell) {
    return shell_integral(alpha, static_cast<double>(last_shell) + 0.5);
}

// True upper bound on the shell sum past shell T (the summand decreases).
double shell_tail_upper(double alpha, std::size_t last_shell) {
    return shell_integral(alpha, static_cast<double>(last_shell));
}

}  // namespace

std::size_t frame_slots(int k) {
    if (k < 0) throw std::invalid_argument("frame_slots: k must be >= 0");
    const std::size_t p = static_cast<std::size_t>(k) + 1;
    return 4 * p * p;
}

int slot_of(std::int64_t cx, std::int64_t cy, int k) {
    if (k < 0) throw std::invalid_argument("slot_of: k must be >= 0");
    const std::int64_t p = 2 * (static_cast<std::int64_t>(k) + 1);
    const std::int64_t mx = ((cx % p) + p) % p;
    const std::int64_t my = ((cy % p) + p) % p;
    return static_cast<int>(mx + p * my);
}

double tdma_interference_partial(double alpha, std::size_t shells) {
    double s = 0.0;
    for (std::size_t t = 1; t <= shells; ++t) {
        const double td = static_cast<double>(t);
        s += 8.0 * td * std::pow(2.0 * td - 1.0, -alpha);
    }
    return s;
}

double tdma_interference_constant(double alpha) {
    if (!(alpha > 2.0))
        throw std::invalid_argument("tdma_interference_constant: alpha must be > 2");
    double partial = 0.0;
    std::size_t shells = 0;
    double prev = 0.0;
    for (std::size_t block = 16; block <= (1u << 22); block *= 2) {
        for (std::size_t t = shells + 1; t <= block; ++t) {
            const double td = static_cast<double>(t);
            partial += 8.0 * td * std::pow(2.0 * td - 1.0, -alpha);
        }
        shells = block;
        const double total = partial + shell_tail_estimate(alpha, shells);
        if (prev != 0.0 && std::abs(total - prev) <= 1e-12 * total) return total;
        prev = total;
    }
    return prev;
}

double tdma_broadcast_rate(const ChannelParams& params, int k, double cell,
                           double power) {
    if (!(cell > 0.0) || !(power > 0.0))
        throw std::invalid_argument("tdma_broadcast_rate: cell and power must be > 0");
    const double k1 = tdma_interference_constant(params.alpha);
    const double reach = cell * (static_cast<double>(k) + 1.0);
    const double denom = params.bandwidth * params.noise_density *
                             std::pow(reach, params.alpha) +
                         k1 * power;
    return params.bandwidth / static_cast<double>(frame_slots(k)) *
           std::log1p(power / denom);
}

ScheduleCheck measure_schedule(const ChannelParams& params, int k, double cell,
                               double power) {
    if (!(cell > 0.0) || !(power > 0.0))
        throw std::invalid_argument("measure_schedule: cell and power must be > 0");
    ScheduleCheck sc;
    sc.frame_length = frame_slots(k);

    // Reuse spacing, checked exhaustively on a 32x32 cell board: co-slot
    // cells must be at least one period 2(k+1) apart in Chebyshev distance.
    const std::int64_t period = 2 * (static_cast<std::int64_t>(k) + 1);
    sc.spacing_ok = true;
    const std::int64_t board = 32;
    for (std::int64_t y1 = 0; y1 < board && sc.spacing_ok; ++y1)
        for (std::int64_t x1 = 0; x1 < board && sc.spacing_ok; ++x1)
            for (std::int64_t y2 = y1; y2 < board && sc.spacing_ok; ++y2)
                for (std::int64_t x2 = (y2 == y1 ? x1 + 1 : 0); x2 < board; ++x2) {
                    if (slot_of(x1, y1, k) != slot_of(x2, y2, k)) continue;
                    const std::int64_t cheb =
                        std::max(std::llabs(x2 - x1), std::llabs(y2 - y1));
                    if (cheb < period) {
                        sc.spacing_ok = false;
                        break;
                    }
                }

    const double alpha = params.alpha;
    const double reach = cell * (static_cast<double>(k) + 1.0);
    const double k1 = tdma_interference_constant(alpha);
    const double signal = power * std::pow(reach, -alpha);
    sc.bound_sinr =
        power / (params.bandwidth * params.noise_density * std::pow(reach, alpha) +
                 k1 * power);

    // Interference from the co-slot lattice out to Chebyshev shell 64, plus
    // the closed-form bound on everything beyond, evaluated at receiver
    // offsets spanning the worst-case box.
    const std::size_t trunc = 64;
    const double far_tail =
        power * std::pow(reach, -alpha) * shell_tail_upper(alpha, trunc);
    const double spacing = static_cast<double>(period) * cell;
    double worst = std::numeric_limits<double>::infinity();
    const int grid = 16;
    for (int iy = -grid; iy <= grid; ++iy) {
        for (int ix = -grid; ix <= grid; ++ix) {
            const double px = reach * static_cast<double>(ix) / grid;
            const double py = reach * static_cast<double>(iy) / grid;
            double interf = 0.0;
            for (std::int64_t j = -static_cast<std::int64_t>(trunc);
                 j <= static_cast<std::int64_t>(trunc); ++j) {
                for (std::int64_t i = -static_cast<std::int64_t>(trunc);
                     i <= static_cast<std::int64_t>(trunc); ++i) {
                    if (i == 0 && j == 0) continue;
                    const double dx = px - spacing * static_cast<double>(i);
                    const double dy = py - spacing * static_cast<double>(j);
                    interf += power * std::pow(std::hypot(dx, dy), -alpha);
                }
            }
            const double sinr =
                signal / (params.bandwidth * params.noise_density + interf + far_tail);
            worst = std::min(worst, sinr);
        }
    }
    sc.worst_sinr = worst;
    sc.bound_ok = sc.worst_sinr >= sc.bound_sinr;
    return sc;
}

Partition make_partition(double n, double beta, double gamma) {
    if (!(n > 1.0)) throw std::invalid_argument("make_partition: n must be > 1");
    if (!(beta > 0.0) || !(gamma > 0.0) || beta >= 0.5)
        throw std::invalid_argument("make_partition: need 0 < gamma, 0 < beta < 1/2");
    Partition p;
    p.n = n;
    p.beta = beta;
    p.gamma = gamma;
    p.d = std::pow(n, beta);
    p.big_r = std::pow(n, gamma);
    p.d_prime = p.d + p.big_r / std::sqrt(2.0);
    p.clusters = 4.0 * (std::sqrt(2.0) * p.d + p.big_r) / p.big_r;
    p.n1 = 2.0 * p.d * p.d;
    const double ring = std::sqrt(2.0) * p.d + 2.0 * p.big_r;
    p.n3 = n - ring * ring;
    p.valid = p.big_r >= 1.0 && p.big_r <= p.d && p.n3 > 0.0 && p.n1 >= 1.0;
    return p;
}

RateBreakdown achievable_rate(const ChannelParams& params, const Partition& part,
                              double power) {
    if (!part.valid) throw std::invalid_argument("achievable_rate: invalid partition");
    const double b = params.bandwidth;
    const double n0 = params.noise_density;
    const double alpha = params.alpha;
    RateBreakdown rb;

    // Reuse-1 TDMA inside the collection region: nearest co-slot cell pair
    // sits at normalized distance 2, so the noise floor carries 2^alpha.
    const double k1 = tdma_interference_constant(alpha);
    const double l2 = std::log1p(power / (b * n0 * std::pow(2.0, alpha) + k1 * power));
    rb.lambda_gather = b / 48.0 * l2 / ((2.0 * part.d - part.big_r) *
                                        (2.0 * part.d - part.big_r));

    // Cluster ring: every cluster of R^2 nodes reaches the collection region
    // over range d' with coherent gain R^4 (d')^-alpha.
    const double w = params.delta * b / (params.delta + b);
    const double k_prime = 1.0;
    const double arg = std::pow(part.big_r, 4.0) * std::pow(part.d_prime, -alpha) *
                       power / (w * n0 * k_prime);
    rb.r_inter = w * std::log1p(arg) / (3.0 * part.clusters);
    rb.lambda_transport = rb.r_inter * part.clusters / (16.0 * part.n);

    // Final drain: the sink column serializes ceil(2n / (sqrt(2) d + 2R))
    // aggregated packets per round.
    const double column =
        std::ceil(2.0 * part.n / (std::sqrt(2.0) * part.d + 2.0 * part.big_r));
    rb.lambda_deliver = b / 48.0 * l2 / column;

    rb.achievable = std::min(rb.lambda_gather,
                             std::min(rb.lambda_transport, rb.lambda_deliver));
    rb.genie = b * std::log1p(part.n * part.n * power / (b * n0)) / part.n;
    return rb;
}

}  // namespace aggsim
