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

#pragma once

#include <cstddef>
#include <vector>

#include "aggsim/agg_protocol.hpp"
#include "aggsim/channel.hpp"
#include "aggsim/grid_routing.hpp"

namespace aggsim {

// Battery lifetime of plain multi-hop forwarding: the bottleneck relay
// carries a c2 fraction of all n unit-rate-lambda flows and must sustain
//   B N0 (e^{c2 n lambda / B} - 1)
// watts; lifetime is e0 over that, evaluated in log space for large
// exponents so the ratio against other schemes stays finite.
double baseline_lifetime(const ChannelParams& params, double n, double lambda,
                         double e0, double c2);

// Measured relay-load fraction: largest cell load outside the sink cell,
// divided by the node count.
double relay_fraction(const TrafficMap& map);

// Per-phase transmit power of the partitioned scheme at per-source rate
// lambda.  The *_linear fields are the small-lambda expansions of the exact
// exponential forms; they track the exact values only while the phase rate
// stays well under its bandwidth.
struct PowerProfile {
    double gather = 0.0;         // inner-region relays
    double gather_linear = 0.0;  // N0 (2d-R)^2 lambda
    double intra = 0.0;          // in-cluster collection
    double intra_linear = 0.0;   // N0 (lambda R^2 + 16 n lambda/(M+4))
    double inter = 0.0;          // cluster-to-center coherent link
    double inter_linear = 0.0;   // 48 K' N0 n lambda / (R^4 d'^-alpha)
    double peak = 0.0;           // max(gather, intra + inter)
};

PowerProfile trc_power_profile(const ChannelParams& params, const Partition& part,
                               double lambda);

double trc_lifetime(double e0, const PowerProfile& profile);

// Exponent of the asymptotic lifetime gain for the partition family
// (d, R) = (n^beta, n^gamma): min(1 - 2 beta, 4 gamma - alpha beta,
// beta - gamma).
double lifetime_exponent(double beta, double gamma, double alpha);

struct LifetimePoint {
    double n = 0.0;
    double lambda = 0.0;
    double baseline = 0.0;
    double trc = 0.0;
    double ratio = 0.0;       // trc / baseline
    double normalized = 0.0;  // trc * n * lambda / e0
};

struct LifetimeSweep {
    std::vector<LifetimePoint> points;
    double slope = 0.0;      // fit of ln(normalized) against ln(n)
    double intercept = 0.0;
    double c3 = 0.0;         // exp(intercept)
    bool ratio_monotone = false;
    double predicted_exponent = 0.0;
};

struct LifetimeConfig {
    double beta = 0.35;
    double gamma = 0.30;
    double e0 = 1.0;
    double c2 = 0.25;
    double lambda_scale = 1e-3;  // lambda(n) = lambda_scale / (n ln n)
    double log10_n_min = 6.0;
    double log10_n_max = 12.0;
    std::size_t points_per_decade = 1;
};

LifetimeSweep lifetime_experiment(const ChannelParams& params,
                                  const LifetimeConfig& config);

}  // namespace aggsim
