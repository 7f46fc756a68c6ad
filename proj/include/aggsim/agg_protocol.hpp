#pragma once

#include <cstddef>
#include <cstdint>

#include "aggsim/channel.hpp"

namespace aggsim {

// --- Cellular TDMA with spatial reuse parameter k -------------------------

// Frame length of the reuse schedule: 4(k+1)^2 slots.
std::size_t frame_slots(int k);

// Slot of cell (cx, cy): (cx mod 2(k+1)) + 2(k+1) * (cy mod 2(k+1)) with a
// floored modulus, so co-slot cells form a lattice with spacing 2(k+1)
// along each axis.
int slot_of(std::int64_t cx, std::int64_t cy, int k);

// Interference constant of that lattice: sum over Chebyshev shells t >= 1
// of 8t * (2t-1)^-alpha.  Shells are added until the closed-form integral
// tail 2*(u^(2-alpha)/(alpha-2) + u^(1-alpha)/(alpha-1)) at u = 2T+1
// stabilizes the total to ~1e-12 relative.
double tdma_interference_constant(double alpha);

// Partial shell sum (no tail); exposed for the brute-force cross-check.
double tdma_interference_partial(double alpha, std::size_t shells);

// Guaranteed per-cell broadcast rate of the schedule, cells of side `cell`:
//   B / (4(k+1)^2) * ln(1 + P / (B N0 (cell*(k+1))^alpha + K1 P))
double tdma_broadcast_rate(const ChannelParams& params, int k, double cell,
                           double power);

// Worst-case check of the schedule against its own rate bound.  The
// receiver is pinned at the bound's signal distance cell*(k+1) and swept
// over the Chebyshev box of that radius; interference sums actual co-slot
// lattice positions (Euclidean distances) plus a closed-form upper bound on
// the truncated far shells, so worst_sinr is a true lower bound.
struct ScheduleCheck {
    std::size_t frame_length = 0;
    bool spacing_ok = false;   // all co-slot pairs >= 2(k+1) cells apart
    double worst_sinr = 0.0;
    double bound_sinr = 0.0;   // P / (B N0 (cell*(k+1))^alpha + K1 P)
    bool bound_ok = false;     // worst_sinr >= bound_sinr
};

ScheduleCheck measure_schedule(const ChannelParams& params, int k, double cell,
                               double power);

// --- Three-phase aggregation over a partitioned network -------------------

// Geometry of the partition for n nodes (unit density): an inner collection
// region of scale d = n^beta ringed by M relay clusters of scale R = n^gamma.
struct Partition {
    double n = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double d = 0.0;        // n^beta
    double big_r = 0.0;    // n^gamma
    double d_prime = 0.0;  // d + R/sqrt(2), worst relay range
    double clusters = 0.0; // M = 4(sqrt(2) d + R)/R
    double n1 = 0.0;       // 2 d^2 nodes in the collection strip
    double n3 = 0.0;       // n - (sqrt(2) d + 2R)^2 nodes outside the ring
    bool valid = false;    // all counts positive and R <= d
};

Partition make_partition(double n, double beta, double gamma);

// Per-source rates of the three time-shared phases and the cut-set style
// ceiling no scheme can beat.
struct RateBreakdown {
    double lambda_gather = 0.0;     // inner region, reuse-1 TDMA
    double lambda_transport = 0.0;  // cluster ring, time-reversed relays
    double lambda_deliver = 0.0;    // final drain into the sink column
    double achievable = 0.0;        // min of the three
    double r_inter = 0.0;           // one relay cluster's link rate
    double genie = 0.0;             // B ln(1 + n^2 P / (B N0)) / n
};

RateBreakdown achievable_rate(const ChannelParams& params, const Partition& part,
                              double power);

}  // namespace aggsim
