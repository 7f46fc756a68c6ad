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
#include <cstdint>
#include <vector>

namespace aggsim {

// Node/cell on the odd-sided square lattice centered on the sink at (0,0).
// Cells are the unit squares around each lattice point.
struct GridCoord {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

// Cells crossed by the straight segment from node u to the sink, ordered
// from u's own cell down to the sink cell, both included.  The segment
// endpoint is nudged by the exact linear map
//   (x, y) -> ((Kx - y)/K, (Ky + x)/K),  K = 10^9,
// which keeps it off every cell corner, and the walk compares boundary
// crossings with exact 128-bit integer arithmetic, so the cell sequence is
// deterministic and platform independent.  Successive cells are 4-neighbor
// adjacent and |x|+|y| decreases by exactly 1 per step.
std::vector<GridCoord> route_to_sink(GridCoord u);

// Per-cell relay load for an odd side x side lattice: load(c) counts the
// nodes v != sink whose route passes through cell c (v's own cell and the
// sink cell both count).  This is route membership, not tree-descendant
// count: distinct nodes can share c at different offsets of their routes.
struct TrafficMap {
    std::int64_t side = 0;
    std::int64_t half = 0;
    std::vector<std::int64_t> load;     // row-major, index = (y+half)*side + (x+half)
    std::vector<GridCoord> next_hop;    // second route cell; sink maps to itself

    std::size_t index(std::int64_t x, std::int64_t y) const;
    std::int64_t load_at(std::int64_t x, std::int64_t y) const;
    GridCoord next_hop_at(std::int64_t x, std::int64_t y) const;
    std::int64_t node_count() const { return side * side; }
};

TrafficMap build_traffic(std::int64_t side);

// Load-vs-distance envelope over the annulus 25 <= x^2+y^2 <= n/25:
// every annulus load is checked against the pair
//   floor((n/rho) * sqrt(2)/4)  <  load  <  ceil(n/rho),  rho = sqrt(x^2+y^2),
// and the four cells adjacent to the sink must absorb every route exactly
// once (their loads sum to n-1).
struct TrafficBounds {
    std::size_t annulus_nodes = 0;
    std::size_t lower_violations = 0;
    std::size_t upper_violations = 0;
    double min_normalized = 0.0;  // min over annulus of load*rho/n
    double max_normalized = 0.0;  // max over annulus of load*rho/n
    std::int64_t ring_sum = 0;    // sum of the four sink-adjacent loads
    bool ring_ok = false;         // ring_sum == n-1
};

TrafficBounds check_traffic_bounds(const TrafficMap& map);

}  // namespace aggsim
