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

#include "aggsim/grid_routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aggsim {

namespace {

constexpr std::int64_t kTiltScale = 1000000000;  // 10^9

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<GridCoord> route_to_sink(GridCoord u) {
    // Walk the segment from the sink outward to the tilted endpoint
    //   (A, B)/K with A = K*x - y, B = K*y + x,
    // then reverse.  The next cell boundary along x is at cx + sx/2, crossed
    // at parameter s = (2*cx+sx) * K / (2*A); same along y.  Comparing the
    // two parameters reduces to an integer comparison after multiplying out
    // the (positive) denominators.
    const std::int64_t a = kTiltScale * u.x - u.y;
    const std::int64_t b = kTiltScale * u.y + u.x;
    const int sx = sign_of(a);
    const int sy = sign_of(b);

    std::vector<GridCoord> cells;
    cells.reserve(static_cast<std::size_t>(std::llabs(u.x) + std::llabs(u.y)) + 1);
    std::int64_t cx = 0, cy = 0;
    cells.push_back({0, 0});
    while (cx != u.x || cy != u.y) {
        bool step_x;
        if (sx == 0) {
            step_x = false;
        } else if (sy == 0) {
            step_x = true;
        } else {
            const __int128 lhs = static_cast<__int128>((2 * cx + sx) * sx) * (b * sy);
            const __int128 rhs = static_cast<__int128>((2 * cy + sy) * sy) * (a * sx);
            if (lhs == rhs)
                throw std::runtime_error("route_to_sink: segment hit a cell corner");
            step_x = lhs < rhs;
        }
        if (step_x)
            cx += sx;
        else
            cy += sy;
        cells.push_back({cx, cy});
    }
    std::reverse(cells.begin(), cells.end());
    return cells;
}

std::size_t TrafficMap::index(std::int64_t x, std::int64_t y) const {
    if (x < -half || x > half || y < -half || y > half)
        throw std::out_of_range("TrafficMap: coordinate outside lattice");
    return static_cast<std::size_t>((y + half) * side + (x + half));
}

std::int64_t TrafficMap::load_at(std::int64_t x, std::int64_t y) const {
    return load[index(x, y)];
}

GridCoord TrafficMap::next_hop_at(std::int64_t x, std::int64_t y) const {
    return next_hop[index(x, y)];
}

TrafficMap build_traffic(std::int64_t side) {
    if (side < 3 || side % 2 == 0)
        throw std::invalid_argument("build_traffic: side must be odd and >= 3");
    TrafficMap map;
    map.side = side;
    map.half = side / 2;
    map.load.assign(static_cast<std::size_t>(side * side), 0);
    map.next_hop.assign(static_cast<std::size_t>(side * side), GridCoord{0, 0});
    for (std::int64_t y = -map.half; y <= map.half; ++y) {
        for (std::int64_t x = -map.half; x <= map.half; ++x) {
            if (x == 0 && y == 0) continue;
            const auto route = route_to_sink({x, y});
            map.next_hop[map.index(x, y)] = route[1];
            for (const auto& c : route) ++map.load[map.index(c.x, c.y)];
        }
    }
    return map;
}

TrafficBounds check_traffic_bounds(const TrafficMap& map) {
    TrafficBounds tb;
    const double n = static_cast<double>(map.node_count());
    tb.min_normalized = std::numeric_limits<double>::infinity();
    tb.max_normalized = 0.0;
    for (std::int64_t y = -map.half; y <= map.half; ++y) {
        for (std::int64_t x = -map.half; x <= map.half; ++x) {
            const double r2 = static_cast<double>(x * x + y * y);
            if (r2 < 25.0 || r2 > n / 25.0) continue;
            const double rho = std::sqrt(r2);
            const auto t = static_cast<double>(map.load_at(x, y));
            ++tb.annulus_nodes;
            const double lower = std::floor(n / rho * (std::sqrt(2.0) / 4.0));
            const double upper = std::ceil(n / rho);
            if (!(t > lower)) ++tb.lower_violations;
            if (!(t < upper)) ++tb.upper_violations;
            tb.min_normalized = std::min(tb.min_normalized, t * rho / n);
            tb.max_normalized = std::max(tb.max_normalized, t * rho / n);
        }
    }
    tb.ring_sum = map.load_at(1, 0) + map.load_at(-1, 0) + map.load_at(0, 1) +
                  map.load_at(0, -1);
    tb.ring_ok = tb.ring_sum == map.node_count() - 1;
    return tb;
}

}  // namespace aggsim
