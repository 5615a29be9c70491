#pragma once

#include <optional>
#include <utility>

#include "quasik/graph.hpp"

namespace quasik {

struct DegreeSumResult {
    bool holds = true;
    /// First violating pair (x < y, sorted order).
    std::optional<std::pair<Vertex, Vertex>> violation;

    explicit operator bool() const noexcept { return holds; }
};

/// d(x) + d(y) >= bound for every pair at distance 1..max_dist. The default
/// is the quasi 5-connected condition; bound = 2*floor(5k/4) - 1 with
/// max_dist 2 or 1 gives the two k-connected degree-sum conditions.
DegreeSumResult check_degree_sum_condition(const Graph& g, int bound = 9, int max_dist = 2);

/// delta(G) >= floor(5k/4).
bool check_min_degree_condition(const Graph& g, int k);

constexpr int five_quarters_floor(int k) { return 5 * k / 4; }

}  // namespace quasik
