#pragma once

// Brute-force reference implementations. They only read the edge list of a
// Graph and use their own adjacency matrix and search, so they share no code
// path with the flow and enumeration routines they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "quasik/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix_of(const quasik::Graph& g) {
    Matrix a(static_cast<std::size_t>(g.order()), std::vector<char>(static_cast<std::size_t>(g.order()), 0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

/// Component sizes of the graph with the vertices in `removed` (bitmask) deleted.
inline std::vector<int> component_sizes(const Matrix& a, std::uint64_t removed) {
    const int n = static_cast<int>(a.size());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if ((removed >> s) & 1 || label[s] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<int> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (int w = 0; w < n; ++w) {
                if (a[v][w] && !((removed >> w) & 1) && label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return sizes;
}

/// Minimum |S| with G - S disconnected, or n - 1 if no such S exists.
inline int connectivity(const quasik::Graph& g) {
    const int n = g.order();
    const auto a = matrix_of(g);
    int best = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size >= best) continue;
        if (component_sizes(a, mask).size() >= 2) best = size;
    }
    return best;
}

/// Every separating set of the given size, as bitmasks in increasing order.
inline std::vector<std::uint64_t> separators(const quasik::Graph& g, int size) {
    const auto a = matrix_of(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (std::popcount(mask) == size && component_sizes(a, mask).size() >= 2) out.push_back(mask);
    }
    return out;
}

/// Some grouping of the components into two sides of >= 2 vertices each, by
/// trying every assignment.
inline bool nontrivial_sizes(const std::vector<int>& sizes) {
    const auto c = sizes.size();
    if (c < 2) return false;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << c); ++mask) {
        int left = 0;
        int right = 0;
        for (std::size_t i = 0; i < c; ++i) ((mask >> i) & 1 ? left : right) += sizes[i];
        if (left >= 2 && right >= 2) return true;
    }
    return false;
}

inline bool quasi_k_connected(const quasik::Graph& g, int k) {
    if (connectivity(g) < k - 1) return false;
    const auto a = matrix_of(g);
    for (auto mask : separators(g, k - 1)) {
        if (nontrivial_sizes(component_sizes(a, mask))) return false;
    }
    return true;
}

inline std::vector<int> bits(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1) out.push_back(v);
    }
    return out;
}

}  // namespace oracle
