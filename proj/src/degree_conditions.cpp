#include "quasik/degree_conditions.hpp"

#include <queue>

namespace quasik {

DegreeSumResult check_degree_sum_condition(const Graph& g, int bound, int max_dist) {
    const int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> touched;
    for (Vertex x = 0; x < n; ++x) {
        // Bounded BFS from x; only pairs with y > x are judged.
        touched.assign({x});
        dist[x] = 0;
        std::queue<Vertex> q;
        q.push(x);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            if (dist[v] == max_dist) continue;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                touched.push_back(w);
                q.push(w);
            }
        }
        std::optional<Vertex> worst;
        for (Vertex y : touched) {
            if (y > x && g.degree(x) + g.degree(y) < bound && (!worst || y < *worst)) worst = y;
        }
        for (Vertex v : touched) dist[v] = -1;
        if (worst) return {false, std::pair{x, *worst}};
    }
    return {};
}

bool check_min_degree_condition(const Graph& g, int k) {
    return g.min_degree() >= five_quarters_floor(k);
}

}  // namespace quasik
