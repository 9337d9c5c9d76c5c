#pragma once

#include <cstdint>

#include "ttcx/model.hpp"
#include "ttcx/reduce.hpp"

namespace ttcx {

// Self-contained generator so instance streams are reproducible from a seed
// alone, independent of the standard library's distribution internals.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// n single-good agents with uniformly random full preference orders.
Economy random_housing_market(int n_goods, SplitMix64& rng);

// Agent 1 owns agent1_k random goods; the rest split into endowments of size
// one or two. Preferences are random orders, some truncated at the agent's
// least-preferred endowed good.
Economy random_generalized_market(int n_goods, int agent1_k, SplitMix64& rng);

// Proper coloring by construction: 1..max_per_class vertices per color, no
// same-color edges. Undirected: each cross-class pair is an edge with
// probability edge_prob. Directed: rungs (color +1) with edge_prob and
// snakes (color down) with 0.6 * edge_prob, so both outcomes of the ladder
// question occur.
ColoredGraph random_colored_graph(int colors, int max_per_class, bool directed,
                                  double edge_prob, SplitMix64& rng);

// Same economy under a shuffled tie-break order.
Economy permute_tiebreak(const Economy& economy, SplitMix64& rng);

} // namespace ttcx
