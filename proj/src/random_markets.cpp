#include "ttcx/random_markets.hpp"

#include <algorithm>
#include <string>

namespace ttcx {

namespace {

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<GoodId> numbered_goods(int n) {
    std::vector<GoodId> goods;
    goods.reserve(n);
    for (int i = 1; i <= n; ++i) goods.push_back("g" + std::to_string(i));
    return goods;
}

LexOrder random_order(const std::vector<GoodId>& goods, SplitMix64& rng) {
    LexOrder lex;
    lex.order = goods;
    shuffle(lex.order, rng);
    return lex;
}

// compressed form: cut right after the agent's least-preferred endowed good
LexOrder truncate_at_worst_endowed(LexOrder lex, const Bundle& endowment) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < lex.order.size(); ++i)
        if (endowment.count(lex.order[i])) last = i;
    lex.order.resize(last + 1);
    return lex;
}

} // namespace

Economy random_housing_market(int n_goods, SplitMix64& rng) {
    Economy economy;
    economy.goods = numbered_goods(n_goods);
    for (int i = 0; i < n_goods; ++i) {
        Agent a;
        a.id = i + 1;
        a.endowment = {economy.goods[i]};
        a.preference = random_order(economy.goods, rng);
        economy.agents.push_back(std::move(a));
    }
    return validate_economy(std::move(economy));
}

Economy random_generalized_market(int n_goods, int agent1_k, SplitMix64& rng) {
    Economy economy;
    economy.goods = numbered_goods(n_goods);

    std::vector<GoodId> pool = economy.goods;
    shuffle(pool, rng);

    Agent one;
    one.id = 1;
    for (int i = 0; i < agent1_k; ++i) one.endowment.insert(pool[i]);
    economy.agents.push_back(std::move(one));

    std::size_t at = agent1_k;
    int next_id = 2;
    while (at < pool.size()) {
        Agent a;
        a.id = next_id++;
        a.endowment.insert(pool[at++]);
        if (at < pool.size() && rng.below(4) == 0) a.endowment.insert(pool[at++]);
        economy.agents.push_back(std::move(a));
    }

    for (auto& a : economy.agents) {
        LexOrder lex = random_order(economy.goods, rng);
        if (rng.below(10) < 3) lex = truncate_at_worst_endowed(std::move(lex), a.endowment);
        a.preference = std::move(lex);
    }
    return validate_economy(std::move(economy));
}

ColoredGraph random_colored_graph(int colors, int max_per_class, bool directed,
                                  double edge_prob, SplitMix64& rng) {
    ColoredGraph graph;
    graph.colors = colors;
    graph.directed = directed;
    for (int c = 1; c <= colors; ++c) {
        const int size = 1 + int(rng.below(std::uint64_t(max_per_class)));
        for (int i = 0; i < size; ++i) {
            graph.vertices.push_back(
                {"v" + std::to_string(graph.vertices.size() + 1), c});
        }
    }
    const std::size_t n = graph.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int ci = graph.vertices[i].color;
            const int cj = graph.vertices[j].color;
            if (!directed) {
                if (i < j && ci != cj && rng.unit() < edge_prob)
                    graph.edges.emplace_back(graph.vertices[i].id, graph.vertices[j].id);
            } else if (cj == ci + 1) {                          // rung
                if (rng.unit() < edge_prob)
                    graph.edges.emplace_back(graph.vertices[i].id, graph.vertices[j].id);
            } else if (cj < ci) {                               // snake
                if (rng.unit() < 0.6 * edge_prob)
                    graph.edges.emplace_back(graph.vertices[i].id, graph.vertices[j].id);
            }
        }
    }
    return graph;
}

Economy permute_tiebreak(const Economy& economy, SplitMix64& rng) {
    Economy out = economy;
    shuffle(out.goods, rng);
    return out;
}

} // namespace ttcx
