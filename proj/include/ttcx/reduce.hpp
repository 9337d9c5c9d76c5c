#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttcx/model.hpp"

namespace ttcx {

struct ColoredVertex {
    std::string id;
    int color = 0;                 // 1..k
    bool operator==(const ColoredVertex&) const = default;
};

// Properly colored graph: no edge joins two vertices of the same color.
// Edges are stored as (tail, head) pairs; for undirected graphs the pair
// order is insignificant.
struct ColoredGraph {
    int colors = 0;                // k
    std::vector<ColoredVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool directed = false;

    int vertex_index(const std::string& id) const;   // -1 if unknown
    int color_of(const std::string& id) const;
    bool has_edge(const std::string& from, const std::string& to) const;
    bool operator==(const ColoredGraph&) const = default;
};

class InvalidColoredGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// rung: color rises by exactly one; snake: color strictly falls.
enum class EdgeClass { rung, snake, other };
EdgeClass classify_edge(const ColoredGraph& graph, const std::string& from,
                        const std::string& to);

// Vertices v1..vk with color(vi) = i and every (vi, v(i+1)) a rung; snakeless
// means no snake joins any two of them.
struct Ladder {
    std::vector<std::string> vertices;
};

// Directed graph from an undirected properly colored one: pairs in adjacent
// color classes keep their edge, oriented low color -> high; pairs in
// distinct non-adjacent classes are complemented and oriented high -> low
// (a snake). Same-color pairs never get edges. The output has a clique
// transversal in the input iff it has a snakeless ladder.
ColoredGraph clique_to_snakeless(const ColoredGraph& undirected);

// One vertex per color, pairwise adjacent. Enumerates the color-class
// product in input order; throws BruteForceBoundExceeded above `bound`.
std::optional<std::vector<std::string>>
has_clique_bruteforce(const ColoredGraph& undirected, long long bound = 1'000'000);

std::optional<Ladder>
has_snakeless_ladder_bruteforce(const ColoredGraph& directed, long long bound = 1'000'000);

// Gadget economy for a directed properly colored graph whose edges are all
// rungs or snakes (anything else throws). Agent 1 owns e_alpha, e_beta and
// e_1..e_k and prefers (alpha, beta, e_alpha, e_beta, e_k, ..., e_1); each
// vertex contributes a pair of goods x_i, y_i with single-good owners; three
// further goods alpha, beta, gamma close the construction. Agent 1 has a
// beneficial misreport here iff the graph has a snakeless ladder.
Economy build_economy(const ColoredGraph& directed);

// The report that realises a known snakeless ladder in build_economy's
// output: the ladder's x goods in rung order, then alpha, beta, e_1..e_k,
// e_alpha, e_beta, then everything else in tie-break order.
std::vector<GoodId> constructive_report(const ColoredGraph& graph, const Economy& economy,
                                        const Ladder& ladder);

// Graph document format:
//   {"k": 4, "vertices": [{"id":"v1","color":1},...],
//    "edges": [["v1","v2"],...], "directed": true}
ColoredGraph load_colored_graph(const std::string& text);
ColoredGraph load_colored_graph_file(const std::string& path);
std::string save_colored_graph(const ColoredGraph& graph);

} // namespace ttcx
