#include "ttcx/reduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ttcx/prefs.hpp"

namespace ttcx {

using nlohmann::ordered_json;

int ColoredGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return int(i);
    return -1;
}

int ColoredGraph::color_of(const std::string& id) const {
    const int i = vertex_index(id);
    if (i < 0) throw InvalidColoredGraph("unknown vertex " + id);
    return vertices[i].color;
}

bool ColoredGraph::has_edge(const std::string& from, const std::string& to) const {
    for (const auto& [a, b] : edges) {
        if (a == from && b == to) return true;
        if (!directed && a == to && b == from) return true;
    }
    return false;
}

EdgeClass classify_edge(const ColoredGraph& graph, const std::string& from,
                        const std::string& to) {
    const int cf = graph.color_of(from);
    const int ct = graph.color_of(to);
    if (ct == cf + 1) return EdgeClass::rung;
    if (ct < cf) return EdgeClass::snake;
    return EdgeClass::other;
}

namespace {

void check_graph(const ColoredGraph& graph) {
    std::set<std::string> ids;
    for (const auto& v : graph.vertices) {
        if (!ids.insert(v.id).second)
            throw InvalidColoredGraph("duplicate vertex " + v.id);
        if (v.color < 1 || v.color > graph.colors)
            throw InvalidColoredGraph("vertex " + v.id + " has color outside 1..k");
    }
    for (const auto& [a, b] : graph.edges) {
        if (graph.vertex_index(a) < 0 || graph.vertex_index(b) < 0)
            throw InvalidColoredGraph("edge references unknown vertex");
        if (graph.color_of(a) == graph.color_of(b))
            throw InvalidColoredGraph("coloring is not proper: edge " + a + "-" + b);
        if (a == b) throw InvalidColoredGraph("self-loop on " + a);
    }
}

} // namespace

ColoredGraph clique_to_snakeless(const ColoredGraph& undirected) {
    if (undirected.directed)
        throw InvalidColoredGraph("clique reduction expects an undirected graph");
    check_graph(undirected);

    ColoredGraph out;
    out.colors = undirected.colors;
    out.vertices = undirected.vertices;
    out.directed = true;

    const std::size_t n = undirected.vertices.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : undirected.edges) {
        const int i = undirected.vertex_index(a);
        const int j = undirected.vertex_index(b);
        adj[i][j] = adj[j][i] = 1;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int ci = undirected.vertices[i].color;
            const int cj = undirected.vertices[j].color;
            if (ci == cj) continue;                       // never join a color class
            const bool adjacent_classes = std::abs(ci - cj) == 1;
            const bool keep = adjacent_classes ? bool(adj[i][j]) : !adj[i][j];
            if (!keep) continue;
            // adjacent classes: rung, low to high; otherwise: snake, high to low
            std::size_t from = i, to = j;
            if (adjacent_classes ? (cj < ci) : (cj > ci)) std::swap(from, to);
            out.edges.emplace_back(undirected.vertices[from].id, undirected.vertices[to].id);
        }
    }
    return out;
}

namespace {

// class_members[c]: vertex indices of color c+1, input order
std::vector<std::vector<int>> color_classes(const ColoredGraph& graph) {
    std::vector<std::vector<int>> classes(graph.colors);
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        classes[graph.vertices[i].color - 1].push_back(int(i));
    return classes;
}

long long transversal_count(const std::vector<std::vector<int>>& classes) {
    long long total = 1;
    for (const auto& c : classes) {
        if (c.empty()) return 0;
        total *= static_cast<long long>(c.size());
        if (total < 0) return -1;
    }
    return total;
}

} // namespace

std::optional<std::vector<std::string>>
has_clique_bruteforce(const ColoredGraph& undirected, long long bound) {
    if (undirected.directed)
        throw InvalidColoredGraph("clique oracle expects an undirected graph");
    check_graph(undirected);

    const auto classes = color_classes(undirected);
    const long long total = transversal_count(classes);
    if (total == 0) return std::nullopt;
    if (total < 0 || total > bound)
        throw BruteForceBoundExceeded("color-class product exceeds the oracle bound");

    const std::size_t n = undirected.vertices.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : undirected.edges) {
        const int i = undirected.vertex_index(a);
        const int j = undirected.vertex_index(b);
        adj[i][j] = adj[j][i] = 1;
    }

    const int k = undirected.colors;
    std::vector<int> pick(k, 0);
    while (true) {
        bool clique = true;
        for (int a = 0; a < k && clique; ++a)
            for (int b = a + 1; b < k && clique; ++b)
                if (!adj[classes[a][pick[a]]][classes[b][pick[b]]]) clique = false;
        if (clique) {
            std::vector<std::string> found;
            for (int c = 0; c < k; ++c)
                found.push_back(undirected.vertices[classes[c][pick[c]]].id);
            return found;
        }
        int c = k - 1;
        while (c >= 0 && pick[c] + 1 == int(classes[c].size())) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
    }
    return std::nullopt;
}

std::optional<Ladder>
has_snakeless_ladder_bruteforce(const ColoredGraph& directed, long long bound) {
    if (!directed.directed)
        throw InvalidColoredGraph("ladder oracle expects a directed graph");
    check_graph(directed);

    const auto classes = color_classes(directed);
    const long long total = transversal_count(classes);
    if (total == 0) return std::nullopt;
    if (total < 0 || total > bound)
        throw BruteForceBoundExceeded("color-class product exceeds the oracle bound");

    const std::size_t n = directed.vertices.size();
    std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : directed.edges)
        edge[directed.vertex_index(a)][directed.vertex_index(b)] = 1;

    const int k = directed.colors;
    std::vector<int> pick(k, 0);
    while (true) {
        bool ok = true;
        for (int c = 0; c + 1 < k && ok; ++c)                      // consecutive rungs
            if (!edge[classes[c][pick[c]]][classes[c + 1][pick[c + 1]]]) ok = false;
        for (int a = 0; a < k && ok; ++a)                          // no snakes inside
            for (int b = 0; b < a && ok; ++b)
                if (edge[classes[a][pick[a]]][classes[b][pick[b]]]) ok = false;
        if (ok) {
            Ladder ladder;
            for (int c = 0; c < k; ++c)
                ladder.vertices.push_back(directed.vertices[classes[c][pick[c]]].id);
            return ladder;
        }
        int c = k - 1;
        while (c >= 0 && pick[c] + 1 == int(classes[c].size())) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
    }
    return std::nullopt;
}

Economy build_economy(const ColoredGraph& graph) {
    if (!graph.directed)
        throw InvalidColoredGraph("gadget economy expects a directed graph");
    check_graph(graph);
    for (const auto& [a, b] : graph.edges)
        if (classify_edge(graph, a, b) == EdgeClass::other)
            throw InvalidColoredGraph("edge " + a + "->" + b +
                                      " is neither a rung nor a snake");

    const int k = graph.colors;
    const int m = int(graph.vertices.size());
    auto x_good = [](int i) { return "x_" + std::to_string(i + 1); };
    auto y_good = [](int i) { return "y_" + std::to_string(i + 1); };
    auto e_good = [](int c) { return "e_" + std::to_string(c); };

    Economy economy;
    economy.goods.push_back("e_α");
    economy.goods.push_back("e_β");
    for (int c = 1; c <= k; ++c) economy.goods.push_back(e_good(c));
    for (int i = 0; i < m; ++i) {
        economy.goods.push_back(x_good(i));
        economy.goods.push_back(y_good(i));
    }
    economy.goods.push_back("α");
    economy.goods.push_back("β");
    economy.goods.push_back("γ");

    // agent 1: the would-be manipulator
    Agent one;
    one.id = 1;
    one.endowment = {"e_α", "e_β"};
    for (int c = 1; c <= k; ++c) one.endowment.insert(e_good(c));
    LexOrder lex;
    lex.order = {"α", "β", "e_α", "e_β"};
    for (int c = k; c >= 1; --c) lex.order.push_back(e_good(c));
    one.preference = lex;
    economy.agents.push_back(std::move(one));

    int next_id = 2;
    auto single = [&](const GoodId& good, std::vector<GoodId> order) {
        Agent a;
        a.id = next_id++;
        a.endowment = {good};
        a.preference = LexOrder{std::move(order)};
        economy.agents.push_back(std::move(a));
    };

    // vertex gadgets: a(x_i) wants its color's e good back, a(y_i) chases the
    // snakes' y goods, then the rungs' (or e_β at the top color)
    for (int i = 0; i < m; ++i) {
        const int color = graph.vertices[i].color;
        single(x_good(i), {e_good(color), y_good(i), x_good(i)});

        std::vector<GoodId> order = {x_good(i)};
        std::vector<int> snake_targets, rung_targets;
        for (const auto& [a, b] : graph.edges) {
            if (graph.vertex_index(a) != i) continue;
            const int j = graph.vertex_index(b);
            if (classify_edge(graph, a, b) == EdgeClass::snake) snake_targets.push_back(j);
            else rung_targets.push_back(j);
        }
        std::sort(snake_targets.begin(), snake_targets.end());
        std::sort(rung_targets.begin(), rung_targets.end());
        for (int j : snake_targets) order.push_back(y_good(j));
        if (color == k) order.push_back("e_β");
        else for (int j : rung_targets) order.push_back(y_good(j));
        order.push_back(y_good(i));
        single(y_good(i), std::move(order));
    }

    single("α", {"γ", "α"});

    std::vector<GoodId> beta_order = {"γ"};
    for (int i = 0; i < m; ++i)
        if (graph.vertices[i].color == 1) beta_order.push_back(y_good(i));
    beta_order.push_back("β");
    single("β", std::move(beta_order));

    std::vector<GoodId> gamma_order;
    for (int c = 1; c <= k; ++c) gamma_order.push_back(e_good(c));
    gamma_order.push_back("e_α");
    gamma_order.push_back("γ");
    single("γ", std::move(gamma_order));

    return validate_economy(std::move(economy));
}

std::vector<GoodId> constructive_report(const ColoredGraph& graph, const Economy& economy,
                                        const Ladder& ladder) {
    std::vector<GoodId> prefix;
    for (const auto& v : ladder.vertices)
        prefix.push_back("x_" + std::to_string(graph.vertex_index(v) + 1));
    prefix.push_back("α");
    prefix.push_back("β");
    for (int c = 1; c <= graph.colors; ++c) prefix.push_back("e_" + std::to_string(c));
    prefix.push_back("e_α");
    prefix.push_back("e_β");
    return complete_order(economy, prefix);
}

ColoredGraph load_colored_graph(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("graph parse error: ") + e.what());
    }
    ColoredGraph graph;
    graph.colors = j.at("k").get<int>();
    for (const auto& jv : j.at("vertices"))
        graph.vertices.push_back({jv.at("id").get<std::string>(), jv.at("color").get<int>()});
    for (const auto& je : j.at("edges"))
        graph.edges.emplace_back(je.at(0).get<std::string>(), je.at(1).get<std::string>());
    graph.directed = j.value("directed", false);
    check_graph(graph);
    return graph;
}

ColoredGraph load_colored_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_colored_graph(buf.str());
}

std::string save_colored_graph(const ColoredGraph& graph) {
    ordered_json j;
    j["k"] = graph.colors;
    j["vertices"] = ordered_json::array();
    for (const auto& v : graph.vertices)
        j["vertices"].push_back({{"id", v.id}, {"color", v.color}});
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : graph.edges) j["edges"].push_back({a, b});
    j["directed"] = graph.directed;
    return j.dump(2) + "\n";
}

} // namespace ttcx
