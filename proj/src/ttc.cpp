#include "ttcx/ttc.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace ttcx {

namespace {

std::atomic<std::uint64_t> g_audited_runs{0};

[[noreturn]] void audit_fail(const std::string& what) {
    throw std::logic_error("ttc audit: " + what);
}

} // namespace

std::uint64_t audited_run_count() { return g_audited_runs.load(); }

TopGraph build_top_graph(const Economy& economy, const Bundle& remaining,
                         const ReportOverride* report) {
    if (remaining.empty()) throw std::invalid_argument("no remaining goods");
    TopGraph graph;
    for (const auto& g : economy.goods)
        if (remaining.count(g)) graph.vertices.push_back(g);
    for (const auto& g : graph.vertices) {
        const int owner = economy.owner_of(g);
        if (report && report->agent == owner) {
            // reported order: earliest remaining entry
            for (const auto& h : report->order)
                if (remaining.count(h)) { graph.edges[g] = h; break; }
        } else {
            graph.edges[g] = toprank(economy, economy.agent(owner).preference, remaining);
        }
    }
    return graph;
}

std::pair<std::vector<GoodId>, std::vector<GoodId>>
trading_walk(const TopGraph& graph, const GoodId& start) {
    if (!graph.edges.count(start)) throw std::invalid_argument("start is not a vertex");
    std::vector<GoodId> walk;
    std::map<GoodId, std::size_t> position;
    GoodId v = start;
    while (!position.count(v)) {
        position[v] = walk.size();
        walk.push_back(v);
        v = graph.edges.at(v);
    }
    // v is the first-reached vertex of the unique cycle the walk entered
    std::vector<GoodId> cycle(walk.begin() + long(position[v]), walk.end());
    return {walk, cycle};
}

Engine::Engine(const Economy& economy) {
    n_ = int(economy.goods.size());
    m_ = int(economy.agents.size());
    names_ = economy.goods;
    for (int g = 0; g < n_; ++g) index_[names_[g]] = g;

    owner_.assign(n_, 0);
    endow_.assign(m_ + 1, {});
    order_.assign(m_ + 1, {});
    rank_.assign(m_ + 1, {});
    for (const auto& a : economy.agents) {
        for (const auto& g : a.endowment) {
            const int idx = index_.at(g);
            owner_[idx] = a.id;
            endow_[a.id].push_back(idx);
        }
        std::sort(endow_[a.id].begin(), endow_[a.id].end());
        rank_[a.id] = completed_rank(economy, a.preference);
        order_[a.id].assign(n_, 0);
        for (int g = 0; g < n_; ++g) order_[a.id][rank_[a.id][g]] = g;
    }

    received_.assign(m_ + 1, {});
    cursor_.assign(m_ + 1, 0);
    tt_.assign(n_, 0);
    alive_.assign(n_, 0);
    walk_stamp_.assign(n_, 0);
    walk_pos_.assign(n_, 0);
    succ_buf_.assign(n_, 0);
    fg_state_.assign(n_, 0);
}

int Engine::good_index(const GoodId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int Engine::successor(int g) {
    const int a = owner_[g];
    const std::vector<int>& ord = (a == eff_agent_ && eff_order_) ? *eff_order_ : order_[a];
    int& c = cursor_[a];
    while (!alive_[ord[c]]) ++c;
    return ord[c];
}

void Engine::run(const std::vector<int>* override_order, int override_agent, bool audit) {
    if (override_order && int(override_order->size()) != n_)
        throw std::invalid_argument("override order must list all goods");
    eff_order_ = override_order;
    eff_agent_ = override_order ? override_agent : 0;

    std::fill(alive_.begin(), alive_.end(), 1);
    std::fill(cursor_.begin(), cursor_.end(), 0);
    std::fill(tt_.begin(), tt_.end(), 0);
    std::fill(walk_stamp_.begin(), walk_stamp_.end(), 0);
    stamp_ = 0;
    for (auto& r : received_) r.clear();
    cycles_.clear();
    edge_log_.clear();
    walk_log_.clear();

    int first_alive = 0;
    int remaining = n_;
    int step = 0;
    while (remaining > 0) {
        ++step;
        while (!alive_[first_alive]) ++first_alive;

        if (audit) {
            // out-edge of every remaining good, then the tail/cycle structure
            // of the step's functional graph
            for (int g = 0; g < n_; ++g)
                if (alive_[g]) {
                    succ_buf_[g] = successor(g);
                    edge_log_.emplace_back(g, succ_buf_[g]);
                }
            std::fill(fg_state_.begin(), fg_state_.end(), 0);
            for (int s = 0; s < n_; ++s) {
                if (!alive_[s] || fg_state_[s] != 0) continue;
                fg_path_.clear();
                int v = s;
                while (alive_[v] && fg_state_[v] == 0) {
                    fg_state_[v] = 1;
                    fg_path_.push_back(v);
                    v = succ_buf_[v];
                }
                std::size_t cycle_from = fg_path_.size();   // none within this path
                int rep;
                if (fg_state_[v] == 1) {
                    // fresh cycle: v first reached on this very path
                    cycle_from = std::find(fg_path_.begin(), fg_path_.end(), v) - fg_path_.begin();
                    rep = v;
                } else {
                    rep = walk_log_[fg_state_[v] - 2].rep;   // reuse the stored component
                }
                for (std::size_t i = 0; i < fg_path_.size(); ++i) {
                    walk_log_.push_back({fg_path_[i], rep, i >= cycle_from});
                    fg_state_[fg_path_[i]] = int(walk_log_.size()) + 1;   // index + 2
                }
            }
        }

        // trading walk from the tie-break-first remaining good
        ++stamp_;
        path_.clear();
        int v = first_alive;
        while (walk_stamp_[v] != stamp_) {
            walk_stamp_[v] = stamp_;
            walk_pos_[v] = int(path_.size());
            path_.push_back(v);
            v = successor(v);
        }
        const int cstart = walk_pos_[v];
        const int len = int(path_.size()) - cstart;

        // owner of each cycle good receives the good it points to
        for (int i = 0; i < len; ++i) {
            const int g = path_[cstart + i];
            const int next = path_[cstart + (i + 1 == len ? 0 : i + 1)];
            received_[owner_[g]].push_back(next);
        }
        // log rotated to the tie-break-first member
        int minl = 0;
        for (int i = 1; i < len; ++i)
            if (path_[cstart + i] < path_[cstart + minl]) minl = i;
        cycles_.emplace_back();
        for (int i = 0; i < len; ++i)
            cycles_.back().push_back(path_[cstart + (minl + i) % len]);

        for (int i = 0; i < len; ++i) {
            const int g = path_[cstart + i];
            alive_[g] = 0;
            tt_[g] = step;
        }
        remaining -= len;
    }

    for (auto& r : received_) std::sort(r.begin(), r.end());
    if (audit) {
        audit_checks(override_order, override_agent);
        g_audited_runs.fetch_add(1, std::memory_order_relaxed);
    }
}

void Engine::audit_checks(const std::vector<int>* override_order, int override_agent) {
    // any top-graph edge (g -> h): g trades no earlier than h
    for (const auto& [g, h] : edge_log_)
        if (tt_[g] < tt_[h])
            audit_fail("edge " + names_[g] + "->" + names_[h] + " trades out of order");

    // a walk with a tail trades strictly after the cycle it feeds; goods on a
    // persisting cycle trade together
    for (const auto& e : walk_log_) {
        if (e.on_cycle) {
            if (tt_[e.v] != tt_[e.rep])
                audit_fail("cycle through " + names_[e.rep] + " split across steps");
        } else if (tt_[e.rep] >= tt_[e.v]) {
            audit_fail("tail good " + names_[e.v] + " traded before its cycle");
        }
    }

    // distinct goods of one owner never share a cycle (they share a toprank
    // target, and a cycle visits each vertex once)
    for (int a = 1; a <= m_; ++a) {
        for (std::size_t i = 0; i < endow_[a].size(); ++i)
            for (std::size_t j = i + 1; j < endow_[a].size(); ++j)
                if (tt_[endow_[a][i]] == tt_[endow_[a][j]])
                    audit_fail("two goods of agent " + std::to_string(a) +
                               " share a trade time");
        if (received_[a].size() != endow_[a].size())
            audit_fail("agent " + std::to_string(a) + " received " +
                       std::to_string(received_[a].size()) + " goods for " +
                       std::to_string(endow_[a].size()) + " endowed");
    }

    // a received good trades strictly after everything its receiver's
    // effective order ranks above it
    if (override_order) {
        ov_rank_.assign(n_, 0);
        for (int pos = 0; pos < n_; ++pos) ov_rank_[(*override_order)[pos]] = pos;
    }
    for (int a = 1; a <= m_; ++a) {
        const std::vector<int>& rank =
            (override_order && a == override_agent) ? ov_rank_ : rank_[a];
        for (int r : received_[a])
            for (int g = 0; g < n_; ++g)
                if (rank[g] < rank[r] && tt_[g] >= tt_[r])
                    audit_fail("agent " + std::to_string(a) + " received " + names_[r] +
                               " while preferring " + names_[g] + " not yet traded");
    }
}

TradeRecord Engine::record() const {
    TradeRecord rec;
    for (int a = 1; a <= m_; ++a) {
        Bundle b;
        for (int g : received_[a]) b.insert(names_[g]);
        rec.allocation.bundles[a] = std::move(b);
    }
    for (int g = 0; g < n_; ++g) rec.trade_time[names_[g]] = tt_[g];
    for (const auto& cycle : cycles_) {
        std::vector<GoodId> named;
        named.reserve(cycle.size());
        for (int g : cycle) named.push_back(names_[g]);
        rec.cycles.push_back(std::move(named));
    }
    return rec;
}

TradeRecord run_ttc(const Economy& economy, const ReportOverride* report, bool audit) {
    Engine engine(economy);
    if (report) {
        std::vector<int> order;
        order.reserve(report->order.size());
        std::vector<char> seen(economy.goods.size(), 0);
        for (const auto& g : report->order) {
            const int idx = engine.good_index(g);
            if (idx < 0 || seen[idx])
                throw std::invalid_argument("report is not a strict total order over the goods");
            seen[idx] = 1;
            order.push_back(idx);
        }
        if (order.size() != economy.goods.size())
            throw std::invalid_argument("report must order all goods");
        engine.run(&order, report->agent, audit);
    } else {
        engine.run(nullptr, 1, audit);
    }
    return engine.record();
}

} // namespace ttcx
