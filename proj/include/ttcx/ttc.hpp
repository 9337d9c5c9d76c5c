#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ttcx/model.hpp"

namespace ttcx {

// Replaces one agent's toprank behaviour with a reported strict total order
// over all goods. Benefit is always judged by the true preference.
struct ReportOverride {
    int agent = 1;
    std::vector<GoodId> order;
};

// One out-edge per remaining good: (g, h) iff g's owner topranks h among the
// remaining goods.
struct TopGraph {
    std::vector<GoodId> vertices;      // tie-break order
    std::map<GoodId, GoodId> edges;
};

struct TradeRecord {
    Allocation allocation;
    std::map<GoodId, int> trade_time;              // 1-based removal step
    std::vector<std::vector<GoodId>> cycles;       // cycle at position t-1 traded at step t;
                                                   // each starts at its tie-break-first member
};

TopGraph build_top_graph(const Economy& economy, const Bundle& remaining,
                         const ReportOverride* report = nullptr);

// Follows the unique out-edges from `start` until a vertex repeats. Returns
// the distinct vertices visited and the cycle the walk enters, the cycle
// starting from its first-reached vertex.
std::pair<std::vector<GoodId>, std::vector<GoodId>>
trading_walk(const TopGraph& graph, const GoodId& start);

// Deterministic top-trading-cycles run: at each step the removed cycle is the
// one inside the trading walk starting at the tie-break-first remaining good.
// For cycle (g1..gj), the owner of gi receives g(i+1) and the owner of gj
// receives g1. Identical inputs give identical records.
TradeRecord run_ttc(const Economy& economy, const ReportOverride* report = nullptr,
                    bool audit = true);

// Process-wide count of audited engine runs, for test summaries.
std::uint64_t audited_run_count();

// Compiled engine for repeated runs over one economy. Scratch buffers are
// reused across runs; not thread-safe, use one Engine per worker.
//
// With audit enabled every run is checked against the trade-time invariants:
//  - an edge (g, h) of any step's top graph has tt(g) >= tt(h);
//  - a walk that is not a cycle trades strictly after the cycle it feeds,
//    and goods on a persisting cycle trade together;
//  - distinct goods of one owner never share a trade time;
//  - a received good is traded no earlier than anything the receiving agent's
//    effective order ranks above it;
//  - every agent receives exactly one good per endowed good.
// A violation throws std::logic_error.
class Engine {
public:
    explicit Engine(const Economy& economy);

    // override_order: good indices, best first, full length; nullptr = truthful.
    void run(const std::vector<int>* override_order = nullptr, int override_agent = 1,
             bool audit = true);

    int goods_count() const { return n_; }
    int agents_count() const { return m_; }
    int good_index(const GoodId& id) const;
    const GoodId& good_name(int g) const { return names_[g]; }
    int owner(int g) const { return owner_[g]; }
    const std::vector<int>& endowment_of(int agent) const { return endow_[agent]; }
    const std::vector<int>& completed_order_of(int agent) const { return order_[agent]; }

    // Results of the last run.
    const std::vector<int>& bundle_of(int agent) const { return received_[agent]; }
    const std::vector<int>& trade_times() const { return tt_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    TradeRecord record() const;

private:
    int successor(int g);
    void audit_checks(const std::vector<int>* override_order, int override_agent);

    int n_ = 0, m_ = 0;
    std::vector<GoodId> names_;
    std::map<GoodId, int> index_;
    std::vector<int> owner_;
    std::vector<std::vector<int>> order_;   // per agent, completed, best first
    std::vector<std::vector<int>> rank_;    // inverse of order_
    std::vector<std::vector<int>> endow_;   // per agent, sorted

    const std::vector<int>* eff_order_ = nullptr;
    int eff_agent_ = 0;

    // run state
    std::vector<char> alive_;
    std::vector<int> cursor_;
    std::vector<int> tt_;
    std::vector<std::vector<int>> received_;
    std::vector<std::vector<int>> cycles_;
    std::vector<int> walk_stamp_, walk_pos_, path_;
    int stamp_ = 0;

    // audit state
    std::vector<int> succ_buf_;
    std::vector<std::pair<int, int>> edge_log_;
    struct WalkEntry { int v; int rep; bool on_cycle; };
    std::vector<WalkEntry> walk_log_;
    std::vector<int> fg_state_, fg_path_;
    std::vector<int> ov_rank_;
};

} // namespace ttcx
