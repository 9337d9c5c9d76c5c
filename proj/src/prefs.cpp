#include "ttcx/prefs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ttcx/model.hpp"
#include "ttcx/ttc.hpp"

namespace ttcx {

std::vector<int> completed_rank(const Economy& economy, const Preference& pref) {
    const int n = int(economy.goods.size());
    std::vector<int> rank(n, -1);
    if (const auto* lex = std::get_if<LexOrder>(&pref)) {
        int next = 0;
        for (const auto& g : lex->order) {
            const int idx = economy.good_index(g);
            if (idx < 0) throw std::invalid_argument("preference ranks unknown good " + g);
            if (rank[idx] >= 0) throw std::invalid_argument("duplicate preference entry " + g);
            rank[idx] = next++;
        }
        for (int g = 0; g < n; ++g)           // completion: tie-break order
            if (rank[g] < 0) rank[g] = next++;
    } else {
        const auto& add = std::get<AdditiveUtility>(pref);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> util(n);
        for (int g = 0; g < n; ++g) {
            auto it = add.utilities.find(economy.goods[g]);
            if (it == add.utilities.end())
                throw std::invalid_argument("no utility for good " + economy.goods[g]);
            util[g] = it->second;
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (util[a] != util[b]) return util[a] > util[b];
            return a < b;                     // exact ties: tie-break order
        });
        for (int pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    }
    return rank;
}

GoodId toprank(const Economy& economy, const Preference& pref, const Bundle& pool) {
    if (pool.empty()) throw std::invalid_argument("toprank of an empty pool");
    const auto rank = completed_rank(economy, pref);
    int best = -1;
    for (const auto& g : pool) {
        const int idx = economy.good_index(g);
        if (idx < 0) throw std::invalid_argument("pool contains unknown good " + g);
        if (best < 0 || rank[idx] < rank[best]) best = idx;
    }
    return economy.goods[best];
}

BundleComparator::BundleComparator(const Economy& economy, const Preference& pref) {
    if (std::holds_alternative<AdditiveUtility>(pref)) {
        additive_ = true;
        const auto& add = std::get<AdditiveUtility>(pref);
        util_.resize(economy.goods.size());
        for (std::size_t g = 0; g < economy.goods.size(); ++g)
            util_[g] = add.utilities.at(economy.goods[g]);
    }
    rank_ = completed_rank(economy, pref);
}

bool BundleComparator::strictly_better(const std::vector<int>& x,
                                       const std::vector<int>& y) const {
    if (x == y) return false;
    if (additive_) {
        double sx = 0, sy = 0;
        for (int g : x) sx += util_[g];
        for (int g : y) sy += util_[g];
        if (sx != sy) return sx > sy;
        // exact tie: the bundle holding the tie-break-earliest exclusive good wins
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) { ++i; ++j; }
            else return x[i] < y[j];
        }
        return i < x.size();
    }
    // lexicographic: best-ranked good in the symmetric difference decides;
    // exclusive goods found by merging the sorted inputs
    int best_x = -1, best_y = -1;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (i < x.size() && j < y.size() && x[i] == y[j]) { ++i; ++j; continue; }
        if (j == y.size() || (i < x.size() && x[i] < y[j])) {
            if (best_x < 0 || rank_[x[i]] < rank_[best_x]) best_x = x[i];
            ++i;
        } else {
            if (best_y < 0 || rank_[y[j]] < rank_[best_y]) best_y = y[j];
            ++j;
        }
    }
    if (best_x < 0) return false;             // x ⊂ y: the superset wins
    if (best_y < 0) return true;              // y ⊂ x
    return rank_[best_x] < rank_[best_y];
}

BundleOrder compare_bundles(const Economy& economy, const Preference& pref,
                            const Bundle& x, const Bundle& y) {
    if (x == y) return BundleOrder::equal;
    auto to_indices = [&](const Bundle& b) {
        std::vector<int> out;
        out.reserve(b.size());
        for (const auto& g : b) {
            const int idx = economy.good_index(g);
            if (idx < 0) throw std::invalid_argument("bundle contains unknown good " + g);
            out.push_back(idx);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    BundleComparator cmp(economy, pref);
    return cmp.strictly_better(to_indices(x), to_indices(y)) ? BundleOrder::x_better
                                                             : BundleOrder::y_better;
}

std::vector<GoodId> complete_order(const Economy& economy,
                                   const std::vector<GoodId>& prefix) {
    std::vector<GoodId> out = prefix;
    std::set<GoodId> seen(prefix.begin(), prefix.end());
    for (const auto& g : economy.goods)
        if (!seen.count(g)) out.push_back(g);
    return out;
}

bool is_beneficial_for(const Economy& economy, int agent,
                       const std::vector<GoodId>& report) {
    if (report.size() != economy.goods.size())
        throw std::invalid_argument("report must order all goods");

    Engine engine(economy);
    engine.run();
    const std::vector<int> truthful = engine.bundle_of(agent);

    std::vector<int> order;
    order.reserve(report.size());
    std::vector<char> seen(economy.goods.size(), 0);
    for (const auto& g : report) {
        const int idx = engine.good_index(g);
        if (idx < 0 || seen[idx]) throw std::invalid_argument("report is not a strict total order");
        seen[idx] = 1;
        order.push_back(idx);
    }
    engine.run(&order, agent);

    BundleComparator cmp(economy, economy.agent(agent).preference);
    return cmp.strictly_better(engine.bundle_of(agent), truthful);
}

bool is_beneficial(const Economy& economy, const std::vector<GoodId>& report) {
    return is_beneficial_for(economy, 1, report);
}

} // namespace ttcx
