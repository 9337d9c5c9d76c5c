#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace ttcx {

using GoodId = std::string;
using Bundle = std::set<GoodId>;

// Strict singleton ordering, best first. May be truncated: unlisted goods are
// ranked below every listed good, ordered by the economy's tie-break order.
struct LexOrder {
    std::vector<GoodId> order;
    bool operator==(const LexOrder&) const = default;
};

// Utility per good (every good of the economy must be present). Bundles
// compare by utility sum; exact ties fall back to the tie-break order.
struct AdditiveUtility {
    std::map<GoodId, double> utilities;
    bool operator==(const AdditiveUtility&) const = default;
};

using Preference = std::variant<LexOrder, AdditiveUtility>;

struct Economy;

enum class BundleOrder { x_better, y_better, equal };

// Position of each good (by index) in the agent's completed singleton
// ranking; 0 is best. Lexicographic: listed goods first, then the rest in
// tie-break order. Additive: utility descending, tie-break on exact ties.
std::vector<int> completed_rank(const Economy& economy, const Preference& pref);

// The unique best good of `pool` under `pref`. Throws on an empty pool.
GoodId toprank(const Economy& economy, const Preference& pref, const Bundle& pool);

BundleOrder compare_bundles(const Economy& economy, const Preference& pref,
                            const Bundle& x, const Bundle& y);

// Index-level bundle comparison for search loops. Bundles are sorted vectors
// of good indices.
class BundleComparator {
public:
    BundleComparator(const Economy& economy, const Preference& pref);

    // X strictly preferred to Y.
    bool strictly_better(const std::vector<int>& x, const std::vector<int>& y) const;

private:
    bool additive_ = false;
    std::vector<int> rank_;
    std::vector<double> util_;
};

// Appends every good missing from `prefix` in tie-break order, yielding a
// full strict ordering.
std::vector<GoodId> complete_order(const Economy& economy,
                                   const std::vector<GoodId>& prefix);

// Runs TTC twice (truthful, and with the agent's toprank behaviour replaced
// by `report`, a strict total order over all goods) and reports whether the
// misreport bundle is strictly preferred under the agent's true preference.
bool is_beneficial_for(const Economy& economy, int agent,
                       const std::vector<GoodId>& report);

// Agent 1 is the designated would-be manipulator.
bool is_beneficial(const Economy& economy, const std::vector<GoodId>& report);

} // namespace ttcx
