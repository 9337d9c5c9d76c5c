#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttcx/prefs.hpp"

namespace ttcx {

struct Agent {
    int id = 0;                 // dense, starting at 1; agent 1 is the would-be liar
    Bundle endowment;
    Preference preference;
    bool operator==(const Agent&) const = default;
};

// Goods-list position is the tie-break total order used to pick "the first
// good" during a run. Immutable after validation.
struct Economy {
    std::vector<GoodId> goods;
    std::vector<Agent> agents;

    int good_index(const GoodId& id) const;   // -1 if unknown
    const Agent& agent(int id) const;
    int owner_of(const GoodId& id) const;     // agent id, -1 if unowned

    bool operator==(const Economy&) const = default;
};

struct Allocation {
    std::map<int, Bundle> bundles;
    bool operator==(const Allocation&) const = default;
};

struct Violation {
    std::string code;
    std::string detail;
};

class InvalidEconomy : public std::runtime_error {
public:
    explicit InvalidEconomy(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class BruteForceBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks every economy invariant (unique goods, dense agent ids, disjoint
// endowments partitioning the goods, preferences covering all endowed goods,
// additive tables covering all goods). Returns the economy with agents
// sorted by id; throws InvalidEconomy listing all violations.
Economy validate_economy(Economy raw);

Allocation endowment_allocation(const Economy& economy);

// Bundles pairwise disjoint and their union equals the good set.
bool is_partition(const Economy& economy, const Allocation& allocation);

// Instance document format:
//   {"goods": ["a","b"],
//    "agents": [{"id":1, "endowment":["a"], "prefs":{"kind":"lex","order":["b","a"]}}]}
// Additive variant: {"kind":"additive","utilities":{"a":3.0,...}} with every
// good present. The "goods" list order is the tie-break order; an optional
// top-level "order" array (a permutation of the goods) overrides it.
Economy load_economy(const std::string& text);
Economy load_economy_file(const std::string& path);
std::string save_economy(const Economy& economy);

} // namespace ttcx
