#pragma once

#include <functional>
#include <optional>

#include "ttcx/model.hpp"
#include "ttcx/ttc.hpp"

namespace ttcx {

enum class AxiomProperty { IR, PE, SP };

struct AxiomWitness {
    int agent = 0;
    std::vector<GoodId> misreport;            // SP failure
    std::optional<Allocation> allocation;     // PE failure: a dominating allocation
};

struct AxiomReport {
    AxiomProperty property;
    bool holds = false;
    std::optional<AxiomWitness> witness;      // present iff !holds
};

// Every agent weakly prefers its bundle to its endowment.
AxiomReport is_individually_rational(const Economy& economy, const Allocation& allocation);

// Exhaustive check over all |agents|^|goods| assignments (arbitrary bundle
// sizes). Throws BruteForceBoundExceeded when |goods| > max_goods. The
// witness is the first dominating allocation in odometer order (last good
// cycles fastest).
AxiomReport is_pareto_optimal(const Economy& economy, const Allocation& allocation,
                              int max_goods = 8);

using AllocationRule =
    std::function<Allocation(const Economy&, const ReportOverride*)>;

// Enumerates every strict singleton ordering as the agent's report, in
// lexicographic order by tie-break position; holds iff none is beneficial
// under the rule (TTC unless given). Throws BruteForceBoundExceeded when
// |goods| > max_goods.
AxiomReport audit_rule_sp(const Economy& economy, int agent, int max_goods = 7);
AxiomReport audit_rule_sp(const Economy& economy, int agent, const AllocationRule& rule,
                          int max_goods = 7);

} // namespace ttcx
