#pragma once

#include <optional>

#include "ttcx/model.hpp"

namespace ttcx {

struct MisreportResult {
    std::vector<GoodId> report;    // strict singleton ordering for agent 1
    Bundle bundle;                 // what agent 1 achieves with it
    bool beneficial = false;       // strictly preferred to the truthful bundle
    long long ttc_calls = 0;
};

struct ManipSearch {
    std::optional<MisreportResult> result;   // present iff a beneficial misreport exists
    long long ttc_calls = 0;
};

// All bundles of size |w1| weakly preferred to agent 1's endowment, strictly
// descending by agent 1's true preference (the endowment itself is last
// among them).
std::vector<Bundle> preferred_bundles(const Economy& economy);

// k!·C(n,k)+1 with k = |w1| (the +1 is the truthful baseline run).
long long algorithm_a_call_bound(int n, int k);

// Walks preferred bundles best-first; for each, tries every ordering of the
// bundle followed by the remaining goods in tie-break order. The first
// achieved bundle decides: strictly better than the truthful bundle means a
// beneficial misreport, anything else means none exists (nothing later can
// beat it). Bundles are evaluated in fixed-size blocks so the call count and
// the returned report are independent of the worker count (jobs; 0 = one per
// hardware thread).
ManipSearch algorithm_a(const Economy& economy, int jobs = 0, bool audit = true);

// Exhaustive oracle: every one of the n! orderings as agent 1's report.
// Returns the first report achieving the overall most-preferred bundle, if
// that bundle beats the truthful one. Throws BruteForceBoundExceeded when
// |goods| > max_goods.
ManipSearch bruteforce_misreport(const Economy& economy, int max_goods = 7);

} // namespace ttcx
