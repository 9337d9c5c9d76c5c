#include "ttcx/axioms.hpp"

#include <algorithm>

#include "ttcx/prefs.hpp"

namespace ttcx {

AxiomReport is_individually_rational(const Economy& economy, const Allocation& allocation) {
    if (!is_partition(economy, allocation))
        throw std::invalid_argument("not an allocation for this economy");
    for (const auto& a : economy.agents) {
        auto it = allocation.bundles.find(a.id);
        const Bundle& mine = it == allocation.bundles.end() ? Bundle{} : it->second;
        if (compare_bundles(economy, a.preference, mine, a.endowment) == BundleOrder::y_better) {
            AxiomWitness w;
            w.agent = a.id;
            return {AxiomProperty::IR, false, w};
        }
    }
    return {AxiomProperty::IR, true, std::nullopt};
}

AxiomReport is_pareto_optimal(const Economy& economy, const Allocation& allocation,
                              int max_goods) {
    if (!is_partition(economy, allocation))
        throw std::invalid_argument("not an allocation for this economy");
    const int n = int(economy.goods.size());
    const int m = int(economy.agents.size());
    if (n > max_goods)
        throw BruteForceBoundExceeded("Pareto check limited to " + std::to_string(max_goods) +
                                      " goods, instance has " + std::to_string(n));

    std::vector<BundleComparator> cmp;
    cmp.reserve(m);
    std::vector<std::vector<int>> current(m);
    for (int a = 0; a < m; ++a) {
        cmp.emplace_back(economy, economy.agents[a].preference);
        for (const auto& g : allocation.bundles.at(a + 1))
            current[a].push_back(economy.good_index(g));
        std::sort(current[a].begin(), current[a].end());
    }

    // odometer over assignments good -> agent, last good fastest
    std::vector<int> assign(n, 0);
    std::vector<std::vector<int>> candidate(m);
    while (true) {
        for (auto& b : candidate) b.clear();
        for (int g = 0; g < n; ++g) candidate[assign[g]].push_back(g);

        bool weakly_better_everywhere = true;
        bool strictly_somewhere = false;
        for (int a = 0; a < m && weakly_better_everywhere; ++a) {
            if (candidate[a] == current[a]) continue;
            if (cmp[a].strictly_better(candidate[a], current[a])) strictly_somewhere = true;
            else weakly_better_everywhere = false;
        }
        if (weakly_better_everywhere && strictly_somewhere) {
            AxiomWitness w;
            Allocation dominating;
            for (int a = 0; a < m; ++a) {
                Bundle b;
                for (int g : candidate[a]) b.insert(economy.goods[g]);
                dominating.bundles[a + 1] = std::move(b);
                if (w.agent == 0 && candidate[a] != current[a] &&
                    cmp[a].strictly_better(candidate[a], current[a]))
                    w.agent = a + 1;
            }
            w.allocation = std::move(dominating);
            return {AxiomProperty::PE, false, w};
        }

        int g = n - 1;
        while (g >= 0 && assign[g] == m - 1) assign[g--] = 0;
        if (g < 0) break;
        ++assign[g];
    }
    return {AxiomProperty::PE, true, std::nullopt};
}

AxiomReport audit_rule_sp(const Economy& economy, int agent, int max_goods) {
    const int n = int(economy.goods.size());
    if (n > max_goods)
        throw BruteForceBoundExceeded("SP audit limited to " + std::to_string(max_goods) +
                                      " goods, instance has " + std::to_string(n));

    Engine engine(economy);
    engine.run();
    const std::vector<int> truthful = engine.bundle_of(agent);
    BundleComparator cmp(economy, economy.agent(agent).preference);

    std::vector<int> perm(n);
    for (int g = 0; g < n; ++g) perm[g] = g;
    do {
        engine.run(&perm, agent);
        if (cmp.strictly_better(engine.bundle_of(agent), truthful)) {
            AxiomWitness w;
            w.agent = agent;
            for (int g : perm) w.misreport.push_back(economy.goods[g]);
            return {AxiomProperty::SP, false, w};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {AxiomProperty::SP, true, std::nullopt};
}

AxiomReport audit_rule_sp(const Economy& economy, int agent, const AllocationRule& rule,
                          int max_goods) {
    const int n = int(economy.goods.size());
    if (n > max_goods)
        throw BruteForceBoundExceeded("SP audit limited to " + std::to_string(max_goods) +
                                      " goods, instance has " + std::to_string(n));

    const Allocation truthful = rule(economy, nullptr);
    const Bundle& base = truthful.bundles.at(agent);
    const Preference& pref = economy.agent(agent).preference;

    std::vector<int> perm(n);
    for (int g = 0; g < n; ++g) perm[g] = g;
    do {
        ReportOverride report;
        report.agent = agent;
        for (int g : perm) report.order.push_back(economy.goods[g]);
        const Allocation z = rule(economy, &report);
        if (compare_bundles(economy, pref, z.bundles.at(agent), base) == BundleOrder::x_better) {
            AxiomWitness w;
            w.agent = agent;
            w.misreport = report.order;
            return {AxiomProperty::SP, false, w};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {AxiomProperty::SP, true, std::nullopt};
}

} // namespace ttcx
