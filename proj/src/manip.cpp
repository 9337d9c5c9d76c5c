#include "ttcx/manip.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "ttcx/prefs.hpp"
#include "ttcx/ttc.hpp"

namespace ttcx {

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// Size-k index subsets weakly preferred to agent 1's endowment, best first.
std::vector<std::vector<int>> preferred_bundle_indices(const Engine& engine,
                                                       const BundleComparator& cmp) {
    const int n = engine.goods_count();
    const std::vector<int>& omega = engine.endowment_of(1);
    const int k = int(omega.size());

    std::vector<std::vector<int>> keep;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        if (pick == omega || cmp.strictly_better(pick, omega)) keep.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(keep.begin(), keep.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  return cmp.strictly_better(a, b);
              });
    return keep;
}

std::vector<GoodId> order_names(const Engine& engine, const std::vector<int>& order) {
    std::vector<GoodId> out;
    out.reserve(order.size());
    for (int g : order) out.push_back(engine.good_name(g));
    return out;
}

Bundle bundle_names(const Engine& engine, const std::vector<int>& bundle) {
    Bundle out;
    for (int g : bundle) out.insert(engine.good_name(g));
    return out;
}

// target permutation first, every other good after it in tie-break order
void fill_report(int n, const std::vector<int>& perm, std::vector<char>& member,
                 std::vector<int>& order) {
    std::fill(member.begin(), member.end(), 0);
    for (int g : perm) member[g] = 1;
    order.assign(perm.begin(), perm.end());
    for (int g = 0; g < n; ++g)
        if (!member[g]) order.push_back(g);
}

} // namespace

long long algorithm_a_call_bound(int n, int k) { return factorial(k) * choose(n, k) + 1; }

std::vector<Bundle> preferred_bundles(const Economy& economy) {
    Engine engine(economy);
    BundleComparator cmp(economy, economy.agent(1).preference);
    std::vector<Bundle> out;
    for (const auto& b : preferred_bundle_indices(engine, cmp))
        out.push_back(bundle_names(engine, b));
    return out;
}

ManipSearch algorithm_a(const Economy& economy, int jobs, bool audit) {
    Engine base(economy);
    const int n = base.goods_count();
    const int k = int(base.endowment_of(1).size());
    const long long kfact = factorial(k);

    base.run(nullptr, 1, audit);
    const std::vector<int> truthful = base.bundle_of(1);

    BundleComparator cmp(economy, economy.agent(1).preference);
    const std::vector<std::vector<int>> bundles = preferred_bundle_indices(base, cmp);

    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    constexpr std::size_t kBlock = 32;

    long long calls = 1;
    const long long bound = algorithm_a_call_bound(n, k);
    auto checked = [&](long long c) {
        if (c > bound) throw std::logic_error("algorithm A exceeded its call bound");
        return c;
    };

    for (std::size_t block = 0; block < bundles.size(); block += kBlock) {
        const std::size_t end = std::min(bundles.size(), block + kBlock);
        // achieving permutation per bundle in the block (enumeration-minimal), if any
        std::vector<std::vector<int>> hit(end - block);

        auto sweep = [&](std::size_t offset, std::size_t stride) {
            Engine engine(economy);
            std::vector<int> order;
            std::vector<char> member(n, 0);
            for (std::size_t bi = block + offset; bi < end; bi += stride) {
                const std::vector<int>& target = bundles[bi];
                std::vector<int> perm = target;                  // sorted = first permutation
                do {
                    fill_report(n, perm, member, order);
                    engine.run(&order, 1, audit);
                    if (engine.bundle_of(1) == target) {
                        hit[bi - block] = perm;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        };

        const std::size_t workers = std::min<std::size_t>(jobs, end - block);
        if (workers <= 1) {
            sweep(0, 1);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(workers);
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        sweep(w, workers);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        // every permutation of every bundle in a processed block is charged,
        // so the count does not depend on the worker count
        calls = checked(calls + static_cast<long long>(end - block) * kfact);

        for (std::size_t bi = block; bi < end; ++bi) {
            if (hit[bi - block].empty()) continue;
            const std::vector<int>& target = bundles[bi];
            if (!cmp.strictly_better(target, truthful))
                return {std::nullopt, calls};   // achieved but no better than the truth:
                                                // nothing later can be beneficial
            std::vector<int> order;
            std::vector<char> member(n, 0);
            fill_report(n, hit[bi - block], member, order);
            MisreportResult found{order_names(base, order), bundle_names(base, target),
                                  true, calls};
            return {std::move(found), calls};
        }
    }
    return {std::nullopt, calls};
}

ManipSearch bruteforce_misreport(const Economy& economy, int max_goods) {
    Engine engine(economy);
    const int n = engine.goods_count();
    if (n > max_goods)
        throw BruteForceBoundExceeded("misreport oracle limited to " +
                                      std::to_string(max_goods) + " goods, instance has " +
                                      std::to_string(n));

    engine.run();
    const std::vector<int> truthful = engine.bundle_of(1);
    BundleComparator cmp(economy, economy.agent(1).preference);

    std::vector<int> perm(n);
    for (int g = 0; g < n; ++g) perm[g] = g;

    long long calls = 1;
    std::vector<int> best_bundle;
    std::vector<int> best_report;
    do {
        engine.run(&perm, 1);
        ++calls;
        const std::vector<int>& got = engine.bundle_of(1);
        if (best_bundle.empty() || cmp.strictly_better(got, best_bundle)) {
            best_bundle = got;
            best_report = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!cmp.strictly_better(best_bundle, truthful)) return {std::nullopt, calls};
    MisreportResult found{order_names(engine, best_report), bundle_names(engine, best_bundle),
                          true, calls};
    return {std::move(found), calls};
}

} // namespace ttcx
