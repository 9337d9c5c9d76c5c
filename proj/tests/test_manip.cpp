#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ttcx/manip.hpp"
#include "ttcx/model.hpp"
#include "ttcx/prefs.hpp"
#include "ttcx/random_markets.hpp"
#include "ttcx/ttc.hpp"

using namespace ttcx;

namespace {

std::string data_path(const std::string& name) {
    return std::string(TTCX_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("with n = k the only candidate bundle is the endowment") {
    Economy e;
    e.goods = {"a", "b"};
    e.agents.push_back({1, {"a", "b"}, LexOrder{{"a", "b"}}});
    e = validate_economy(e);
    CHECK(preferred_bundles(e) == std::vector<Bundle>{{"a", "b"}});
}

TEST_CASE("merged-owner instance: all six pairs, best first, endowment last") {
    const Economy e = load_economy_file(data_path("market4_merged.json"));
    const auto bundles = preferred_bundles(e);
    REQUIRE(bundles.size() == 6);
    CHECK(bundles.front() == Bundle{"α", "β"});
    CHECK(bundles.back() == Bundle{"γ", "δ"});
}

TEST_CASE("owning the top goods leaves nothing above the endowment") {
    Economy e;
    e.goods = {"a", "b", "c", "d"};
    e.agents.push_back({1, {"a", "b"}, LexOrder{{"a", "b", "c", "d"}}});
    e.agents.push_back({2, {"c"}, LexOrder{{"c"}}});
    e.agents.push_back({3, {"d"}, LexOrder{{"d"}}});
    e = validate_economy(e);
    CHECK(preferred_bundles(e) == std::vector<Bundle>{{"a", "b"}});
}

TEST_CASE("housing markets defeat the bundle scan") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Economy e = random_housing_market(3 + int(rng.below(4)), rng);
        CHECK_FALSE(algorithm_a(e).result.has_value());
    }
}

TEST_CASE("bundle scan finds the merged-owner manipulation") {
    const Economy e = load_economy_file(data_path("market4_merged.json"));
    const ManipSearch search = algorithm_a(e);
    REQUIRE(search.result);
    CHECK(search.result->bundle == Bundle{"α", "β"});
    CHECK(search.result->beneficial);
    CHECK(search.result->report == std::vector<GoodId>{"β", "α", "γ", "δ"});
    CHECK(run_ttc(e, nullptr).allocation.bundles.at(1) == Bundle{"α", "δ"});
}

TEST_CASE("result bundle always equals what the report actually achieves") {
    SplitMix64 rng(900);
    for (int trial = 0; trial < 30; ++trial) {
        const Economy e = random_generalized_market(5 + int(rng.below(2)),
                                                    1 + int(rng.below(3)), rng);
        const ManipSearch search = algorithm_a(e);
        if (!search.result) continue;
        const ReportOverride report{1, search.result->report};
        CHECK(run_ttc(e, &report).allocation.bundles.at(1) == search.result->bundle);
        CHECK(is_beneficial(e, search.result->report));
    }
}

TEST_CASE("oracle: a single good leaves nothing to gain") {
    Economy e;
    e.goods = {"a"};
    e.agents.push_back({1, {"a"}, LexOrder{{"a"}}});
    e = validate_economy(e);
    CHECK_FALSE(bruteforce_misreport(e).result.has_value());
}

TEST_CASE("oracle agrees on the merged-owner instance") {
    const Economy e = load_economy_file(data_path("market4_merged.json"));
    const ManipSearch search = bruteforce_misreport(e);
    REQUIRE(search.result);
    CHECK(search.result->bundle == Bundle{"α", "β"});
    CHECK(search.result->ttc_calls == 25);   // 4! + truthful baseline
}

TEST_CASE("oracle needs a raised bound for the eight-good instance") {
    const Economy e = load_economy_file(data_path("market8.json"));
    CHECK_THROWS_AS(bruteforce_misreport(e), BruteForceBoundExceeded);
    const ManipSearch search = bruteforce_misreport(e, 8);
    REQUIRE(search.result);
    CHECK(search.result->bundle == Bundle{"x", "α", "β"});

    const ManipSearch scan = algorithm_a(e);
    REQUIRE(scan.result);
    CHECK(scan.result->bundle == Bundle{"x", "α", "β"});
}

TEST_CASE("scan and oracle agree on random generalised markets") {
    SplitMix64 rng(20250101);
    int with_misreport = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Economy e = random_generalized_market(4 + int(rng.below(3)),
                                                    1 + int(rng.below(3)), rng);
        const ManipSearch fast = algorithm_a(e);
        const ManipSearch slow = bruteforce_misreport(e);
        REQUIRE(fast.result.has_value() == slow.result.has_value());
        if (fast.result) {
            ++with_misreport;
            CHECK(fast.result->bundle == slow.result->bundle);
        }
    }
    CHECK(with_misreport > 0);   // the sample must exercise both outcomes
    CHECK(with_misreport < 60);
}

TEST_CASE("reordering goods below the received bundle never changes it") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const Economy e = random_generalized_market(4 + int(rng.below(4)),
                                                    1 + int(rng.below(3)), rng);
        // random report
        std::vector<GoodId> report = e.goods;
        for (std::size_t i = report.size(); i > 1; --i)
            std::swap(report[i - 1], report[rng.below(i)]);

        const ReportOverride full{1, report};
        const Bundle got = run_ttc(e, &full).allocation.bundles.at(1);

        // canonical form: the received goods in report order, everything else after
        std::vector<GoodId> prefix;
        for (const auto& g : report)
            if (got.count(g)) prefix.push_back(g);
        const ReportOverride canonical{1, complete_order(e, prefix)};
        CHECK(run_ttc(e, &canonical).allocation.bundles.at(1) == got);
    }
}

TEST_CASE("call counts respect the k!C(n,k)+1 budget") {
    CHECK(algorithm_a_call_bound(6, 2) == 31);
    CHECK(algorithm_a_call_bound(10, 3) == 721);
    CHECK(algorithm_a_call_bound(5, 1) == 6);

    SplitMix64 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + int(rng.below(3));
        const int k = 1 + int(rng.below(3));
        const Economy e = random_generalized_market(n, k, rng);
        const ManipSearch search = algorithm_a(e);
        CHECK(search.ttc_calls <= algorithm_a_call_bound(n, k));
        if (search.result) CHECK(search.result->ttc_calls == search.ttc_calls);
    }
}

TEST_CASE("worker count does not change the outcome") {
    SplitMix64 rng(246);
    for (int trial = 0; trial < 15; ++trial) {
        const Economy e = random_generalized_market(6, 2 + int(rng.below(2)), rng);
        const ManipSearch one = algorithm_a(e, 1);
        const ManipSearch four = algorithm_a(e, 4);
        CHECK(one.ttc_calls == four.ttc_calls);
        REQUIRE(one.result.has_value() == four.result.has_value());
        if (one.result) {
            CHECK(one.result->report == four.result->report);
            CHECK(one.result->bundle == four.result->bundle);
        }
    }
}
