#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ttcx/model.hpp"
#include "ttcx/prefs.hpp"
#include "ttcx/random_markets.hpp"

using namespace ttcx;

namespace {

std::string data_path(const std::string& name) {
    return std::string(TTCX_DATA_DIR) + "/" + name;
}

// two-agent shell so free-standing preferences can be exercised against a
// chosen good universe
Economy universe(std::vector<GoodId> goods) {
    Economy economy;
    economy.goods = std::move(goods);
    Agent a;
    a.id = 1;
    a.endowment.insert(economy.goods.begin(), economy.goods.end());
    LexOrder lex;
    lex.order = economy.goods;
    a.preference = lex;
    economy.agents.push_back(std::move(a));
    return economy;
}

std::vector<Bundle> all_bundles(const std::vector<GoodId>& goods) {
    std::vector<Bundle> out;
    const std::size_t n = goods.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Bundle b;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) b.insert(goods[i]);
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace

TEST_CASE("toprank picks the head of the order") {
    const Economy e = universe({"a", "b"});
    const Preference pref = LexOrder{{"b", "a"}};
    CHECK(toprank(e, pref, {"a", "b"}) == "b");
    CHECK(toprank(e, pref, {"a"}) == "a");
    CHECK_THROWS_AS(toprank(e, pref, {}), std::invalid_argument);
}

TEST_CASE("toprank consults the remaining pool only") {
    // gamma's owner in the gadget economies: e goods first, then e_alpha, then its own
    const Economy e = universe({"e_α", "e_1", "e_2", "e_3", "e_4", "γ"});
    const Preference pref = LexOrder{{"e_1", "e_2", "e_3", "e_4", "e_α", "γ"}};
    CHECK(toprank(e, pref, {"e_α", "γ"}) == "e_α");
    CHECK(toprank(e, pref, {"γ"}) == "γ");
}

TEST_CASE("truncated orders rank unlisted goods below, in tie-break order") {
    const Economy e = universe({"a", "b", "c", "d"});
    const Preference pref = LexOrder{{"c"}};
    const auto rank = completed_rank(e, pref);
    CHECK(rank[e.good_index("c")] == 0);
    CHECK(rank[e.good_index("a")] == 1);
    CHECK(rank[e.good_index("b")] == 2);
    CHECK(rank[e.good_index("d")] == 3);
}

TEST_CASE("lexicographic bundle comparison is decided by the first exclusive good") {
    const Economy e = universe({"α", "β", "e_α", "e_β", "x"});
    const Preference pref = LexOrder{{"α", "β", "e_α", "e_β", "x"}};
    CHECK(compare_bundles(e, pref, {"α", "β"}, {"α", "e_α", "e_β"}) == BundleOrder::x_better);
    CHECK(compare_bundles(e, pref, {"α", "β"}, {"α", "β"}) == BundleOrder::equal);
    CHECK(compare_bundles(e, pref, {"e_β"}, {"e_α"}) == BundleOrder::y_better);
}

TEST_CASE("additive bundles compare by utility sum") {
    const Economy e = universe({"α", "β", "x", "e_α", "e_β"});
    const Preference pref = AdditiveUtility{
        {{"α", 100.0}, {"β", 90.0}, {"x", 1.0}, {"e_α", 5.0}, {"e_β", 4.0}}};
    // 191 beats 109
    CHECK(compare_bundles(e, pref, {"α", "β", "x"}, {"α", "e_α", "e_β"}) ==
          BundleOrder::x_better);
    // exact tie falls back to the tie-break order
    const Preference tied = AdditiveUtility{
        {{"α", 1.0}, {"β", 1.0}, {"x", 1.0}, {"e_α", 1.0}, {"e_β", 1.0}}};
    CHECK(compare_bundles(e, tied, {"α"}, {"β"}) == BundleOrder::x_better);
}

TEST_CASE("bundle comparison is a strict total order on distinct bundles") {
    const std::vector<GoodId> goods = {"a", "b", "c", "d", "e"};
    const Economy e = universe(goods);
    const std::vector<Preference> prefs = {
        LexOrder{{"c", "a", "e", "b", "d"}},
        AdditiveUtility{{{"a", 3.0}, {"b", 17.0}, {"c", 9.0}, {"d", 1.0}, {"e", 29.0}}}};
    const auto bundles = all_bundles(goods);
    for (const auto& pref : prefs) {
        // asymmetry and completeness
        for (const auto& x : bundles)
            for (const auto& y : bundles) {
                const auto xy = compare_bundles(e, pref, x, y);
                const auto yx = compare_bundles(e, pref, y, x);
                if (x == y) {
                    CHECK(xy == BundleOrder::equal);
                } else {
                    CHECK(xy != BundleOrder::equal);
                    CHECK((xy == BundleOrder::x_better) == (yx == BundleOrder::y_better));
                }
            }
        // transitivity: the relation must agree with a total ranking on every pair
        std::vector<Bundle> sorted = bundles;
        std::sort(sorted.begin(), sorted.end(), [&](const Bundle& x, const Bundle& y) {
            return compare_bundles(e, pref, x, y) == BundleOrder::x_better;
        });
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                CHECK(compare_bundles(e, pref, sorted[i], sorted[j]) == BundleOrder::x_better);
    }
}

TEST_CASE("lexicographic comparison agrees with the singleton order and is monotone") {
    const std::vector<GoodId> goods = {"a", "b", "c", "d", "e", "f"};
    const Economy e = universe(goods);
    const Preference pref = LexOrder{{"d", "b", "f", "a", "c", "e"}};
    const auto rank = completed_rank(e, pref);
    for (const auto& x : goods)
        for (const auto& y : goods) {
            if (x == y) continue;
            const bool x_first = rank[e.good_index(x)] < rank[e.good_index(y)];
            CHECK((compare_bundles(e, pref, {x}, {y}) == BundleOrder::x_better) == x_first);
        }
    // every good is desirable: supersets win
    for (const auto& x : all_bundles(goods))
        for (const auto& g : goods) {
            if (x.count(g)) continue;
            Bundle y = x;
            y.insert(g);
            CHECK(compare_bundles(e, pref, y, x) == BundleOrder::x_better);
        }
}

TEST_CASE("toprank is the unique maximum of the pool") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const Economy market = random_generalized_market(6, 2, rng);
        const auto& pref = market.agent(1).preference;
        Bundle pool;
        for (const auto& g : market.goods)
            if (rng.below(2)) pool.insert(g);
        if (pool.empty()) pool.insert(market.goods[0]);
        const GoodId top = toprank(market, pref, pool);
        for (const auto& h : pool)
            CHECK(compare_bundles(market, pref, {top}, {h}) != BundleOrder::y_better);
    }
}

TEST_CASE("truthful reports are never beneficial") {
    const Economy merged = load_economy_file(data_path("market4_merged.json"));
    CHECK_FALSE(is_beneficial(merged, {"α", "β", "γ", "δ"}));
}

TEST_CASE("the merged-owner market rewards ranking beta first") {
    const Economy merged = load_economy_file(data_path("market4_merged.json"));
    CHECK(is_beneficial(merged, {"β", "α", "γ", "δ"}));
}

TEST_CASE("grabbing x frees both prize goods in the eight-good market") {
    const Economy e = load_economy_file(data_path("market8.json"));
    const auto report = complete_order(e, {"x", "α", "β"});
    CHECK(is_beneficial(e, report));
    CHECK_FALSE(is_beneficial(e, complete_order(e, {"α"})));
}

TEST_CASE("complete_order appends missing goods in tie-break order") {
    const Economy e = universe({"a", "b", "c", "d"});
    CHECK(complete_order(e, {"c"}) == std::vector<GoodId>{"c", "a", "b", "d"});
    CHECK(complete_order(e, {}) == std::vector<GoodId>{"a", "b", "c", "d"});
}
