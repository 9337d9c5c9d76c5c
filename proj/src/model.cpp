#include "ttcx/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ttcx {

using nlohmann::ordered_json;

int Economy::good_index(const GoodId& id) const {
    for (std::size_t i = 0; i < goods.size(); ++i)
        if (goods[i] == id) return int(i);
    return -1;
}

const Agent& Economy::agent(int id) const {
    for (const auto& a : agents)
        if (a.id == id) return a;
    throw std::out_of_range("no agent with id " + std::to_string(id));
}

int Economy::owner_of(const GoodId& id) const {
    for (const auto& a : agents)
        if (a.endowment.count(id)) return a.id;
    return -1;
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << "invalid economy:";
    for (const auto& v : violations) out << " [" << v.code << "] " << v.detail << ";";
    return out.str();
}

} // namespace

InvalidEconomy::InvalidEconomy(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

Economy validate_economy(Economy raw) {
    std::vector<Violation> bad;
    auto flag = [&](const std::string& code, const std::string& detail) {
        bad.push_back({code, detail});
    };

    if (raw.goods.empty()) flag("no_goods", "economy has no goods");
    std::set<GoodId> good_set;
    for (const auto& g : raw.goods)
        if (!good_set.insert(g).second) flag("duplicate_good", g);

    if (raw.agents.empty()) flag("no_agents", "economy has no agents");
    std::sort(raw.agents.begin(), raw.agents.end(),
              [](const Agent& a, const Agent& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < raw.agents.size(); ++i)
        if (raw.agents[i].id != int(i) + 1) {
            flag("bad_agent_ids", "agent ids must be exactly 1..n");
            break;
        }

    std::set<GoodId> owned;
    for (const auto& a : raw.agents) {
        const std::string who = "agent " + std::to_string(a.id);
        if (a.endowment.empty()) flag("empty_endowment", who);
        for (const auto& g : a.endowment) {
            if (!good_set.count(g)) flag("unknown_good", who + " endows " + g);
            else if (!owned.insert(g).second) flag("overlapping_endowment", g);
        }

        if (const auto* lex = std::get_if<LexOrder>(&a.preference)) {
            std::set<GoodId> seen;
            for (const auto& g : lex->order) {
                if (!good_set.count(g)) flag("unknown_good", who + " ranks " + g);
                if (!seen.insert(g).second) flag("duplicate_pref_entry", who + ": " + g);
            }
            // The compressed format must reach the least-preferred endowed good.
            for (const auto& g : a.endowment)
                if (good_set.count(g) && !seen.count(g))
                    flag("missing_endowed_pref", who + " does not rank " + g);
        } else {
            const auto& add = std::get<AdditiveUtility>(a.preference);
            for (const auto& [g, u] : add.utilities) {
                if (!good_set.count(g)) flag("unknown_good", who + " values " + g);
                if (!std::isfinite(u)) flag("nonfinite_utility", who + ": " + g);
            }
            for (const auto& g : raw.goods)
                if (!add.utilities.count(g))
                    flag("additive_missing_good", who + " has no utility for " + g);
        }
    }
    for (const auto& g : raw.goods)
        if (!owned.count(g)) flag("uncovered_good", g);

    if (!bad.empty()) throw InvalidEconomy(std::move(bad));
    return raw;
}

Allocation endowment_allocation(const Economy& economy) {
    Allocation z;
    for (const auto& a : economy.agents) z.bundles[a.id] = a.endowment;
    return z;
}

bool is_partition(const Economy& economy, const Allocation& allocation) {
    std::set<GoodId> seen;
    for (const auto& [agent, bundle] : allocation.bundles) {
        (void)agent;
        for (const auto& g : bundle)
            if (economy.good_index(g) < 0 || !seen.insert(g).second) return false;
    }
    return seen.size() == economy.goods.size();
}

namespace {

Preference parse_prefs(const ordered_json& j, const std::string& who) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::runtime_error(who + ": prefs must be an object with a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lex") {
        LexOrder lex;
        for (const auto& g : j.at("order")) lex.order.push_back(g.get<std::string>());
        return lex;
    }
    if (kind == "additive") {
        AdditiveUtility add;
        for (const auto& [g, u] : j.at("utilities").items())
            add.utilities[g] = u.get<double>();
        return add;
    }
    throw std::runtime_error(who + ": unknown prefs kind \"" + kind + "\"");
}

} // namespace

Economy load_economy(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }

    Economy economy;
    if (!j.contains("goods") || !j.contains("agents"))
        throw std::runtime_error("instance needs \"goods\" and \"agents\"");
    for (const auto& g : j.at("goods")) economy.goods.push_back(g.get<std::string>());

    if (j.contains("order")) {
        std::vector<GoodId> order;
        for (const auto& g : j.at("order")) order.push_back(g.get<std::string>());
        auto sorted = order, goods = economy.goods;
        std::sort(sorted.begin(), sorted.end());
        std::sort(goods.begin(), goods.end());
        if (sorted != goods)
            throw std::runtime_error("\"order\" must be a permutation of \"goods\"");
        economy.goods = order;
    }

    for (const auto& ja : j.at("agents")) {
        Agent a;
        a.id = ja.at("id").get<int>();
        const std::string who = "agent " + std::to_string(a.id);
        for (const auto& g : ja.at("endowment")) a.endowment.insert(g.get<std::string>());
        a.preference = parse_prefs(ja.at("prefs"), who);
        economy.agents.push_back(std::move(a));
    }
    return validate_economy(std::move(economy));
}

Economy load_economy_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_economy(buf.str());
}

std::string save_economy(const Economy& economy) {
    ordered_json j;
    j["goods"] = economy.goods;
    j["agents"] = ordered_json::array();
    for (const auto& a : economy.agents) {
        ordered_json ja;
        ja["id"] = a.id;
        // canonical: endowment in tie-break order
        std::vector<GoodId> endow;
        for (const auto& g : economy.goods)
            if (a.endowment.count(g)) endow.push_back(g);
        ja["endowment"] = endow;
        if (const auto* lex = std::get_if<LexOrder>(&a.preference)) {
            ja["prefs"] = {{"kind", "lex"}, {"order", lex->order}};
        } else {
            const auto& add = std::get<AdditiveUtility>(a.preference);
            ordered_json utils;
            for (const auto& g : economy.goods) utils[g] = add.utilities.at(g);
            ja["prefs"] = {{"kind", "additive"}, {"utilities", utils}};
        }
        j["agents"].push_back(std::move(ja));
    }
    return j.dump(2) + "\n";
}

} // namespace ttcx
