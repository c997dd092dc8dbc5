#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "hopbench/baseline.hpp"
#include "hopbench/rng.hpp"
#include "hopbench/scenario.hpp"
#include "hopbench/wordpools.hpp"

using namespace hopbench;

namespace {

ScenarioConfig make_config(TaskType t, int difficulty, int density) {
    ScenarioConfig cfg;
    cfg.task_type = t;
    cfg.difficulty = difficulty;
    cfg.info_density = density;
    return cfg;
}

std::set<std::string> placed_surfaces(const Scenario& s, bool distractors) {
    std::set<std::string> out;
    for (const auto& p : s.placements)
        if (p.distractor == distractors) out.insert(p.surface);
    return out;
}

std::set<std::pair<int, int>> sections_holding(const Scenario& s, const std::string& atom) {
    std::set<std::pair<int, int>> out;
    for (const auto& p : s.placements)
        if (p.surface == atom) out.insert({p.doc, p.section});
    return out;
}

}  // namespace

TEST_CASE("combination rules: frozen surface examples") {
    CombinationRule concat{RuleKind::concatenation, "", 0, false, false};
    CHECK(apply_rule(concat, {"Emma", "1987"}) == "Emma1987");

    CombinationRule concat_us{RuleKind::concatenation, "_", 0, false, false};
    CHECK(apply_rule(concat_us, {"Emma", "1987"}) == "Emma_1987");

    CombinationRule lower_yy{RuleKind::transformation, "", 0, true, true};
    CHECK(apply_rule(lower_yy, {"Emma", "1987"}) == "emma87");

    CombinationRule inter2{RuleKind::interleaving, "", 2, false, false};
    CHECK(apply_rule(inter2, {"Acme", "2003"}) == "Ac20me03");

    CombinationRule inter1{RuleKind::interleaving, "", 1, false, false};
    CHECK(apply_rule(inter1, {"Acme", "2003"}) == "A2c0m0e3");

    CHECK_THROWS_AS(apply_rule(concat, {"solo"}), GenerationError);
}

TEST_CASE("rule instance set is closed and distinct on representative atoms") {
    const auto& rules = all_rule_instances();
    CHECK(rules.size() == 8);
    std::set<std::string> surfaces;
    std::set<std::string> names;
    for (const auto& r : rules) {
        surfaces.insert(apply_rule(r, {"Emma", "1987"}));
        names.insert(r.name());
    }
    CHECK(surfaces.size() == rules.size());
    CHECK(names.size() == rules.size());
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(generate_scenario(1, make_config(TaskType::contextual, 5, 4)),
                    ConfigError);
    CHECK_THROWS_AS(generate_scenario(1, make_config(TaskType::contextual, 0, 4)),
                    ConfigError);
    CHECK_THROWS_AS(
        generate_scenario(1, make_config(TaskType::contextual, 2, kMaxInfoDensity + 1)),
        ConfigError);
}

TEST_CASE("generation is a pure function of seed and config") {
    const auto cfg = make_config(TaskType::contextual, 2, 8);
    const Scenario a = generate_scenario(42, cfg);
    const Scenario b = generate_scenario(42, cfg);
    CHECK(serialize_scenario(a) == serialize_scenario(b));

    // Parallel regeneration yields identical bytes regardless of scheduling.
    const std::string expected = serialize_scenario(a);
    std::vector<std::string> got(16);
#pragma omp parallel for
    for (int i = 0; i < 16; ++i) got[i] = serialize_scenario(generate_scenario(42, cfg));
    for (const auto& s : got) CHECK(s == expected);

    const Scenario c = generate_scenario(43, cfg);
    CHECK(serialize_scenario(c) != expected);
}

TEST_CASE("target round-trips through the chain and rule") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        for (int diff = 1; diff <= 3; ++diff) {
            for (TaskType t : {TaskType::structured, TaskType::contextual}) {
                const auto s = generate_scenario(seed, make_config(t, diff, 5));
                CHECK(construct_target(s.graph.chain, s.graph.rule) == s.graph.target);
                CHECK(s.graph.chain.atoms.size() >= 2);
            }
        }
    }
}

TEST_CASE("structured scenarios co-locate both atoms in document 0, section 0") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto s = generate_scenario(seed, make_config(TaskType::structured, 1, 9));
        REQUIRE(s.graph.chain.hop_count == 1);
        const auto a = sections_holding(s, s.graph.chain.atoms[0]);
        const auto b = sections_holding(s, s.graph.chain.atoms[1]);
        CHECK(a.count({0, 0}) == 1);
        CHECK(b.count({0, 0}) == 1);
    }
}

TEST_CASE("contextual scenarios never co-locate the target atoms") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        for (int diff = 1; diff <= 3; ++diff) {
            const auto s = generate_scenario(seed, make_config(TaskType::contextual, diff, 7));
            CHECK(s.graph.chain.hop_count == diff + 1);
            const auto a = sections_holding(s, s.graph.chain.atoms[0]);
            const auto b = sections_holding(s, s.graph.chain.atoms[1]);
            REQUIRE(!a.empty());
            REQUIRE(!b.empty());
            for (const auto& sec : a) CHECK(b.count(sec) == 0);
        }
    }
}

TEST_CASE("hops=3 chain walks entity relations and splits atoms across sections") {
    // Walk the emitted graph explicitly for a fixed seed.
    const auto s = generate_scenario(7, make_config(TaskType::contextual, 2, 6));
    REQUIRE(s.graph.chain.hop_count == 3);
    REQUIRE(s.graph.chain.steps.size() == 3);
    CHECK(s.graph.chain.steps[0].kind == HopStep::Kind::traverse);
    CHECK(s.graph.chain.steps[1].kind == HopStep::Kind::traverse);
    CHECK(s.graph.chain.steps[2].kind == HopStep::Kind::lookup);

    // Traversals connect consecutively.
    CHECK(s.graph.chain.steps[0].dst == s.graph.chain.steps[1].src);
    CHECK(s.graph.chain.steps[1].dst == s.graph.chain.steps[2].entity);

    // Terminal atoms recoverable by substring search, in different sections.
    const auto& name = s.graph.chain.atoms[0];
    const auto& year = s.graph.chain.atoms[1];
    std::set<std::pair<int, int>> name_secs, year_secs;
    for (std::size_t d = 0; d < s.documents.size(); ++d)
        for (std::size_t sec = 0; sec < s.documents[d].sections.size(); ++sec) {
            const auto& text = s.documents[d].sections[sec].text;
            if (text.find(name) != std::string::npos)
                name_secs.insert({static_cast<int>(d), static_cast<int>(sec)});
            if (text.find(year) != std::string::npos)
                year_secs.insert({static_cast<int>(d), static_cast<int>(sec)});
        }
    REQUIRE(!name_secs.empty());
    REQUIRE(!year_secs.empty());
    for (const auto& a : name_secs) CHECK(year_secs.count(a) == 0);
}

TEST_CASE("every relation is stated in a single section of text") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto s = generate_scenario(seed, make_config(TaskType::contextual, 3, 6));
        for (const auto& rel : s.graph.relations) {
            const Entity* src = nullptr;
            const Entity* dst = nullptr;
            for (const auto& e : s.graph.entities) {
                if (e.id == rel.src) src = &e;
                if (e.id == rel.dst) dst = &e;
            }
            REQUIRE(src != nullptr);
            REQUIRE(dst != nullptr);
            CHECK(rel.src != rel.dst);
            bool co_stated = false;
            for (const auto& d : s.documents)
                for (const auto& sec : d.sections)
                    if (sec.text.find(src->name) != std::string::npos &&
                        sec.text.find(dst->name) != std::string::npos)
                        co_stated = true;
            CHECK(co_stated);
        }
    }
}

TEST_CASE("target never appears verbatim and stays within bounds") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        for (TaskType t : {TaskType::structured, TaskType::contextual}) {
            const auto s = generate_scenario(seed, make_config(t, 2, 8));
            const auto& target = s.graph.target;
            CHECK(target.size() >= 6);
            CHECK(target.size() <= 24);
            int separators = 0;
            for (char c : target)
                if (!std::isalnum(static_cast<unsigned char>(c))) ++separators;
            CHECK(separators <= 1);
            for (const auto& d : s.documents)
                for (const auto& sec : d.sections)
                    CHECK(sec.text.find(target) == std::string::npos);
        }
    }
}

TEST_CASE("distractor safety: no rule application over distractor atoms hits the target") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto s = generate_scenario(seed, make_config(TaskType::contextual, 2, 12));
        const auto distractors = placed_surfaces(s, true);
        for (const auto& x : distractors)
            for (const auto& y : distractors) {
                if (x == y) continue;
                for (const auto& rule : all_rule_instances())
                    CHECK(apply_rule(rule, {x, y}) != s.graph.target);
            }
    }
}

TEST_CASE("info_density drives exactly the distractor atom count") {
    const auto zero = generate_scenario(11, make_config(TaskType::contextual, 1, 0));
    CHECK(placed_surfaces(zero, true).empty());

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto s = generate_scenario(seed, make_config(TaskType::contextual, 2, 10));
        CHECK(placed_surfaces(s, true).size() == 10);
    }
}

TEST_CASE("extraction over rendered text matches the placement manifest exactly") {
    // The lexical extractor finds precisely the placed atoms: true ones plus
    // exactly info_density distractors, and nothing else.
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        for (TaskType t : {TaskType::structured, TaskType::contextual}) {
            const auto s = generate_scenario(seed, make_config(t, 2, 10));
            std::set<std::string> extracted;
            for (const auto& e : baseline::extract_entities(s.documents))
                extracted.insert(e.surface);
            std::set<std::string> placed;
            for (const auto& p : s.placements) placed.insert(p.surface);
            CHECK(extracted == placed);
            CHECK(placed_surfaces(s, true).size() == 10);
        }
    }
}

TEST_CASE("pinned relation kinds hold for the whole chain") {
    for (RelationKind k : {RelationKind::family, RelationKind::professional,
                           RelationKind::temporal, RelationKind::geographical}) {
        for (int diff = 1; diff <= 3; ++diff) {
            auto cfg = make_config(TaskType::contextual, diff, 4);
            cfg.relation_kind = k;
            const auto s = generate_scenario(31 + diff, cfg);
            REQUIRE(s.graph.relations.size() == static_cast<std::size_t>(diff));
            for (const auto& rel : s.graph.relations) CHECK(rel.kind == k);
        }
    }
}

TEST_CASE("verify_candidate match policies") {
    const auto s = generate_scenario(3, make_config(TaskType::structured, 1, 2));
    const std::string& target = s.graph.target;
    CHECK(verify_candidate(s, target));
    CHECK(!verify_candidate(s, ""));
    std::string swapped = target;
    swapped[0] = static_cast<char>(std::isupper(static_cast<unsigned char>(swapped[0]))
                                       ? std::tolower(static_cast<unsigned char>(swapped[0]))
                                       : std::toupper(static_cast<unsigned char>(swapped[0])));
    if (swapped != target) {
        CHECK(!verify_candidate(s, swapped));
        CHECK(verify_candidate(s, swapped, MatchPolicy::case_insensitive));
    }
}

TEST_CASE("serialization round-trip and public view") {
    const auto s = generate_scenario(99, make_config(TaskType::contextual, 3, 6));
    const std::string blob = serialize_scenario(s);
    const Scenario back = deserialize_scenario(blob);
    CHECK(serialize_scenario(back) == blob);
    CHECK(back.graph.target == s.graph.target);
    CHECK(back.graph.chain.hop_count == s.graph.chain.hop_count);

    const std::string pub = serialize_public_view(s);
    CHECK(pub.find("\"graph\"") == std::string::npos);
    CHECK(pub.find("\"target\"") == std::string::npos);
    CHECK(pub.find(s.graph.target) == std::string::npos);
    CHECK(pub.find("\"documents\"") != std::string::npos);
}

TEST_CASE("entity invariants: names from pools, years well-formed") {
    auto in_pool = [](const std::string& name) {
        for (auto pool : {pools::given_names(), pools::surnames(), pools::org_roots(),
                          pools::place_names(), pools::event_roots()})
            if (std::find_if(pool.begin(), pool.end(),
                             [&](const char* w) { return name == w; }) != pool.end())
                return true;
        return false;
    };
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto s = generate_scenario(seed, make_config(TaskType::contextual, 2, 4));
        for (const auto& e : s.graph.entities) {
            CHECK(in_pool(e.name));
            for (const auto& [kind, value] : e.attributes) {
                if (kind == AttrKind::birth_year || kind == AttrKind::founding_year) {
                    REQUIRE(value.size() == 4);
                    const int year = std::stoi(value);
                    CHECK(year >= 1940);
                    CHECK(year <= 2010);
                }
            }
        }
    }
}

TEST_CASE("word pools meet their size floors and avoid reserved tokens") {
    CHECK(pools::given_names().size() >= 500);
    CHECK(pools::surnames().size() >= 200);
    CHECK(pools::org_roots().size() >= 300);
    for (auto pool : {pools::given_names(), pools::surnames(), pools::org_roots(),
                      pools::place_names(), pools::event_roots()}) {
        for (const char* w : pool) {
            CHECK(!pools::is_stopword(w));
            CHECK(!pools::is_org_suffix(w));
            CHECK(!pools::is_event_suffix(w));
        }
    }
}
