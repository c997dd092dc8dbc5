#include "hopbench/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hopbench/prompts.hpp"
#include "hopbench/rng.hpp"
#include "hopbench/scenario.hpp"

namespace hopbench::oracle {

namespace {

constexpr const char* kOrgSuffixAlt = "(?:Labs|Corp|Group|Systems|Industries|Institute)";
constexpr const char* kEventSuffixAlt = "(?:Festival|Fair|Summit|Regatta)";

struct ParsedRelation {
    std::string src;
    std::string dst;
    std::string kind;   // family | professional | temporal | geographical
    std::string label;  // family label or role; empty otherwise
};

struct ParsedAttr {
    std::string anchor;  // previous-hop surface the sentence references
    std::string link;    // family-label / company / founder / gathering / ...
    std::string year;
};

struct ParsedDirect {
    std::string entity;
    std::string year;
};

struct DocumentFacts {
    std::vector<ParsedRelation> relations;
    std::vector<ParsedAttr> attrs;
    std::vector<ParsedDirect> directs;
    std::vector<std::string> stray_names;  // single-atom sentences
    std::vector<std::string> stray_years;
};

std::vector<std::string> sentences_of(const std::string& slot) {
    std::vector<std::string> out;
    std::istringstream in(slot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) continue;  // document / section markers
        std::size_t pos = 0;
        while (pos < line.size()) {
            auto dot = line.find('.', pos);
            if (dot == std::string::npos) break;
            std::string s = line.substr(pos, dot - pos);
            const auto b = s.find_first_not_of(' ');
            if (b != std::string::npos) out.push_back(s.substr(b));
            pos = dot + 1;
        }
    }
    return out;
}

// Immutable pattern table, built once; safe under concurrent trials.
struct Patterns {
    std::regex fam_rel, prof_po, prof_op, temp_pe, temp_ep, geo_ppl, geo_plp, geo_opl;
    std::regex obl_founder, obl_company, obl_gathering, obl_honoree, obl_settled,
        obl_hosts, obl_native, obl_family;
    std::regex direct_person, direct_org;
    std::regex stray_name, stray_year, stray_org, stray_place;

    Patterns() {
        const std::string org = kOrgSuffixAlt;
        const std::string event = kEventSuffixAlt;
        fam_rel = std::regex(R"(The family register lists (\w+) as the (\w+) of (\w+))");
        prof_po = std::regex(R"((\w+) serves as (\w+) at (\w+) )" + org);
        prof_op = std::regex(R"(The charter of (\w+) )" + org + R"( names (\w+) as its founder)");
        temp_pe = std::regex(R"((\w+) presided over the first (\w+) )" + event);
        temp_ep = std::regex(R"(The (\w+) )" + event + R"( was held in honor of (\w+))");
        geo_ppl = std::regex(R"((\w+) settled in (\w+) after many seasons away)");
        geo_plp = std::regex(R"(The town of (\w+) claims (\w+) as its best known native)");
        geo_opl = std::regex(R"((\w+) )" + org + R"( operates out of (\w+))");
        obl_founder = std::regex(R"(The founder of (\w+)(?: )" + org + R"()? was born in (\d{4}))");
        obl_company = std::regex(R"(The company where (\w+) serves was established in (\d{4}))");
        obl_gathering =
            std::regex(R"(The gathering that (\w+) presided over was first held in (\d{4}))");
        obl_honoree =
            std::regex(R"(The honoree of the (\w+) )" + event + R"( was born in (\d{4}))");
        obl_settled =
            std::regex(R"(The town where (\w+) settled was incorporated in (\d{4}))");
        obl_hosts = std::regex(R"(The town that hosts (\w+)(?: )" + org +
                               R"()? was incorporated in (\d{4}))");
        obl_native = std::regex(R"(The best known native of (\w+) was born in (\d{4}))");
        obl_family = std::regex(R"(The (\w+) of (\w+) was born in (\d{4}))");
        direct_person = std::regex(R"((\w+) was born in (\d{4}))");
        direct_org = std::regex(R"((\w+) )" + org + R"( was established in (\d{4}))");
        stray_name = std::regex(
            R"(The guest list from that spring included (\w+) among several other visitors)");
        stray_year =
            std::regex(R"(The annex was repainted in (\d{4}) according to the parish ledger)");
        stray_org = std::regex(R"(Monthly deliveries arrived from (\w+) )" + org +
                               R"( throughout that period)");
        stray_place =
            std::regex(R"(Parcels were routed through (\w+) on the old carrier road)");
    }
};

const Patterns& patterns() {
    static const Patterns p;
    return p;
}

DocumentFacts parse_documents(const std::string& doc_slot) {
    DocumentFacts f;
    std::smatch m;
    const Patterns& p = patterns();

    for (const std::string& s : sentences_of(doc_slot)) {
        // relations
        if (std::regex_match(s, m, p.fam_rel))
            f.relations.push_back({m[3], m[1], "family", m[2]});
        else if (std::regex_match(s, m, p.prof_po))
            f.relations.push_back({m[1], m[3], "professional", m[2]});
        else if (std::regex_match(s, m, p.prof_op))
            f.relations.push_back({m[1], m[2], "professional", "founder"});
        else if (std::regex_match(s, m, p.temp_pe))
            f.relations.push_back({m[1], m[2], "temporal", "gathering"});
        else if (std::regex_match(s, m, p.temp_ep))
            f.relations.push_back({m[1], m[2], "temporal", "honoree"});
        else if (std::regex_match(s, m, p.geo_ppl))
            f.relations.push_back({m[1], m[2], "geographical", "settled"});
        else if (std::regex_match(s, m, p.geo_plp))
            f.relations.push_back({m[1], m[2], "geographical", "native"});
        else if (std::regex_match(s, m, p.geo_opl))
            f.relations.push_back({m[1], m[2], "geographical", "hosts"});
        // oblique attributes (most specific first)
        else if (std::regex_match(s, m, p.obl_founder))
            f.attrs.push_back({m[1], "founder", m[2]});
        else if (std::regex_match(s, m, p.obl_company))
            f.attrs.push_back({m[1], "company", m[2]});
        else if (std::regex_match(s, m, p.obl_gathering))
            f.attrs.push_back({m[1], "gathering", m[2]});
        else if (std::regex_match(s, m, p.obl_honoree))
            f.attrs.push_back({m[1], "honoree", m[2]});
        else if (std::regex_match(s, m, p.obl_settled))
            f.attrs.push_back({m[1], "settled", m[2]});
        else if (std::regex_match(s, m, p.obl_hosts))
            f.attrs.push_back({m[1], "hosts", m[2]});
        else if (std::regex_match(s, m, p.obl_native))
            f.attrs.push_back({m[1], "native", m[2]});
        else if (std::regex_match(s, m, p.obl_family))
            f.attrs.push_back({m[2], m[1], m[3]});
        // direct statements (structured tasks)
        else if (std::regex_match(s, m, p.direct_person))
            f.directs.push_back({m[1], m[2]});
        else if (std::regex_match(s, m, p.direct_org))
            f.directs.push_back({m[1], m[2]});
        // distractor surfaces, kept for plausible wrong guesses
        else if (std::regex_match(s, m, p.stray_name))
            f.stray_names.push_back(m[1]);
        else if (std::regex_match(s, m, p.stray_year))
            f.stray_years.push_back(m[1]);
        else if (std::regex_match(s, m, p.stray_org))
            f.stray_names.push_back(m[1]);
        else if (std::regex_match(s, m, p.stray_place))
            f.stray_names.push_back(m[1]);
    }
    return f;
}

std::string relation_signature(const ParsedRelation& r) {
    return "rel|" + r.src + "|" + r.kind + "|" + r.label + "|" + r.dst;
}

std::string attr_signature(const ParsedAttr& a) {
    return "attr|" + a.anchor + "|" + a.link + "|" + a.year;
}

std::string direct_signature(const ParsedDirect& d) {
    return "direct|" + d.entity + "|" + d.year;
}

// The linked terminal pair: the entity surface reached through the final
// relation plus the attribute year that references the same anchor and link.
struct LinkedPair {
    std::string name;
    std::string year;
};

std::optional<LinkedPair> link_chain(const DocumentFacts& f) {
    for (const auto& a : f.attrs) {
        for (const auto& r : f.relations) {
            if (r.src != a.anchor) continue;
            const bool match =
                (a.link == "company" && r.kind == "professional") ||
                (a.link == "founder" && r.kind == "professional") ||
                (a.link == "gathering" && r.kind == "temporal") ||
                (a.link == "honoree" && r.kind == "temporal") ||
                (a.link == "settled" && r.kind == "geographical") ||
                (a.link == "hosts" && r.kind == "geographical") ||
                (a.link == "native" && r.kind == "geographical") ||
                (r.kind == "family" && a.link == r.label);
            if (match) return LinkedPair{r.dst, a.year};
        }
    }
    if (!f.directs.empty() && f.relations.empty())
        return LinkedPair{f.directs.front().entity, f.directs.front().year};
    return std::nullopt;
}

double roll(const OracleProfile& p, std::uint64_t scenario_key, const std::string& tag) {
    return keyed_unit(mix(mix(p.seed, scenario_key), tag));
}

// Candidate surfaces for one atom pair, in the fixed rule-instance order.
std::vector<std::string> pair_candidates(const std::string& a, const std::string& b) {
    std::vector<std::string> out;
    for (const auto& rule : all_rule_instances()) out.push_back(apply_rule(rule, {a, b}));
    return out;
}

std::vector<std::string> decoy_candidates(const DocumentFacts& f,
                                          const std::optional<LinkedPair>& truth,
                                          const OracleProfile& p,
                                          std::uint64_t scenario_key,
                                          std::uint64_t variety, std::size_t limit) {
    std::vector<std::string> names = f.stray_names;
    std::vector<std::string> years = f.stray_years;
    for (const auto& r : f.relations) {
        names.push_back(r.src);
        names.push_back(r.dst);
    }
    for (const auto& a : f.attrs) {
        names.push_back(a.anchor);
        years.push_back(a.year);
    }
    for (const auto& d : f.directs) {
        names.push_back(d.entity);
        years.push_back(d.year);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());

    RngStream rng(mix(mix(p.seed, scenario_key), mix(variety, "decoys")));
    rng.shuffle(names);
    rng.shuffle(years);

    const auto& rules = all_rule_instances();
    std::vector<std::string> out;
    for (const auto& n : names) {
        for (const auto& y : years) {
            if (truth && n == truth->name && y == truth->year) continue;
            if (out.size() >= limit) return out;
            const auto& rule = rules[rng.bounded(rules.size())];
            out.push_back(apply_rule(rule, {n, y}));
        }
    }
    return out;
}

std::string fenced_reply(const std::vector<std::string>& candidates) {
    std::string reply = "Working through entities, relationships, and construction "
                        "patterns before guessing.\n```\n";
    for (const auto& c : candidates) reply += c + "\n";
    reply += "```\n";
    return reply;
}

// ---------------------------------------------------------------------------
// role handlers
// ---------------------------------------------------------------------------

std::string entity_kind_guess(const ParsedRelation& r, bool src) {
    if (r.kind == "family") return "person";
    if (r.kind == "professional")
        return (src == (r.label == "founder")) ? "organization" : "person";
    if (r.kind == "temporal") return (src == (r.label == "honoree")) ? "event" : "person";
    if (r.kind == "geographical") {
        if (r.label == "native") return src ? "place" : "person";
        return src ? (r.label == "hosts" ? "organization" : "person") : "place";
    }
    return "person";
}

struct RetainedFacts {
    DocumentFacts kept;
    std::size_t relation_sentences = 0;  // pre-drop count, for hop estimation
};

RetainedFacts retain(const DocumentFacts& f, const OracleProfile& p,
                     std::uint64_t scenario_key) {
    RetainedFacts out;
    out.relation_sentences = f.relations.size();
    for (const auto& r : f.relations)
        if (roll(p, scenario_key, "fact:" + relation_signature(r)) < p.extraction_accuracy)
            out.kept.relations.push_back(r);
    for (const auto& a : f.attrs)
        if (roll(p, scenario_key, "fact:" + attr_signature(a)) < p.extraction_accuracy)
            out.kept.attrs.push_back(a);
    for (const auto& d : f.directs)
        if (roll(p, scenario_key, "fact:" + direct_signature(d)) < p.extraction_accuracy)
            out.kept.directs.push_back(d);
    out.kept.stray_names = f.stray_names;
    out.kept.stray_years = f.stray_years;
    return out;
}

int hops_of(std::size_t relation_sentences) {
    return static_cast<int>(std::min<std::size_t>(relation_sentences, 3)) + 1;
}

std::string analyst_reply(const DocumentFacts& kept) {
    std::vector<std::pair<std::string, std::string>> entities;  // surface, kind
    auto add = [&](const std::string& s, const std::string& kind) {
        for (const auto& [e, k] : entities)
            if (e == s) return;
        entities.emplace_back(s, kind);
    };
    for (const auto& r : kept.relations) {
        add(r.src, entity_kind_guess(r, true));
        add(r.dst, entity_kind_guess(r, false));
    }
    for (const auto& a : kept.attrs) {
        add(a.anchor, "mention");
        add(a.year, "year");
    }
    for (const auto& d : kept.directs) {
        add(d.entity, "mention");
        add(d.year, "year");
    }

    std::string out = "ENTITIES:\n";
    for (const auto& [s, k] : entities) out += "- " + s + " | " + k + "\n";
    out += "RELATIONS:\n";
    for (const auto& r : kept.relations)
        out += "- " + r.src + " | " + r.kind + ":" + r.label + " | " + r.dst + "\n";
    out += "FACTS:\n";
    for (const auto& a : kept.attrs)
        out += "- " + a.anchor + " | " + a.link + " | year | " + a.year + "\n";
    for (const auto& d : kept.directs)
        out += "- " + d.entity + " | direct | year | " + d.year + "\n";
    return out;
}

// Reconstructs facts from a rendered analyst payload (the strategist and
// generator never see documents, only this structured state).
DocumentFacts facts_from_analyst(const std::string& entities_slot) {
    DocumentFacts f;
    for (const auto& line : prompts::labeled_list(entities_slot, "RELATIONS")) {
        const auto fields = prompts::split_fields(line);
        if (fields.size() != 3) continue;
        const auto colon = fields[1].find(':');
        ParsedRelation r;
        r.src = fields[0];
        r.dst = fields[2];
        r.kind = colon == std::string::npos ? fields[1] : fields[1].substr(0, colon);
        r.label = colon == std::string::npos ? "" : fields[1].substr(colon + 1);
        f.relations.push_back(r);
    }
    for (const auto& line : prompts::labeled_list(entities_slot, "FACTS")) {
        const auto fields = prompts::split_fields(line);
        if (fields.size() != 4 || fields[2] != "year") continue;
        if (fields[1] == "direct")
            f.directs.push_back({fields[0], fields[3]});
        else
            f.attrs.push_back({fields[0], fields[1], fields[3]});
    }
    for (const auto& line : prompts::labeled_list(entities_slot, "ENTITIES")) {
        const auto fields = prompts::split_fields(line);
        if (fields.size() != 2) continue;
        if (fields[1] == "year")
            f.stray_years.push_back(fields[0]);
        else
            f.stray_names.push_back(fields[0]);
    }
    return f;
}

// Synthesis gate shared by the strategist (guided) and the generator when it
// works unguided. Round one uses the hop-count probability with the
// coordination overhead; refinement rounds recover a fixed fraction of
// failures, re-rolled against the evolving failure list.
bool synthesis_gate(const OracleProfile& p, std::uint64_t scenario_key, int hops,
                    const std::string& failures, bool guided) {
    const double penalty = guided ? 1.0 : p.unguided_penalty;
    const double base = p.synthesis_per_hop[static_cast<std::size_t>(
                            std::clamp(hops, 1, 4))] *
                        p.round_overhead * penalty;
    const std::string prefix = guided ? "synth" : "unsynth";
    if (roll(p, scenario_key, prefix + ":r1") < base) return true;
    const bool first_round = failures.empty() || failures == "(none)";
    if (first_round) return false;
    const double recovery = p.refinement_recovery * penalty;
    return roll(p, scenario_key, prefix + ":refine:" + failures) < recovery;
}

std::string hypotheses_reply(const DocumentFacts& kept, const OracleProfile& p,
                             std::uint64_t scenario_key, int hops,
                             const std::string& failures) {
    const auto truth = link_chain(kept);
    std::string out = "HYPOTHESES:\n";
    if (truth && synthesis_gate(p, scenario_key, hops, failures, true)) {
        for (const auto& rule : all_rule_instances())
            out += "- " + truth->name + " + " + truth->year + " | " + rule.name() + "\n";
        return out;
    }
    const auto& rules = all_rule_instances();
    RngStream rng(mix(mix(p.seed, scenario_key), mix(fnv1a64(failures), "hyp")));
    std::vector<std::string> names = kept.stray_names;
    std::vector<std::string> years = kept.stray_years;
    for (const auto& a : kept.attrs) years.push_back(a.year);
    for (const auto& r : kept.relations) names.push_back(r.dst);
    for (std::size_t i = 0; i < 8 && !names.empty() && !years.empty(); ++i) {
        const auto& n = names[rng.bounded(names.size())];
        const auto& y = years[rng.bounded(years.size())];
        if (truth && n == truth->name && y == truth->year) continue;
        out += "- " + n + " + " + y + " | " + rules[rng.bounded(rules.size())].name() + "\n";
    }
    return out;
}

const CombinationRule* rule_by_name(const std::string& name) {
    for (const auto& r : all_rule_instances())
        if (r.name() == name) return &r;
    return nullptr;
}

}  // namespace

struct OracleBackend::ParseCache {
    std::mutex mu;
    std::unordered_map<std::uint64_t, DocumentFacts> by_hash;

    DocumentFacts get(std::uint64_t key, const std::string& doc_slot) {
        {
            std::lock_guard lock(mu);
            auto it = by_hash.find(key);
            if (it != by_hash.end()) return it->second;
        }
        DocumentFacts f = parse_documents(doc_slot);
        std::lock_guard lock(mu);
        by_hash.emplace(key, f);
        return f;
    }
};

void OracleProfile::validate() const {
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!unit(extraction_accuracy) || !unit(refinement_recovery) ||
        !unit(round_overhead) || !unit(unguided_penalty))
        throw ConfigError("oracle profile probabilities must be in [0,1]");
    for (double v : synthesis_per_hop)
        if (!unit(v)) throw ConfigError("per-hop synthesis probability out of range");
}

OracleBackend::OracleBackend(OracleProfile profile)
    : profile_(profile), cache_(std::make_unique<ParseCache>()) {
    profile_.validate();
}

OracleBackend::~OracleBackend() = default;

gateway::ChatResult OracleBackend::complete(const gateway::ChatRequest& request) {
    request.validate();
    std::string system, user;
    for (const auto& m : request.messages) {
        if (m.role == "system") system = m.content;
        if (m.role == "user") user = m.content;  // last user turn wins
    }

    gateway::ChatResult result;
    const std::string failures = prompts::find_slot(user, "Failed attempts");

    if (system == prompts::kSingleAgentSystem) {
        const std::string docs = prompts::find_slot(user, "Documents");
        const std::uint64_t key = fnv1a64(docs);
        const auto facts = cache_->get(key, docs);
        const auto kept = retain(facts, profile_, key);
        const auto truth = link_chain(kept.kept);
        // Decoy exclusion is keyed on the full parse: a guess the agent failed
        // to extract must not resurface by coincidence.
        const auto full_truth = link_chain(facts);
        const int hops = hops_of(kept.relation_sentences);
        const double s = profile_.synthesis_per_hop[static_cast<std::size_t>(
            std::clamp(hops, 1, 4))];
        std::vector<std::string> candidates;
        // Single-agent synthesis is one fixed roll per scenario: repeated
        // prompting samples new guesses but never new strategy.
        if (truth && roll(profile_, key, "synth:single") < s)
            candidates = pair_candidates(truth->name, truth->year);
        const auto decoys = decoy_candidates(facts, full_truth, profile_, key,
                                             fnv1a64(failures), 10);
        candidates.insert(candidates.end(), decoys.begin(), decoys.end());
        result.text = fenced_reply(candidates);
    } else if (system == prompts::kAnalystSystem) {
        const std::string docs = prompts::find_slot(user, "Documents");
        const std::uint64_t key = fnv1a64(docs);
        const auto kept = retain(cache_->get(key, docs), profile_, key);
        result.text = analyst_reply(kept.kept);
    } else if (system == prompts::kStrategistSystem) {
        const std::string entities = prompts::find_slot(user, "Extracted entities");
        const std::uint64_t key = fnv1a64(entities);
        const auto facts = facts_from_analyst(entities);
        const int hops = hops_of(facts.relations.size());
        result.text = hypotheses_reply(facts, profile_, key, hops, failures);
    } else if (system == prompts::kGeneratorSystem) {
        const std::string hypotheses = prompts::find_slot(user, "Hypotheses");
        const std::string entities = prompts::find_slot(user, "Extracted entities");
        std::vector<std::string> candidates;
        if (!hypotheses.empty()) {
            // Guided: render the strategist's hypotheses mechanically.
            std::istringstream in(hypotheses);
            std::string line;
            while (std::getline(in, line)) {
                if (line.rfind("- ", 0) != 0) continue;
                const auto fields = prompts::split_fields(line.substr(2));
                if (fields.size() != 2) continue;
                const auto plus = fields[0].find(" + ");
                if (plus == std::string::npos) continue;
                const CombinationRule* rule = rule_by_name(fields[1]);
                if (!rule) continue;
                candidates.push_back(apply_rule(
                    *rule, {fields[0].substr(0, plus), fields[0].substr(plus + 3)}));
            }
        } else {
            // Unguided (no strategist): weaker synthesis from raw facts.
            const std::uint64_t key = fnv1a64(entities);
            const auto facts = facts_from_analyst(entities);
            const int hops = hops_of(facts.relations.size());
            const auto truth = link_chain(facts);
            if (truth && synthesis_gate(profile_, key, hops, failures, false))
                candidates = pair_candidates(truth->name, truth->year);
            const auto decoys = decoy_candidates(facts, truth, profile_, key,
                                                 fnv1a64(failures), 8);
            candidates.insert(candidates.end(), decoys.begin(), decoys.end());
        }
        result.text = fenced_reply(candidates);
    } else {
        throw ProtocolError("oracle backend: unrecognized agent role");
    }

    result.raw_response = result.text;
    return result;
}

}  // namespace hopbench::oracle
