#include "hopbench/scenario.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hopbench/rng.hpp"
#include "hopbench/wordpools.hpp"

namespace hopbench {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kYearLo = 1940;
constexpr int kYearHi = 2010;
constexpr int kDistractorResampleLimit = 32;
constexpr int kSurfaceResampleLimit = 200;

bool is_year_token(std::string_view s) {
    if (s.size() != 4) return false;
    if (!(s[0] == '1' || s[0] == '2')) return false;
    if (s[0] == '1' && s[1] != '9') return false;
    if (s[0] == '2' && s[1] != '0') return false;
    return std::isdigit(static_cast<unsigned char>(s[2])) &&
           std::isdigit(static_cast<unsigned char>(s[3]));
}

std::string lowercased(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

const char* to_string(EntityKind k) {
    switch (k) {
        case EntityKind::person: return "person";
        case EntityKind::organization: return "organization";
        case EntityKind::place: return "place";
        case EntityKind::event: return "event";
    }
    return "?";
}

const char* to_string(AttrKind k) {
    switch (k) {
        case AttrKind::birth_year: return "birth_year";
        case AttrKind::founding_year: return "founding_year";
        case AttrKind::location: return "location";
        case AttrKind::role: return "role";
    }
    return "?";
}

const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::family: return "family";
        case RelationKind::professional: return "professional";
        case RelationKind::temporal: return "temporal";
        case RelationKind::geographical: return "geographical";
    }
    return "?";
}

const char* to_string(TaskType t) {
    return t == TaskType::structured ? "structured" : "contextual";
}

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::concatenation: return "concatenation";
        case RuleKind::interleaving: return "interleaving";
        case RuleKind::transformation: return "transformation";
    }
    return "?";
}

std::string CombinationRule::name() const {
    switch (kind) {
        case RuleKind::concatenation:
            return separator.empty() ? "concat:none" : "concat:" + separator;
        case RuleKind::interleaving:
            return "interleave:" + std::to_string(block);
        case RuleKind::transformation: {
            std::string n = "transform:";
            if (lowercase) n += "lower";
            if (two_digit_year) n += lowercase ? "+yy" : "yy";
            return n;
        }
    }
    return "?";
}

const std::vector<CombinationRule>& all_rule_instances() {
    static const std::vector<CombinationRule> instances = [] {
        std::vector<CombinationRule> v;
        for (const char* sep : {"", "_", "-"})
            v.push_back({RuleKind::concatenation, sep, 0, false, false});
        for (int b : {1, 2})
            v.push_back({RuleKind::interleaving, "", b, false, false});
        v.push_back({RuleKind::transformation, "", 0, true, false});
        v.push_back({RuleKind::transformation, "", 0, true, true});
        v.push_back({RuleKind::transformation, "", 0, false, true});
        return v;
    }();
    return instances;
}

std::string apply_rule(const CombinationRule& rule, const std::vector<std::string>& atoms) {
    if (atoms.size() < 2)
        throw GenerationError("combination rule requires at least two atoms");
    switch (rule.kind) {
        case RuleKind::concatenation: {
            std::string out;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (i) out += rule.separator;
                out += atoms[i];
            }
            return out;
        }
        case RuleKind::interleaving: {
            const std::size_t block = rule.block < 1 ? 1 : static_cast<std::size_t>(rule.block);
            std::vector<std::size_t> pos(atoms.size(), 0);
            std::string out;
            bool any = true;
            while (any) {
                any = false;
                for (std::size_t i = 0; i < atoms.size(); ++i) {
                    if (pos[i] >= atoms[i].size()) continue;
                    const std::size_t take = std::min(block, atoms[i].size() - pos[i]);
                    out.append(atoms[i], pos[i], take);
                    pos[i] += take;
                    any = true;
                }
            }
            return out;
        }
        case RuleKind::transformation: {
            std::string out;
            for (const std::string& atom : atoms) {
                std::string piece = atom;
                if (rule.two_digit_year && is_year_token(piece)) piece = piece.substr(2);
                if (rule.lowercase) piece = lowercased(piece);
                out += piece;
            }
            return out;
        }
    }
    throw GenerationError("unknown rule kind");
}

std::string construct_target(const HopChain& chain, const CombinationRule& rule) {
    return apply_rule(rule, chain.atoms);
}

void ScenarioConfig::validate() const {
    if (difficulty < 1 || difficulty > 3)
        throw ConfigError("difficulty must be in {1,2,3}");
    if (info_density < 0 || info_density > kMaxInfoDensity)
        throw ConfigError("info_density must be in [0, " +
                          std::to_string(kMaxInfoDensity) + "]");
    if (geographical_weight < 0.0)
        throw ConfigError("geographical_weight must be >= 0");
}

std::uint64_t ScenarioConfig::key_hash() const {
    std::string key = std::string(to_string(task_type)) + "|" +
                      std::to_string(difficulty) + "|" + std::to_string(info_density) + "|" +
                      (relation_kind ? to_string(*relation_kind) : "any") + "|" +
                      std::to_string(geographical_weight) + "|" +
                      (match_policy == MatchPolicy::exact ? "exact" : "fold");
    return fnv1a64(key);
}

namespace {

// ---------------------------------------------------------------------------
// sentence templates
//
// Slot conventions: {A} source entity, {B} destination entity, {label} family
// label, {role} occupation, {year} attribute value. Org and event entities
// render as "<root> <suffix>" at every mention. Every capitalized literal in
// these strings must be covered by pools::prose_stopwords(); the template
// audit test enforces that.
// ---------------------------------------------------------------------------

const std::array<const char*, 8> kFamilyLabels = {
    "daughter", "son", "spouse", "sister", "brother", "cousin", "niece", "nephew",
};

const std::array<const char*, 8> kFillers = {
    "The neighborhood bulletin collects notes from residents and local groups.",
    "Little of the paperwork from those years survives.",
    "Minutes of the council meetings were kept by hand.",
    "Most of the correspondence was archived without comment.",
    "Visitors often left remarks in the guest ledger.",
    "Donations to the reading room arrived season after season.",
    "Letters from the period are filed in no particular order.",
    "Records of the committee were bound into annual volumes.",
};

const std::array<const char*, 8> kHeadings = {
    "Background", "Early Years", "Community Notes", "Operations",
    "Timeline", "Correspondence", "Local History", "Appendix",
};

const std::array<const char*, 4> kTitles = {
    "Community Profile", "Regional Notebook", "Local Register", "Archive Extracts",
};

struct EntityCtx {
    const Entity* entity = nullptr;
    std::string rendered;  // name, or "Root Suffix" for org/event
};

std::string rel_sentence(const Relation& rel, const EntityCtx& a, const EntityCtx& b,
                         const std::string& family_label, const std::string& role) {
    switch (rel.kind) {
        case RelationKind::family:
            return "The family register lists " + b.rendered + " as the " + family_label +
                   " of " + a.rendered + ".";
        case RelationKind::professional:
            if (a.entity->kind == EntityKind::person)
                return a.rendered + " serves as " + role + " at " + b.rendered + ".";
            return "The charter of " + a.rendered + " names " + b.rendered +
                   " as its founder.";
        case RelationKind::temporal:
            if (a.entity->kind == EntityKind::person)
                return a.rendered + " presided over the first " + b.rendered + ".";
            return "The " + a.rendered + " was held in honor of " + b.rendered + ".";
        case RelationKind::geographical:
            if (a.entity->kind == EntityKind::person)
                return a.rendered + " settled in " + b.rendered + " after many seasons away.";
            if (a.entity->kind == EntityKind::organization)
                return a.rendered + " operates out of " + b.rendered + ".";
            return "The town of " + a.rendered + " claims " + b.rendered +
                   " as its best known native.";
    }
    throw GenerationError("unknown relation kind");
}

// References the terminal entity through its relation to the previous hop,
// never by name: this is what keeps the two target atoms apart.
std::string oblique_attr_sentence(const Relation& last, const EntityCtx& a,
                                  const std::string& family_label, const std::string& year,
                                  EntityKind terminal_kind) {
    switch (last.kind) {
        case RelationKind::family:
            return "The " + family_label + " of " + a.rendered + " was born in " + year + ".";
        case RelationKind::professional:
            if (terminal_kind == EntityKind::organization)
                return "The company where " + a.rendered + " serves was established in " +
                       year + ".";
            return "The founder of " + a.rendered + " was born in " + year + ".";
        case RelationKind::temporal:
            if (terminal_kind == EntityKind::event)
                return "The gathering that " + a.rendered +
                       " presided over was first held in " + year + ".";
            return "The honoree of the " + a.rendered + " was born in " + year + ".";
        case RelationKind::geographical:
            if (terminal_kind == EntityKind::place) {
                if (a.entity->kind == EntityKind::organization)
                    return "The town that hosts " + a.rendered + " was incorporated in " +
                           year + ".";
                return "The town where " + a.rendered + " settled was incorporated in " +
                       year + ".";
            }
            return "The best known native of " + a.rendered + " was born in " + year + ".";
    }
    throw GenerationError("unknown relation kind");
}

std::string direct_attr_sentence(const EntityCtx& a, const std::string& year) {
    if (a.entity->kind == EntityKind::organization)
        return a.rendered + " was established in " + year + ".";
    return a.rendered + " was born in " + year + ".";
}

// Exactly one extractable atom per distractor sentence. Atoms sit mid-sentence
// with generous padding on both sides so that no cross-sentence distractor
// pair is ever tighter than a structured task's true pair; candidate ordering
// in the rule-based solver depends on this.
enum class DistractorKind { name, year, org, place };

std::string distractor_sentence(DistractorKind kind, const std::string& surface_rendered) {
    switch (kind) {
        case DistractorKind::name:
            return "The guest list from that spring included " + surface_rendered +
                   " among several other visitors.";
        case DistractorKind::year:
            return "The annex was repainted in " + surface_rendered +
                   " according to the parish ledger.";
        case DistractorKind::org:
            return "Monthly deliveries arrived from " + surface_rendered +
                   " throughout that period.";
        case DistractorKind::place:
            return "Parcels were routed through " + surface_rendered +
                   " on the old carrier road.";
    }
    throw GenerationError("unknown distractor kind");
}

// ---------------------------------------------------------------------------
// graph construction
// ---------------------------------------------------------------------------

EntityKind relation_dst_kind(RelationKind rel, EntityKind src) {
    switch (rel) {
        case RelationKind::family: return EntityKind::person;
        case RelationKind::professional:
            return src == EntityKind::person ? EntityKind::organization : EntityKind::person;
        case RelationKind::temporal:
            return src == EntityKind::person ? EntityKind::event : EntityKind::person;
        case RelationKind::geographical:
            return src == EntityKind::place ? EntityKind::person : EntityKind::place;
    }
    return EntityKind::person;
}

std::vector<RelationKind> relations_from(EntityKind src) {
    switch (src) {
        case EntityKind::person:
            return {RelationKind::family, RelationKind::professional,
                    RelationKind::temporal, RelationKind::geographical};
        case EntityKind::organization:
            return {RelationKind::professional, RelationKind::geographical};
        case EntityKind::event:
            return {RelationKind::temporal};
        case EntityKind::place:
            return {RelationKind::geographical};
    }
    return {};
}

class SurfaceBook {
  public:
    // Enforces scenario-wide atom distinctness: no duplicate and no atom
    // that is a substring of another (exact substring search must be
    // unambiguous per placed surface).
    bool admissible(const std::string& s) const {
        for (const std::string& t : taken_) {
            if (t.find(s) != std::string::npos || s.find(t) != std::string::npos)
                return false;
        }
        return true;
    }
    void take(const std::string& s) { taken_.push_back(s); }

    std::string draw(RngStream& rng, std::span<const char* const> pool) {
        for (int i = 0; i < kSurfaceResampleLimit; ++i) {
            std::string s = pool[rng.bounded(pool.size())];
            if (admissible(s)) {
                take(s);
                return s;
            }
        }
        throw GenerationError("surface pool exhausted");
    }

    std::string draw_year(RngStream& rng) {
        for (int i = 0; i < kSurfaceResampleLimit; ++i) {
            std::string s = std::to_string(rng.range(kYearLo, kYearHi));
            if (admissible(s)) {
                take(s);
                return s;
            }
        }
        throw GenerationError("year pool exhausted");
    }

  private:
    std::vector<std::string> taken_;
};

std::string person_surface(RngStream& rng, SurfaceBook& book) {
    // Surnames pad the name space; they read as single-token names.
    const bool use_surname = rng.bounded(4) == 0;
    return book.draw(rng, use_surname ? pools::surnames() : pools::given_names());
}

RelationKind pick_relation_kind(RngStream& rng, EntityKind src, const ScenarioConfig& cfg) {
    const auto options = relations_from(src);
    if (cfg.relation_kind) {
        if (std::find(options.begin(), options.end(), *cfg.relation_kind) == options.end())
            throw GenerationError("pinned relation kind unreachable from entity kind");
        return *cfg.relation_kind;
    }
    double total = 0;
    std::vector<double> weights;
    for (RelationKind k : options) {
        const double w = k == RelationKind::geographical ? cfg.geographical_weight : 1.0;
        weights.push_back(w);
        total += w;
    }
    if (total <= 0) return options.front();
    double roll = rng.unit() * total;
    for (std::size_t i = 0; i < options.size(); ++i) {
        roll -= weights[i];
        if (roll < 0) return options[i];
    }
    return options.back();
}

struct GraphBuild {
    FactGraph graph;
    std::vector<std::string> rendered_names;  // per entity, suffixed form
    std::vector<std::string> family_labels;   // per relation ("" when not family)
    std::string terminal_year;
};

std::string rendered_name(const Entity& e, std::uint64_t scenario_root) {
    switch (e.kind) {
        case EntityKind::organization: {
            auto suf = pools::org_suffixes();
            return e.name + " " + suf[mix(scenario_root, "osuf:" + e.id) % suf.size()];
        }
        case EntityKind::event: {
            auto suf = pools::event_suffixes();
            return e.name + " " + suf[mix(scenario_root, "esuf:" + e.id) % suf.size()];
        }
        default:
            return e.name;
    }
}

GraphBuild build_graph(std::uint64_t root, const ScenarioConfig& cfg) {
    RngStream rng = RngStream(root).fork("entities");
    SurfaceBook book;
    GraphBuild out;

    const int hops = cfg.task_type == TaskType::structured ? 1 : cfg.difficulty + 1;

    // Anchor. Structured tasks occasionally anchor on an organization so that
    // founding-year targets appear too.
    Entity anchor;
    anchor.id = "e0";
    if (cfg.task_type == TaskType::structured && rng.bounded(5) < 2) {
        anchor.kind = EntityKind::organization;
        anchor.name = book.draw(rng, pools::org_roots());
    } else {
        anchor.kind = EntityKind::person;
        anchor.name = person_surface(rng, book);
    }
    out.graph.entities.push_back(anchor);

    for (int i = 1; i < hops; ++i) {
        const Entity& src = out.graph.entities.back();
        const RelationKind rk = pick_relation_kind(rng, src.kind, cfg);
        Entity next;
        next.id = "e" + std::to_string(i);
        next.kind = relation_dst_kind(rk, src.kind);
        switch (next.kind) {
            case EntityKind::person: next.name = person_surface(rng, book); break;
            case EntityKind::organization: next.name = book.draw(rng, pools::org_roots()); break;
            case EntityKind::place: next.name = book.draw(rng, pools::place_names()); break;
            case EntityKind::event: next.name = book.draw(rng, pools::event_roots()); break;
        }
        Relation rel{src.id, next.id, rk};
        std::string label;
        if (rk == RelationKind::family)
            label = kFamilyLabels[rng.bounded(kFamilyLabels.size())];
        if (rk == RelationKind::professional && src.kind == EntityKind::person) {
            auto roles = pools::roles();
            out.graph.entities.back().attributes[AttrKind::role] =
                roles[rng.bounded(roles.size())];
        }
        if (rk == RelationKind::geographical && next.kind == EntityKind::place)
            out.graph.entities.back().attributes[AttrKind::location] = next.name;
        out.graph.relations.push_back(rel);
        out.family_labels.push_back(label);
        out.graph.entities.push_back(next);
    }

    Entity& terminal = out.graph.entities.back();
    const AttrKind attr = terminal.kind == EntityKind::person ? AttrKind::birth_year
                                                              : AttrKind::founding_year;
    out.terminal_year = book.draw_year(rng);
    terminal.attributes[attr] = out.terminal_year;

    HopChain chain;
    for (std::size_t i = 0; i < out.graph.relations.size(); ++i) {
        HopStep step;
        step.kind = HopStep::Kind::traverse;
        step.src = out.graph.relations[i].src;
        step.dst = out.graph.relations[i].dst;
        step.relation = out.graph.relations[i].kind;
        chain.steps.push_back(step);
    }
    HopStep lookup;
    lookup.kind = HopStep::Kind::lookup;
    lookup.entity = terminal.id;
    lookup.attr = attr;
    chain.steps.push_back(lookup);
    chain.hop_count = hops;
    chain.atoms = {terminal.name, out.terminal_year};
    out.graph.chain = chain;

    // Rule choice, with a deterministic fallback to plain concatenation when
    // the sampled surface falls outside the target length/charset bounds.
    RngStream rule_rng = RngStream(root).fork("rule");
    const auto& rules = all_rule_instances();
    CombinationRule rule = rules[rule_rng.bounded(rules.size())];
    std::string target = apply_rule(rule, chain.atoms);
    auto target_ok = [](const std::string& t) {
        if (t.size() < 6 || t.size() > 24) return false;
        int separators = 0;
        for (char c : t) {
            if (!std::isalnum(static_cast<unsigned char>(c))) {
                if (c != '_' && c != '-') return false;
                ++separators;
            }
        }
        return separators <= 1;
    };
    if (!target_ok(target)) {
        rule = CombinationRule{RuleKind::concatenation, "", 0, false, false};
        target = apply_rule(rule, chain.atoms);
    }
    if (!target_ok(target)) throw GenerationError("target outside length bounds");
    out.graph.rule = rule;
    out.graph.target = target;

    for (const Entity& e : out.graph.entities)
        out.rendered_names.push_back(rendered_name(e, root));
    return out;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

struct SentencePlan {
    std::string text;
    std::vector<std::string> atoms;  // extractable surfaces placed by this sentence
    bool distractor = false;
    int section = 0;  // flat section index
};

struct SectionLayout {
    std::vector<int> sections_per_doc;
    int total() const {
        int n = 0;
        for (int s : sections_per_doc) n += s;
        return n;
    }
    std::pair<int, int> locate(int flat) const {
        for (std::size_t d = 0; d < sections_per_doc.size(); ++d) {
            if (flat < sections_per_doc[d]) return {static_cast<int>(d), flat};
            flat -= sections_per_doc[d];
        }
        throw GenerationError("section index out of range");
    }
};

std::vector<std::string> distractor_atoms_of(const std::vector<SentencePlan>& plans) {
    std::vector<std::string> out;
    for (const auto& p : plans)
        if (p.distractor)
            for (const auto& a : p.atoms) out.push_back(a);
    return out;
}

}  // namespace

RenderResult render_documents(const FactGraph& graph, const ScenarioConfig& config,
                              std::uint64_t seed) {
    const std::uint64_t root = mix(seed, config.key_hash());
    RngStream placement = RngStream(root).fork("placement");

    std::vector<EntityCtx> ctx(graph.entities.size());
    for (std::size_t i = 0; i < graph.entities.size(); ++i)
        ctx[i] = EntityCtx{&graph.entities[i], rendered_name(graph.entities[i], root)};
    auto ctx_of = [&](const std::string& id) -> const EntityCtx& {
        for (std::size_t i = 0; i < graph.entities.size(); ++i)
            if (graph.entities[i].id == id) return ctx[i];
        throw GenerationError("unknown entity id " + id);
    };

    // Family labels must match between a relation sentence and the oblique
    // attribute sentence, so they are re-derived from the same keyed stream.
    auto family_label_of = [&](const Relation& r) {
        return std::string(kFamilyLabels[mix(root, "flabel:" + r.src + ":" + r.dst) %
                                         kFamilyLabels.size()]);
    };

    const Entity& terminal = graph.entities.back();
    const std::string& terminal_year = graph.chain.atoms.at(1);

    // Chain sentences.
    std::vector<SentencePlan> chain_plans;
    if (graph.relations.empty()) {
        SentencePlan direct;
        direct.text = direct_attr_sentence(ctx_of(terminal.id), terminal_year);
        direct.atoms = {terminal.name, terminal_year};
        chain_plans.push_back(direct);
    } else {
        for (std::size_t i = 0; i < graph.relations.size(); ++i) {
            const Relation& r = graph.relations[i];
            const EntityCtx& a = ctx_of(r.src);
            const EntityCtx& b = ctx_of(r.dst);
            std::string role;
            if (auto it = a.entity->attributes.find(AttrKind::role);
                it != a.entity->attributes.end())
                role = it->second;
            if (role.empty()) role = "steward";
            SentencePlan p;
            p.text = rel_sentence(r, a, b, family_label_of(r), role);
            p.atoms = {a.entity->name, b.entity->name};
            chain_plans.push_back(p);
        }
        const Relation& last = graph.relations.back();
        const EntityCtx& prev = ctx_of(last.src);
        SentencePlan oblique;
        oblique.text = oblique_attr_sentence(last, prev, family_label_of(last),
                                             terminal_year, terminal.kind);
        oblique.atoms = {prev.entity->name, terminal_year};
        chain_plans.push_back(oblique);
    }

    // Section layout and chain sentence assignment.
    SectionLayout layout;
    const bool structured = config.task_type == TaskType::structured;
    layout.sections_per_doc = structured ? std::vector<int>{2, 1} : std::vector<int>{2, 2};
    const int total_sections = layout.total();

    if (structured) {
        chain_plans[0].section = 0;  // co-location contract: document 0, section 0
    } else {
        std::vector<int> order(static_cast<std::size_t>(total_sections));
        for (int i = 0; i < total_sections; ++i) order[static_cast<std::size_t>(i)] = i;
        placement.shuffle(order);
        const std::size_t n = chain_plans.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            chain_plans[i].section = order[i % order.size()];
        // The oblique sentence may not share a section with the sentence that
        // names the terminal entity.
        const int name_section = chain_plans[n - 2].section;
        int attr_section = order[(n - 1) % order.size()];
        if (attr_section == name_section)
            attr_section = (attr_section + 1) % total_sections;
        chain_plans[n - 1].section = attr_section;
    }

    const std::string& atom_name = graph.chain.atoms.at(0);
    const std::string& atom_year = graph.chain.atoms.at(1);

    // Distractors, resampled as a set until the safety checks pass.
    SurfaceBook book;
    for (const Entity& e : graph.entities) book.take(e.name);
    book.take(terminal_year);

    for (int attempt = 0; attempt < kDistractorResampleLimit; ++attempt) {
        SurfaceBook attempt_book = book;
        RngStream drng = RngStream(root).fork("distractors").fork(std::to_string(attempt));
        std::vector<SentencePlan> plans = chain_plans;

        for (int i = 0; i < config.info_density; ++i) {
            const auto kind = static_cast<DistractorKind>(i % 4);
            SentencePlan p;
            p.distractor = true;
            p.section = static_cast<int>(drng.bounded(static_cast<std::uint64_t>(total_sections)));
            std::string surface;
            std::string rendered;
            switch (kind) {
                case DistractorKind::name:
                    surface = person_surface(drng, attempt_book);
                    rendered = surface;
                    break;
                case DistractorKind::year:
                    surface = attempt_book.draw_year(drng);
                    rendered = surface;
                    break;
                case DistractorKind::org: {
                    surface = attempt_book.draw(drng, pools::org_roots());
                    auto suf = pools::org_suffixes();
                    rendered = surface + " " + suf[drng.bounded(suf.size())];
                    break;
                }
                case DistractorKind::place:
                    surface = attempt_book.draw(drng, pools::place_names());
                    rendered = surface;
                    break;
            }
            p.text = distractor_sentence(kind, rendered);
            p.atoms = {surface};
            plans.push_back(p);
        }

        // Assemble sections.
        RngStream order_rng = placement.fork("order:" + std::to_string(attempt));
        std::vector<std::vector<const SentencePlan*>> by_section(
            static_cast<std::size_t>(total_sections));
        for (const auto& p : plans) by_section[static_cast<std::size_t>(p.section)].push_back(&p);
        for (auto& v : by_section) order_rng.shuffle(v);

        RenderResult result;
        int flat = 0;
        for (std::size_t d = 0; d < layout.sections_per_doc.size(); ++d) {
            Document doc;
            doc.title = std::string(kTitles[d % kTitles.size()]);
            for (int s = 0; s < layout.sections_per_doc[d]; ++s, ++flat) {
                Section sec;
                sec.heading = kHeadings[static_cast<std::size_t>(flat) % kHeadings.size()];
                std::string text(kFillers[mix(root, "filler:" + std::to_string(flat)) %
                                          kFillers.size()]);
                for (const SentencePlan* p : by_section[static_cast<std::size_t>(flat)]) {
                    text += " ";
                    text += p->text;
                    auto [dd, ss] = layout.locate(p->section);
                    for (const std::string& a : p->atoms)
                        result.placements.push_back(AtomPlacement{a, dd, ss, p->distractor});
                }
                doc.sections.push_back(std::move(sec));
                doc.sections.back().text = std::move(text);
            }
            result.documents.push_back(std::move(doc));
        }

        // --- safety checks ---
        const std::string& target = graph.target;

        // Target never appears verbatim.
        bool bad = false;
        for (const auto& doc : result.documents)
            for (const auto& sec : doc.sections)
                if (sec.text.find(target) != std::string::npos) bad = true;
        if (bad) continue;

        // No combination of co-located atoms other than the true pair may
        // produce the target; this is what pins the rule-based solver to the
        // structured/contextual dichotomy.
        std::map<std::pair<int, int>, std::vector<std::string>> per_section;
        for (const auto& pl : result.placements)
            per_section[{pl.doc, pl.section}].push_back(pl.surface);
        auto is_true_pair = [&](const std::string& x, const std::string& y) {
            return (x == atom_name && y == atom_year) || (x == atom_year && y == atom_name);
        };
        for (const auto& [sec, surfaces] : per_section) {
            for (const std::string& x : surfaces)
                for (const std::string& y : surfaces) {
                    if (x == y || is_true_pair(x, y)) continue;
                    for (const auto& rule : all_rule_instances())
                        if (apply_rule(rule, {x, y}) == target) bad = true;
                }
            if (bad) break;
        }
        if (bad) continue;

        // No pair of distractor atoms, co-located or not, may produce the target.
        const auto datoms = distractor_atoms_of(plans);
        for (const std::string& x : datoms) {
            for (const std::string& y : datoms) {
                if (x == y) continue;
                for (const auto& rule : all_rule_instances())
                    if (apply_rule(rule, {x, y}) == target) bad = true;
            }
            if (bad) break;
        }
        if (bad) continue;

        return result;
    }
    throw GenerationError("distractor resampling failed to satisfy collision checks");
}

Scenario generate_scenario(std::uint64_t seed, const ScenarioConfig& config) {
    config.validate();
    const std::uint64_t root = mix(seed, config.key_hash());

    Scenario s;
    s.seed = seed;
    s.task_type = config.task_type;
    s.difficulty = config.difficulty;
    s.info_density = config.info_density;
    {
        std::ostringstream id;
        id << "scn-" << std::hex;
        id.width(16);
        id.fill('0');
        id << mix(root, "id");
        s.id = id.str();
    }

    GraphBuild build = build_graph(root, config);
    s.graph = std::move(build.graph);

    RenderResult rendered = render_documents(s.graph, config, seed);
    s.documents = std::move(rendered.documents);
    s.placements = std::move(rendered.placements);

    if (construct_target(s.graph.chain, s.graph.rule) != s.graph.target)
        throw GenerationError("target recomputation mismatch");
    return s;
}

bool verify_candidate(const Scenario& scenario, const std::string& candidate,
                      MatchPolicy policy) {
    if (policy == MatchPolicy::exact) return candidate == scenario.graph.target;
    return lowercased(candidate) == lowercased(scenario.graph.target);
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

ordered_json documents_to_json(const std::vector<Document>& docs) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : docs) {
        ordered_json sections = ordered_json::array();
        for (const auto& s : d.sections)
            sections.push_back({{"heading", s.heading}, {"text", s.text}});
        arr.push_back({{"title", d.title}, {"sections", sections}});
    }
    return arr;
}

std::vector<Document> documents_from_json(const nlohmann::json& arr) {
    std::vector<Document> docs;
    for (const auto& d : arr) {
        Document doc;
        doc.title = d.at("title").get<std::string>();
        for (const auto& s : d.at("sections")) {
            doc.sections.push_back(Section{s.at("heading").get<std::string>(),
                                           s.at("text").get<std::string>()});
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

EntityKind entity_kind_from(const std::string& s) {
    if (s == "person") return EntityKind::person;
    if (s == "organization") return EntityKind::organization;
    if (s == "place") return EntityKind::place;
    if (s == "event") return EntityKind::event;
    throw AnalysisError("bad entity kind: " + s);
}

AttrKind attr_kind_from(const std::string& s) {
    if (s == "birth_year") return AttrKind::birth_year;
    if (s == "founding_year") return AttrKind::founding_year;
    if (s == "location") return AttrKind::location;
    if (s == "role") return AttrKind::role;
    throw AnalysisError("bad attribute kind: " + s);
}

RelationKind relation_kind_from(const std::string& s) {
    if (s == "family") return RelationKind::family;
    if (s == "professional") return RelationKind::professional;
    if (s == "temporal") return RelationKind::temporal;
    if (s == "geographical") return RelationKind::geographical;
    throw AnalysisError("bad relation kind: " + s);
}

RuleKind rule_kind_from(const std::string& s) {
    if (s == "concatenation") return RuleKind::concatenation;
    if (s == "interleaving") return RuleKind::interleaving;
    if (s == "transformation") return RuleKind::transformation;
    throw AnalysisError("bad rule kind: " + s);
}

ordered_json graph_to_json(const FactGraph& g) {
    ordered_json entities = ordered_json::array();
    for (const auto& e : g.entities) {
        ordered_json attrs = ordered_json::object();
        for (const auto& [k, v] : e.attributes) attrs[to_string(k)] = v;
        entities.push_back(
            {{"id", e.id}, {"kind", to_string(e.kind)}, {"name", e.name}, {"attributes", attrs}});
    }
    ordered_json relations = ordered_json::array();
    for (const auto& r : g.relations)
        relations.push_back({{"src", r.src}, {"dst", r.dst}, {"kind", to_string(r.kind)}});
    ordered_json steps = ordered_json::array();
    for (const auto& st : g.chain.steps) {
        if (st.kind == HopStep::Kind::traverse)
            steps.push_back({{"kind", "traverse"},
                             {"src", st.src},
                             {"dst", st.dst},
                             {"relation", to_string(st.relation)}});
        else
            steps.push_back(
                {{"kind", "lookup"}, {"entity", st.entity}, {"attr", to_string(st.attr)}});
    }
    return ordered_json{
        {"entities", entities},
        {"relations", relations},
        {"chain",
         {{"hop_count", g.chain.hop_count}, {"steps", steps}, {"atoms", g.chain.atoms}}},
        {"rule",
         {{"kind", to_string(g.rule.kind)},
          {"separator", g.rule.separator},
          {"block", g.rule.block},
          {"lowercase", g.rule.lowercase},
          {"two_digit_year", g.rule.two_digit_year}}},
        {"target", g.target},
    };
}

FactGraph graph_from_json(const nlohmann::json& j) {
    FactGraph g;
    for (const auto& e : j.at("entities")) {
        Entity ent;
        ent.id = e.at("id").get<std::string>();
        ent.kind = entity_kind_from(e.at("kind").get<std::string>());
        ent.name = e.at("name").get<std::string>();
        for (const auto& [k, v] : e.at("attributes").items())
            ent.attributes[attr_kind_from(k)] = v.get<std::string>();
        g.entities.push_back(std::move(ent));
    }
    for (const auto& r : j.at("relations"))
        g.relations.push_back(Relation{r.at("src").get<std::string>(),
                                       r.at("dst").get<std::string>(),
                                       relation_kind_from(r.at("kind").get<std::string>())});
    const auto& chain = j.at("chain");
    g.chain.hop_count = chain.at("hop_count").get<int>();
    g.chain.atoms = chain.at("atoms").get<std::vector<std::string>>();
    for (const auto& st : chain.at("steps")) {
        HopStep step;
        if (st.at("kind") == "traverse") {
            step.kind = HopStep::Kind::traverse;
            step.src = st.at("src").get<std::string>();
            step.dst = st.at("dst").get<std::string>();
            step.relation = relation_kind_from(st.at("relation").get<std::string>());
        } else {
            step.kind = HopStep::Kind::lookup;
            step.entity = st.at("entity").get<std::string>();
            step.attr = attr_kind_from(st.at("attr").get<std::string>());
        }
        g.chain.steps.push_back(step);
    }
    const auto& rule = j.at("rule");
    g.rule.kind = rule_kind_from(rule.at("kind").get<std::string>());
    g.rule.separator = rule.at("separator").get<std::string>();
    g.rule.block = rule.at("block").get<int>();
    g.rule.lowercase = rule.at("lowercase").get<bool>();
    g.rule.two_digit_year = rule.at("two_digit_year").get<bool>();
    g.target = j.at("target").get<std::string>();
    return g;
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
    ordered_json j{
        {"schema_version", kScenarioSchemaVersion},
        {"id", s.id},
        {"seed", s.seed},
        {"task_type", to_string(s.task_type)},
        {"difficulty", s.difficulty},
        {"info_density", s.info_density},
        {"documents", documents_to_json(s.documents)},
        {"graph", graph_to_json(s.graph)},
        {"target", s.graph.target},
    };
    return j.dump();
}

Scenario deserialize_scenario(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    if (j.at("schema_version").get<std::string>() != kScenarioSchemaVersion)
        throw AnalysisError("unsupported scenario schema version");
    Scenario s;
    s.id = j.at("id").get<std::string>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.task_type = j.at("task_type") == "structured" ? TaskType::structured
                                                    : TaskType::contextual;
    s.difficulty = j.at("difficulty").get<int>();
    s.info_density = j.at("info_density").get<int>();
    s.documents = documents_from_json(j.at("documents"));
    s.graph = graph_from_json(j.at("graph"));
    if (j.at("target").get<std::string>() != s.graph.target)
        throw AnalysisError("scenario target mismatch");
    return s;
}

std::string serialize_public_view(const Scenario& s) {
    ordered_json j{
        {"schema_version", kScenarioSchemaVersion},
        {"id", s.id},
        {"task_type", to_string(s.task_type)},
        {"documents", documents_to_json(s.documents)},
    };
    return j.dump();
}

std::string documents_as_text(const std::vector<Document>& docs) {
    std::string out;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        out += "### Document " + std::to_string(d + 1) + ": " + docs[d].title + "\n";
        for (const auto& sec : docs[d].sections) {
            out += "## " + sec.heading + "\n";
            out += sec.text;
            out += "\n";
        }
    }
    return out;
}

}  // namespace hopbench
