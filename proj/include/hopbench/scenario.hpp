#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopbench/errors.hpp"

namespace hopbench {

enum class EntityKind { person, organization, place, event };
enum class AttrKind { birth_year, founding_year, location, role };
enum class RelationKind { family, professional, temporal, geographical };
enum class TaskType { structured, contextual };
enum class RuleKind { concatenation, interleaving, transformation };
enum class MatchPolicy { exact, case_insensitive };

const char* to_string(EntityKind k);
const char* to_string(AttrKind k);
const char* to_string(RelationKind k);
const char* to_string(TaskType t);
const char* to_string(RuleKind k);

struct Entity {
    std::string id;    // "e0", "e1", ... in chain order
    EntityKind kind = EntityKind::person;
    // Canonical single-token surface. Org and event names render with a
    // suffix word ("Brightline Labs") but the atom is the root token.
    std::string name;
    std::map<AttrKind, std::string> attributes;
};

struct Relation {
    std::string src;
    std::string dst;
    RelationKind kind = RelationKind::family;
};

// One hop: a relation traversal or an attribute lookup. A chain of k hops is
// (k-1) traversals from the anchor entity followed by one lookup on the
// terminal entity; structured tasks are the single-lookup case.
struct HopStep {
    enum class Kind { traverse, lookup };
    Kind kind = Kind::traverse;
    std::string src;                               // traverse
    std::string dst;                               // traverse
    RelationKind relation = RelationKind::family;  // traverse
    std::string entity;                            // lookup
    AttrKind attr = AttrKind::birth_year;          // lookup
};

struct HopChain {
    std::vector<HopStep> steps;
    int hop_count = 0;
    // Resolved extraction atoms in chain order: the terminal entity's name
    // followed by its attribute value.
    std::vector<std::string> atoms;
};

struct CombinationRule {
    RuleKind kind = RuleKind::concatenation;
    std::string separator;        // concatenation: "", "_", or "-"
    int block = 2;                // interleaving block size, 1 or 2
    bool lowercase = false;       // transformation ops
    bool two_digit_year = false;  // transformation: 4-digit years -> last two
    std::string name() const;     // stable identifier, e.g. "concat:_"
};

// The closed set of rule instances the generator samples from. The baseline
// enumerates the same set when surfacing candidate combinations.
const std::vector<CombinationRule>& all_rule_instances();

struct FactGraph {
    std::vector<Entity> entities;
    std::vector<Relation> relations;
    HopChain chain;
    CombinationRule rule;
    std::string target;
};

struct Section {
    std::string heading;
    std::string text;
};

struct Document {
    std::string title;
    std::vector<Section> sections;
};

// One placed atom occurrence. The generator records every deliberate
// placement; tests and collision checks rely on this manifest.
struct AtomPlacement {
    std::string surface;
    int doc = 0;
    int section = 0;
    bool distractor = false;
};

struct ScenarioConfig {
    TaskType task_type = TaskType::contextual;
    int difficulty = 1;  // 1..3; contextual maps to 2..4 hops, structured is 1 hop
    int info_density = 6;
    std::optional<RelationKind> relation_kind;  // pinned kind, or any when empty
    double geographical_weight = 1.0;           // sampling weight in "any" mode
    MatchPolicy match_policy = MatchPolicy::exact;

    void validate() const;
    std::uint64_t key_hash() const;
};

struct Scenario {
    std::string id;
    std::uint64_t seed = 0;
    TaskType task_type = TaskType::contextual;
    int difficulty = 1;
    int info_density = 0;
    std::vector<Document> documents;
    FactGraph graph;
    std::vector<AtomPlacement> placements;  // not serialized; generation metadata
};

inline constexpr const char* kScenarioSchemaVersion = "scenario/v1";
inline constexpr int kMaxInfoDensity = 40;

// --- operations ---

// Pure function of (seed, config): identical inputs yield byte-identical
// scenarios, independent of platform and caller threading.
Scenario generate_scenario(std::uint64_t seed, const ScenarioConfig& config);

// Applies the combination rule to the chain's resolved atoms.
std::string construct_target(const HopChain& chain, const CombinationRule& rule);
std::string apply_rule(const CombinationRule& rule, const std::vector<std::string>& atoms);

struct RenderResult {
    std::vector<Document> documents;
    std::vector<AtomPlacement> placements;
};
RenderResult render_documents(const FactGraph& graph, const ScenarioConfig& config,
                              std::uint64_t seed);

bool verify_candidate(const Scenario& scenario, const std::string& candidate,
                      MatchPolicy policy = MatchPolicy::exact);

// --- serialization ---

// Full record, one JSON object (stable field order, no whitespace variance).
std::string serialize_scenario(const Scenario& s);
Scenario deserialize_scenario(const std::string& json_text);

// Agent-facing view: documents only, no graph, no target.
std::string serialize_public_view(const Scenario& s);

// Plain-text rendering of the public documents for prompt embedding.
std::string documents_as_text(const std::vector<Document>& docs);

}  // namespace hopbench
