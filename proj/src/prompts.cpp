#include "hopbench/prompts.hpp"

#include <sstream>

namespace hopbench::prompts {

namespace {

constexpr const char* kCandidateContract =
    "Output format: list each candidate guess on its own line inside a fenced "
    "code block (```).";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

std::string render_failures(const std::vector<std::string>& failed_attempts) {
    if (failed_attempts.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < failed_attempts.size(); ++i) {
        if (i) out += "\n";
        out += failed_attempts[i];
    }
    return out;
}

std::string single_agent_user(const std::string& documents,
                              const std::vector<std::string>& failed_attempts) {
    std::string p;
    p += "Documents:\n" + documents + "\n";
    p += "Analyze the documents step by step:\n";
    p += "1. Identify all entities (names, dates, locations)\n";
    p += "2. Identify relationships between entities\n";
    p += "3. Consider common construction patterns\n";
    p += "4. Generate your best guesses for the target string\n\n";
    p += "Failed attempts:\n" + render_failures(failed_attempts) + "\n\n";
    p += "Think carefully before each guess. What target would you try?\n\n";
    p += kCandidateContract;
    return p;
}

std::string analyst_user(const std::string& documents) {
    std::string p;
    p += "Extract all relevant entities and relationships from these documents. ";
    p += "Focus on: names, dates, family relationships, organizational ";
    p += "affiliations, and significant events.\n\n";
    p += "Documents:\n" + documents + "\n";
    p += "Provide structured output with entities and their relationships.\n\n";
    p += "Output format: emit three labeled blocks. Under \"ENTITIES:\" one entity ";
    p += "per line as \"- surface | kind\". Under \"RELATIONS:\" one relation per ";
    p += "line as \"- source | kind | target\". Under \"FACTS:\" one attribute ";
    p += "statement per line as \"- anchor | kind | year | value\".";
    return p;
}

std::string strategist_user(const std::string& entities,
                            const std::vector<std::string>& failed_attempts) {
    std::string p;
    p += "Based on extracted information and previous failed attempts, generate ";
    p += "hypotheses about target string construction.\n\n";
    p += "Extracted entities:\n" + entities + "\n\n";
    p += "Failed attempts:\n" + render_failures(failed_attempts) + "\n\n";
    p += "What patterns might we be missing? What relationships should we explore?\n\n";
    p += "Output format: under \"HYPOTHESES:\" one hypothesis per line as ";
    p += "\"- first + second | rule\".";
    return p;
}

std::string generator_user(const std::string& hypotheses, const std::string& entities,
                           const std::vector<std::string>& failed_attempts) {
    std::string p;
    p += "Produce target string candidates.\n\n";
    if (!hypotheses.empty()) p += "Hypotheses:\n" + hypotheses + "\n\n";
    p += "Extracted entities:\n" + entities + "\n\n";
    p += "Failed attempts:\n" + render_failures(failed_attempts) + "\n\n";
    p += kCandidateContract;
    return p;
}

std::string find_slot(const std::string& prompt, const std::string& label) {
    const std::string needle = label + ":";
    const auto lines = lines_of(prompt);
    std::string out;
    bool in_block = false;
    for (const auto& line : lines) {
        if (!in_block) {
            if (trim(line) == needle) in_block = true;
            continue;
        }
        if (trim(line).empty()) break;
        if (!out.empty()) out += "\n";
        out += line;
    }
    return out;
}

std::vector<std::string> fenced_lines(const std::string& text) {
    std::vector<std::string> out;
    bool inside = false;
    for (const auto& raw : lines_of(text)) {
        const std::string line = trim(raw);
        if (line.rfind("```", 0) == 0) {
            inside = !inside;
            continue;
        }
        if (inside && !line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<std::string> labeled_list(const std::string& text, const std::string& label) {
    std::vector<std::string> out;
    bool inside = false;
    for (const auto& raw : lines_of(text)) {
        const std::string line = trim(raw);
        if (line == label + ":") {
            inside = true;
            continue;
        }
        if (!inside) continue;
        if (line.rfind("- ", 0) == 0) {
            out.push_back(line.substr(2));
        } else if (!line.empty()) {
            break;  // next block
        }
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(" | ", pos);
        if (next == std::string::npos) {
            out.push_back(trim(line.substr(pos)));
            break;
        }
        out.push_back(trim(line.substr(pos, next - pos)));
        pos = next + 3;
    }
    return out;
}

}  // namespace hopbench::prompts
