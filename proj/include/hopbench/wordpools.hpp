#pragma once

#include <span>
#include <string_view>

namespace hopbench::pools {

// Bundled synthetic word pools. All scenario surface strings are drawn from
// these fixed tables, never from external input. Single-token, alphabetic,
// leading capital only.

std::span<const char* const> given_names();   // >= 500
std::span<const char* const> surnames();      // >= 200
std::span<const char* const> org_roots();     // >= 300
std::span<const char* const> place_names();   // composed with place suffixes
std::span<const char* const> event_roots();

std::span<const char* const> org_suffixes();    // "Labs", "Corp", ...
std::span<const char* const> event_suffixes();  // "Festival", "Fair", ...
std::span<const char* const> place_suffix_stems();  // lowercase stems: "wood", ...

std::span<const char* const> roles();  // lowercase occupation words (not extractable atoms)

// Capitalized words that may legitimately appear in rendered prose without
// being entity mentions. The rule-based extractor skips these; the template
// vocabulary is audited against this list in tests.
std::span<const char* const> prose_stopwords();

bool is_org_suffix(std::string_view token);
bool is_event_suffix(std::string_view token);
bool has_place_suffix(std::string_view token);
bool is_stopword(std::string_view token);

}  // namespace hopbench::pools
