#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "famlab/family.hpp"

namespace famlab {

struct ParseError : std::runtime_error {
    int line;  // 1-based input line; 0 when the input is not line-addressable
    ParseError(int line_, const std::string& reason);
};

// Line-oriented ".fam" text:
//   # <comment>          ignored
//   k <int>              exactly one, before any block
//   b <v1> ... <vk>      one block per line
SetFamily parse_fam(std::istream& in);
SetFamily parse_fam(const std::string& text);

// JSON object {"k": int, "blocks": [[int,...],...], "comment": string?}
SetFamily parse_family_json(const std::string& text);

enum class FamilyFormat { Fam, Json };

// Serialization normalizes vertex ids to 1..n and sorts each block;
// block list order is preserved.
std::string serialize_family(const SetFamily& f, FamilyFormat fmt);
std::string to_fam(const SetFamily& f);
std::string to_family_json(const SetFamily& f);

// Format chosen by file extension (".json" -> JSON, anything else -> fam).
SetFamily load_family_file(const std::string& path);
void save_family_file(const std::string& path, const SetFamily& f, FamilyFormat fmt);

}  // namespace famlab
