#include "famlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace famlab {

namespace {

std::string line_message(int line, const std::string& reason) {
    std::ostringstream out;
    out << "line " << line << ": " << reason;
    return out.str();
}

}  // namespace

ParseError::ParseError(int line_, const std::string& reason)
    : std::runtime_error(line_ > 0 ? line_message(line_, reason) : reason), line(line_) {}

SetFamily parse_fam(std::istream& in) {
    SetFamily fam;
    bool have_k = false;
    std::set<Block> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;
        constexpr long long kMaxId = std::numeric_limits<int>::max();
        if (tag == "k") {
            if (have_k) throw ParseError(lineno, "duplicate k header");
            long long value;
            if (!(tokens >> value)) throw ParseError(lineno, "k header needs an integer");
            std::string extra;
            if (tokens >> extra) throw ParseError(lineno, "unexpected token after k value");
            if (value < 1 || value > kMaxId) throw ParseError(lineno, "k out of range");
            fam.k = static_cast<int>(value);
            have_k = true;
        } else if (tag == "b") {
            if (!have_k) throw ParseError(lineno, "block before k header");
            Block b;
            long long v;
            while (tokens >> v) {
                if (v < 1 || v > kMaxId)
                    throw ParseError(lineno, "vertex ids must be positive integers");
                b.push_back(static_cast<int>(v));
            }
            if (!tokens.eof()) throw ParseError(lineno, "vertex ids must be positive integers");
            if (static_cast<int>(b.size()) != fam.k) {
                std::ostringstream reason;
                reason << "block has " << b.size() << " vertices, expected " << fam.k;
                throw ParseError(lineno, reason.str());
            }
            std::sort(b.begin(), b.end());
            if (std::adjacent_find(b.begin(), b.end()) != b.end())
                throw ParseError(lineno, "duplicate vertex in block");
            if (!seen.insert(b).second) throw ParseError(lineno, "duplicate block");
            fam.blocks.push_back(std::move(b));
        } else {
            throw ParseError(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (!have_k) throw ParseError(lineno ? lineno : 1, "missing k header");
    return fam;
}

SetFamily parse_fam(const std::string& text) {
    std::istringstream in(text);
    return parse_fam(in);
}

SetFamily parse_family_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(0, "top-level JSON value must be an object");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw ParseError(0, "missing integer field \"k\"");
    if (!doc.contains("blocks") || !doc["blocks"].is_array())
        throw ParseError(0, "missing array field \"blocks\"");
    constexpr std::int64_t kMaxId = std::numeric_limits<int>::max();
    SetFamily fam;
    std::int64_t k_value = doc["k"].get<std::int64_t>();
    if (k_value < 1 || k_value > kMaxId) throw ParseError(0, "k out of range");
    fam.k = static_cast<int>(k_value);
    std::set<Block> seen;
    for (const auto& entry : doc["blocks"]) {
        if (!entry.is_array()) throw ParseError(0, "each block must be an array of integers");
        Block b;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) throw ParseError(0, "each block must be an array of integers");
            std::int64_t id = v.get<std::int64_t>();
            if (id < 1 || id > kMaxId) throw ParseError(0, "vertex ids must be positive integers");
            b.push_back(static_cast<int>(id));
        }
        if (static_cast<int>(b.size()) != fam.k) {
            std::ostringstream reason;
            reason << "block has " << b.size() << " vertices, expected " << fam.k;
            throw ParseError(0, reason.str());
        }
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw ParseError(0, "duplicate vertex in block");
        if (!seen.insert(b).second) throw ParseError(0, "duplicate block");
        fam.blocks.push_back(std::move(b));
    }
    if (doc.contains("comment")) {
        if (!doc["comment"].is_string()) throw ParseError(0, "\"comment\" must be a string");
        fam.comment = doc["comment"].get<std::string>();
    }
    return fam;
}

std::string to_fam(const SetFamily& f) {
    SetFamily norm = f.normalized();
    std::ostringstream out;
    if (!norm.comment.empty()) {
        std::istringstream lines(norm.comment);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << '\n';
    }
    out << "k " << norm.k << '\n';
    for (const Block& b : norm.blocks) {
        out << 'b';
        for (int v : b) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string to_family_json(const SetFamily& f) {
    SetFamily norm = f.normalized();
    nlohmann::ordered_json doc;
    doc["k"] = norm.k;
    doc["blocks"] = norm.blocks;
    if (!norm.comment.empty()) doc["comment"] = norm.comment;
    return doc.dump(2) + "\n";
}

std::string serialize_family(const SetFamily& f, FamilyFormat fmt) {
    return fmt == FamilyFormat::Json ? to_family_json(f) : to_fam(f);
}

namespace {

bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

SetFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    if (has_json_extension(path)) {
        std::ostringstream text;
        text << in.rdbuf();
        return parse_family_json(text.str());
    }
    return parse_fam(in);
}

void save_family_file(const std::string& path, const SetFamily& f, FamilyFormat fmt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_family(f, fmt);
}

}  // namespace famlab
