#pragma once

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "senet/complex_io.hpp"
#include "senet/ses.hpp"

namespace senet {

/// Parsed form of a system ingestion document, before structural checks.
/// Declaration order is preserved.
struct SesDocument {
    std::vector<std::string> social_ids;
    std::vector<std::string> ecological_ids;
    std::vector<std::vector<std::string>> interactions;
    std::vector<std::string> constants;

    SesStructure build(const SesStructure::Options& options = {}) const {
        return SesStructure::build(social_ids, ecological_ids, interactions, constants,
                                   options);
    }
};

/// System ingestion document:
///
///   vertices
///   <id> <social|ecological>     one vertex per line
///   interactions
///   <id> <id> ...                one interaction per line
///   constants
///   <label line>
///
/// Blank lines and lines starting with '#' are ignored. The vertices section
/// is required; the others are optional. Re-declaring an id under the same
/// kind is a duplicate and rejected here; re-declaring it under the other
/// kind is left to the structural disjointness check, which names the id.
inline SesDocument parse_ses_document(std::string_view text) {
    enum class Section { none, vertices, interactions, constants };

    SesDocument doc;
    Section section = Section::none;
    bool saw_vertices_section = false;
    std::map<std::string, UnitKind> declared;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        if (line[0] == '#') continue;

        if (line == "vertices") {
            if (saw_vertices_section)
                detail::parse_fail(line_no, "repeated vertices section");
            saw_vertices_section = true;
            section = Section::vertices;
            continue;
        }
        if (line == "interactions") {
            section = Section::interactions;
            continue;
        }
        if (line == "constants") {
            section = Section::constants;
            continue;
        }

        switch (section) {
        case Section::none:
            detail::parse_fail(line_no, "content before any section header "
                                        "(expected 'vertices', 'interactions' or "
                                        "'constants')");
        case Section::vertices: {
            auto tokens = detail::split_ws(line);
            if (tokens.size() != 2)
                detail::parse_fail(line_no, "expected '<id> <kind>'");
            const std::string& id = tokens[0];
            UnitKind kind;
            if (tokens[1] == "social")
                kind = UnitKind::social;
            else if (tokens[1] == "ecological")
                kind = UnitKind::ecological;
            else
                detail::parse_fail(line_no, "unknown kind '" + tokens[1] +
                                                "' (expected 'social' or 'ecological')");
            auto it = declared.find(id);
            if (it != declared.end() && it->second == kind)
                detail::parse_fail(line_no, "duplicate vertex id '" + id + "'");
            if (it == declared.end()) declared.emplace(id, kind);
            if (kind == UnitKind::social)
                doc.social_ids.push_back(id);
            else
                doc.ecological_ids.push_back(id);
            break;
        }
        case Section::interactions: {
            auto ids = detail::split_ws(line);
            for (const auto& id : ids)
                if (!declared.contains(id))
                    detail::parse_fail(line_no,
                                       "unknown vertex id '" + id + "' in interaction");
            doc.interactions.push_back(std::move(ids));
            break;
        }
        case Section::constants:
            doc.constants.push_back(line);
            break;
        }
    }

    if (!saw_vertices_section)
        fail(ErrorKind::parse, "document has no vertices section");
    return doc;
}

inline SesDocument read_ses_document(const std::filesystem::path& path) {
    return parse_ses_document(read_text_file(path));
}

/// Deterministic rendering of a document, parseable by parse_ses_document.
inline std::string render_ses_document(const SesDocument& doc) {
    std::ostringstream os;
    os << "vertices\n";
    for (const auto& id : doc.social_ids) os << id << " social\n";
    for (const auto& id : doc.ecological_ids) os << id << " ecological\n";
    if (!doc.interactions.empty()) {
        os << "interactions\n";
        for (const auto& ids : doc.interactions) {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i) os << ' ';
                os << ids[i];
            }
            os << '\n';
        }
    }
    if (!doc.constants.empty()) {
        os << "constants\n";
        for (const auto& label : doc.constants) os << label << '\n';
    }
    return os.str();
}

/// The complex a system document describes: all declared vertices as
/// 0-simplices plus the downward closure of every interaction.
inline SimplicialComplex complex_of_ses(const SesStructure& ses,
                                        std::size_t simplex_cap = kDefaultSimplexCap) {
    SimplicialComplex complex(ses.universe(), simplex_cap);
    for (VertexIndex v = 0; v < ses.universe().size(); ++v)
        complex.insert_closed(Simplex::of({v}));
    for (const Simplex& interaction : ses.interactions())
        complex.insert_closed(interaction);
    return complex;
}

} // namespace senet
