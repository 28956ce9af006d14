#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "senet/complex.hpp"

namespace senet {

/// Canonical text form of a complex:
///
///   dim=<d> vertices=<n>
///   <one member per line: its vertex ids, space separated>
///
/// `n` counts the 0-simplices (the support). Within a line ids are sorted
/// lexicographically and lines are sorted lexicographically as byte strings,
/// so the rendering depends only on the member family and serialize/parse
/// round-trips are byte-identical. The empty complex serializes as
/// "dim=-1 vertices=0".
inline std::string serialize_complex(const SimplicialComplex& complex) {
    std::vector<std::string> lines;
    lines.reserve(complex.member_count());
    for (int d = 0; d <= complex.dimension(); ++d)
        for (const Simplex& s : complex.stratum(static_cast<std::size_t>(d)))
            lines.push_back(render_member(complex.universe(), s));
    std::sort(lines.begin(), lines.end());

    std::ostringstream out;
    out << "dim=" << complex.dimension() << " vertices=" << complex.stratum(0).size()
        << '\n';
    for (const auto& line : lines) out << line << '\n';
    return out.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& message) {
    fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + message);
}

inline std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

} // namespace detail

/// Parses the canonical text form. The member lines must be in canonical
/// order (strictly increasing as byte strings, ids sorted within each line)
/// and must agree with the header counts; the family must be downward
/// closed. Vertex indices are assigned by lexicographic id rank, which makes
/// parsing the exact inverse of serialization.
inline SimplicialComplex parse_complex(std::string_view text,
                                       std::size_t simplex_cap = kDefaultSimplexCap) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) fail(ErrorKind::parse, "line 1: missing header");

    int dim = 0;
    std::size_t vertex_count = 0;
    {
        std::istringstream hs(header);
        std::string dim_field, vert_field, extra;
        hs >> dim_field >> vert_field;
        if (hs >> extra) detail::parse_fail(1, "trailing content in header");
        if (dim_field.rfind("dim=", 0) != 0 || vert_field.rfind("vertices=", 0) != 0)
            detail::parse_fail(1, "expected header 'dim=<d> vertices=<n>'");
        const std::string dim_digits = dim_field.substr(4);
        const std::string vert_digits = vert_field.substr(9);
        if (vert_digits.empty() ||
            vert_digits.find_first_not_of("0123456789") != std::string::npos)
            detail::parse_fail(1, "malformed header numbers");
        try {
            std::size_t consumed = 0;
            dim = std::stoi(dim_digits, &consumed);
            if (consumed != dim_digits.size()) throw std::invalid_argument(dim_digits);
            vertex_count = std::stoul(vert_digits);
        } catch (const std::exception&) {
            detail::parse_fail(1, "malformed header numbers");
        }
    }

    std::vector<std::vector<std::string>> member_ids;
    std::set<std::string> all_ids;
    std::string line;
    std::string previous_line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) detail::parse_fail(line_no, "blank member line");
        auto ids = detail::split_ws(line);
        if (ids.empty()) detail::parse_fail(line_no, "blank member line");
        for (std::size_t i = 1; i < ids.size(); ++i) {
            if (ids[i] <= ids[i - 1])
                detail::parse_fail(line_no, "vertex ids not in canonical order");
        }
        std::string canonical;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) canonical += ' ';
            canonical += ids[i];
        }
        if (canonical != line)
            detail::parse_fail(line_no, "member line not in canonical spacing");
        if (!previous_line.empty() && canonical <= previous_line)
            detail::parse_fail(line_no, "member lines not sorted");
        previous_line = canonical;
        all_ids.insert(ids.begin(), ids.end());
        member_ids.push_back(std::move(ids));
    }

    if (all_ids.size() != vertex_count)
        fail(ErrorKind::parse, "header declares " + std::to_string(vertex_count) +
                                   " vertices but " + std::to_string(all_ids.size()) +
                                   " distinct ids appear");

    VertexUniverse universe = VertexUniverse::from_ids(all_ids);
    std::set<Simplex> members;
    int max_dim = -1;
    for (const auto& ids : member_ids) {
        Simplex s = canonicalize(universe, ids);
        max_dim = std::max(max_dim, s.dimension());
        members.insert(std::move(s));
    }
    if (max_dim != dim)
        fail(ErrorKind::parse, "header declares dim=" + std::to_string(dim) +
                                   " but members reach dimension " +
                                   std::to_string(max_dim));

    return SimplicialComplex::from_family(std::move(universe), members, simplex_cap);
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::parse, "cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) fail(ErrorKind::parse, "failed writing '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::parse, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline SimplicialComplex read_complex_file(const std::filesystem::path& path,
                                           std::size_t simplex_cap = kDefaultSimplexCap) {
    return parse_complex(read_text_file(path), simplex_cap);
}

inline void write_complex_file(const std::filesystem::path& path,
                               const SimplicialComplex& complex) {
    write_text_file(path, serialize_complex(complex));
}

} // namespace senet
