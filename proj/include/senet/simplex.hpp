#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "senet/error.hpp"
#include "senet/universe.hpp"

namespace senet {

/// A non-empty finite vertex set in canonical form: vertex indices stored as
/// a strictly increasing sequence. A simplex of cardinality k+1 has
/// dimension k.
class Simplex {
public:
    /// Canonicalizes an arbitrary index list: sorts and drops duplicates.
    /// The empty set is not a simplex.
    static Simplex of(std::vector<VertexIndex> indices) {
        if (indices.empty())
            fail(ErrorKind::validation, "the empty set is not a simplex");
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        return Simplex(std::move(indices));
    }

    static Simplex of(std::initializer_list<VertexIndex> indices) {
        return of(std::vector<VertexIndex>(indices));
    }

    /// Trusted constructor: `indices` must already be strictly increasing
    /// and non-empty.
    static Simplex from_canonical(std::vector<VertexIndex> indices) {
        return Simplex(std::move(indices));
    }

    std::size_t cardinality() const noexcept { return vertices_.size(); }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<VertexIndex>& vertices() const noexcept { return vertices_; }

    bool contains(VertexIndex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Subset-or-equal test.
    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    bool is_proper_face_of(const Simplex& other) const {
        return vertices_.size() < other.vertices_.size() && is_face_of(other);
    }

    /// Set intersection; empty intersections have no simplex representation.
    std::optional<Simplex> intersection(const Simplex& other) const {
        std::vector<VertexIndex> meet;
        std::set_intersection(vertices_.begin(), vertices_.end(),
                              other.vertices_.begin(), other.vertices_.end(),
                              std::back_inserter(meet));
        if (meet.empty()) return std::nullopt;
        return Simplex(std::move(meet));
    }

    /// All non-empty subsets, this simplex included, in lexicographic order
    /// of their canonical sequences. A k-simplex has 2^(k+1) - 1 faces.
    std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        if (cardinality() <= 20)
            out.reserve((std::size_t{1} << cardinality()) - 1);
        std::vector<VertexIndex> prefix;
        collect_faces(0, prefix, out);
        return out;
    }

    /// Faces obtained by dropping exactly one vertex; empty for singletons.
    std::vector<Simplex> codim1_faces() const {
        std::vector<Simplex> out;
        if (vertices_.size() < 2) return out;
        out.reserve(vertices_.size());
        for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
            std::vector<VertexIndex> face;
            face.reserve(vertices_.size() - 1);
            for (std::size_t i = 0; i < vertices_.size(); ++i)
                if (i != skip) face.push_back(vertices_[i]);
            out.emplace_back(Simplex(std::move(face)));
        }
        return out;
    }

    /// The simplex extended by one vertex. `v` must not already be present.
    Simplex with_vertex(VertexIndex v) const {
        std::vector<VertexIndex> verts;
        verts.reserve(vertices_.size() + 1);
        auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        verts.insert(verts.end(), vertices_.begin(), pos);
        verts.push_back(v);
        verts.insert(verts.end(), pos, vertices_.end());
        return Simplex(std::move(verts));
    }

    /// Debug rendering of the index sequence, e.g. "(0 2 5)".
    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) os << ' ';
            os << vertices_[i];
        }
        os << ')';
        return os.str();
    }

    auto operator<=>(const Simplex&) const = default;

private:
    explicit Simplex(std::vector<VertexIndex> indices) : vertices_(std::move(indices)) {}

    void collect_faces(std::size_t from, std::vector<VertexIndex>& prefix,
                       std::vector<Simplex>& out) const {
        for (std::size_t i = from; i < vertices_.size(); ++i) {
            prefix.push_back(vertices_[i]);
            out.push_back(Simplex(prefix));
            collect_faces(i + 1, prefix, out);
            prefix.pop_back();
        }
    }

    std::vector<VertexIndex> vertices_;
};

/// Builds the canonical simplex for a list of registered ids: unknown ids
/// are rejected, duplicates collapse, order is normalized.
inline Simplex canonicalize(const VertexUniverse& universe,
                            const std::vector<std::string>& ids) {
    if (ids.empty())
        fail(ErrorKind::validation, "the empty set is not a simplex");
    std::vector<VertexIndex> indices;
    indices.reserve(ids.size());
    for (const auto& id : ids) indices.push_back(universe.index_of(id));
    return Simplex::of(std::move(indices));
}

inline Simplex canonicalize(const VertexUniverse& universe,
                            std::initializer_list<std::string_view> ids) {
    std::vector<std::string> copy;
    copy.reserve(ids.size());
    for (auto id : ids) copy.emplace_back(id);
    return canonicalize(universe, copy);
}

/// Id-based rendering used by all text formats: the member's ids sorted
/// lexicographically, space separated. Independent of registration order.
inline std::string render_member(const VertexUniverse& universe, const Simplex& simplex) {
    std::vector<std::string> ids;
    ids.reserve(simplex.cardinality());
    for (VertexIndex v : simplex.vertices()) ids.push_back(universe.id_of(v));
    std::sort(ids.begin(), ids.end());
    std::string line;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) line += ' ';
        line += ids[i];
    }
    return line;
}

} // namespace senet
