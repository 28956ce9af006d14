#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "senet/error.hpp"
#include "senet/simplex.hpp"
#include "senet/universe.hpp"

namespace senet {

/// Closure of a single simplex of cardinality c creates 2^c - 1 members, so
/// construction is guarded by a cardinality cap.
inline constexpr std::size_t kDefaultSimplexCap = 25;
inline constexpr std::size_t kMinSimplexCap = 2;
inline constexpr std::size_t kMaxSimplexCap = 62;

inline void check_simplex_cap(std::size_t cap) {
    if (cap < kMinSimplexCap || cap > kMaxSimplexCap)
        fail(ErrorKind::range, "simplex cap must be between " +
                                   std::to_string(kMinSimplexCap) + " and " +
                                   std::to_string(kMaxSimplexCap) + ", got " +
                                   std::to_string(cap));
}

/// Facets in the literal sense: all members of dimension dim - 1. Complexes
/// of dimension < 1 have none; `degenerate` flags that case. Contrast with
/// maximal_simplices(), which returns members contained in no other member.
struct FacetsResult {
    std::vector<Simplex> facets;
    bool degenerate = false;
};

/// Violations found by validate(), each with a concrete witness. Witness
/// lists are deduplicated and capped; `truncated` reports whether the cap was
/// hit. An empty report means the family is a simplicial complex.
struct ValidationReport {
    struct MissingFace {
        Simplex face;   // absent from the family
        Simplex member; // a member whose face it is
    };
    struct MissingVertex {
        VertexIndex vertex; // vertex with no 0-simplex in the family
        Simplex member;     // a member it appears in
    };
    struct BadIntersection {
        Simplex a;
        Simplex b;
        Simplex meet; // non-empty intersection absent from the family
    };

    std::vector<MissingFace> missing_faces;
    std::vector<MissingVertex> missing_vertices;
    std::vector<BadIntersection> bad_intersections;
    bool truncated = false;

    bool ok() const noexcept {
        return missing_faces.empty() && missing_vertices.empty() &&
               bad_intersections.empty();
    }

    std::string to_text(const VertexUniverse& universe) const {
        if (ok()) return "valid: all closure and intersection conditions hold\n";
        std::string out;
        for (const auto& v : missing_faces)
            out += "missing face: {" + render_member(universe, v.face) +
                   "} required by member {" + render_member(universe, v.member) + "}\n";
        for (const auto& v : missing_vertices)
            out += "missing vertex: {" + universe.id_of(v.vertex) +
                   "} appears in member {" + render_member(universe, v.member) + "}\n";
        for (const auto& v : bad_intersections)
            out += "offending pair: {" + render_member(universe, v.a) + "} and {" +
                   render_member(universe, v.b) + "} intersect in absent {" +
                   render_member(universe, v.meet) + "}\n";
        if (truncated) out += "(witness list truncated)\n";
        return out;
    }
};

/// Checks whether `members` forms a simplicial complex over `universe`:
/// every vertex of every member present as a 0-simplex, every non-empty
/// proper subset of every member present, and pairwise intersections present
/// or empty. Closure is checked through codimension-1 faces, which is
/// equivalent to full downward closure. The pairwise intersection scan is
/// skipped when closure holds, because closure already forces it.
inline ValidationReport validate_family(const VertexUniverse& universe,
                                        const std::set<Simplex>& members,
                                        std::size_t witness_limit = 10) {
    if (witness_limit == 0)
        fail(ErrorKind::range, "witness limit must be at least 1");
    ValidationReport report;

    std::set<VertexIndex> vertices_reported;
    for (const Simplex& member : members) {
        for (VertexIndex v : member.vertices()) {
            if (v >= universe.size())
                fail(ErrorKind::validation,
                     "member " + member.to_string() + " references vertex index " +
                         std::to_string(v) + " outside the universe");
            if (members.contains(Simplex::of({v}))) continue;
            if (vertices_reported.contains(v)) continue;
            if (report.missing_vertices.size() >= witness_limit) {
                report.truncated = true;
                continue;
            }
            vertices_reported.insert(v);
            report.missing_vertices.push_back({v, member});
        }
    }

    std::set<Simplex> faces_reported;
    for (const Simplex& member : members) {
        if (member.cardinality() < 2) continue;
        for (const Simplex& face : member.codim1_faces()) {
            if (members.contains(face)) continue;
            if (faces_reported.contains(face)) continue;
            if (report.missing_faces.size() >= witness_limit) {
                report.truncated = true;
                continue;
            }
            faces_reported.insert(face);
            report.missing_faces.push_back({face, member});
        }
    }

    std::sort(report.missing_vertices.begin(), report.missing_vertices.end(),
              [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    std::sort(report.missing_faces.begin(), report.missing_faces.end(),
              [](const auto& a, const auto& b) { return a.face < b.face; });

    if (!report.missing_faces.empty() || !report.missing_vertices.empty()) {
        for (auto it = members.begin();
             it != members.end() && report.bad_intersections.size() < witness_limit;
             ++it) {
            for (auto jt = std::next(it); jt != members.end(); ++jt) {
                auto meet = it->intersection(*jt);
                if (!meet || members.contains(*meet)) continue;
                if (report.bad_intersections.size() >= witness_limit) {
                    report.truncated = true;
                    break;
                }
                report.bad_intersections.push_back({*it, *jt, *meet});
            }
        }
    }
    return report;
}

/// An abstract simplicial complex: a family of canonical simplices over a
/// vertex universe, closed under taking non-empty subsets. Members are
/// stored per dimension as ordered sets, so every enumeration is
/// deterministic. Construction is single-writer; a finished complex is
/// immutable and safe to read from any number of threads.
class SimplicialComplex {
public:
    explicit SimplicialComplex(VertexUniverse universe,
                               std::size_t simplex_cap = kDefaultSimplexCap)
        : universe_(std::move(universe)), simplex_cap_(simplex_cap) {
        check_simplex_cap(simplex_cap_);
    }

    /// Downward closure of a simplex family.
    template <typename Range>
    static SimplicialComplex closure_of(VertexUniverse universe, const Range& simplices,
                                        std::size_t simplex_cap = kDefaultSimplexCap) {
        SimplicialComplex complex(std::move(universe), simplex_cap);
        for (const Simplex& s : simplices) complex.insert_closed(s);
        return complex;
    }

    /// Adopts an already-closed member family; rejects families that are not
    /// downward closed, with witnesses.
    static SimplicialComplex from_family(VertexUniverse universe,
                                         const std::set<Simplex>& members,
                                         std::size_t simplex_cap = kDefaultSimplexCap) {
        auto report = validate_family(universe, members, 5);
        if (!report.ok())
            fail(ErrorKind::validation,
                 "family is not a simplicial complex:\n" + report.to_text(universe));
        SimplicialComplex complex(std::move(universe), simplex_cap);
        for (const Simplex& s : members) {
            if (s.cardinality() > complex.simplex_cap_)
                complex.cap_exceeded(s);
            complex.insert_member(s);
        }
        return complex;
    }

    /// Inserts a simplex together with all of its non-empty faces, keeping
    /// the closure invariant. Idempotent; insertion order never matters.
    void insert_closed(const Simplex& simplex) {
        if (simplex.cardinality() > simplex_cap_) cap_exceeded(simplex);
        if (!simplex.vertices().empty() && simplex.vertices().back() >= universe_.size())
            fail(ErrorKind::validation,
                 "simplex " + simplex.to_string() + " references vertex index " +
                     std::to_string(simplex.vertices().back()) +
                     " outside the universe");
        // Walk down the face lattice, pruning at simplices already present:
        // their faces are present too, by the closure invariant.
        if (!insert_member(simplex)) return;
        std::vector<Simplex> pending{simplex};
        while (!pending.empty()) {
            Simplex top = std::move(pending.back());
            pending.pop_back();
            for (Simplex& face : top.codim1_faces())
                if (insert_member(face)) pending.push_back(std::move(face));
        }
    }

    bool contains(const Simplex& simplex) const {
        const auto d = static_cast<std::size_t>(simplex.dimension());
        return d < strata_.size() && strata_[d].contains(simplex);
    }

    /// Largest dimension with a member; -1 for the empty complex.
    int dimension() const noexcept {
        for (std::size_t d = strata_.size(); d-- > 0;)
            if (!strata_[d].empty()) return static_cast<int>(d);
        return -1;
    }

    std::size_t member_count() const noexcept { return member_count_; }
    bool empty() const noexcept { return member_count_ == 0; }
    std::size_t simplex_cap() const noexcept { return simplex_cap_; }
    const VertexUniverse& universe() const noexcept { return universe_; }

    /// Members of one dimension, lexicographically ordered.
    const std::set<Simplex>& stratum(std::size_t dim) const {
        static const std::set<Simplex> kEmpty;
        return dim < strata_.size() ? strata_[dim] : kEmpty;
    }

    /// All members in lexicographic order of their canonical sequences.
    std::vector<Simplex> members() const {
        std::set<Simplex> all;
        for (const auto& stratum : strata_) all.insert(stratum.begin(), stratum.end());
        return {all.begin(), all.end()};
    }

    std::set<Simplex> member_set() const {
        std::set<Simplex> all;
        for (const auto& stratum : strata_) all.insert(stratum.begin(), stratum.end());
        return all;
    }

    /// Per-dimension member counts; entry d counts the d-simplices.
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> counts;
        const int dim = dimension();
        for (int d = 0; d <= dim; ++d) counts.push_back(strata_[d].size());
        return counts;
    }

    /// Members contained in no other member.
    std::vector<Simplex> maximal_simplices() const {
        std::vector<Simplex> out;
        for (const auto& stratum : strata_)
            for (const Simplex& s : stratum)
                if (is_maximal(s)) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// The boundary: every member that is a proper subset of some member.
    /// Equivalently, all members except the maximal ones. The result is
    /// itself downward closed.
    std::vector<Simplex> boundary() const {
        std::vector<Simplex> out;
        for (const auto& stratum : strata_)
            for (const Simplex& s : stratum)
                if (!is_maximal(s)) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Literal facets: the members of dimension dim - 1.
    FacetsResult facets() const {
        FacetsResult result;
        const int dim = dimension();
        if (dim < 1) {
            result.degenerate = true;
            return result;
        }
        const auto& stratum = strata_[static_cast<std::size_t>(dim - 1)];
        result.facets.assign(stratum.begin(), stratum.end());
        return result;
    }

    /// Sub-complex of all members with dimension at most p. Closure carries
    /// over unchanged, so the result needs no re-validation.
    SimplicialComplex p_skeleton(std::size_t p) const {
        SimplicialComplex skeleton(universe_, simplex_cap_);
        const auto top = std::min(p + 1, strata_.size());
        skeleton.strata_.assign(strata_.begin(), strata_.begin() + static_cast<long>(top));
        for (const auto& stratum : skeleton.strata_)
            skeleton.member_count_ += stratum.size();
        return skeleton;
    }

    ValidationReport validate(std::size_t witness_limit = 10) const {
        return validate_family(universe_, member_set(), witness_limit);
    }

    /// Identity as a combinatorial object: same universe, same members.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        if (!(a.universe_ == b.universe_)) return false;
        const auto depth = std::max(a.strata_.size(), b.strata_.size());
        for (std::size_t d = 0; d < depth; ++d)
            if (a.stratum(d) != b.stratum(d)) return false;
        return true;
    }

private:
    [[noreturn]] void cap_exceeded(const Simplex& simplex) const {
        fail(ErrorKind::size_guard,
             "simplex cardinality " + std::to_string(simplex.cardinality()) +
                 " exceeds the cap of " + std::to_string(simplex_cap_) +
                 " (closure would create 2^" + std::to_string(simplex.cardinality()) +
                 " - 1 members)");
    }

    bool insert_member(const Simplex& simplex) {
        const auto d = static_cast<std::size_t>(simplex.dimension());
        if (d >= strata_.size()) strata_.resize(d + 1);
        const bool added = strata_[d].insert(simplex).second;
        if (added) ++member_count_;
        return added;
    }

    bool is_maximal(const Simplex& s) const {
        // By closure, a proper superset member implies one with exactly one
        // extra vertex, so only those need checking.
        for (VertexIndex v = 0; v < universe_.size(); ++v) {
            if (s.contains(v)) continue;
            if (contains(s.with_vertex(v))) return false;
        }
        return true;
    }

    VertexUniverse universe_;
    std::size_t simplex_cap_;
    std::vector<std::set<Simplex>> strata_;
    std::size_t member_count_ = 0;
};

} // namespace senet
