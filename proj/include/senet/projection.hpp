#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "senet/complex.hpp"

namespace senet {

/// The pairwise shadow of a complex: its 0-simplices as vertices and its
/// 1-simplices as edges. This is what a graph model retains.
class UnderlyingGraph {
public:
    using Edge = std::array<VertexIndex, 2>; // endpoints ordered, no loops

    UnderlyingGraph(VertexUniverse universe, std::set<VertexIndex> vertices,
                    std::set<Edge> edges)
        : universe_(std::move(universe)), vertices_(std::move(vertices)),
          edges_(std::move(edges)) {
        for (const Edge& e : edges_) {
            if (e[0] >= e[1])
                fail(ErrorKind::validation, "edge endpoints must be distinct and ordered");
            if (!vertices_.contains(e[0]) || !vertices_.contains(e[1]))
                fail(ErrorKind::validation, "edge endpoint is not a graph vertex");
        }
    }

    const VertexUniverse& universe() const noexcept { return universe_; }
    const std::set<VertexIndex>& vertices() const noexcept { return vertices_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }

private:
    VertexUniverse universe_;
    std::set<VertexIndex> vertices_;
    std::set<Edge> edges_;
};

inline UnderlyingGraph to_underlying_graph(const SimplicialComplex& complex) {
    std::set<VertexIndex> vertices;
    for (const Simplex& s : complex.stratum(0)) vertices.insert(s.vertices()[0]);
    std::set<UnderlyingGraph::Edge> edges;
    for (const Simplex& s : complex.stratum(1))
        edges.insert({s.vertices()[0], s.vertices()[1]});
    return UnderlyingGraph(complex.universe(), std::move(vertices), std::move(edges));
}

namespace detail {

inline void require_same_universe(const VertexUniverse& a, const VertexUniverse& b) {
    if (!(a == b))
        fail(ErrorKind::validation,
             "universe mismatch: operands are not over the same registered universe");
}

} // namespace detail

/// Labeled-graph equality over a shared universe: equal vertex sets and
/// equal edge sets. Unlabeled isomorphism is deliberately out of scope.
inline bool graphs_identical(const UnderlyingGraph& a, const UnderlyingGraph& b) {
    detail::require_same_universe(a.universe(), b.universe());
    return a.vertices() == b.vertices() && a.edges() == b.edges();
}

/// What projecting to the underlying graph forgets: every member above
/// dimension 1, counted per dimension, plus the dimension collapse.
struct LossReport {
    std::size_t simplices_total = 0;
    std::size_t simplices_surviving = 0;
    std::vector<std::size_t> lost_by_dimension; // entry i counts dimension i + 2
    int dimension_drop = 0;

    friend bool operator==(const LossReport&, const LossReport&) = default;
};

inline LossReport loss_report(const SimplicialComplex& complex) {
    LossReport report;
    const auto f = complex.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) {
        report.simplices_total += f[d];
        if (d <= 1)
            report.simplices_surviving += f[d];
        else
            report.lost_by_dimension.push_back(f[d]);
    }
    const int dim = complex.dimension();
    report.dimension_drop = dim - std::min(dim, 1);
    return report;
}

/// Two complexes collide through the skeleton when the pairwise projection
/// cannot tell them apart: identical 1-skeletons, different member sets.
/// The witness is a simplex present in exactly one of them, chosen at the
/// highest differing dimension (lexicographically first there).
struct CollisionResult {
    bool collision = false;
    std::optional<Simplex> witness;
    int witness_owner = 0; // 1 or 2: which operand holds the witness
};

inline CollisionResult skeleton_collision(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
    detail::require_same_universe(a.universe(), b.universe());
    CollisionResult result;

    if (a.stratum(0) != b.stratum(0) || a.stratum(1) != b.stratum(1)) return result;

    const int top = std::max(a.dimension(), b.dimension());
    for (int d = top; d >= 0; --d) {
        const auto& sa = a.stratum(static_cast<std::size_t>(d));
        const auto& sb = b.stratum(static_cast<std::size_t>(d));
        if (sa == sb) continue;
        result.collision = true;
        // Lexicographically first symmetric-difference member at this level.
        auto ia = sa.begin();
        auto ib = sb.begin();
        while (ia != sa.end() && ib != sb.end()) {
            if (*ia == *ib) {
                ++ia;
                ++ib;
            } else if (*ia < *ib) {
                result.witness = *ia;
                result.witness_owner = 1;
                return result;
            } else {
                result.witness = *ib;
                result.witness_owner = 2;
                return result;
            }
        }
        if (ia != sa.end()) {
            result.witness = *ia;
            result.witness_owner = 1;
        } else {
            result.witness = *ib;
            result.witness_owner = 2;
        }
        return result;
    }
    return result; // identical member sets
}

/// Pajek NET rendering: numbered node list, then the edge list. Nodes are
/// numbered 1..n in lexicographic id order.
inline std::string graph_to_pajek(const UnderlyingGraph& graph) {
    std::vector<std::string> ids;
    ids.reserve(graph.vertices().size());
    for (VertexIndex v : graph.vertices()) ids.push_back(graph.universe().id_of(v));
    std::sort(ids.begin(), ids.end());

    std::ostringstream os;
    os << "*Vertices " << ids.size() << '\n';
    std::unordered_map<std::string, std::size_t> number;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        number.emplace(ids[i], i + 1);
        os << (i + 1) << " \"" << ids[i] << "\"\n";
    }

    std::set<std::pair<std::size_t, std::size_t>> numbered_edges;
    for (const auto& e : graph.edges()) {
        auto u = number.at(graph.universe().id_of(e[0]));
        auto v = number.at(graph.universe().id_of(e[1]));
        numbered_edges.insert({std::min(u, v), std::max(u, v)});
    }
    os << "*Edges\n";
    for (const auto& [u, v] : numbered_edges) os << u << ' ' << v << '\n';
    return os.str();
}

/// Human-readable loss table.
inline std::string loss_report_table(const LossReport& report) {
    std::ostringstream os;
    os << "total simplices:     " << report.simplices_total << '\n';
    os << "surviving (dim<=1):  " << report.simplices_surviving << '\n';
    if (report.lost_by_dimension.empty()) {
        os << "lost:                none\n";
    } else {
        for (std::size_t i = 0; i < report.lost_by_dimension.size(); ++i)
            os << "lost at dimension " << (i + 2) << ":  "
               << report.lost_by_dimension[i] << '\n';
    }
    os << "dimension drop:      " << report.dimension_drop << '\n';
    return os.str();
}

inline nlohmann::json loss_report_json(const LossReport& report) {
    nlohmann::json lost = nlohmann::json::object();
    for (std::size_t i = 0; i < report.lost_by_dimension.size(); ++i)
        lost[std::to_string(i + 2)] = report.lost_by_dimension[i];
    return nlohmann::json{
        {"simplices_total", report.simplices_total},
        {"simplices_surviving", report.simplices_surviving},
        {"lost_by_dimension", lost},
        {"dimension_drop", report.dimension_drop},
    };
}

} // namespace senet
