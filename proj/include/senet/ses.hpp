#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "senet/complex.hpp"
#include "senet/error.hpp"
#include "senet/simplex.hpp"
#include "senet/universe.hpp"

namespace senet {

/// Every fundamental unit is either social or ecological, never both.
enum class UnitKind { social, ecological };

constexpr const char* to_string(UnitKind kind) noexcept {
    return kind == UnitKind::social ? "social" : "ecological";
}

/// Interactions of cardinality at most 2 are lower-order; three or more
/// participants make an interaction higher-order.
enum class OrderClass { lower, higher };

constexpr const char* to_string(OrderClass cls) noexcept {
    return cls == OrderClass::lower ? "lower-order" : "higher-order";
}

/// Order of an interaction with k participants: k - 1.
inline int interaction_order(const Simplex& interaction) {
    return interaction.dimension();
}

inline OrderClass classify_order(const Simplex& interaction) {
    return interaction.cardinality() >= 3 ? OrderClass::higher : OrderClass::lower;
}

/// A social-ecological system: disjoint social and ecological vertex
/// universes, an interaction family of arbitrary orders over their union,
/// and opaque constant labels. The interaction family is stored as given;
/// downward closure of the family is a checked property, not an enforced
/// invariant. Immutable after construction.
class SesStructure {
public:
    struct Options {
        /// With strict kinds both sides must be non-empty. Relaxing permits
        /// single-kind toy systems; a fully empty universe is always
        /// rejected.
        bool strict_kinds = true;
        std::size_t simplex_cap = kDefaultSimplexCap;
    };

    static SesStructure build(const std::vector<std::string>& social_ids,
                              const std::vector<std::string>& ecological_ids,
                              const std::vector<std::vector<std::string>>& interactions,
                              const std::vector<std::string>& constants = {}) {
        return build(social_ids, ecological_ids, interactions, constants, Options{});
    }

    static SesStructure build(const std::vector<std::string>& social_ids,
                              const std::vector<std::string>& ecological_ids,
                              const std::vector<std::vector<std::string>>& interactions,
                              const std::vector<std::string>& constants,
                              const Options& options) {
        check_simplex_cap(options.simplex_cap);
        if (social_ids.empty() && ecological_ids.empty())
            fail(ErrorKind::empty_universe, "the vertex universe must be non-empty");
        if (options.strict_kinds && social_ids.empty())
            fail(ErrorKind::empty_universe,
                 "the social universe is empty (strict kinds)");
        if (options.strict_kinds && ecological_ids.empty())
            fail(ErrorKind::empty_universe,
                 "the ecological universe is empty (strict kinds)");

        SesStructure ses;
        for (const auto& id : social_ids) {
            ses.universe_.register_vertex(id);
            ses.kinds_.push_back(UnitKind::social);
        }
        for (const auto& id : ecological_ids) {
            if (ses.universe_.contains(id))
                fail(ErrorKind::disjointness,
                     "id '" + id + "' is declared both social and ecological");
            ses.universe_.register_vertex(id);
            ses.kinds_.push_back(UnitKind::ecological);
        }
        for (const auto& ids : interactions) {
            Simplex interaction = canonicalize(ses.universe_, ids);
            if (interaction.cardinality() > options.simplex_cap)
                fail(ErrorKind::size_guard,
                     "interaction cardinality " +
                         std::to_string(interaction.cardinality()) +
                         " exceeds the cap of " + std::to_string(options.simplex_cap));
            ses.interactions_.insert(std::move(interaction));
        }
        ses.constants_ = constants;
        return ses;
    }

    const VertexUniverse& universe() const noexcept { return universe_; }

    UnitKind kind_of(VertexIndex index) const {
        if (index >= kinds_.size())
            fail(ErrorKind::validation,
                 "vertex index " + std::to_string(index) + " out of bounds");
        return kinds_[index];
    }

    UnitKind kind_of(std::string_view id) const { return kind_of(universe_.index_of(id)); }

    /// Interactions in lexicographic order of canonical sequences.
    const std::set<Simplex>& interactions() const noexcept { return interactions_; }

    /// Opaque labels; nothing computes with them.
    const std::vector<std::string>& constants() const noexcept { return constants_; }

    std::size_t social_count() const noexcept { return count_kind(UnitKind::social); }
    std::size_t ecological_count() const noexcept {
        return count_kind(UnitKind::ecological);
    }

    std::vector<std::string> ids_of_kind(UnitKind kind) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < kinds_.size(); ++i)
            if (kinds_[i] == kind) out.push_back(universe_.ids()[i]);
        return out;
    }

private:
    SesStructure() = default;

    std::size_t count_kind(UnitKind kind) const noexcept {
        std::size_t n = 0;
        for (auto k : kinds_)
            if (k == kind) ++n;
        return n;
    }

    VertexUniverse universe_;
    std::vector<UnitKind> kinds_;
    std::set<Simplex> interactions_;
    std::vector<std::string> constants_;
};

/// Result of the subset-dependency check: whether every non-empty subset of
/// every interaction is itself an interaction. Witnesses are missing
/// codimension-1 subsets, deduplicated, lexicographic, capped.
struct SubsetDependencyReport {
    bool holds = true;
    std::vector<Simplex> missing;
    bool truncated = false;
};

inline SubsetDependencyReport check_subset_dependency(const SesStructure& ses,
                                                      std::size_t witness_limit = 10) {
    if (witness_limit == 0)
        fail(ErrorKind::range, "witness limit must be at least 1");
    SubsetDependencyReport report;
    std::set<Simplex> seen;
    for (const Simplex& interaction : ses.interactions()) {
        if (interaction.cardinality() < 2) continue;
        for (const Simplex& sub : interaction.codim1_faces()) {
            if (ses.interactions().contains(sub) || seen.contains(sub)) continue;
            report.holds = false;
            if (report.missing.size() >= witness_limit) {
                report.truncated = true;
                continue;
            }
            seen.insert(sub);
            report.missing.push_back(sub);
        }
    }
    std::sort(report.missing.begin(), report.missing.end());
    return report;
}

/// Interactions split by the vertex kinds they touch. The three families are
/// disjoint and cover the whole interaction set.
struct InteractionPartition {
    std::vector<Simplex> social_pure;
    std::vector<Simplex> ecological_pure;
    std::vector<Simplex> cross;
};

inline InteractionPartition partition_interactions(const SesStructure& ses) {
    InteractionPartition partition;
    for (const Simplex& interaction : ses.interactions()) {
        bool social = false;
        bool ecological = false;
        for (VertexIndex v : interaction.vertices()) {
            if (ses.kind_of(v) == UnitKind::social)
                social = true;
            else
                ecological = true;
        }
        if (social && ecological)
            partition.cross.push_back(interaction);
        else if (social)
            partition.social_pure.push_back(interaction);
        else
            partition.ecological_pure.push_back(interaction);
    }
    return partition;
}

/// The system embedded in an environment universe X: the system's vertex set
/// V plus the external components X \ V. Inclusion is the identity on ids.
class Environment {
public:
    Environment(SesStructure system, std::vector<std::string> external_ids)
        : system_(std::move(system)) {
        std::set<std::string> seen;
        for (const auto& id : external_ids) {
            if (system_.universe().contains(id))
                fail(ErrorKind::validation,
                     "environment id '" + id + "' collides with a system vertex");
            if (!seen.insert(id).second)
                fail(ErrorKind::validation, "duplicate environment id '" + id + "'");
        }
        externals_ = std::move(external_ids);
    }

    const SesStructure& system() const noexcept { return system_; }

    /// The complement V^c = X \ V, in the order given at construction.
    const std::vector<std::string>& complement() const noexcept { return externals_; }

    std::size_t size() const noexcept {
        return system_.universe().size() + externals_.size();
    }

    bool contains(std::string_view id) const {
        return in_system(id) ||
               std::find(externals_.begin(), externals_.end(), id) != externals_.end();
    }

    bool in_system(std::string_view id) const { return system_.universe().contains(id); }

private:
    SesStructure system_;
    std::vector<std::string> externals_;
};

inline Environment embed_in_environment(SesStructure ses,
                                        std::vector<std::string> external_ids) {
    return Environment(std::move(ses), std::move(external_ids));
}

} // namespace senet
