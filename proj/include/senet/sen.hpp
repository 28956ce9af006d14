#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "senet/complex.hpp"
#include "senet/ses.hpp"

namespace senet {

/// A social-ecological network: a finite non-empty time index and one
/// simplicial complex of dimension >= 1 per time step, all over one vertex
/// universe. Static when the time index is a singleton. Immutable.
class SenNetwork {
public:
    SenNetwork(VertexUniverse universe, std::vector<unsigned> time_index,
               std::vector<SimplicialComplex> complexes)
        : universe_(std::move(universe)) {
        if (time_index.empty())
            fail(ErrorKind::validation, "the time index must be non-empty");
        if (time_index.size() != complexes.size())
            fail(ErrorKind::validation,
                 "one complex is required per time step (" +
                     std::to_string(time_index.size()) + " steps, " +
                     std::to_string(complexes.size()) + " complexes)");
        for (std::size_t i = 1; i < time_index.size(); ++i)
            if (time_index[i] <= time_index[i - 1])
                fail(ErrorKind::validation, "the time index must be strictly increasing");
        for (std::size_t i = 0; i < complexes.size(); ++i) {
            if (complexes[i].dimension() < 1)
                fail(ErrorKind::validation,
                     "dimension violation at step " + std::to_string(time_index[i]) +
                         ": a network complex must have dimension >= 1, got " +
                         std::to_string(complexes[i].dimension()));
            if (!(complexes[i].universe() == universe_))
                fail(ErrorKind::validation,
                     "complex at step " + std::to_string(time_index[i]) +
                         " is not over the network universe");
        }
        time_index_ = std::move(time_index);
        complexes_ = std::move(complexes);
    }

    const VertexUniverse& universe() const noexcept { return universe_; }
    const std::vector<unsigned>& time_index() const noexcept { return time_index_; }
    const std::vector<SimplicialComplex>& complexes() const noexcept { return complexes_; }

    bool is_static() const noexcept { return time_index_.size() == 1; }

    const SimplicialComplex& complex_at(unsigned step) const {
        auto it = std::lower_bound(time_index_.begin(), time_index_.end(), step);
        if (it == time_index_.end() || *it != step)
            fail(ErrorKind::range, "no complex at step " + std::to_string(step));
        return complexes_[static_cast<std::size_t>(it - time_index_.begin())];
    }

private:
    VertexUniverse universe_;
    std::vector<unsigned> time_index_;
    std::vector<SimplicialComplex> complexes_;
};

/// Step algorithm: yields for each time step a simplex family over the
/// system universe.
using StepAlgorithm = std::function<std::vector<Simplex>(unsigned step)>;

/// Builds the network for a system by running the step algorithm at every
/// time step and taking the downward closure of its output. A step whose
/// closure stays below dimension 1 is a definition violation. The time
/// index is normalized to strictly increasing order.
inline SenNetwork ses_to_sen(const SesStructure& ses, const StepAlgorithm& algorithm,
                             std::vector<unsigned> time_index,
                             std::size_t simplex_cap = kDefaultSimplexCap) {
    if (time_index.empty())
        fail(ErrorKind::validation, "the time index must be non-empty");
    std::sort(time_index.begin(), time_index.end());
    time_index.erase(std::unique(time_index.begin(), time_index.end()),
                     time_index.end());

    std::vector<SimplicialComplex> complexes;
    complexes.reserve(time_index.size());
    for (unsigned step : time_index) {
        SimplicialComplex complex(ses.universe(), simplex_cap);
        for (const Simplex& s : algorithm(step)) complex.insert_closed(s);
        if (complex.dimension() < 1)
            fail(ErrorKind::validation,
                 "dimension violation at step " + std::to_string(step) +
                     ": the step algorithm produced a complex of dimension " +
                     std::to_string(complex.dimension()) + ", need >= 1");
        complexes.push_back(std::move(complex));
    }
    return SenNetwork(ses.universe(), std::move(time_index), std::move(complexes));
}

} // namespace senet
