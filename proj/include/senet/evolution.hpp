#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "senet/complex.hpp"
#include "senet/sen.hpp"
#include "senet/ses.hpp"

namespace senet {

/// Iterative group growth over a fixed participant set: at step a every
/// group of a+1 participants interacts, so the step emits all (a+1)-subsets
/// of the universe as a-simplices. Steps run from 1 (pairs) to n-1 (one
/// all-member group).

/// Group size at step a is a+1, so only step 1 stays pairwise.
inline OrderClass step_order_class(unsigned step) {
    if (step < 1) fail(ErrorKind::range, "steps are 1-based");
    return step == 1 ? OrderClass::lower : OrderClass::higher;
}

/// All (step+1)-subsets of the participant set, as simplices of dimension
/// `step`, in lexicographic order.
inline std::vector<Simplex> generate_step(const VertexUniverse& participants,
                                          unsigned step) {
    const std::size_t n = participants.size();
    if (n < 2)
        fail(ErrorKind::range,
             "group growth needs at least two participants, got " + std::to_string(n));
    if (step < 1 || step > n - 1)
        fail(ErrorKind::range, "step " + std::to_string(step) +
                                   " out of range: valid steps are 1.." +
                                   std::to_string(n - 1));

    const std::size_t group_size = step + 1;
    std::vector<Simplex> out;
    std::vector<VertexIndex> current(group_size);
    // Standard combination enumeration; lexicographic because indices are
    // chosen in increasing order.
    std::iota(current.begin(), current.end(), VertexIndex{0});
    while (true) {
        out.push_back(Simplex::from_canonical(current));
        std::size_t i = group_size;
        while (i-- > 0) {
            if (current[i] + (group_size - i) <= n - 1) break;
            if (i == 0) return out;
        }
        ++current[i];
        for (std::size_t j = i + 1; j < group_size; ++j)
            current[j] = current[j - 1] + 1;
    }
}

struct GrowthStep {
    unsigned step = 0;
    std::size_t group_size = 0;
    /// The step's own output: all group interactions of this size.
    std::vector<Simplex> emitted;
    /// Closure of everything emitted up to and including this step.
    SimplicialComplex cumulative;
};

struct LedgerRow {
    unsigned step = 0;
    std::size_t input_count = 0;
    int input_dimension = 0;
    int simplex_dimension = 0;
    OrderClass order = OrderClass::lower;
    std::size_t output_count = 0;
};

struct GrowthResult {
    SenNetwork network;
    std::vector<GrowthStep> steps;
    std::vector<LedgerRow> ledger;
};

/// Runs the growth from step 1 through `last_step`. The network's complex at
/// step a is the closed union of all groups emitted through a; the first
/// step's input is the participant set itself.
inline GrowthResult run_growth(const VertexUniverse& participants, unsigned last_step,
                               std::size_t simplex_cap = kDefaultSimplexCap) {
    check_simplex_cap(simplex_cap);
    const std::size_t n = participants.size();
    if (n < 2)
        fail(ErrorKind::range,
             "group growth needs at least two participants, got " + std::to_string(n));
    if (last_step < 1 || last_step > n - 1)
        fail(ErrorKind::range, "last step " + std::to_string(last_step) +
                                   " out of range: valid steps are 1.." +
                                   std::to_string(n - 1));
    if (last_step + 1 > simplex_cap)
        fail(ErrorKind::size_guard,
             "step " + std::to_string(last_step) + " forms groups of " +
                 std::to_string(last_step + 1) + " participants, above the simplex cap of " +
                 std::to_string(simplex_cap));

    std::vector<GrowthStep> steps;
    std::vector<LedgerRow> ledger;
    std::vector<unsigned> time_index;
    std::vector<SimplicialComplex> complexes;
    SimplicialComplex cumulative(participants, simplex_cap);

    std::size_t previous_output = n; // step 1 consumes the participants
    for (unsigned step = 1; step <= last_step; ++step) {
        auto emitted = generate_step(participants, step);
        for (const Simplex& s : emitted) cumulative.insert_closed(s);

        ledger.push_back(LedgerRow{
            .step = step,
            .input_count = previous_output,
            .input_dimension = static_cast<int>(step) - 1,
            .simplex_dimension = static_cast<int>(step),
            .order = step_order_class(step),
            .output_count = emitted.size(),
        });
        previous_output = emitted.size();

        steps.push_back(GrowthStep{step, step + 1, std::move(emitted), cumulative});
        time_index.push_back(step);
        complexes.push_back(cumulative);
    }

    SenNetwork network(participants, std::move(time_index), std::move(complexes));
    return GrowthResult{std::move(network), std::move(steps), std::move(ledger)};
}

namespace detail {

inline std::string simplex_count(std::size_t count, int dimension) {
    std::ostringstream os;
    os << count << ' ' << dimension << (count == 1 ? "-simplex" : "-simplices");
    return os.str();
}

} // namespace detail

/// Tab-separated ledger, one row per step:
/// step, input family, simplex dimension, order class, output family.
inline std::string ledger_to_tsv(const std::vector<LedgerRow>& ledger) {
    std::ostringstream os;
    os << "step\tinput\tsimplex_dim\torder\toutput\n";
    for (const auto& row : ledger) {
        os << row.step << '\t'
           << detail::simplex_count(row.input_count, row.input_dimension) << '\t'
           << row.simplex_dimension << '\t' << to_string(row.order) << '\t'
           << detail::simplex_count(row.output_count, row.simplex_dimension) << '\n';
    }
    return os.str();
}

inline nlohmann::json ledger_to_json(const std::vector<LedgerRow>& ledger) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : ledger) {
        rows.push_back({
            {"step", row.step},
            {"input_count", row.input_count},
            {"input_dimension", row.input_dimension},
            {"simplex_dimension", row.simplex_dimension},
            {"order", to_string(row.order)},
            {"output_count", row.output_count},
        });
    }
    return nlohmann::json{{"steps", rows}};
}

} // namespace senet
