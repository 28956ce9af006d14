// The five-participant growth run, and why the pairwise projection cannot
// tell its first and last steps apart.

#include <iostream>

#include "senet/senet.hpp"

int main() {
    using namespace senet;

    auto participants = VertexUniverse::from_ids({"vi", "vj", "vk", "vl", "vm"});
    auto result = run_growth(participants, 4);

    std::cout << ledger_to_tsv(result.ledger);

    const auto& step1 = result.network.complex_at(1);
    const auto& step4 = result.network.complex_at(4);
    std::cout << "step 1: " << step1.member_count() << " members, dim "
              << step1.dimension() << "\n";
    std::cout << "step 4: " << step4.member_count() << " members, dim "
              << step4.dimension() << "\n";

    auto g1 = to_underlying_graph(step1);
    auto g4 = to_underlying_graph(step4);
    std::cout << "projections identical: " << (graphs_identical(g1, g4) ? "yes" : "no")
              << " (" << g1.edges().size() << " edges each)\n";

    auto collision = skeleton_collision(step1, step4);
    if (collision.collision)
        std::cout << "collision witness: {"
                  << render_member(participants, *collision.witness) << "} of dimension "
                  << collision.witness->dimension() << "\n";

    std::cout << "step 4 loss under projection:\n"
              << loss_report_table(loss_report(step4));
    return 0;
}
