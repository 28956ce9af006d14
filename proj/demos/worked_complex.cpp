// Minimal tour of the complex engine: one triangle, its faces, facets,
// boundary and skeleton.

#include <iostream>

#include "senet/senet.hpp"

int main() {
    using namespace senet;

    auto universe = VertexUniverse::from_ids({"vi", "vj", "vk"});
    SimplicialComplex complex(universe);
    complex.insert_closed(canonicalize(universe, {"vi", "vj", "vk"}));

    std::cout << "members (" << complex.member_count() << "):\n";
    for (const auto& s : complex.members())
        std::cout << "  {" << render_member(universe, s) << "}\n";

    std::cout << "dimension: " << complex.dimension() << "\n";

    std::cout << "boundary:\n";
    for (const auto& s : complex.boundary())
        std::cout << "  {" << render_member(universe, s) << "}\n";

    std::cout << "facets (dimension dim-1):\n";
    for (const auto& s : complex.facets().facets)
        std::cout << "  {" << render_member(universe, s) << "}\n";

    std::cout << "1-skeleton as text:\n" << serialize_complex(complex.p_skeleton(1));
    return 0;
}
