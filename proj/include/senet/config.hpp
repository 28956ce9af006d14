#pragma once

#include <cstddef>
#include <filesystem>

#include "senet/complex.hpp"
#include "senet/error.hpp"
#include "senet/ses.hpp"

namespace senet {

/// Knobs shared by the command-line surface.
struct RunConfig {
    std::size_t simplex_cap = kDefaultSimplexCap;
    bool strict_kinds = true;
    std::size_t witness_limit = 10;
    std::filesystem::path output_dir = ".";

    void validate() const {
        check_simplex_cap(simplex_cap);
        if (witness_limit < 1)
            fail(ErrorKind::range, "witness limit must be at least 1");
    }

    SesStructure::Options ses_options() const {
        return SesStructure::Options{strict_kinds, simplex_cap};
    }
};

} // namespace senet
