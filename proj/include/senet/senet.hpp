#pragma once

// Umbrella header: higher-order network modeling of social-ecological
// systems on abstract simplicial complexes.

#include "senet/complex.hpp"
#include "senet/complex_io.hpp"
#include "senet/config.hpp"
#include "senet/error.hpp"
#include "senet/evolution.hpp"
#include "senet/projection.hpp"
#include "senet/sen.hpp"
#include "senet/ses.hpp"
#include "senet/ses_io.hpp"
#include "senet/simplex.hpp"
#include "senet/universe.hpp"

namespace senet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace senet
