#pragma once

// Umbrella header: the whole library.

#include "spehlab/rational.hpp"    // IWYU pragma: export
#include "spehlab/segment.hpp"     // IWYU pragma: export
#include "spehlab/multisegment.hpp"  // IWYU pragma: export
#include "spehlab/io.hpp"          // IWYU pragma: export
#include "spehlab/poset.hpp"       // IWYU pragma: export
#include "spehlab/mwa.hpp"         // IWYU pragma: export
#include "spehlab/ring.hpp"        // IWYU pragma: export
#include "spehlab/report.hpp"      // IWYU pragma: export
#include "spehlab/speh.hpp"        // IWYU pragma: export
#include "spehlab/verify.hpp"      // IWYU pragma: export
