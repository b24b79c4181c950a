#pragma once

#include "gcmonad/monad.hpp"
#include "gcmonad/outcome.hpp"

namespace gcmonad {

/// Computations over runtime outcome values.
using Gcm = GcmVal<Outcome>;

}  // namespace gcmonad
