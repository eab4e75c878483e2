#pragma once

// Umbrella header: generating curves of vertically invariant constant-mean-
// curvature and flat surfaces in the metric Lie groups R^2 x| R.

#include "vertinv/ambient.hpp"
#include "vertinv/closedform.hpp"
#include "vertinv/fundforms.hpp"
#include "vertinv/group.hpp"
#include "vertinv/intersect.hpp"
#include "vertinv/io.hpp"
#include "vertinv/ode.hpp"
#include "vertinv/runspec.hpp"
#include "vertinv/surface.hpp"
#include "vertinv/vec.hpp"
#include "vertinv/verify.hpp"
