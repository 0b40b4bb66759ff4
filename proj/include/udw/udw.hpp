#pragma once

// Umbrella header for the full library.

#include "udw/dataset.hpp"
#include "udw/dephasing.hpp"
#include "udw/gqd.hpp"
#include "udw/jacobi.hpp"
#include "udw/oracle.hpp"
#include "udw/parallel.hpp"
#include "udw/presets.hpp"
#include "udw/quantifiers.hpp"
#include "udw/selfcheck.hpp"
#include "udw/sweep.hpp"
#include "udw/thermo.hpp"
#include "udw/version.hpp"
#include "udw/xstate.hpp"
