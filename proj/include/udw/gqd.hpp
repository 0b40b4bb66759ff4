#pragma once

#include "udw/oracle.hpp"
#include "udw/quantifiers.hpp"

// Trace-norm geometric quantum discord with the degenerate-denominator
// fallback.  Lives in its own header because it joins the closed-form layer
// (quantifiers) with the numerical minimiser (oracle).

namespace udw {

// Fallback search resolution; the polar grid includes both poles and the
// refinement polishes the grid minimum.
inline constexpr int kGqdFallbackPolarGrid = 97;
inline constexpr int kGqdFallbackAzimuthGrid = 64;

// Closed form where well defined; numerical measurement minimisation where
// the closed form degenerates to 0/0 (Bell states, the gamma = 0 /
// delta0 = -3 loci, the maximally mixed state).  The from_fallback flag
// records which path produced the value.
inline GqdResult gqd_trace_norm(const XState& s) {
  if (const auto closed = detail::gqd_closed_form(s)) {
    return {*closed, false};
  }
  const double value = gqd_numerical(assemble(s), kGqdFallbackPolarGrid,
                                     kGqdFallbackAzimuthGrid, /*refine=*/true);
  return {value, true};
}

}  // namespace udw
