#pragma once

#include <span>

#include "zerodim/bigcount.hpp"

namespace zerodim {

// Published reference values for the two counting sequences, n = 1..19.
// `verify` checks the engine against these; they are display/check data
// only and never feed a computation.

std::span<const BigCount> reference_zdim_t0();  // [k-1] = ZDIM_T0(k)
std::span<const BigCount> reference_zdim();     // [k-1] = ZDIM(k)

}  // namespace zerodim
