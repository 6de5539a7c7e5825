#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zerodim {

// All counts, products and partial sums. The tabulated order counts exceed
// 64 bits from n = 13 on, so the whole engine runs on one
// arbitrary-precision path.
using BigCount = mpz_class;

// Exact decimal expansion: no separators, no scientific notation.
inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

// Parses a plain non-negative decimal integer. Rejects signs, whitespace
// and everything else that is not a digit. Throws std::runtime_error.
BigCount parse_decimal(std::string_view text);

}  // namespace zerodim
