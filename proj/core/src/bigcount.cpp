#include "zerodim/bigcount.hpp"

#include <stdexcept>

namespace zerodim {

BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw std::runtime_error("empty integer literal");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::runtime_error("invalid character in integer literal: \"" +
                               std::string(text) + "\"");
    }
  }
  return BigCount(std::string(text), 10);
}

}  // namespace zerodim
