#include "zerodim/order_tables.hpp"

#include <stdexcept>
#include <string>

#include "ord_table_data.inc"

namespace zerodim {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    if (pos == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, pos));
    text.remove_prefix(pos + 1);
  }
  return lines;
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("order table data is malformed: " + what);
}

}  // namespace

OrdTable::OrdTable(std::vector<BigCount> values) : values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(kMaxN)) {
    malformed("expected " + std::to_string(kMaxN) + " entries, got " +
              std::to_string(values_.size()));
  }
  if (values_[0] != 1 || values_[1] != 3) {
    malformed("entries for n = 1, 2 do not match the published anchors 1, 3");
  }
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k] <= values_[k - 1]) malformed("entries are not strictly increasing");
  }
}

const BigCount& OrdTable::value(int n) const {
  if (n < 1 || n > kMaxN) {
    throw std::domain_error("ORD(" + std::to_string(n) +
                            ") is not tabulated: counts of partial orders are "
                            "published only for 1 <= n <= 18");
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

OrdStarTable::OrdStarTable(std::vector<BigCount> values) : values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(kMaxN)) {
    malformed("expected " + std::to_string(kMaxN) + " derived entries");
  }
  if (values_[0] != 1) malformed("derived entry for n = 1 must be 1");
}

const BigCount& OrdStarTable::value(int n) const {
  if (n < 1 || n > kMaxN) {
    throw std::domain_error("ORD*(" + std::to_string(n) +
                            ") is not available: the table is derived from "
                            "published ORD(1..18) and stops at n = 19");
  }
  return values_[static_cast<std::size_t>(n - 1)];
}

OrdTable parse_ord_table(std::string_view text) {
  auto lines = split_lines(text);
  // A single trailing newline is fine; anything else empty is not.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != static_cast<std::size_t>(OrdTable::kMaxN)) {
    malformed("expected " + std::to_string(OrdTable::kMaxN) + " lines, got " +
              std::to_string(lines.size()));
  }
  std::vector<BigCount> values;
  values.reserve(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    try {
      values.push_back(parse_decimal(lines[k]));
    } catch (const std::runtime_error& err) {
      malformed("line " + std::to_string(k + 1) + ": " + err.what());
    }
  }
  return OrdTable(std::move(values));
}

OrdTable load_ord_table() { return parse_ord_table(kOrdTableData); }

OrdStarTable derive_ord_star(const OrdTable& table) {
  std::vector<BigCount> values;
  values.reserve(OrdStarTable::kMaxN);
  values.emplace_back(1);
  for (int n = 1; n <= table.max_n(); ++n) {
    values.push_back((n + 1) * table.value(n));
  }
  return OrdStarTable(std::move(values));
}

}  // namespace zerodim
