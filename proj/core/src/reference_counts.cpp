#include "zerodim/reference_counts.hpp"

#include <vector>

namespace zerodim {
namespace {

std::vector<BigCount> parse_all(const char* const* texts, std::size_t count) {
  std::vector<BigCount> values;
  values.reserve(count);
  for (std::size_t k = 0; k < count; ++k) values.push_back(parse_decimal(texts[k]));
  return values;
}

constexpr const char* kZdimT0[] = {
    "1",
    "3",
    "16",
    "137",
    "1826",
    "37777",
    "1214256",
    "60075185",
    "4484316358",
    "493489876721",
    "78456654767756",
    "17735173202222665",
    "5630684018989523274",
    "2486496790249207894159",
    "1515191575312017424784521",
    "1265630395473933567972009297",
    "1440898175760773111084979329715",
    "2224880834303273680055277143713603",
    "4639372746385389556519264489422075597",
};

constexpr const char* kZdim[] = {
    "1",
    "4",
    "26",
    "255",
    "3642",
    "75606",
    "2316169",
    "106289210",
    "7321773414",
    "748425136289",
    "111576624613588",
    "23864968806932886",
    "7225895692327786931",
    "3064182503223081924546",
    "1803904252801640389011509",
    "1463405916763710531191264095",
    "1625522872429294854935797170055",
    "2458567514979832213529304852528157",
    "5038667231667979478308745583967234599",
};

}  // namespace

std::span<const BigCount> reference_zdim_t0() {
  static const std::vector<BigCount> values = parse_all(kZdimT0, std::size(kZdimT0));
  return values;
}

std::span<const BigCount> reference_zdim() {
  static const std::vector<BigCount> values = parse_all(kZdim, std::size(kZdim));
  return values;
}

}  // namespace zerodim
