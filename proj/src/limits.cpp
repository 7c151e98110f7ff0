#include "noecover/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace noecover {

Limits Limits::from_env() {
  Limits lim;
  if (const char* raw = std::getenv("NOECOVER_LIMIT")) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc{} || *ptr != '\0' || value == 0)
      throw InputError(std::string("NOECOVER_LIMIT must be a positive integer, got \"") + raw +
                       "\"");
    lim.subset_budget = value;
  }
  return lim;
}

void Limits::charge_subsets(int width, const char* what) const {
  if (width >= 64 || (std::uint64_t{1} << width) > subset_budget)
    throw LimitError(std::string(what) + ": enumerating 2^" + std::to_string(width) +
                     " subsets exceeds the limit of " + std::to_string(subset_budget) +
                     " (set NOECOVER_LIMIT to raise it)");
}

void Limits::charge(std::uint64_t count, const char* what) const {
  if (count > subset_budget)
    throw LimitError(std::string(what) + ": " + std::to_string(count) +
                     " evaluations exceed the limit of " + std::to_string(subset_budget) +
                     " (set NOECOVER_LIMIT to raise it)");
}

} // namespace noecover
