#include "mpart/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace mpart {
namespace {

std::uint64_t read_env(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return value;
}

}  // namespace

Budgets Budgets::from_environment() {
  Budgets b;
  b.enumeration = read_env("MPART_ENUM_BUDGET", kDefaultEnumeration);
  b.loop = read_env("MPART_LOOP_BUDGET", kDefaultLoop);
  return b;
}

}  // namespace mpart
