#include "hornkc/error.hpp"

#include <atomic>

namespace hornkc {

namespace {
std::atomic<int> g_brute_force_limit{24};
}

WidthMismatch::WidthMismatch(int expected, int actual, std::string_view where)
    : Error(std::string(where) + ": width mismatch (expected " + std::to_string(expected) +
            ", got " + std::to_string(actual) + ")") {}

GuardExceeded::GuardExceeded(int width, int limit, std::string_view where)
    : Error(std::string(where) + ": width " + std::to_string(width) +
            " exceeds brute-force limit " + std::to_string(limit)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

int brute_force_limit() { return g_brute_force_limit.load(std::memory_order_relaxed); }

void set_brute_force_limit(int width) {
  if (width < 1 || width > 62) {
    throw InvalidArgument("brute-force limit must lie in 1..62, got " + std::to_string(width));
  }
  g_brute_force_limit.store(width, std::memory_order_relaxed);
}

void require_within_guard(int width, std::string_view where) {
  const int limit = brute_force_limit();
  if (width > limit) throw GuardExceeded(width, limit, where);
}

}  // namespace hornkc
