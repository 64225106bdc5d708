#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

// Thrown when a long enumeration exceeds the configured wall-clock budget
// (GROWTHLAB_BUDGET_SECS).  The CLI maps this to exit code 3.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

namespace budget {

// Installs a wall-clock deadline this many seconds from now; 0 clears it.
void set_limit_secs(double secs);

// Reads GROWTHLAB_BUDGET_SECS and installs it if set.
void install_from_env();

// Cheap check; long loops call this every few thousand iterations.
void check(const char* where);

}  // namespace budget
}  // namespace growthlab
