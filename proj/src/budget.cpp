#include "growthlab/budget.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>

namespace growthlab::budget {
namespace {

using Clock = std::chrono::steady_clock;

std::atomic<Clock::rep> g_deadline{0};  // 0 = no limit

}  // namespace

void set_limit_secs(double secs) {
  if (secs <= 0) {
    g_deadline.store(0, std::memory_order_relaxed);
    return;
  }
  auto dl = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(secs));
  g_deadline.store(dl.time_since_epoch().count(), std::memory_order_relaxed);
}

void install_from_env() {
  if (const char* env = std::getenv("GROWTHLAB_BUDGET_SECS")) {
    char* end = nullptr;
    double secs = std::strtod(env, &end);
    if (end != env && secs > 0) set_limit_secs(secs);
  }
}

void check(const char* where) {
  auto dl = g_deadline.load(std::memory_order_relaxed);
  if (dl == 0) return;
  if (Clock::now().time_since_epoch().count() > dl)
    throw BudgetExceeded(std::string("budget exceeded in ") + where);
}

}  // namespace growthlab::budget
