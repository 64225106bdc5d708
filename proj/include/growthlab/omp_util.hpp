#pragma once

#include <atomic>
#include <exception>

namespace growthlab {

// Exceptions may not escape an OpenMP region; loop bodies run through this
// guard and the first captured exception is rethrown after the join.
class OmpExceptionGuard {
 public:
  template <typename Fn>
  void run(Fn&& fn) noexcept {
    if (failed_.load(std::memory_order_relaxed)) return;
    try {
      fn();
    } catch (...) {
      bool expected = false;
      if (failed_.compare_exchange_strong(expected, true))
        eptr_ = std::current_exception();
    }
  }

  void rethrow() {
    if (failed_.load(std::memory_order_relaxed) && eptr_)
      std::rethrow_exception(eptr_);
  }

  bool failed() const { return failed_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> failed_{false};
  std::exception_ptr eptr_;
};

}  // namespace growthlab
