#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "ncsphere/errors.hpp"

namespace ncs {

/// Wall-clock and size limits shared by the long-running kernels
/// (completion, Buchberger, symbolic elimination). A default-constructed
/// budget is unlimited.
class Budget {
public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget with_millis(long ms) {
    Budget b;
    if (ms > 0) b.deadline_ = Clock::now() + std::chrono::milliseconds(ms);
    return b;
  }

  Budget& max_terms(std::size_t n) {
    max_terms_ = n;
    return *this;
  }

  std::size_t max_terms() const noexcept { return max_terms_; }

  bool expired() const {
    return deadline_ && Clock::now() > *deadline_;
  }

  /// Throws ResourceError if the deadline has passed. `where` and `partial`
  /// end up in the error so callers can report how far they got.
  void check(const char* where, const std::string& partial = {}) const {
    if (expired())
      throw ResourceError(std::string("budget exhausted in ") + where, partial);
  }

  void check_size(std::size_t terms, const char* where,
                  const std::string& partial = {}) const {
    if (max_terms_ && terms > max_terms_)
      throw ResourceError(std::string("term budget exhausted in ") + where,
                          partial);
    check(where, partial);
  }

private:
  std::optional<Clock::time_point> deadline_;
  std::size_t max_terms_ = 0;
};

}  // namespace ncs
