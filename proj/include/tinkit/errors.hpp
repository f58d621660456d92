#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tinkit {

/// Caller-side mistake: malformed input, violated precondition, bad parameter.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search exhausted its node budget. Never converted into an estimate.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : std::runtime_error("search budget of " + std::to_string(limit) + " nodes exhausted"),
          limit_(limit) {}
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

/// A constructive step the theory guarantees did not produce its object.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Node counter shared by one logical search. Not thread-safe; parallel
/// kernels give each worker its own budget.
class SearchBudget {
public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    SearchBudget() : limit_(default_limit()) {}
    explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

    void tick() {
        if (++used_ > limit_) throw BudgetExceeded(limit_);
    }
    void tick(std::uint64_t n) {
        used_ += n;
        if (used_ > limit_) throw BudgetExceeded(limit_);
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

    /// TINKIT_BUDGET if set and parseable, else kDefaultLimit.
    static std::uint64_t default_limit();

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace tinkit
