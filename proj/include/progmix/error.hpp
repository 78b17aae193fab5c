#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace progmix {

// Raised when a configured operation-count budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what + ": requires " + std::to_string(required) +
                           " elementary operations, budget is " +
                           std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// Default budget for exact double loops (elementary operations).
inline constexpr std::uint64_t kDefaultOpBudget = 1'000'000'000ULL;
// Default budget for group enumeration, in units of p^(d^2-1).
inline constexpr std::uint64_t kDefaultGroupBudget = 10'000'000ULL;

// Reads PROGMIX_BUDGET from the environment, falling back to `fallback`.
std::uint64_t op_budget(std::uint64_t fallback = kDefaultOpBudget);

// Throws BudgetExceeded when required > budget.
void require_budget(const std::string& what, std::uint64_t required,
                    std::uint64_t budget);

}  // namespace progmix
