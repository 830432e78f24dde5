#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace primegraph {

// Outcome of an exact search. `none` means the search space was exhausted;
// `inconclusive` means a budget or size guard stopped it first.
enum class SearchStatus { found, none, inconclusive };

std::string to_string(SearchStatus s);

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  static SearchResult found(T v, std::uint64_t nodes = 0) { return {SearchStatus::found, std::move(v), nodes}; }
  static SearchResult none(std::uint64_t nodes = 0) { return {SearchStatus::none, std::nullopt, nodes}; }
  static SearchResult inconclusive(std::uint64_t nodes = 0) {
    return {SearchStatus::inconclusive, std::nullopt, nodes};
  }

  bool is_found() const { return status == SearchStatus::found; }
  bool is_none() const { return status == SearchStatus::none; }
  bool is_inconclusive() const { return status == SearchStatus::inconclusive; }
};

// Thrown when an operation declines an input because it exceeds a size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node counter shared by the backtracking searches.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  // Returns false once the budget is spent.
  bool spend() { return ++used_ <= limit_; }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace primegraph
