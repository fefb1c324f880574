#pragma once

#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

namespace qseries {

/// Read-only view of index components, used by term functions.
using IndexView = std::span<const long>;

inline long weight(IndexView k) noexcept { return std::accumulate(k.begin(), k.end(), 0L); }

/// Vector of non-negative integers with its cached weight |k|.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<long> components);
  MultiIndex(std::initializer_list<long> components) : MultiIndex(std::vector<long>(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  long weight() const noexcept { return weight_; }
  long operator[](std::size_t r) const { return components_[r]; }
  const std::vector<long>& components() const noexcept { return components_; }
  IndexView view() const noexcept { return components_; }
  operator IndexView() const noexcept { return components_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.components_ == b.components_; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.components_ <=> b.components_; }

 private:
  std::vector<long> components_;
  long weight_ = 0;
};

}  // namespace qseries
