#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mmatch/numeric.hpp"

namespace mmatch {

// Exact counts indexed by matching size k. Trailing zeros are trimmed, so two
// profiles with the same nonzero entries compare equal.
class SizeProfile {
 public:
  SizeProfile() = default;
  explicit SizeProfile(std::vector<BigInt> counts);

  // Sparse literal: {{k, count}, ...}.
  static SizeProfile of(std::initializer_list<std::pair<std::size_t, long long>> entries);

  const std::vector<BigInt>& counts() const noexcept { return counts_; }

  // Zero beyond the stored range.
  BigInt at(std::size_t k) const;

  void add(std::size_t k, const BigInt& amount);

  bool empty() const noexcept { return counts_.empty(); }

  // Largest k with a nonzero count; -1 for the all-zero profile.
  int max_index() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  int min_index() const;

  BigInt total() const;         // sum_k counts[k]
  BigInt first_moment() const;  // sum_k k * counts[k]

  // Renders as "{1:1, 2:1}".
  std::string to_string() const;

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;

 private:
  void trim();
  std::vector<BigInt> counts_;
};

}  // namespace mmatch
