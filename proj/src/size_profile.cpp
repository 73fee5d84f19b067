#include "mmatch/size_profile.hpp"

#include "mmatch/errors.hpp"

namespace mmatch {

SizeProfile::SizeProfile(std::vector<BigInt> counts) : counts_(std::move(counts)) {
  trim();
}

SizeProfile SizeProfile::of(
    std::initializer_list<std::pair<std::size_t, long long>> entries) {
  SizeProfile p;
  for (auto [k, count] : entries) p.add(k, count);
  return p;
}

BigInt SizeProfile::at(std::size_t k) const {
  return k < counts_.size() ? counts_[k] : BigInt(0);
}

void SizeProfile::add(std::size_t k, const BigInt& amount) {
  if (amount == 0) return;
  if (counts_.size() <= k) counts_.resize(k + 1);
  counts_[k] += amount;
  trim();
}

int SizeProfile::min_index() const {
  for (std::size_t k = 0; k < counts_.size(); ++k)
    if (counts_[k] != 0) return static_cast<int>(k);
  return -1;
}

BigInt SizeProfile::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

BigInt SizeProfile::first_moment() const {
  BigInt sum = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) sum += counts_[k] * k;
  return sum;
}

std::string SizeProfile::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] == 0) continue;
    if (!first) out += ", ";
    out += std::to_string(k) + ":" + counts_[k].str();
    first = false;
  }
  return out + "}";
}

void SizeProfile::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

}  // namespace mmatch
