#include "plancherel/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "plancherel/errors.hpp"

namespace plancherel {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) {
      throw DomainError("invalid partition \"" + std::string(text) + "\" at position " +
                        std::to_string(pos) + ": expected digits");
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{}) throw DomainError("partition part out of range in \"" + std::string(text) + "\"");
    parts.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw DomainError("invalid partition \"" + std::string(text) + "\" at position " +
                        std::to_string(pos) + ": expected ','");
    }
    ++pos;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<unsigned> conj(parts_.front(), 0);
  for (unsigned p : parts_) {
    for (unsigned j = 0; j < p; ++j) ++conj[j];
  }
  return Partition(std::move(conj));
}

std::vector<unsigned> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const auto& rows = lambda.parts();
  const auto& cols = conj.parts();
  std::vector<unsigned> hooks;
  hooks.reserve(lambda.size());
  for (unsigned i = 0; i < rows.size(); ++i) {
    for (unsigned j = 0; j < rows[i]; ++j) {
      // 0-based form of l_i + l'_j - i - j + 1
      hooks.push_back(rows[i] - j + cols[j] - i - 1);
    }
  }
  return hooks;
}

PartitionStats partition_stats(const Partition& lambda) {
  PartitionStats s;
  s.conjugate = lambda.conjugate();
  s.hooks = hook_lengths(lambda);
  std::sort(s.hooks.begin(), s.hooks.end(), std::greater<>());
  for (unsigned c : s.conjugate.parts()) s.n_lambda += static_cast<unsigned long>(c) * (c - 1) / 2;
  for (unsigned r : lambda.parts()) s.n_conjugate += static_cast<unsigned long>(r) * (r - 1) / 2;
  s.size = lambda.size();
  return s;
}

std::vector<Partition> enumerate_partitions(unsigned m, unsigned cap) {
  if (m > cap) {
    throw ResourceError("partition enumeration of " + std::to_string(m) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<Partition> out;
  for_each_partition(m, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

}  // namespace plancherel
