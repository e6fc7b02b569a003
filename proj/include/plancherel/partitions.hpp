#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plancherel {

/// Integer partition stored as its weakly decreasing positive parts.
/// The empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  /// "2,1" style; the empty string is the empty partition.
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

struct PartitionStats {
  Partition conjugate;
  /// Hook lengths, sorted in decreasing order.
  std::vector<unsigned> hooks;
  /// sum_j l'_j (l'_j - 1) / 2
  unsigned long n_lambda = 0;
  /// sum_i l_i (l_i - 1) / 2, i.e. n of the conjugate
  unsigned long n_conjugate = 0;
  unsigned size = 0;
};

PartitionStats partition_stats(const Partition& lambda);

/// Hook length h(i,j) = l_i + l'_j - i - j + 1 for each cell, row by row.
std::vector<unsigned> hook_lengths(const Partition& lambda);

inline constexpr unsigned kDefaultPartitionCap = 60;

/// All partitions of m in reverse-lexicographic order: (m), (m-1,1), ..., (1^m).
/// Throws ResourceError if m > cap.
std::vector<Partition> enumerate_partitions(unsigned m, unsigned cap = kDefaultPartitionCap);

/// Calls `visit` for each partition of m, in the same order as enumerate_partitions.
template <typename Visit>
void for_each_partition(unsigned m, Visit&& visit);

}  // namespace plancherel

#include "plancherel/detail/partitions_impl.hpp"
