#pragma once

#include <map>
#include <string>

#include "plancherel/fieldpolys.hpp"
#include "plancherel/partitions.hpp"

namespace plancherel {

/// Finite assignment of nonempty partitions to polynomial labels.
class PartitionCollection {
 public:
  using Map = std::map<PolynomialLabel, Partition>;

  PartitionCollection() = default;

  /// Assigning the empty partition removes the label.
  void assign(PolynomialLabel label, Partition lambda);

  /// The partition at `label`, or the empty partition.
  Partition at(const PolynomialLabel& label) const;

  const Map& assignments() const { return assignments_; }
  /// sum over labels of |partition| * degree
  unsigned long total() const { return total_; }

  friend bool operator==(const PartitionCollection&, const PartitionCollection&) = default;
  friend auto operator<=>(const PartitionCollection& a, const PartitionCollection& b) {
    return a.assignments_ <=> b.assignments_;
  }

 private:
  Map assignments_;
  unsigned long total_ = 0;
};

}  // namespace plancherel
