#include "plancherel/collection.hpp"

#include "plancherel/errors.hpp"

namespace plancherel {

void PartitionCollection::assign(PolynomialLabel label, Partition lambda) {
  if (label.degree == 0) throw DomainError("polynomial label needs a positive degree");
  if (auto it = assignments_.find(label); it != assignments_.end()) {
    total_ -= static_cast<unsigned long>(it->second.size()) * it->first.degree;
    assignments_.erase(it);
  }
  if (lambda.empty()) return;
  total_ += static_cast<unsigned long>(lambda.size()) * label.degree;
  assignments_.emplace(std::move(label), std::move(lambda));
}

Partition PartitionCollection::at(const PolynomialLabel& label) const {
  auto it = assignments_.find(label);
  return it == assignments_.end() ? Partition{} : it->second;
}

}  // namespace plancherel
