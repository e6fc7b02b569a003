#pragma once

#include <vector>

namespace plancherel {

template <typename Visit>
void for_each_partition(unsigned m, Visit&& visit) {
  if (m == 0) {
    visit(Partition{});
    return;
  }
  // Reverse-lex successor on the part sequence.
  std::vector<unsigned> a{m};
  for (;;) {
    visit(Partition(a));
    // Strip trailing ones, then decrement the last part > 1 and refill.
    unsigned ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    unsigned last = --a.back();
    unsigned rest = ones + 1;
    while (rest > last) {
      a.push_back(last);
      rest -= last;
    }
    if (rest > 0) a.push_back(rest);
  }
}

}  // namespace plancherel
