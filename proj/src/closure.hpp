#pragma once

#include <vector>

#include "ggr/grading.hpp"

namespace ggr::detail {

/// Smallest subset containing 0 and `seeds`, closed under addible sums and
/// differences and under the images produced by `images(x, push)`.
template <class Images>
ElementSet close_subset(const grading::Homogroupoid& h, const ElementSet& seeds, Images&& images) {
  const std::size_t n = h.size();
  ElementSet in(n);
  std::vector<ElemId> members;
  std::vector<ElemId> work;
  auto push = [&](ElemId x) {
    if (x == grading::Homogroupoid::kUndefined || in.contains(x)) return;
    in.insert(x);
    work.push_back(x);
  };
  push(0);
  seeds.for_each(push);
  while (!work.empty()) {
    ElemId x = work.back();
    work.pop_back();
    if (in.size() == n) break;
    push(h.neg(x));
    for (ElemId y : members)
      if (h.addible(x, y)) {
        push(h.sum(x, y));
        push(h.difference(x, y));
        push(h.difference(y, x));
      }
    push(h.sum(x, x));
    members.push_back(x);
    images(x, push);
  }
  return in;
}

}  // namespace ggr::detail
