#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "coxcat/core.hpp"
#include "coxcat/signed.hpp"

namespace coxcat::testing {

inline SetPartition P(int n, std::vector<Block> blocks) { return SetPartition(n, std::move(blocks)); }

/// Every listed block plus its mirror (zero blocks listed once).
inline SignedPartition S(int n, std::vector<Block> half) {
  std::vector<Block> all;
  for (auto& b : half) {
    Block neg = negate(b);
    std::sort(b.begin(), b.end());
    std::sort(neg.begin(), neg.end());
    all.push_back(b);
    if (neg != b) all.push_back(neg);
  }
  return validate_signed(n, std::move(all));
}

inline TypePartition T(std::vector<int> parts) { return TypePartition(std::move(parts)); }

template <class V>
bool all_distinct(const V& v) {
  std::set<typename V::value_type> s(v.begin(), v.end());
  return s.size() == v.size();
}

template <class V>
V sorted(V v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace coxcat::testing
