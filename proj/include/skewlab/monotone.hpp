#pragma once

#include <algorithm>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace detail {

/// Patience sorting with predecessor links. `less(a, b)` orders values;
/// strict monotonicity is enforced. Returns positions of one longest run.
template <class Less>
std::vector<int> longest_monotone(const std::vector<int>& values, Less less) {
  const int m = static_cast<int>(values.size());
  std::vector<int> tails;        // indices of the smallest tail per length
  std::vector<int> prev(m, -1);  // predecessor in the reconstructed run
  for (int i = 0; i < m; ++i) {
    // first pile whose tail is not less than values[i]
    int lo = 0, hi = static_cast<int>(tails.size());
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (less(values[tails[mid]], values[i]))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo > 0) prev[i] = tails[lo - 1];
    if (lo == static_cast<int>(tails.size()))
      tails.push_back(i);
    else
      tails[lo] = i;
  }
  std::vector<int> run;
  for (int i = tails.empty() ? -1 : tails.back(); i != -1; i = prev[i])
    run.push_back(i);
  std::reverse(run.begin(), run.end());
  return run;
}

}  // namespace detail

/// Positions (in the first order) of a subsequence that is increasing in the
/// first order and monotone in the second. `order2[i]` is the position of the
/// i-th element of the first order within the second. By the Erdos-Szekeres
/// bound the result has length at least ceil(sqrt(m)); increasing wins ties.
inline std::vector<int> es_common_monotone(const std::vector<int>& order2) {
  const int m = static_cast<int>(order2.size());
  std::vector<char> seen(m, 0);
  for (int v : order2) {
    if (v < 0 || v >= m || seen[v])
      throw ParseError("es_common_monotone: input is not a permutation of 0..m-1");
    seen[v] = 1;
  }
  auto inc = detail::longest_monotone(order2, [](int a, int b) { return a < b; });
  auto dec = detail::longest_monotone(order2, [](int a, int b) { return a > b; });
  return inc.size() >= dec.size() ? inc : dec;
}

}  // namespace skewlab
