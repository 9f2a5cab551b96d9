#pragma once

#include <functional>
#include <vector>

namespace droopjr::detail {

inline long long binomial_capped(int m, int k, long long cap) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * (m - k + j) / j;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Visits all size-k subsets of {0..m-1} in lexicographic order until the
// visitor returns false.
inline void for_each_combination(int m, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> comb(k);
  for (int j = 0; j < k; ++j) comb[j] = j;
  while (true) {
    if (!visit(comb)) return;
    int j = k - 1;
    while (j >= 0 && comb[j] == m - k + j) --j;
    if (j < 0) return;
    ++comb[j];
    for (int t = j + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
  }
}

}  // namespace droopjr::detail
