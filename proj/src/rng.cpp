#include "osp/rng.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace osp {

std::vector<int64_t> spread_starts(int count, int64_t lo, int64_t hi,
                                   int64_t gap, StreamRng& rng) {
  if (count <= 0) return {};
  int64_t top = hi - int64_t(count - 1) * gap;  // compacted upper bound
  assert(top >= lo);

  // Floyd's sampling: `count` distinct values w_i from [lo, top + count - 1];
  // y_i = w_i - i is then a sorted sample with repetition from [lo, top],
  // and y_i + i * gap enumerates exactly the valid start tuples.
  std::set<int64_t> chosen;
  int64_t n = top - lo + count;
  for (int64_t j = n - count; j < n; ++j) {
    int64_t t = rng.uniform_int(0, j);
    if (!chosen.insert(lo + t).second) chosen.insert(lo + j);
  }

  std::vector<int64_t> out(chosen.begin(), chosen.end());
  for (size_t i = 0; i < out.size(); ++i) out[i] += int64_t(i) * (gap - 1);
  return out;
}

}  // namespace osp
