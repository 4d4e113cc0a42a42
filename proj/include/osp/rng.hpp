#ifndef OSP_RNG_HPP
#define OSP_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace osp {

// mt19937_64 with one independently seeded stream per entity category, so
// adding machines does not perturb the job draws of the same seed.
class StreamRng {
 public:
  StreamRng(uint64_t seed, uint32_t stream) {
    std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32), stream};
    engine_.seed(seq);
  }

  // discrete uniform on [lo, hi], inclusive
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t range = uint64_t(hi - lo) + 1;
    if (range == 0) return lo + int64_t(engine_());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + int64_t(draw % range);
  }

  // continuous uniform on [0, 1) with 53-bit precision
  double uniform_real() {
    return double(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + uniform_real() * (hi - lo);
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  static const char* algorithm() { return "mt19937_64/streams-v1"; }

 private:
  std::mt19937_64 engine_;
};

// `count` sorted integers in [lo, hi] with pairwise gaps >= gap, uniform
// over all valid tuples via the compaction bijection.
std::vector<int64_t> spread_starts(int count, int64_t lo, int64_t hi,
                                   int64_t gap, StreamRng& rng);

}  // namespace osp

#endif
