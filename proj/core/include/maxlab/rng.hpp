#ifndef MAXLAB_RNG_HPP
#define MAXLAB_RNG_HPP

#include <cstdint>

namespace maxlab {

/// Counter-based generator: value(i) is a pure function of (seed, i), so any
/// worker can sample any index without shared state. The mixing function is
/// the splitmix64 finalizer applied to seed ^ (golden-ratio stride * counter).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  /// Sequential convenience view: each call consumes one counter value.
  double next_uniform() { return uniform(next_++); }
  double next_uniform(double lo, double hi) { return uniform(next_++, lo, hi); }
  std::uint64_t next_bits() { return bits(next_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t next_ = 0;
};

}  // namespace maxlab

#endif
