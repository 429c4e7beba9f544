#pragma once

#include <cstdint>
#include <initializer_list>

namespace ssice {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stateless stream: the k-th draw is a hash of (key, k). Two streams with the
// same key produce the same draws regardless of what else ran in between.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::initializer_list<std::uint64_t> key) : key_(splitmix64(seed)) {
    for (auto k : key) key_ = splitmix64(key_ ^ splitmix64(k + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() { return splitmix64(key_ ^ splitmix64(counter_++)); }

  // Uniform on [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      auto x = next();
      if (x < limit) return x % bound;
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ssice
