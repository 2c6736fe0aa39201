#include "scenopt/random.hpp"

namespace scenopt {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamKey = 0xD1B54A32D192ED03ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t stream) noexcept {
  const std::uint64_t key = mix64(seed + kGolden) ^ mix64(stream * kStreamKey + 1);
  return mix64(mix64(key + index * kGolden) ^ key);
}

double counter_uniform(std::uint64_t seed, std::uint64_t index,
                       std::uint64_t stream) noexcept {
  return static_cast<double>(counter_bits(seed, index, stream) >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  return mix64(mix64(seed) ^ (k * kGolden + 0x632BE59BD9B4E019ULL));
}

}  // namespace scenopt
