#include "msulab/rng.hpp"

namespace msulab {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Murmur3 fmix64, a second independent bijection.
constexpr std::uint64_t fmix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xFF51AFD7ED558CCDULL;
  z ^= z >> 33;
  z *= 0xC4CEB9FE1A85EC53ULL;
  return z ^ (z >> 33);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t master_seed, std::uint64_t stream_id)
    : SeededRng(master_seed, stream_id, mix64(master_seed + kGolden),
                fmix64(mix64(stream_id ^ 0x5851F42D4C957F2DULL) + master_seed)) {}

SeededRng::SeededRng(std::uint64_t master, std::uint64_t stream, std::uint64_t k0,
                     std::uint64_t k1)
    : master_(master), stream_(stream), key0_(k0), key1_(k1) {}

SeededRng::result_type SeededRng::at(std::uint64_t index) const {
  // Two keyed bijective rounds over the counter.
  return fmix64(mix64(key0_ + (index + 1) * kGolden) ^ key1_);
}

std::uint64_t SeededRng::uniform_int(std::uint64_t n) {
  // Multiply-shift: bias is at most n / 2^64, far below Monte-Carlo noise.
  const u128 prod = static_cast<u128>((*this)()) * n;
  return static_cast<std::uint64_t>(prod >> 64);
}

double SeededRng::uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

SeededRng SeededRng::fork(std::uint64_t substream) const {
  const std::uint64_t k0 = mix64(key0_ ^ fmix64(substream + kGolden));
  const std::uint64_t k1 = fmix64(key1_ + mix64(substream ^ 0xD1B54A32D192ED03ULL));
  return SeededRng(master_, stream_, k0, k1);
}

}  // namespace msulab
