#include "cramsim/rng.hpp"

#include <cmath>

#include "cramsim/constants.hpp"

namespace cramsim {

namespace {

constexpr uint32_t kW32A = 0x9E3779B9u;
constexpr uint32_t kW32B = 0xBB67AE85u;
constexpr uint32_t kM4x32A = 0xD2511F53u;
constexpr uint32_t kM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(uint32_t a, uint32_t b, uint32_t& lo, uint32_t& hi) {
  const uint64_t p = static_cast<uint64_t>(a) * b;
  lo = static_cast<uint32_t>(p);
  hi = static_cast<uint32_t>(p >> 32);
}

}  // namespace

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                      std::array<uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kM4x32B, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW32A;
    key[1] += kW32B;
  }
  return ctr;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      stream_{static_cast<uint32_t>(stream_id), static_cast<uint32_t>(stream_id >> 32)} {}

void RngStream::refill_() {
  block_ = philox4x32_10({static_cast<uint32_t>(position_),
                          static_cast<uint32_t>(position_ >> 32), stream_[0], stream_[1]},
                         key_);
  ++position_;
  block_pos_ = 0;
}

uint32_t RngStream::next_u32() {
  if (block_pos_ == 4) refill_();
  return block_[block_pos_++];
}

double RngStream::uniform() {
  const uint64_t lo = next_u32();
  const uint64_t hi = next_u32();
  const uint64_t bits = (hi << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]: keeps log() finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * consts::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

}  // namespace cramsim
