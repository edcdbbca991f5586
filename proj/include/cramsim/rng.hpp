#pragma once

#include <array>
#include <cstdint>

namespace cramsim {

// Philox4x32-10 block function (Salmon et al., SC'11).
// counter words [0],[1]: position within the stream (little-endian 64-bit);
// counter words [2],[3]: stream identifier; key: the 64-bit seed.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter,
                                      std::array<uint32_t, 2> key);

// Deterministic 64-bit sub-seed derivation (splitmix64 over seed + index).
uint64_t derive_seed(uint64_t seed, uint64_t index);

// One independent random stream, addressed by (seed, stream_id).
// Streams with distinct ids never overlap; draws are reproducible and
// independent of any other stream's consumption.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream_id);

  uint32_t next_u32();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller; the spare deviate is cached.
  double normal();

 private:
  void refill_();

  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 2> stream_;
  uint64_t position_ = 0;
  std::array<uint32_t, 4> block_{};
  int block_pos_ = 4;  // forces refill on first draw
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace cramsim
