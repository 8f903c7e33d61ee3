#include "sechmoments/rng_stream.hpp"

namespace sechmoments {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Variant finalizer (Stafford mix13 constants differ from mix64's), so the
// stream_id enters through a function independent of the output path.
std::uint64_t mix64_variant(std::uint64_t z) {
  z = (z ^ (z >> 31)) * 0x7FB5D329728EA185ULL;
  z = (z ^ (z >> 27)) * 0x81DADEF4BC2DD44DULL;
  return z ^ (z >> 33);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  base_ = mix64(seed + kGolden) ^ mix64_variant(stream_id * 0xDA3E39CB94B95BDBULL + 1);
}

std::uint64_t RngStream::next_u64() {
  std::uint64_t v = mix64(base_ + counter_ * kGolden);
  counter_ += 1;
  return v;
}

double RngStream::next_open01() {
  std::uint64_t v = next_u64() >> 11;  // top 53 bits
  return (static_cast<double>(v) + 0.5) * 0x1.0p-53;
}

}  // namespace sechmoments
