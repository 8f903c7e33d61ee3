#pragma once

#include <cstdint>

namespace sechmoments {

// Counter-based splittable generator: output(i) = mix64(base + i * golden),
// the SplitMix64 sequence for a base derived from (seed, stream_id) through
// two distinct finalizers. Distinct stream_ids give statistically independent
// streams; the sequence for a given (seed, stream_id) is identical on every
// platform. Cheap to copy; skip() is O(1).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  // Uniform on the open interval (0,1): (v + 0.5) * 2^-53 with v in [0, 2^53).
  double next_open01();

  void skip(std::uint64_t count) { counter_ += count; }
  RngStream split(std::uint64_t new_stream_id) const {
    return RngStream(seed_, new_stream_id);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace sechmoments
