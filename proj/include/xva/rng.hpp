#pragma once

#include <cstdint>

namespace xva {

// splitmix64 finalizer: bijective 64-bit mixer with strong avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

// Independent draw domains. Default times and exposure paths must never share
// random numbers, so each consumer hashes its own stream tag into the seed.
enum class RngStream : std::uint64_t {
    DefaultTimes = 1,
    Exposure = 2,
};

// Deterministic function of (seed, stream, path): the same path always sees
// the same state no matter how work is split across workers or calls.
constexpr std::uint64_t path_seed(std::uint64_t seed, RngStream stream,
                                  std::uint64_t path) noexcept {
    const std::uint64_t h = mix64(seed + kGoldenGamma * (static_cast<std::uint64_t>(stream) + 1));
    return mix64(h + kGoldenGamma * (path + 1));
}

// Per-path splitmix64 sequence. A handful of draws per path come from states
// separated by the hashed (seed, stream, path) triple.
class PathRng {
  public:
    PathRng(std::uint64_t seed, RngStream stream, std::uint64_t path) noexcept
        : state_(path_seed(seed, stream, path)) {}

    std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    // Uniform on the open interval (0,1): the half-ulp offset keeps normal
    // inversion finite on every draw.
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

}  // namespace xva
