#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <utility>

namespace gcrop {

// Deterministic pseudo-random stream built on the splitmix64 mixer.
// All randomness in the library flows through this class so that a fixed
// seed reproduces bit-identical results on every platform; the standard
// <random> distributions are implementation-defined and therefore unused.
//
// Streams are forkable: fork(id) derives an independent child stream from
// the current state without advancing the parent. Each unit of work
// (image, batch, sweep cell) owns its own fork.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    // Uniform over the inclusive integer range {lo, ..., hi}. Rejection
    // sampling keeps the draw free of modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        if (span == 0) return static_cast<std::int64_t>(next_u64());
        const std::uint64_t limit = span * (UINT64_MAX / span);
        std::uint64_t r;
        do { r = next_u64(); } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    // Standard normal pair via the Box-Muller transform. Consumes exactly
    // two uniforms per call.
    std::pair<double, double> normal_pair() noexcept {
        double u1 = uniform();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double normal() noexcept { return normal_pair().first; }

    // Child stream keyed by id; does not advance this stream. Distinct ids
    // give statistically independent children.
    RngStream fork(std::uint64_t id) const noexcept {
        return RngStream(mix(state_ ^ mix(id + 0x632BE59BD9B4E019ull)));
    }

    RngStream fork(std::uint64_t a, std::uint64_t b) const noexcept {
        return fork(a).fork(b);
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace gcrop
