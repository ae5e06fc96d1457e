#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace constkit {

// Philox4x32-10 counter-based generator (Salmon et al. formulation).
// Counter-based so that independent substreams are cheap to derive and the
// produced sequence is identical on every platform for a given key.
struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key);
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view bytes);

// Deterministic substream of Philox keyed by (master seed, label tuple).
// Same key -> identical draw sequence; distinct keys -> independent streams.
// Gaussian variates come from Box-Muller pairs in fixed order.
class RngStream {
public:
    RngStream() = default;
    RngStream(std::uint64_t stream_id, std::uint64_t counter_prefix);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer on [0, n); n >= 1.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal; consumes Box-Muller pairs, second variate cached.
    double normal();
    /// One full Box-Muller pair (cos first, sin second).
    void normal_pair(double& z0, double& z1);

private:
    Philox4x32::Key key_{};
    Philox4x32::Block counter_{};
    Philox4x32::Block buffer_{};
    int buffer_pos_ = 4; // empty
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;

    void refill();
};

RngStream derive_stream(std::uint64_t master_seed, std::span<const std::uint64_t> labels);
RngStream derive_stream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> labels);

} // namespace constkit
