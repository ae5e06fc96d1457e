#include "constkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace constkit {

namespace {
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
} // namespace

Philox4x32::Block Philox4x32::generate(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
        const Block next = {
            std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
            std::uint32_t(p1),
            std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
            std::uint32_t(p0),
        };
        ctr = next;
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

RngStream::RngStream(std::uint64_t stream_id, std::uint64_t counter_prefix) {
    key_ = {std::uint32_t(stream_id), std::uint32_t(stream_id >> 32)};
    counter_ = {0, 0, std::uint32_t(counter_prefix), std::uint32_t(counter_prefix >> 32)};
}

void RngStream::refill() {
    buffer_ = Philox4x32::generate(counter_, key_);
    buffer_pos_ = 0;
    // 64-bit block counter in words 0..1; words 2..3 identify the stream
    if (++counter_[0] == 0) ++counter_[1];
}

std::uint32_t RngStream::next_u32() {
    if (buffer_pos_ >= 4) refill();
    return buffer_[buffer_pos_++];
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double RngStream::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    // 53-bit uniform is plenty for the index ranges used here (<= 2^32)
    return std::uint64_t(uniform() * double(n)) % n;
}

void RngStream::normal_pair(double& z0, double& z1) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(theta);
    z1 = r * std::sin(theta);
}

double RngStream::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    double z0, z1;
    normal_pair(z0, z1);
    cached_normal_ = z1;
    have_cached_normal_ = true;
    return z0;
}

RngStream derive_stream(std::uint64_t master_seed, std::span<const std::uint64_t> labels) {
    std::uint64_t s = splitmix64(master_seed ^ 0x243F6A8885A308D3ull);
    for (std::uint64_t lab : labels) s = splitmix64(s ^ splitmix64(lab));
    const std::uint64_t stream_id = splitmix64(s ^ 0x452821E638D01377ull);
    const std::uint64_t counter_prefix = splitmix64(s ^ 0xC0AC29B7C97C50DDull);
    return RngStream(stream_id, counter_prefix);
}

RngStream derive_stream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> labels) {
    return derive_stream(master_seed, std::span<const std::uint64_t>(labels.begin(), labels.size()));
}

} // namespace constkit
