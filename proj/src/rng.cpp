#include "sbl/rng.hpp"

#include <cmath>

namespace sbl {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

inline std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::array<std::uint64_t, 4> RngStream::block(const std::array<std::uint64_t, 4>& counter,
                                              std::uint64_t key0, std::uint64_t key1)
{
    std::array<std::uint64_t, 4> c = counter;
    std::uint64_t k0 = key0;
    std::uint64_t k1 = key1;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c[0], hi0, lo0);
        mulhilo(kPhiloxM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return c;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key0_(seed), key1_(stream_id)
{
}

void RngStream::refill()
{
    // 256-bit counter, incremented before use (first block has counter 1).
    for (int i = 0; i < 4; ++i) {
        if (++counter_[i] != 0) break;
    }
    buf_ = block(counter_, key0_, key1_);
    pos_ = 0;
}

std::uint64_t RngStream::next_u64()
{
    if (pos_ >= 4) refill();
    return buf_[pos_++];
}

double RngStream::next_uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian()
{
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_gaussian_ = v * f;
    has_cached_gaussian_ = true;
    return u * f;
}

void RngStream::fill_gaussian(std::span<double> out, double stddev)
{
    for (double& x : out) x = stddev * next_gaussian();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag)
{
    return splitmix64(splitmix64(seed ^ 0xA5A5A5A5A5A5A5A5ULL) + tag);
}

} // namespace sbl
