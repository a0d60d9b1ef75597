#include "crossvar/random.hpp"

#include <cmath>

namespace crossvar::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t step : path) {
        state = out ^ (step * 0xD6E8FEB86659FD93ULL);
        out = splitmix64(state);
    }
    return out;
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(seed) {}

double NormalStream::uniform() {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

double NormalStream::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

void NormalStream::fill(std::span<double> out, double mean, double sd) {
    for (double& v : out) v = mean + sd * (*this)();
}

double NormalStream::chi_square(int df) {
    double sum = 0.0;
    for (int i = 0; i < df; ++i) {
        const double z = (*this)();
        sum += z * z;
    }
    return sum;
}

NormalStream make_normal_generator(std::uint64_t seed, std::uint64_t stream) {
    return NormalStream(derive_seed(seed, {stream}));
}

}  // namespace crossvar::rng
