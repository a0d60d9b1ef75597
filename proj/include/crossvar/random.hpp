#pragma once

// Seedable normal deviates with independent per-replicate substreams.
//
// A substream is addressed by (seed, path...) where path is e.g. a study row
// and replicate index. The address is hashed with SplitMix64 into the seed of
// a std::mt19937_64 engine, whose output is fully specified by the standard.
// Uniforms take the top 53 bits, offset by half a unit so they lie strictly in
// (0, 1); normals use the Marsaglia polar method. The stream is therefore
// identical across platforms and independent of thread scheduling.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace crossvar::rng {

/// One SplitMix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the substream at `path` below `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed);

    /// Uniform deviate in (0, 1).
    double uniform();
    /// Standard normal deviate.
    double operator()();
    /// Fills out with N(mean, sd^2) deviates.
    void fill(std::span<double> out, double mean, double sd);
    /// Chi-square deviate with an integer number of degrees of freedom.
    double chi_square(int df);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Stream for replicate `stream` of a study seeded with `seed`.
NormalStream make_normal_generator(std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace crossvar::rng
