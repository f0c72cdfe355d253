#ifndef NBRW_RNG_HPP
#define NBRW_RNG_HPP

#include <cstdint>
#include <random>

namespace nbrw {

// All randomness in the library flows through this generator.
//
// Streams are derived from a single user seed: stream i is an
// std::mt19937_64 seeded with splitmix64(seed + golden * (i + 1)).
// Bounded draws use rejection sampling on the raw 64-bit output, so a
// given (seed, stream) produces the same sequence on every platform
// (std::uniform_int_distribution does not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(derive_seed(seed, stream)) {}

    static std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
    {
        return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    }

    // Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    // Uniform integer in [lo, hi].
    int between(int lo, int hi)
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <class Container>
    void shuffle(Container& c)
    {
        for (std::size_t i = c.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(c[i - 1], c[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace nbrw

#endif // NBRW_RNG_HPP
