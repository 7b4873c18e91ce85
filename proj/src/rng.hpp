#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace swapsmith {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// derive an independent stream seed; used to fan a single user seed out to
// per-sample / per-worker generators without correlated streams
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

// thin wrapper so that all draws go through one portable code path
// (std::uniform_int_distribution is implementation-defined)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(split_seed(seed, 0)) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : gen_(split_seed(seed, stream)) {}

    std::uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1; unbiased via rejection
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace swapsmith
