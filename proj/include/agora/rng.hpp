#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace agora {

// splitmix64 step; used both as a stream/seed deriver and to expand a master
// seed into engine state. Chosen because its output is fully specified by the
// recurrence, so derived seeds are identical on every platform.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-trial seed: mixes the master seed with a stream tag and a
// trial index so that independent trial engines never share state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) noexcept {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0x9e3779b97f4a7c15ULL);
    std::uint64_t b = splitmix64(s);
    s = b ^ (index * 0xd1342543de82ef95ULL);
    return splitmix64(s);
}

// Random source with fully specified draw algorithms. std::mt19937_64 is
// seeded per instance; uniform01 and the integer draws avoid the standard
// distribution templates, whose outputs vary across library implementations.
class trial_rng {
public:
    explicit trial_rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // 53-bit mantissa uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform over {0, ..., n - 1} by masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    // Uniform over {lo, ..., hi} inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace agora
