// Deterministic seeded randomness.  All random choices in the library
// flow from one explicit 64-bit seed; no global state.  Bounded draws
// avoid std::uniform_int_distribution, whose output is not pinned by the
// standard, so identical seeds give identical runs on every platform.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "findim/fp.hpp"

namespace findim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), n > 0; rejection keeps it unbiased
    std::uint64_t below(std::uint64_t n) {
        check(n > 0, "Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    fp::Elt field_elt(fp::Elt p) { return (fp::Elt)below(p); }

    fp::Mat matrix(fp::Elt p, std::size_t r, std::size_t c) {
        fp::Mat m(p, r, c);
        for (auto& x : m.a) x = field_elt(p);
        return m;
    }

    std::vector<fp::Elt> vec(fp::Elt p, std::size_t n) {
        std::vector<fp::Elt> v(n);
        for (auto& x : v) x = field_elt(p);
        return v;
    }

    // independent child stream, reproducible from (parent seed, tag)
    Rng fork(std::uint64_t tag) { return Rng(splitmix64(next() ^ splitmix64(tag))); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace findim
