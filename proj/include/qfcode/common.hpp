#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qfcode {

/// Index of a field element within its level's canonical enumeration.
using Elem = std::uint32_t;

/// Thrown when a brute-force enumeration would exceed its step budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic RNG for property sampling. mt19937_64 output is fully
/// specified by the standard; bounds are applied by rejection so streams
/// are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) {
        // rejection sampling, bound > 0
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

  private:
    std::mt19937_64 eng_;
};

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace qfcode
