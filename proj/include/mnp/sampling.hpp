#pragma once

#include "mnp/autos.hpp"

#include <cstdint>
#include <random>

namespace mnp {

/// Seeded generator of random words, elements and maps. Draws only raw
/// mt19937_64 output, so a fixed seed gives the same samples on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    Word word(const GroupParams& params, int max_length, int max_exp = 2);
    Element element(const GroupParams& params, int max_length = 4);
    /// Product of commutators of random elements.
    Element derived_element(const GroupParams& params);
    GenInnerData gen_inner(const GroupParams& params, int max_pairs = 3, int max_lambda = 3);
    NestedGenInnerData nested(const GroupParams& params, int max_terms = 3, int max_tail = 3);
    /// a_i -> a_i * t_i with t_i in the derived subgroup.
    AutoSpec ia_spec(const GroupParams& params);

private:
    std::mt19937_64 rng_;
};

}  // namespace mnp
