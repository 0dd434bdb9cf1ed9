#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "branchroots/branch.hpp"

namespace branchroots {

// Deterministic corpus description: the same spec always yields the same
// branches, byte for byte, on every platform.
struct CorpusSpec {
    std::uint64_t seed = 0;
    int count = 0;
    std::int64_t max_n = 8;
    std::int64_t max_exponent = 24;
    int max_h = 3;
};

// Deterministic pseudo-random source. Draws go through rejection sampling on
// the raw engine output, so results do not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
    bool chance(int num, int den) { return uniform(1, den) <= num; }
    Rat small_rat(bool allow_zero = false);

private:
    std::mt19937_64 eng_;
};

// Primitive parametrizations with the gcd chain of the support built first,
// so every requested h up to max_h actually occurs.
std::vector<BranchParam> gen_corpus(const CorpusSpec& spec);

// Products of 2..max_factors distinct branch polynomials; constructively
// reducible inputs for the irreducibility test. Total y-degree is capped to
// keep the exact resultants inside the test tractable.
std::vector<BiPoly> gen_products(const CorpusSpec& spec, int max_factors = 3,
                                 std::int64_t max_total_deg = 12);

}  // namespace branchroots
