#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace branchroots {

// Membership with witness for the additive monoid generated by gens (all
// positive, any gcd): the lexicographically smallest coefficient vector c
// with sum c_i * gens_i = m, or nullopt.
std::optional<std::vector<std::int64_t>> represent(std::span<const std::int64_t> gens,
                                                   std::int64_t m);

bool monoid_contains(std::span<const std::int64_t> gens, std::int64_t m);

// Least c such that every integer >= c is generated; requires gcd 1.
// Computed by an Apery-set scan modulo gens[0].
std::int64_t conductor_of(std::span<const std::int64_t> gens);

// The value semigroup of a branch, held by its canonical generator sequence:
// each generator past the first is the least semigroup element outside the
// monoid spanned by its predecessors, the gcd chain strictly decreases to 1,
// and B_{k-1} * beta_k strictly increases.
class Semigroup {
public:
    explicit Semigroup(std::vector<std::int64_t> gens);

    const std::vector<std::int64_t>& gens() const { return gens_; }
    const std::vector<std::int64_t>& B() const { return B_; }
    const std::vector<std::int64_t>& nk() const { return nk_; }
    int h() const { return static_cast<int>(gens_.size()) - 1; }
    std::int64_t conductor() const { return conductor_; }

    std::optional<std::vector<std::int64_t>> contains(std::int64_t m) const;

    friend bool operator==(const Semigroup& a, const Semigroup& b) { return a.gens_ == b.gens_; }

private:
    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> B_;
    std::vector<std::int64_t> nk_;
    std::int64_t conductor_;
};

// Canonical generator sequence of the monoid spanned by the given values,
// with the first generator designated by the caller.
std::vector<std::int64_t> canonical_generators(const std::vector<std::int64_t>& values,
                                               std::int64_t beta0);

// B_{h-1} * beta_h < n^2, the degree-form inequality for a projective curve
// of degree n meeting its tangent only at the singular point. The embedding
// hypotheses are the caller's responsibility.
bool am_inequality(const Semigroup& s, std::int64_t n);

}  // namespace branchroots
