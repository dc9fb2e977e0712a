#ifndef PUE_WEIGHT_ENUM_HPP
#define PUE_WEIGHT_ENUM_HPP

#include "pue/linear_code.hpp"

#include <cstdint>
#include <vector>

namespace pue {

/// A_0..A_n of an [n,k;q] code.
struct WeightDistribution {
    unsigned q = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint64_t> counts;

    /// A_0 = 1, sum = q^k, length n + 1.
    bool valid() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
WeightDistribution weight_distribution(const GeneratorMatrix& g, std::uint64_t budget = kDefaultBudget);

/// A_C(z) by Horner's rule.
double evaluate(const WeightDistribution& w, double z) noexcept;

/// Dual distribution via Krawtchouk coefficients in exact integer arithmetic.
/// Throws NonIntegerResult when the input is not a code's distribution.
WeightDistribution macwilliams(const WeightDistribution& w);

/// Krawtchouk polynomial K_j(i) for length n over F_q.
__int128 krawtchouk(std::size_t n, unsigned q, std::size_t j, std::size_t i);

/// S_j = A_1 + ... + A_j for j = 1..n.
std::vector<std::uint64_t> partial_sums(const WeightDistribution& w);

/// True iff every partial sum of b is at most that of a (so A_b(z) <= A_a(z) on [0,1]).
bool dominates(const WeightDistribution& a, const WeightDistribution& b);

}  // namespace pue

#endif  // PUE_WEIGHT_ENUM_HPP
