#include "pue/weight_enum.hpp"

#include "pue/combinatorics.hpp"

#include <string>

namespace pue {

bool WeightDistribution::valid() const {
    if (counts.size() != n + 1 || counts.empty() || counts[0] != 1 || q < 2 || k > n) return false;
    Int128 total = 0;
    for (std::uint64_t a : counts) total += a;
    return total == int_pow(q, k);
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, std::uint64_t budget) {
    WeightDistribution w{g.q(), g.n(), g.k(), std::vector<std::uint64_t>(g.n() + 1, 0)};
    for_each_codeword(g, [&](std::span<const Symbol> word) { ++w.counts[hamming_weight(word)]; }, budget);
    return w;
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget) {
    return weight_distribution(c.generator(), budget);
}

double evaluate(const WeightDistribution& w, double z) noexcept {
    double acc = 0.0;
    for (std::size_t i = w.counts.size(); i-- > 0;) acc = acc * z + static_cast<double>(w.counts[i]);
    return acc;
}

Int128 krawtchouk(std::size_t n, unsigned q, std::size_t j, std::size_t i) {
    Int128 sum = 0;
    for (std::size_t s = 0; s <= j; ++s) {
        Int128 term = checked_mul(checked_mul(binomial(i, s), binomial(n - i, j - s)), int_pow(q - 1, j - s));
        sum = checked_add(sum, (s % 2) ? -term : term);
    }
    return sum;
}

WeightDistribution macwilliams(const WeightDistribution& w) {
    if (w.counts.size() != w.n + 1 || w.k > w.n) throw DimensionMismatch("weight distribution shape mismatch");
    const Int128 size = int_pow(w.q, w.k);
    WeightDistribution out{w.q, w.n, w.n - w.k, std::vector<std::uint64_t>(w.n + 1, 0)};
    for (std::size_t j = 0; j <= w.n; ++j) {
        Int128 acc = 0;
        for (std::size_t i = 0; i <= w.n; ++i) {
            if (w.counts[i] == 0) continue;
            acc = checked_add(acc, checked_mul(static_cast<Int128>(w.counts[i]), krawtchouk(w.n, w.q, j, i)));
        }
        if (acc < 0 || acc % size != 0) {
            throw NonIntegerResult("MacWilliams coefficient B_" + std::to_string(j) + " is not a nonnegative integer");
        }
        out.counts[j] = static_cast<std::uint64_t>(acc / size);
    }
    if (!out.valid()) throw NonIntegerResult("MacWilliams transform produced an invalid distribution");
    return out;
}

std::vector<std::uint64_t> partial_sums(const WeightDistribution& w) {
    std::vector<std::uint64_t> s;
    s.reserve(w.n);
    std::uint64_t acc = 0;
    for (std::size_t j = 1; j <= w.n && j < w.counts.size(); ++j) {
        acc += w.counts[j];
        s.push_back(acc);
    }
    return s;
}

bool dominates(const WeightDistribution& a, const WeightDistribution& b) {
    if (a.q != b.q || a.n != b.n || a.k != b.k) throw DimensionMismatch("dominance needs equal (q, n, k)");
    const auto sa = partial_sums(a);
    const auto sb = partial_sums(b);
    for (std::size_t j = 0; j < sa.size(); ++j)
        if (sb[j] > sa[j]) return false;
    return true;
}

}  // namespace pue
