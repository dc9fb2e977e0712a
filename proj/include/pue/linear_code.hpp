#ifndef PUE_LINEAR_CODE_HPP
#define PUE_LINEAR_CODE_HPP

#include "pue/errors.hpp"
#include "pue/matrix.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace pue {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// base^exp, throwing BudgetExceeded as soon as it passes `budget`.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget);

/// k x n generator of full row rank. k = 0 stands for the zero code.
class GeneratorMatrix {
public:
    /// Throws RankDeficient unless rank(m) == m.rows().
    explicit GeneratorMatrix(Matrix m);

    const Matrix& matrix() const noexcept { return m_; }
    const GaloisField& field() const noexcept { return m_.field(); }
    const FieldPtr& field_ptr() const noexcept { return m_.field_ptr(); }
    std::size_t n() const noexcept { return m_.cols(); }
    std::size_t k() const noexcept { return m_.rows(); }
    unsigned q() const noexcept { return m_.field().q(); }
    std::span<const Symbol> row(std::size_t r) const noexcept { return m_.row(r); }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    Matrix m_;
};

struct Codeword {
    std::vector<Symbol> symbols;
    std::size_t weight = 0;
};

/// An [n,k;q] code with its support and a dual generator precomputed.
class LinearCode {
public:
    explicit LinearCode(GeneratorMatrix gen);

    const GeneratorMatrix& generator() const noexcept { return gen_; }
    const GeneratorMatrix& dual_generator() const noexcept { return dual_; }
    const GaloisField& field() const noexcept { return gen_.field(); }
    const FieldPtr& field_ptr() const noexcept { return gen_.field_ptr(); }
    std::size_t n() const noexcept { return gen_.n(); }
    std::size_t k() const noexcept { return gen_.k(); }
    unsigned q() const noexcept { return gen_.q(); }
    /// 0-based positions, ascending.
    const std::vector<std::size_t>& support() const noexcept { return support_; }

private:
    GeneratorMatrix gen_;
    GeneratorMatrix dual_;
    std::vector<std::size_t> support_;
};

struct SystematicForm {
    /// [I_k | Q]; column j of this matrix is column permutation[j] of the input (after row operations).
    GeneratorMatrix matrix;
    std::vector<std::size_t> permutation;
};

SystematicForm systematic_form(const GeneratorMatrix& g);

/// Column j of the result is column perm[j] of g.
GeneratorMatrix permute_columns(const GeneratorMatrix& g, std::span<const std::size_t> perm);

const std::vector<std::size_t>& support(const LinearCode& c);
bool has_full_support(const LinearCode& c);
LinearCode dual(const LinearCode& c);

/// True iff both generators span the same row space.
bool same_row_space(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Minimum nonzero weight by exhaustive enumeration; n + 1 for the zero code.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Visits xG for every message x in lexicographic order with x_1 varying fastest.
/// `fn` receives the codeword symbols; the span is only valid during the call.
template <typename Fn>
void for_each_codeword(const GeneratorMatrix& g, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    const std::uint64_t total = checked_power(g.q(), g.k(), budget);
    const GaloisField& f = g.field();
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    const unsigned q = g.q();
    // step[c]: element code c -> c+1 (mod q) as a field difference.
    std::vector<Symbol> step(q);
    for (unsigned c = 0; c < q; ++c) step[c] = f.sub(Symbol{(c + 1) % q}, Symbol{c});
    std::vector<Symbol> word(n);
    std::vector<unsigned> msg(k, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        fn(std::span<const Symbol>(word));
        for (std::size_t i = 0; i < k; ++i) {
            const auto r = g.row(i);
            const Symbol d = step[msg[i]];
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(d, r[j]));
            if (++msg[i] < q) break;
            msg[i] = 0;
        }
    }
}

std::vector<Codeword> enumerate_codewords(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Column permutation + nonzero column scaling equivalence; brute force over
/// signature-compatible permutations. Requires n! (q-1)^n <= budget.
bool monomially_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t budget = kDefaultBudget);

/// Column permutation only.
bool permutation_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t budget = kDefaultBudget);

std::string to_string(const GeneratorMatrix& g);

}  // namespace pue

#endif  // PUE_LINEAR_CODE_HPP
