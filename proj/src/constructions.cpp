#include "pue/constructions.hpp"

#include "pue/combinatorics.hpp"

#include <string>
#include <utility>

namespace pue {

FullSupportVector::FullSupportVector(FieldPtr field, std::vector<Symbol> symbols)
    : field_(std::move(field)), symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!field_->contains(symbols_[i].code)) throw ParameterError("symbol code " + std::to_string(symbols_[i].code) + " not in field");
        if (symbols_[i].is_zero()) throw NotFullSupport("vector entry " + std::to_string(i + 1) + " is zero");
    }
}

FullSupportVector FullSupportVector::from_codes(FieldPtr field, const std::vector<unsigned>& codes) {
    std::vector<Symbol> s;
    s.reserve(codes.size());
    for (unsigned c : codes) {
        if (!field->contains(c)) throw ParameterError("symbol code " + std::to_string(c) + " not in field");
        s.emplace_back(c);
    }
    return FullSupportVector(std::move(field), std::move(s));
}

FullSupportVector FullSupportVector::all_ones(FieldPtr field, std::size_t length) {
    return FullSupportVector(std::move(field), std::vector<Symbol>(length, Symbol{1}));
}

std::vector<FullSupportVector> all_full_support_vectors(const FieldPtr& field, std::size_t length) {
    const unsigned base = field->q() - 1;
    const std::uint64_t total = checked_power(base, length, kDefaultBudget);
    std::vector<FullSupportVector> out;
    out.reserve(total);
    std::vector<Symbol> v(length, Symbol{1});
    for (std::uint64_t i = 0; i < total; ++i) {
        out.emplace_back(field, v);
        for (std::size_t d = 0; d < length; ++d) {
            if (v[d].code < base) {
                v[d] = Symbol{v[d].code + 1u};
                break;
            }
            v[d] = Symbol{1};
        }
    }
    return out;
}

LinearCode build_C(std::size_t n, std::size_t k, const FieldPtr& field) {
    if (k < 1 || k > n) throw ParameterError("C_{n,k} needs 1 <= k <= n");
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) g(i, i) = field->one();
    return LinearCode(GeneratorMatrix(std::move(g)));
}

LinearCode build_D(std::size_t n, std::size_t k, const FullSupportVector& v) {
    if (k < 1 || n <= k) throw ParameterError("D_{n,k,v} needs 1 <= k < n");
    if (v.size() != n - k) throw ParameterError("D_{n,k,v} needs |v| = n - k");
    const FieldPtr& field = v.field_ptr();
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) g(i, i) = field->one();
    for (std::size_t j = 0; j < n - k; ++j) g(0, k + j) = v.symbols()[j];
    return LinearCode(GeneratorMatrix(std::move(g)));
}

LinearCode build_E(std::size_t n, std::size_t k, const FullSupportVector& v) {
    if (k < 1 || n < k + 1) throw ParameterError("E_{n,k,v} needs k >= 1 and n >= k + 1");
    if (v.size() != k) throw ParameterError("E_{n,k,v} needs |v| = k");
    const FieldPtr& field = v.field_ptr();
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = field->one();
        g(i, k) = v.symbols()[i];
    }
    return LinearCode(GeneratorMatrix(std::move(g)));
}

WeightDistribution weights_D_closed(std::size_t n, std::size_t k, unsigned q) {
    if (k < 1 || n <= k || q < 2) throw ParameterError("weights of D_{n,k,v} need 1 <= k < n");
    std::vector<Int128> poly(n + 1, 0);
    for (std::size_t i = 0; i + 1 <= k; ++i) {
        const Int128 c = checked_mul(binomial(k - 1, i), int_pow(q - 1, i));
        poly[i] = checked_add(poly[i], c);
        poly[i + n - k + 1] = checked_add(poly[i + n - k + 1], checked_mul(c, q - 1));
    }
    WeightDistribution w{q, n, k, std::vector<std::uint64_t>(n + 1)};
    for (std::size_t i = 0; i <= n; ++i) w.counts[i] = static_cast<std::uint64_t>(poly[i]);
    return w;
}

WeightDistribution weights_E_closed(std::size_t n, std::size_t k, unsigned q) {
    if (k < 1 || n < k + 1 || q < 2) throw ParameterError("weights of E_{n,k,v} need k >= 1 and n >= k + 1");
    WeightDistribution w{q, n, k, std::vector<std::uint64_t>(n + 1, 0)};
    for (std::size_t i = 0; i <= k + 1; ++i) {
        const Int128 sign = (i % 2) ? -1 : 1;
        const Int128 num = checked_mul(binomial(k + 1, i), checked_add(int_pow(q - 1, i), sign * (q - 1)));
        if (num % q != 0) throw NonIntegerResult("A_" + std::to_string(i) + " of E is not an integer");
        w.counts[i] = static_cast<std::uint64_t>(num / q);
    }
    return w;
}

std::int64_t n_j_count(unsigned q, std::size_t j) {
    if (j < 1 || q < 2) throw ParameterError("n_j needs j >= 1 and q >= 2");
    const Int128 sign = (j % 2) ? -1 : 1;
    const Int128 num = checked_add(int_pow(q - 1, j), sign * (q - 1));
    if (num % q != 0) throw NonIntegerResult("n_j is not an integer");
    return static_cast<std::int64_t>(num / q);
}

std::int64_t n_j_count(const GaloisField& field, std::size_t j, std::span<const Symbol> t) {
    if (t.size() != j) throw ParameterError("ratio sequence length must equal j");
    for (Symbol s : t)
        if (!field.contains(s.code) || s.is_zero()) throw ParameterError("ratios must be nonzero field elements");
    return n_j_count(field.q(), j);
}

std::uint64_t partial_sum_E(std::size_t n, std::size_t k, unsigned q, std::size_t j) {
    if (k < 1 || n < k + 1) throw ParameterError("E_{n,k,v} needs k >= 1 and n >= k + 1");
    if (j < 2 || j > n) throw ParameterError("partial sum index needs 2 <= j <= n");
    Int128 sum = 0;
    for (std::size_t i = 1; i + 1 <= j; ++i) sum = checked_add(sum, checked_mul(binomial(k, i), int_pow(q - 1, i)));
    sum = checked_add(sum, checked_mul(binomial(k, j), n_j_count(q, j)));
    return static_cast<std::uint64_t>(sum);
}

}  // namespace pue
