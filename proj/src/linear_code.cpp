#include "pue/linear_code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace pue {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > budget / base) {
            throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(exp) + " exceeds enumeration budget "
                                 + std::to_string(budget));
        }
        r *= base;
    }
    if (r > budget) throw BudgetExceeded("enumeration size exceeds budget " + std::to_string(budget));
    return r;
}

GeneratorMatrix::GeneratorMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() > m_.cols()) throw RankDeficient("generator has more rows than columns");
    const std::size_t r = rank(m_);
    if (r != m_.rows()) {
        throw RankDeficient("generator rank " + std::to_string(r) + " < k = " + std::to_string(m_.rows()));
    }
}

SystematicForm systematic_form(const GeneratorMatrix& g) {
    std::vector<std::size_t> pivots;
    Matrix reduced = rref(g.matrix(), &pivots);
    if (pivots.size() != g.k()) throw RankDeficient("rank < k");
    std::vector<std::size_t> perm = pivots;
    for (std::size_t c = 0; c < g.n(); ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) perm.push_back(c);
    Matrix out(g.field_ptr(), g.k(), g.n());
    for (std::size_t r = 0; r < g.k(); ++r)
        for (std::size_t j = 0; j < g.n(); ++j) out(r, j) = reduced(r, perm[j]);
    return {GeneratorMatrix(std::move(out)), std::move(perm)};
}

GeneratorMatrix permute_columns(const GeneratorMatrix& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.n()) throw DimensionMismatch("permutation length differs from n");
    Matrix out(g.field_ptr(), g.k(), g.n());
    for (std::size_t r = 0; r < g.k(); ++r)
        for (std::size_t j = 0; j < g.n(); ++j) out(r, j) = g.matrix()(r, perm[j]);
    return GeneratorMatrix(std::move(out));
}

namespace {

GeneratorMatrix dual_generator_of(const GeneratorMatrix& g) {
    const std::size_t n = g.n();
    const std::size_t k = g.k();
    const GaloisField& f = g.field();
    SystematicForm sys = systematic_form(g);
    // [I | Q]^perp = [-Q^T | I] in permuted coordinates.
    Matrix h(g.field_ptr(), n - k, n);
    for (std::size_t r = 0; r < n - k; ++r) {
        for (std::size_t i = 0; i < k; ++i) h(r, sys.permutation[i]) = f.neg(sys.matrix.matrix()(i, k + r));
        h(r, sys.permutation[k + r]) = f.one();
    }
    return GeneratorMatrix(std::move(h));
}

std::vector<std::size_t> support_of(const GeneratorMatrix& g) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < g.n(); ++j) {
        for (std::size_t r = 0; r < g.k(); ++r) {
            if (!g.matrix()(r, j).is_zero()) {
                s.push_back(j);
                break;
            }
        }
    }
    return s;
}

}  // namespace

LinearCode::LinearCode(GeneratorMatrix gen)
    : gen_(std::move(gen)), dual_(dual_generator_of(gen_)), support_(support_of(gen_)) {}

const std::vector<std::size_t>& support(const LinearCode& c) { return c.support(); }

bool has_full_support(const LinearCode& c) { return c.support().size() == c.n(); }

LinearCode dual(const LinearCode& c) { return LinearCode(c.dual_generator()); }

bool same_row_space(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.n() != b.n() || a.k() != b.k() || a.q() != b.q()) return false;
    return rref(a.matrix()) == rref(b.matrix());
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    std::size_t best = c.n() + 1;
    bool first = true;
    for_each_codeword(
        c.generator(),
        [&](std::span<const Symbol> w) {
            if (first) {
                first = false;
                return;
            }
            best = std::min(best, hamming_weight(w));
        },
        budget);
    return best;
}

std::vector<Codeword> enumerate_codewords(const LinearCode& c, std::uint64_t budget) {
    std::vector<Codeword> out;
    out.reserve(checked_power(c.q(), c.k(), budget));
    for_each_codeword(
        c.generator(),
        [&](std::span<const Symbol> w) {
            out.push_back({std::vector<Symbol>(w.begin(), w.end()), hamming_weight(w)});
        },
        budget);
    return out;
}

namespace {

// Per column: counts of codewords of each weight that are nonzero in that column.
// The multiset of these rows is invariant under monomial maps.
struct ColumnSignatures {
    std::vector<std::vector<std::uint64_t>> per_column;
    std::vector<std::uint64_t> weights;
};

ColumnSignatures signatures(const GeneratorMatrix& g, std::uint64_t budget) {
    ColumnSignatures s;
    s.per_column.assign(g.n(), std::vector<std::uint64_t>(g.n() + 1, 0));
    s.weights.assign(g.n() + 1, 0);
    for_each_codeword(
        g,
        [&](std::span<const Symbol> w) {
            const std::size_t wt = hamming_weight(w);
            ++s.weights[wt];
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!w[j].is_zero()) ++s.per_column[j][wt];
        },
        budget);
    return s;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(const LinearCode& a, const LinearCode& b, bool allow_scaling, std::uint64_t budget)
        : a_(a.generator()), h_(b.dual_generator()), f_(a.field()), allow_scaling_(allow_scaling),
          sig_a_(signatures(a.generator(), budget)), sig_b_(signatures(b.generator(), budget)),
          used_(a.n(), false), image_(a.n(), 0), scale_(a.n(), f_.one()) {}

    bool run() {
        if (sig_a_.weights != sig_b_.weights) return false;
        auto sa = sig_a_.per_column;
        auto sb = sig_b_.per_column;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
        return assign(0);
    }

private:
    bool assign(std::size_t j) {
        if (j == a_.n()) return try_scalings(0);
        for (std::size_t t = 0; t < a_.n(); ++t) {
            if (used_[t] || sig_a_.per_column[j] != sig_b_.per_column[t]) continue;
            used_[t] = true;
            image_[j] = t;
            if (assign(j + 1)) return true;
            used_[t] = false;
        }
        return false;
    }

    bool try_scalings(std::size_t j) {
        if (j == a_.n()) return maps_into_b();
        if (!allow_scaling_) return try_scalings(a_.n());
        for (unsigned c = 1; c < f_.q(); ++c) {
            scale_[j] = Symbol{c};
            if (try_scalings(j + 1)) return true;
        }
        scale_[j] = f_.one();
        return false;
    }

    // Row space of the mapped generator lies in b; equal dimensions make it equality.
    bool maps_into_b() const {
        for (std::size_t r = 0; r < a_.k(); ++r) {
            for (std::size_t h = 0; h < h_.k(); ++h) {
                Symbol acc = f_.zero();
                for (std::size_t j = 0; j < a_.n(); ++j)
                    acc = f_.add(acc, f_.mul(f_.mul(scale_[j], a_.matrix()(r, j)), h_.matrix()(h, image_[j])));
                if (!acc.is_zero()) return false;
            }
        }
        return true;
    }

    const GeneratorMatrix& a_;
    const GeneratorMatrix& h_;
    const GaloisField& f_;
    bool allow_scaling_;
    ColumnSignatures sig_a_;
    ColumnSignatures sig_b_;
    std::vector<bool> used_;
    std::vector<std::size_t> image_;
    std::vector<Symbol> scale_;
};

bool equivalent(const LinearCode& a, const LinearCode& b, bool allow_scaling, std::uint64_t budget) {
    if (a.n() != b.n() || a.q() != b.q()) throw DimensionMismatch("equivalence needs equal n and q");
    if (a.k() != b.k()) return false;
    std::uint64_t space = 1;
    for (std::uint64_t i = 2; i <= a.n(); ++i) {
        if (space > budget / i) throw BudgetExceeded("n! exceeds equivalence search budget");
        space *= i;
    }
    if (allow_scaling) {
        for (std::size_t i = 0; i < a.n(); ++i) {
            if (space > budget / (a.q() - 1)) throw BudgetExceeded("n! (q-1)^n exceeds equivalence search budget");
            space *= a.q() - 1;
        }
    }
    if (space > budget) throw BudgetExceeded("equivalence search space exceeds budget");
    return EquivalenceSearch(a, b, allow_scaling, budget).run();
}

}  // namespace

bool monomially_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t budget) {
    return equivalent(a, b, true, budget);
}

bool permutation_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t budget) {
    return equivalent(a, b, false, budget);
}

std::string to_string(const GeneratorMatrix& g) {
    std::ostringstream os;
    for (std::size_t r = 0; r < g.k(); ++r) {
        if (r) os << ';';
        for (std::size_t j = 0; j < g.n(); ++j) {
            if (j) os << ' ';
            os << unsigned{g.matrix()(r, j).code};
        }
    }
    return os.str();
}

}  // namespace pue
