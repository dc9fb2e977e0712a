// Brute-force references used only by tests. Nothing here calls the library's
// enumeration, dual construction or MacWilliams code.
#ifndef PUE_TESTS_ORACLES_HPP
#define PUE_TESTS_ORACLES_HPP

#include "pue/galois_field.hpp"
#include "pue/linear_code.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using pue::GaloisField;
using pue::Symbol;

inline std::vector<Symbol> decode(std::uint64_t index, unsigned q, std::size_t len) {
    std::vector<Symbol> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = Symbol{static_cast<unsigned>(index % q)};
        index /= q;
    }
    return v;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::size_t weight(const std::vector<Symbol>& v) {
    std::size_t w = 0;
    for (auto s : v) w += s.code != 0;
    return w;
}

/// xG computed directly, per message.
inline std::vector<Symbol> encode(const GaloisField& f, const pue::GeneratorMatrix& g, const std::vector<Symbol>& x) {
    std::vector<Symbol> c(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
        Symbol acc{0};
        for (std::size_t i = 0; i < g.k(); ++i) acc = f.add(acc, f.mul(x[i], g.matrix()(i, j)));
        c[j] = acc;
    }
    return c;
}

inline std::vector<std::uint64_t> weights_by_messages(const pue::GeneratorMatrix& g) {
    const GaloisField& f = g.field();
    std::vector<std::uint64_t> a(g.n() + 1, 0);
    for (std::uint64_t m = 0; m < ipow(f.q(), g.k()); ++m) ++a[weight(encode(f, g, decode(m, f.q(), g.k())))];
    return a;
}

/// Every vector of F_q^n orthogonal to all generator rows.
inline std::vector<std::vector<Symbol>> orthogonal_vectors(const pue::GeneratorMatrix& g) {
    const GaloisField& f = g.field();
    std::vector<std::vector<Symbol>> out;
    for (std::uint64_t m = 0; m < ipow(f.q(), g.n()); ++m) {
        auto v = decode(m, f.q(), g.n());
        bool ok = true;
        for (std::size_t r = 0; r < g.k() && ok; ++r) {
            Symbol acc{0};
            for (std::size_t j = 0; j < g.n(); ++j) acc = f.add(acc, f.mul(v[j], g.matrix()(r, j)));
            ok = acc.code == 0;
        }
        if (ok) out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<std::uint64_t> dual_weights_brute(const pue::GeneratorMatrix& g) {
    std::vector<std::uint64_t> a(g.n() + 1, 0);
    for (const auto& v : orthogonal_vectors(g)) ++a[weight(v)];
    return a;
}

/// Solutions of sum x_i t_i = 0 with every x_i nonzero.
inline std::int64_t n_j_brute(const GaloisField& f, const std::vector<Symbol>& t) {
    const std::size_t j = t.size();
    std::int64_t count = 0;
    for (std::uint64_t m = 0; m < ipow(f.q() - 1, j); ++m) {
        std::uint64_t r = m;
        Symbol acc{0};
        for (std::size_t i = 0; i < j; ++i) {
            acc = f.add(acc, f.mul(Symbol{static_cast<unsigned>(r % (f.q() - 1)) + 1u}, t[i]));
            r /= f.q() - 1;
        }
        count += acc.code == 0;
    }
    return count;
}

/// Uniformly random full-rank k x n generator.
inline pue::GeneratorMatrix random_generator(const pue::FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> sym(0, f->q() - 1);
    for (;;) {
        pue::Matrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Symbol{sym(rng)};
        if (pue::rank(m) == k) return pue::GeneratorMatrix(std::move(m));
    }
}

/// Coefficients of a product of polynomials with integer coefficients.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace oracle

#endif  // PUE_TESTS_ORACLES_HPP
