#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pue/constructions.hpp"
#include "pue/ue_bounds.hpp"

#include <cmath>

using namespace pue;

namespace {

GeneratorMatrix gen(unsigned q, const std::vector<std::vector<unsigned>>& rows) {
    return GeneratorMatrix(Matrix::from_codes(make_field(q), rows));
}

struct Params {
    unsigned q;
    std::size_t max_n;
    std::size_t max_k;
};

const Params kDesk[] = {{2, 7, 4}, {3, 5, 3}, {4, 4, 2}};

// Expands (1+(q-1)z)^(k-1) (1+(q-1)z^e) with plain integer polynomials.
std::vector<std::int64_t> d_polynomial(std::size_t k, unsigned q, std::size_t e) {
    std::vector<std::int64_t> p{1};
    for (std::size_t i = 0; i + 1 < k; ++i) p = oracle::poly_mul(p, {1, std::int64_t(q) - 1});
    std::vector<std::int64_t> tail(e + 1, 0);
    tail[0] = 1;
    tail[e] += std::int64_t(q) - 1;
    return oracle::poly_mul(p, tail);
}

}  // namespace

TEST_CASE("C_{n,k}") {
    auto f2 = make_field(2);
    CHECK(build_C(3, 2, f2).generator() == gen(2, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(build_C(3, 2, f2).support().size() == 2);
    const LinearCode full = build_C(2, 2, make_field(3));
    CHECK(weight_distribution(full).counts == std::vector<std::uint64_t>{1, 4, 4});
    CHECK_THROWS_AS(build_C(2, 3, f2), ParameterError);
    CHECK_THROWS_AS(build_C(2, 0, f2), ParameterError);
}

TEST_CASE("D_{n,k,v}") {
    auto f2 = make_field(2);
    const LinearCode d = build_D(3, 2, FullSupportVector::all_ones(f2, 1));
    CHECK(d.generator() == gen(2, {{1, 0, 1}, {0, 1, 0}}));
    CHECK(weight_distribution(d).counts == std::vector<std::uint64_t>{1, 1, 1, 1});
    const LinearCode d41 = build_D(4, 1, FullSupportVector::all_ones(f2, 3));
    CHECK(d41.generator() == gen(2, {{1, 1, 1, 1}}));
    CHECK(has_full_support(d41));
    CHECK_THROWS_AS(FullSupportVector::from_codes(f2, {1, 0}), NotFullSupport);
    CHECK_THROWS_AS(FullSupportVector::from_codes(f2, {1, 2}), ParameterError);
    CHECK_THROWS_AS(build_D(3, 2, FullSupportVector::all_ones(f2, 2)), ParameterError);
    CHECK_THROWS_AS(build_D(3, 3, FullSupportVector::all_ones(f2, 0)), ParameterError);
}

TEST_CASE("E_{n,k,v}") {
    auto f2 = make_field(2);
    const LinearCode e = build_E(3, 2, FullSupportVector::all_ones(f2, 2));
    CHECK(e.generator() == gen(2, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(weight_distribution(e).counts == std::vector<std::uint64_t>{1, 0, 3, 0});
    auto f3 = make_field(3);
    CHECK(build_E(4, 2, FullSupportVector::from_codes(f3, {1, 2})).generator() == gen(3, {{1, 0, 1, 0}, {0, 1, 2, 0}}));
    CHECK(min_distance(build_E(6, 3, FullSupportVector::from_codes(f3, {2, 1, 2}))) == 2);
    CHECK_THROWS_AS(build_E(2, 2, FullSupportVector::all_ones(f2, 2)), ParameterError);
    CHECK_THROWS_AS(build_E(4, 2, FullSupportVector::all_ones(f2, 3)), ParameterError);
}

TEST_CASE("closed-form weights, examples") {
    CHECK(weights_D_closed(3, 2, 2).counts == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(weights_D_closed(4, 2, 3).counts == std::vector<std::uint64_t>{1, 2, 0, 2, 4});
    CHECK_THROWS_AS(weights_D_closed(3, 3, 2), ParameterError);
    CHECK(weights_E_closed(3, 2, 2).counts == std::vector<std::uint64_t>{1, 0, 3, 0});
    CHECK(weights_E_closed(4, 2, 3).counts == std::vector<std::uint64_t>{1, 0, 6, 2, 0});
    CHECK_THROWS_AS(weights_E_closed(3, 3, 2), ParameterError);
    for (const auto& pr : kDesk)
        for (std::size_t n = 2; n <= pr.max_n; ++n)
            for (std::size_t k = 1; k < n && k <= pr.max_k; ++k) {
                CHECK(weights_E_closed(n, k, pr.q).counts[1] == 0);
                CHECK(weights_E_closed(n, k, pr.q).valid());
                CHECK(weights_D_closed(n, k, pr.q).valid());
            }
}

TEST_CASE("D weights use exponent n-k+1, not n-k-1") {
    auto f2 = make_field(2);
    auto f3 = make_field(3);
    for (auto [n, k, f] : {std::tuple{3, 2, f2}, std::tuple{5, 2, f2}, std::tuple{6, 3, f2}, std::tuple{4, 2, f3},
                           std::tuple{5, 2, f3}}) {
        const auto w = weight_distribution(build_D(n, k, FullSupportVector::all_ones(f, n - k)));
        const auto right = d_polynomial(k, f->q(), n - k + 1);
        const auto printed = d_polynomial(k, f->q(), n - k - 1);
        std::vector<std::int64_t> counts(w.counts.begin(), w.counts.end());
        CHECK(counts == right);
        auto padded = printed;
        padded.resize(counts.size(), 0);
        CHECK(counts != padded);
    }
}

TEST_CASE("closed forms match enumeration for every v at desk parameters") {
    for (const auto& pr : kDesk) {
        auto f = make_field(pr.q);
        for (std::size_t n = 2; n <= pr.max_n; ++n) {
            for (std::size_t k = 1; k < n && k <= pr.max_k; ++k) {
                CAPTURE(pr.q);
                CAPTURE(n);
                CAPTURE(k);
                const auto dw = weights_D_closed(n, k, pr.q);
                for (const auto& v : all_full_support_vectors(f, n - k)) {
                    const LinearCode d = build_D(n, k, v);
                    CHECK(has_full_support(d));
                    CHECK(weight_distribution(d) == dw);
                }
                const auto ew = weights_E_closed(n, k, pr.q);
                for (const auto& v : all_full_support_vectors(f, k)) CHECK(weight_distribution(build_E(n, k, v)) == ew);
                std::uint64_t cumulative = 0;
                for (std::size_t j = 2; j <= n; ++j) {
                    cumulative += ew.counts[j];
                    CHECK(partial_sum_E(n, k, pr.q, j) == cumulative);
                }
            }
        }
    }
}

TEST_CASE("partial_sum_E examples") {
    CHECK(partial_sum_E(3, 2, 2, 2) == 3);
    CHECK(partial_sum_E(4, 2, 3, 2) == 6);
    CHECK(partial_sum_E(5, 3, 3, 5) == 26);  // q^k - 1
    CHECK_THROWS_AS(partial_sum_E(4, 2, 3, 1), ParameterError);
    CHECK_THROWS_AS(partial_sum_E(4, 2, 3, 5), ParameterError);
}

TEST_CASE("n_j closed form") {
    auto f2 = make_field(2);
    auto f3 = make_field(3);
    const std::vector<Symbol> one{Symbol{1}};
    CHECK(n_j_count(*f2, 1, one) == 0);
    const std::vector<Symbol> ones2{Symbol{1}, Symbol{1}};
    CHECK(n_j_count(*f2, 2, ones2) == 1);
    CHECK(n_j_count(*f3, 2, ones2) == 2);
    CHECK(oracle::n_j_brute(*f3, ones2) == 2);
    const std::vector<Symbol> bad{Symbol{1}, Symbol{0}};
    CHECK_THROWS_AS(n_j_count(*f3, 2, bad), ParameterError);
    CHECK_THROWS_AS(n_j_count(*f3, 3, ones2), ParameterError);
    CHECK_THROWS_AS(n_j_count(3, 0), ParameterError);
}

TEST_CASE("n_j closed form equals brute force for q <= 5, j <= 7") {
    std::mt19937_64 rng(41);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto f = make_field(q);
        for (std::size_t j = 1; j <= 7; ++j) {
            for (int t = 0; t < 20; ++t) {
                std::vector<Symbol> ratios(j);
                for (auto& s : ratios) s = Symbol{1u + static_cast<unsigned>(rng() % (q - 1))};
                CHECK(n_j_count(*f, j, ratios) == oracle::n_j_brute(*f, ratios));
            }
            // recurrence n_{j-1} + n_j = (q-1)^(j-1)
            if (j >= 2) CHECK(n_j_count(q, j - 1) + n_j_count(q, j) == std::int64_t(oracle::ipow(q - 1, j - 1)));
        }
    }
}

TEST_CASE("E is the MacWilliams dual of D at the enumerator level") {
    for (const auto& pr : kDesk) {
        for (std::size_t n = 2; n <= pr.max_n; ++n) {
            for (std::size_t k = 1; k < n; ++k) {
                CHECK(macwilliams(weights_D_closed(n, n - k, pr.q)) == weights_E_closed(n, k, pr.q));
            }
        }
    }
}

TEST_CASE("D_{n,n-k,v} dual equals E_{n,k,-v} after moving the v-columns first") {
    for (const auto& pr : kDesk) {
        auto f = make_field(pr.q);
        for (std::size_t n = 2; n <= pr.max_n; ++n) {
            for (std::size_t k = 1; k < n; ++k) {
                for (const auto& v : all_full_support_vectors(f, k)) {
                    const LinearCode d = build_D(n, n - k, v);
                    // new column j <- old column perm[j]: D's right block, then its identity block
                    std::vector<std::size_t> perm;
                    for (std::size_t j = n - k; j < n; ++j) perm.push_back(j);
                    for (std::size_t j = 0; j < n - k; ++j) perm.push_back(j);
                    std::vector<Symbol> neg;
                    for (Symbol s : v.symbols()) neg.push_back(f->neg(s));
                    const LinearCode e = build_E(n, k, FullSupportVector(f, neg));
                    const GeneratorMatrix moved = permute_columns(d.generator(), perm);
                    for (std::size_t a = 0; a < moved.k(); ++a)
                        for (std::size_t b = 0; b < e.k(); ++b) CHECK(dot(*f, moved.row(a), e.generator().row(b)).is_zero());
                    CHECK(same_row_space(permute_columns(d.dual_generator(), perm), e.generator()));
                }
            }
        }
    }
}

TEST_CASE("E enumerator equals f on the z-grid") {
    for (const auto& pr : kDesk)
        for (std::size_t n = 2; n <= pr.max_n; ++n)
            for (std::size_t k = 1; k < n; ++k)
                for (double z : z_grid()) CHECK(std::abs(evaluate(weights_E_closed(n, k, pr.q), z) - f_bound(k, pr.q, z)) <= 1e-12);
}
