#include "pue/verifier.hpp"

#include "pue/ue_bounds.hpp"
#include "pue/weight_enum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace pue {

std::uint64_t systematic_block_count(unsigned q, std::size_t n, std::size_t k, std::uint64_t budget) {
    if (k < 1 || k > n) throw ParameterError("need 1 <= k <= n");
    return checked_power(q, k * (n - k), budget);
}

GeneratorMatrix systematic_generator(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t index) {
    const unsigned q = field->q();
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = field->one();
        for (std::size_t j = k; j < n; ++j) {
            g(i, j) = Symbol{static_cast<unsigned>(index % q)};
            index /= q;
        }
    }
    return GeneratorMatrix(std::move(g));
}

void for_each_min_dist2_code(unsigned q, std::size_t n, std::size_t k,
                             const std::function<void(std::uint64_t, const LinearCode&)>& fn, std::uint64_t budget) {
    const FieldPtr field = make_field(q);
    const std::uint64_t total = systematic_block_count(q, n, k, budget);
    checked_power(q, k, budget);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        GeneratorMatrix g = systematic_generator(field, n, k, idx);
        if (weight_distribution(g, budget).counts[1] != 0) continue;
        fn(idx, LinearCode(std::move(g)));
    }
}

std::vector<LinearCode> enumerate_min_dist2_codes(unsigned q, std::size_t n, std::size_t k, std::uint64_t budget) {
    std::vector<LinearCode> out;
    for_each_min_dist2_code(q, n, k, [&](std::uint64_t, const LinearCode& c) { out.push_back(c); }, budget);
    return out;
}

namespace {

constexpr double kTolerance = 1e-12;

bool exceeds(double lhs, double rhs) { return lhs > rhs + kTolerance * std::max(1.0, std::abs(rhs)); }

struct Partial {
    std::uint64_t codes = 0;
    std::vector<Violation> violations;
    std::vector<Violation> proof_route_failures;
    std::vector<EqualityCase> equality_cases;
    bool routes_agree = true;
};

// Inspects one systematic code and records its outcome into the worker's partial.
using CodeCheck = std::function<void(std::uint64_t, const GeneratorMatrix&, Partial&)>;

Partial scan_range(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t lo, std::uint64_t hi,
                   const CodeCheck& check) {
    Partial part;
    for (std::uint64_t idx = lo; idx < hi; ++idx) check(idx, systematic_generator(field, n, k, idx), part);
    return part;
}

void run_partitioned(VerificationCertificate& cert, const FieldPtr& field, const VerifyOptions& opts,
                     const CodeCheck& check) {
    const std::uint64_t total = cert.candidates;
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.workers, total));
    std::vector<Partial> parts(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] { parts[w] = scan_range(field, cert.n, cert.k, lo, hi, check); });
    }
    for (auto& t : pool) t.join();
    // Ranges are ascending, so concatenation keeps index order.
    for (auto& p : parts) {
        cert.codes_enumerated += p.codes;
        cert.routes_agree = cert.routes_agree && p.routes_agree;
        cert.violations.insert(cert.violations.end(), p.violations.begin(), p.violations.end());
        cert.proof_route_failures.insert(cert.proof_route_failures.end(), p.proof_route_failures.begin(),
                                         p.proof_route_failures.end());
        cert.equality_cases.insert(cert.equality_cases.end(), p.equality_cases.begin(), p.equality_cases.end());
    }
}

EqualityCase classify(std::uint64_t idx, const GeneratorMatrix& g, const std::vector<LinearCode>& extremal,
                      std::uint64_t budget) {
    EqualityCase eq{idx, to_string(g), false, false};
    const LinearCode code(g);
    for (const auto& e : extremal) {
        if (!eq.monomial_equivalent) eq.monomial_equivalent = monomially_equivalent(code, e, budget);
        if (!eq.permutation_equivalent) eq.permutation_equivalent = permutation_equivalent(code, e, budget);
        if (eq.monomial_equivalent && eq.permutation_equivalent) break;
    }
    return eq;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

bool VerificationCertificate::certified() const noexcept {
    if (!passes()) return false;
    return std::all_of(equality_cases.begin(), equality_cases.end(),
                       [](const EqualityCase& e) { return e.monomial_equivalent; });
}

std::string VerificationCertificate::summary() const {
    std::ostringstream os;
    os << "theorem " << theorem << " [" << n << ',' << k << ';' << q << "]: " << codes_enumerated
       << (codes_enumerated == 1 ? " code, " : " codes, ") << violations.size()
       << (violations.size() == 1 ? " violation, " : " violations, ") << equality_cases.size()
       << (equality_cases.size() == 1 ? " equality case" : " equality cases");
    return os.str();
}

std::string VerificationCertificate::to_text() const {
    const auto mono = std::count_if(equality_cases.begin(), equality_cases.end(),
                                    [](const EqualityCase& e) { return e.monomial_equivalent; });
    const auto perm = std::count_if(equality_cases.begin(), equality_cases.end(),
                                    [](const EqualityCase& e) { return e.permutation_equivalent; });
    std::ostringstream os;
    os << summary() << '\n';
    os << "candidates scanned: " << candidates << '\n';
    os << "equality cases monomially equivalent to extremal family: " << mono << '/' << equality_cases.size() << '\n';
    os << "equality cases permutation equivalent to extremal family: " << perm << '/' << equality_cases.size() << '\n';
    if (theorem == 4) {
        os << "partial-sum route failures: " << proof_route_failures.size() << '\n';
        os << "partial-sum and z-grid routes agree: " << (routes_agree ? "yes" : "no") << '\n';
    }
    for (const auto& v : violations) {
        os << "  violation [" << v.generator << "] route " << v.route << " at " << fmt(v.witness) << ": " << fmt(v.lhs)
           << " > " << fmt(v.rhs) << '\n';
    }
    for (const auto& v : proof_route_failures) {
        os << "  partial sum exceeds extremal [" << v.generator << "] at j = " << fmt(v.witness) << ": " << fmt(v.lhs)
           << " > " << fmt(v.rhs) << '\n';
    }
    for (const auto& e : equality_cases) {
        if (!e.monomial_equivalent) os << "  unclassified equality case [" << e.generator << "]\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed: %.3f s\n", elapsed_seconds);
    os << buf;
    os << "status: " << (certified() ? "CERTIFIED" : "FAILED") << '\n';
    return os.str();
}

std::string VerificationCertificate::to_lines() const {
    std::ostringstream os;
    os << "CERT\ttheorem=" << theorem << "\tq=" << q << "\tn=" << n << "\tk=" << k << "\tcandidates=" << candidates
       << "\tcodes=" << codes_enumerated << "\tviolations=" << violations.size()
       << "\tequality_cases=" << equality_cases.size() << "\tproof_route_failures=" << proof_route_failures.size()
       << "\troutes_agree=" << (routes_agree ? 1 : 0)
       << "\tstatus=" << (certified() ? "certified" : "failed") << '\n';
    for (const auto& v : violations) {
        os << "VIOLATION\tindex=" << v.index << "\troute=" << v.route << "\twitness=" << fmt(v.witness)
           << "\tlhs=" << fmt(v.lhs) << "\trhs=" << fmt(v.rhs) << "\tgenerator=" << v.generator << '\n';
    }
    for (const auto& v : proof_route_failures) {
        os << "PROOF_ROUTE\tindex=" << v.index << "\troute=" << v.route << "\twitness=" << fmt(v.witness)
           << "\tlhs=" << fmt(v.lhs) << "\trhs=" << fmt(v.rhs) << "\tgenerator=" << v.generator << '\n';
    }
    for (const auto& e : equality_cases) {
        os << "EQUALITY\tindex=" << e.index << "\tmonomial=" << (e.monomial_equivalent ? 1 : 0)
           << "\tpermutation=" << (e.permutation_equivalent ? 1 : 0) << "\tgenerator=" << e.generator << '\n';
    }
    return os.str();
}

VerificationCertificate verify_theorem4(unsigned q, std::size_t n, std::size_t k, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const FieldPtr field = make_field(q);
    VerificationCertificate cert;
    cert.theorem = 4;
    cert.q = q;
    cert.n = n;
    cert.k = k;
    cert.candidates = systematic_block_count(q, n, k, opts.budget);
    checked_power(q, k, opts.budget);

    if (k < n) {
        std::vector<std::uint64_t> bound_sums(n + 1, 0);
        for (std::size_t j = 2; j <= n; ++j) bound_sums[j] = partial_sum_E(n, k, q, j);
        const WeightDistribution extremal_w = weights_E_closed(n, k, q);
        const std::vector<double> grid = z_grid(opts.grid_points);
        std::vector<double> f_values;
        for (double z : grid) f_values.push_back(f_bound(k, q, z));
        std::vector<LinearCode> extremal;
        for (const auto& v : all_full_support_vectors(field, k)) extremal.push_back(build_E(n, k, v));

        run_partitioned(cert, field, opts, [&](std::uint64_t idx, const GeneratorMatrix& g, Partial& part) {
            const WeightDistribution w = weight_distribution(g, opts.budget);
            if (w.counts[1] != 0) return;
            ++part.codes;
            bool sum_fail = false;
            std::uint64_t s = 0;
            for (std::size_t j = 2; j <= n; ++j) {
                s += w.counts[j];
                if (s > bound_sums[j]) {
                    part.proof_route_failures.push_back({idx, to_string(g), "partial_sum", double(j), double(s), double(bound_sums[j])});
                    sum_fail = true;
                    break;
                }
            }
            bool grid_fail = false;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double lhs = evaluate(w, grid[i]);
                if (exceeds(lhs, f_values[i])) {
                    part.violations.push_back({idx, to_string(g), "z_grid", grid[i], lhs, f_values[i]});
                    grid_fail = true;
                    break;
                }
            }
            if (sum_fail != grid_fail) part.routes_agree = false;
            if (w == extremal_w) part.equality_cases.push_back(classify(idx, g, extremal, opts.budget));
        });
    }
    cert.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

VerificationCertificate verify_theorem2(unsigned q, std::size_t n, std::size_t k, const VerifyOptions& opts) {
    if (k < 1 || k >= n) throw ParameterError("full-support verification needs 1 <= k < n");
    const auto start = std::chrono::steady_clock::now();
    const FieldPtr field = make_field(q);
    VerificationCertificate cert;
    cert.theorem = 2;
    cert.q = q;
    cert.n = n;
    cert.k = k;
    cert.candidates = systematic_block_count(q, n, k, opts.budget);
    checked_power(q, k, opts.budget);

    const WeightDistribution extremal_w = weights_D_closed(n, k, q);
    const std::vector<double> grid = p_grid(q, opts.grid_points);
    std::vector<double> bound;
    for (double p : grid) bound.push_back(full_support_bound(n, k, q, p));
    std::vector<LinearCode> extremal;
    for (const auto& v : all_full_support_vectors(field, n - k)) extremal.push_back(build_D(n, k, v));

    run_partitioned(cert, field, opts, [&](std::uint64_t idx, const GeneratorMatrix& g, Partial& part) {
        for (std::size_t j = k; j < n; ++j) {
            bool nonzero = false;
            for (std::size_t r = 0; r < k && !nonzero; ++r) nonzero = !g.matrix()(r, j).is_zero();
            if (!nonzero) return;
        }
        ++part.codes;
        const WeightDistribution w = weight_distribution(g, opts.budget);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double lhs = p_ue(w, ChannelParameter(grid[i], q));
            if (exceeds(lhs, bound[i])) {
                part.violations.push_back({idx, to_string(g), "p_grid", grid[i], lhs, bound[i]});
                break;
            }
        }
        if (w == extremal_w) part.equality_cases.push_back(classify(idx, g, extremal, opts.budget));
    });
    cert.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

namespace {

template <typename Fn>
void for_each_message_product(const Matrix& qb, std::uint64_t budget, Fn&& fn) {
    const GaloisField& f = qb.field();
    const std::size_t k = qb.rows();
    const std::size_t r = qb.cols();
    const std::uint64_t total = checked_power(f.q(), k, budget);
    std::vector<unsigned> x(k, 0);
    std::vector<Symbol> xs(k);
    std::vector<Symbol> prod(r);
    for (std::uint64_t step = 0; step < total; ++step) {
        fn(std::span<const Symbol>(xs), std::span<const Symbol>(prod));
        for (std::size_t i = 0; i < k; ++i) {
            const Symbol d = f.sub(Symbol{(x[i] + 1) % f.q()}, Symbol{x[i]});
            for (std::size_t c = 0; c < r; ++c) prod[c] = f.add(prod[c], f.mul(d, qb(i, c)));
            if (++x[i] < f.q()) {
                xs[i] = Symbol{x[i]};
                break;
            }
            x[i] = 0;
            xs[i] = Symbol{0};
        }
    }
}

}  // namespace

std::uint64_t count_S2(const Matrix& right_block, std::size_t j, std::uint64_t budget) {
    std::uint64_t count = 0;
    for_each_message_product(right_block, budget, [&](std::span<const Symbol> x, std::span<const Symbol> xq) {
        if (hamming_weight(x) == j && hamming_weight(xq) == 0) ++count;
    });
    return count;
}

std::uint64_t count_S1(const Matrix& right_block, std::size_t j, std::uint64_t budget) {
    std::uint64_t count = 0;
    for_each_message_product(right_block, budget, [&](std::span<const Symbol> x, std::span<const Symbol> xq) {
        const std::size_t wx = hamming_weight(x);
        if (wx >= 1 && wx + 1 <= j && wx + hamming_weight(xq) <= j) ++count;
    });
    return count;
}

}  // namespace pue
