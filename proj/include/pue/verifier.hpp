#ifndef PUE_VERIFIER_HPP
#define PUE_VERIFIER_HPP

#include "pue/constructions.hpp"
#include "pue/linear_code.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pue {

struct Violation {
    std::uint64_t index = 0;  // systematic right-block index
    std::string generator;
    std::string route;        // "partial_sum", "z_grid" or "p_grid"
    double witness = 0.0;     // j, z or p
    double lhs = 0.0;
    double rhs = 0.0;
};

struct EqualityCase {
    std::uint64_t index = 0;
    std::string generator;
    bool monomial_equivalent = false;     // to some extremal code, column permutation + scaling
    bool permutation_equivalent = false;  // column permutation only
};

struct VerificationCertificate {
    int theorem = 0;
    unsigned q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t candidates = 0;        // right blocks scanned
    std::uint64_t codes_enumerated = 0;  // codes satisfying the hypothesis
    /// Codes breaking the bound itself (z-grid or p-grid witness).
    std::vector<Violation> violations;
    /// Minimum-distance check only: codes whose partial sums exceed those of E_{n,k,v} (witness j).
    /// These do not contradict A_C(z) <= f(z); the dominance is sufficient, not necessary.
    std::vector<Violation> proof_route_failures;
    std::vector<EqualityCase> equality_cases;
    /// Minimum-distance check: the partial-sum and z-grid routes flag the same codes.
    bool routes_agree = true;
    double elapsed_seconds = 0.0;

    bool passes() const noexcept { return violations.empty(); }
    /// No violation and every equality case monomially equivalent to the extremal family.
    bool certified() const noexcept;

    std::string summary() const;
    std::string to_text() const;
    /// Tab-separated key=value lines; excludes timing, so equal inputs give equal output.
    std::string to_lines() const;
};

struct VerifyOptions {
    unsigned workers = 1;
    std::uint64_t budget = kDefaultBudget;
    std::size_t grid_points = 101;
};

/// [I_k | Q] for the right block with the given index (entries row-major, first entry fastest).
GeneratorMatrix systematic_generator(const FieldPtr& field, std::size_t n, std::size_t k, std::uint64_t index);

/// q^(k(n-k)), throwing BudgetExceeded above `budget`.
std::uint64_t systematic_block_count(unsigned q, std::size_t n, std::size_t k, std::uint64_t budget = kDefaultBudget);

/// Calls `fn(index, code)` for each systematic code of minimum distance >= 2, in index order.
void for_each_min_dist2_code(unsigned q, std::size_t n, std::size_t k,
                             const std::function<void(std::uint64_t, const LinearCode&)>& fn,
                             std::uint64_t budget = kDefaultBudget);

std::vector<LinearCode> enumerate_min_dist2_codes(unsigned q, std::size_t n, std::size_t k,
                                                  std::uint64_t budget = kDefaultBudget);

/// A_C(z) <= f(z) for every [n,k,2;q] code, with equality cases classified against E_{n,k,v}.
VerificationCertificate verify_theorem4(unsigned q, std::size_t n, std::size_t k, const VerifyOptions& opts = {});

/// P_ue(C,p) <= full-support bound for every full-support code, equality cases against D_{n,k,v}.
VerificationCertificate verify_theorem2(unsigned q, std::size_t n, std::size_t k, const VerifyOptions& opts = {});

/// |{x : w(x) = j, xQ = 0}| for a k x r right block Q.
std::uint64_t count_S2(const Matrix& right_block, std::size_t j, std::uint64_t budget = kDefaultBudget);

/// |{x != 0 : w(x) <= j-1, w(x) + w(xQ) <= j}|.
std::uint64_t count_S1(const Matrix& right_block, std::size_t j, std::uint64_t budget = kDefaultBudget);

}  // namespace pue

#endif  // PUE_VERIFIER_HPP
