#ifndef PUE_CONSTRUCTIONS_HPP
#define PUE_CONSTRUCTIONS_HPP

#include "pue/linear_code.hpp"
#include "pue/weight_enum.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pue {

/// Vector over F_q with no zero entry.
class FullSupportVector {
public:
    /// Throws NotFullSupport if some entry is zero, ParameterError if a code is outside the field.
    FullSupportVector(FieldPtr field, std::vector<Symbol> symbols);
    static FullSupportVector from_codes(FieldPtr field, const std::vector<unsigned>& codes);
    static FullSupportVector all_ones(FieldPtr field, std::size_t length);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

private:
    FieldPtr field_;
    std::vector<Symbol> symbols_;
};

/// Every full-support vector of the given length, in code order.
std::vector<FullSupportVector> all_full_support_vectors(const FieldPtr& field, std::size_t length);

/// C_{n,k}: generated by [I_k | 0].
LinearCode build_C(std::size_t n, std::size_t k, const FieldPtr& field);

/// D_{n,k,v}: [I_k | right block], v in the first row of the right block, zeros below. |v| = n - k.
LinearCode build_D(std::size_t n, std::size_t k, const FullSupportVector& v);

/// E_{n,k,v}: [I_k | v^T | 0_{k x (n-k-1)}]. |v| = k.
LinearCode build_E(std::size_t n, std::size_t k, const FullSupportVector& v);

/// Coefficients of (1+(q-1)z)^(k-1) (1+(q-1)z^(n-k+1)); requires 1 <= k < n.
WeightDistribution weights_D_closed(std::size_t n, std::size_t k, unsigned q);

/// A_i = (1/q) C(k+1,i){(q-1)^i + (q-1)(-1)^i} for i <= k+1; requires n >= k+1.
WeightDistribution weights_E_closed(std::size_t n, std::size_t k, unsigned q);

/// sum_{i=2..j} A_i(E_{n,k,v}) in closed form; 2 <= j <= n.
std::uint64_t partial_sum_E(std::size_t n, std::size_t k, unsigned q, std::size_t j);

/// (1/q){(q-1)^j + (-1)^j (q-1)}: solutions of x_1 t_1 + ... + x_j t_j = 0 with every x_i != 0.
std::int64_t n_j_count(unsigned q, std::size_t j);

/// As above, validating the ratio sequence t (length j, all entries nonzero in `field`).
std::int64_t n_j_count(const GaloisField& field, std::size_t j, std::span<const Symbol> t);

}  // namespace pue

#endif  // PUE_CONSTRUCTIONS_HPP
