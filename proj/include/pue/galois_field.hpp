#ifndef PUE_GALOIS_FIELD_HPP
#define PUE_GALOIS_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace pue {

/// Element of F_q. The base-p digits of `code` are the polynomial coefficients,
/// least significant digit = constant term.
struct Symbol {
    std::uint8_t code = 0;

    constexpr Symbol() = default;
    constexpr explicit Symbol(unsigned c) : code(static_cast<std::uint8_t>(c)) {}

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr unsigned kMaxFieldOrder = 64;

/// Table-driven finite field F_q, q = p^m <= 64. Immutable once built.
class GaloisField {
public:
    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    unsigned q() const noexcept { return q_; }

    /// Coefficients of the monic modulus, constant term first (size m+1).
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    Symbol zero() const noexcept { return Symbol{0}; }
    Symbol one() const noexcept { return Symbol{1}; }

    Symbol add(Symbol a, Symbol b) const noexcept { return Symbol{add_[index(a, b)]}; }
    Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }
    Symbol mul(Symbol a, Symbol b) const noexcept { return Symbol{mul_[index(a, b)]}; }
    Symbol neg(Symbol a) const noexcept { return Symbol{neg_[a.code]}; }
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, unsigned e) const noexcept;

    bool contains(unsigned code) const noexcept { return code < q_; }

    /// All nonzero elements in code order.
    std::vector<Symbol> nonzero_elements() const;

    friend std::shared_ptr<const GaloisField> make_field(unsigned q);

private:
    GaloisField() = default;
    std::size_t index(Symbol a, Symbol b) const noexcept { return std::size_t{a.code} * q_ + b.code; }

    unsigned p_ = 0;
    unsigned m_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Builds F_q with the lexicographically smallest monic irreducible modulus,
/// comparing coefficient tuples constant term first. Throws NotAPrimePower.
FieldPtr make_field(unsigned q);

/// True iff the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

}  // namespace pue

#endif  // PUE_GALOIS_FIELD_HPP
