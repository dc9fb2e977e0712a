#include "pue/galois_field.hpp"

#include "pue/errors.hpp"

#include <string>

namespace pue {
namespace {

using Poly = std::vector<unsigned>;  // constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients in F_p.
Poly poly_mod(Poly a, const Poly& divisor, unsigned p) {
    trim(a);
    const std::size_t dd = divisor.size() - 1;
    while (a.size() > dd) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * divisor[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

Poly digits(unsigned code, unsigned p, unsigned m) {
    Poly d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = code % p;
        code /= p;
    }
    trim(d);
    return d;
}

unsigned encode(const Poly& d, unsigned p) {
    unsigned code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

unsigned ipow(unsigned b, unsigned e) {
    unsigned r = 1;
    while (e--) r *= b;
    return r;
}

// Monic polynomial of degree `deg` whose lower coefficients, read constant
// term first, are the base-p digits of `rank` with c_0 most significant.
Poly monic_by_rank(unsigned rank, unsigned p, unsigned deg) {
    Poly a(deg + 1, 0);
    a[deg] = 1;
    for (unsigned i = deg; i-- > 0;) {
        a[i] = rank % p;
        rank /= p;
    }
    return a;
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        const unsigned count = ipow(p, d);
        for (unsigned r = 0; r < count; ++r) {
            if (poly_mod(f, monic_by_rank(r, p, d), p).empty()) return false;
        }
    }
    return true;
}

FieldPtr make_field(unsigned q) {
    if (q < 2 || q > kMaxFieldOrder) throw NotAPrimePower("field order " + std::to_string(q) + " outside [2, 64]");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    for (unsigned r = q; r > 1; r /= p) {
        if (r % p != 0) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
        ++m;
    }
    if (!is_prime(p)) throw NotAPrimePower(std::to_string(q) + " is not a prime power");

    std::shared_ptr<GaloisField> f(new GaloisField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;

    const unsigned candidates = ipow(p, m);
    for (unsigned r = 0; r < candidates; ++r) {
        Poly cand = monic_by_rank(r, p, m);
        if (is_irreducible(cand, p)) {
            f->modulus_ = cand;
            break;
        }
    }

    f->add_.resize(std::size_t{q} * q);
    f->mul_.resize(std::size_t{q} * q);
    f->neg_.resize(q);
    f->inv_.assign(q, 0);
    std::vector<Poly> elems(q);
    for (unsigned a = 0; a < q; ++a) elems[a] = digits(a, p, m);

    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            unsigned sum = 0;
            for (unsigned i = 0, ra = a, rb = b, scale = 1; i < m; ++i, ra /= p, rb /= p, scale *= p)
                sum += ((ra % p + rb % p) % p) * scale;
            f->add_[std::size_t{a} * q + b] = static_cast<std::uint8_t>(sum);
            const Poly prod = poly_mod(poly_mul(elems[a], elems[b], p), f->modulus_, p);
            f->mul_[std::size_t{a} * q + b] = static_cast<std::uint8_t>(encode(prod, p));
        }
    }
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            if (f->add_[std::size_t{a} * q + b] == 0) f->neg_[a] = static_cast<std::uint8_t>(b);
            if (f->mul_[std::size_t{a} * q + b] == 1) f->inv_[a] = static_cast<std::uint8_t>(b);
        }
    }
    return f;
}

Symbol GaloisField::inv(Symbol a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    return Symbol{inv_[a.code]};
}

Symbol GaloisField::pow(Symbol a, unsigned e) const noexcept {
    Symbol r = one();
    Symbol base = a;
    while (e) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Symbol> GaloisField::nonzero_elements() const {
    std::vector<Symbol> out;
    out.reserve(q_ - 1);
    for (unsigned c = 1; c < q_; ++c) out.emplace_back(c);
    return out;
}

}  // namespace pue
