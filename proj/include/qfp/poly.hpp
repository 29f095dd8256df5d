#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfp/monomial.hpp"

namespace qfp {

/// Coefficient domain of a polynomial: the integers (p == 0) or GF(p).
struct Domain {
    std::uint32_t p = 0;

    bool is_integers() const { return p == 0; }
    bool operator==(const Domain&) const = default;
};

inline Domain integers() { return Domain{0}; }
inline Domain gf(std::uint32_t p) { return Domain{p}; }

/// Exact sparse multivariate polynomial. Terms are kept in strictly
/// descending monomial order with no zero coefficients; over GF(p) the
/// coefficients are reduced into [0, p).
class SparsePoly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;
    };

    SparsePoly() = default;
    SparsePoly(std::uint32_t arity, Domain dom, MonomialOrder ord = {})
        : arity_(arity), dom_(dom), ord_(std::move(ord)) {}

    static SparsePoly zero(std::uint32_t arity, Domain dom, MonomialOrder ord = {});
    static SparsePoly constant(std::uint32_t arity, Domain dom, mpz_class c, MonomialOrder ord = {});
    static SparsePoly variable(std::uint32_t arity, Domain dom, std::uint32_t index,
                               std::uint16_t exp = 1, MonomialOrder ord = {});
    static SparsePoly from_terms(std::uint32_t arity, Domain dom, std::vector<Term> terms,
                                 MonomialOrder ord = {});

    std::uint32_t arity() const { return arity_; }
    const Domain& domain() const { return dom_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
    }
    std::uint32_t degree() const {  // total degree; 0 for the zero polynomial
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
        return d;
    }
    std::uint32_t degree_in(std::uint32_t var) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono[var]);
        return d;
    }
    bool is_homogeneous() const;

    const Term& leading_term() const {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.front();
    }

    /// Coefficient of an exact monomial (zero when absent).
    mpz_class coeff_of(const Monomial& m) const;

    bool same_ring(const SparsePoly& o) const {
        return arity_ == o.arity_ && dom_ == o.dom_ && ord_ == o.ord_;
    }
    bool equals(const SparsePoly& o) const;

    SparsePoly add(const SparsePoly& o) const;
    SparsePoly sub(const SparsePoly& o) const;
    SparsePoly neg() const;
    SparsePoly mul(const SparsePoly& o) const;
    SparsePoly mul_term(const Monomial& m, const mpz_class& c) const;
    SparsePoly mul_scalar(const mpz_class& c) const;
    SparsePoly pow(std::uint64_t k) const;

    /// Image under a coefficient-domain change Z -> GF(p) (or reduction check).
    SparsePoly reduced_mod(std::uint32_t p) const;
    /// Widen the exponent vectors to a larger arity (new variables at the end).
    SparsePoly extended_to_arity(std::uint32_t new_arity) const;

    std::string to_string(std::span<const std::string> var_names) const;

private:
    void normalize();  // sort desc, merge, drop zeros, reduce mod p
    static mpz_class reduce_coeff(const mpz_class& c, const Domain& d);

    std::uint32_t arity_ = 0;
    Domain dom_;
    MonomialOrder ord_;
    std::vector<Term> terms_;

    friend SparsePoly poly_from_map_desc(std::uint32_t, Domain, MonomialOrder,
                                         std::vector<SparsePoly::Term>&&);
};

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return a.add(b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a.sub(b); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return a.mul(b); }
inline SparsePoly operator-(const SparsePoly& a) { return a.neg(); }
inline bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.equals(b); }

/// Exact division of every coefficient by m; aborts (throws) on any
/// non-divisible coefficient rather than rounding.
SparsePoly exact_div_by_int(const SparsePoly& a, const mpz_class& m);

/// Formal partial derivative with respect to one variable.
SparsePoly derivative(const SparsePoly& f, std::uint32_t var);

/// Multivariate polynomial gcd over GF(p), monic-primitive normalized.
SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g);

/// Exact polynomial division test: returns f / g when g divides f.
std::optional<SparsePoly> try_divide_exact(const SparsePoly& f, const SparsePoly& g);

/// p-th root of a polynomial over the prime field GF(p): defined when every
/// exponent is divisible by p (coefficients are fixed by x -> x^p on GF(p)).
std::optional<SparsePoly> pth_root(const SparsePoly& f);

struct SquarefreeVerdict {
    bool squarefree = true;
    SparsePoly witness;  // g with g^2 | f when a repeated factor was found
};

/// Repeated-factor detection over GF(p): gcd with the partial derivatives,
/// with p-th-power extraction when all partials vanish. The returned witness
/// is always verified by exact division.
SquarefreeVerdict squarefree_test(const SparsePoly& f);

}  // namespace qfp
