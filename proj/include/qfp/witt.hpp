#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "qfp/poly.hpp"

namespace qfp {

/// Universal coordinate polynomials of the length-n Witt ring for the prime
/// p. Sum/product tables have arity 2n (x-block then y-block); negation has
/// arity n. Coefficients are integers, or their mod-p reductions.
struct WittTable {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<SparsePoly> sum;
    std::vector<SparsePoly> prod;
    std::vector<SparsePoly> negation;
};

/// Integer table, generated once per (p, n) by ghost-component inversion with
/// exact division, then memoized. `length_cap_override` widens the default
/// length caps (n <= 4 for p in {2, 3}, n <= 3 for p = 5, n <= 2 otherwise).
const WittTable& witt_table(std::uint32_t p, std::uint32_t n,
                            std::uint32_t length_cap_override = 0);
/// The integer table with coefficients reduced into GF(p); memoized.
const WittTable& witt_table_modp(std::uint32_t p, std::uint32_t n,
                                 std::uint32_t length_cap_override = 0);

/// Ghost polynomial w_m = sum_{i<=m} p^i Z_i^(p^(m-i)) in an arity-`arity`
/// ring, reading coordinates Z_i at variable offset + i.
SparsePoly witt_ghost_poly(std::uint32_t p, std::uint32_t m, std::uint32_t arity,
                           std::uint32_t offset);

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Elem& a,
                                   const typename R::Elem& b, const mpz_class& z,
                                   std::uint64_t k) {
    { ring.add(a, b) } -> std::same_as<typename R::Elem>;
    { ring.mul(a, b) } -> std::same_as<typename R::Elem>;
    { ring.neg(a) } -> std::same_as<typename R::Elem>;
    { ring.zero() } -> std::same_as<typename R::Elem>;
    { ring.one() } -> std::same_as<typename R::Elem>;
    { ring.from_mpz(z) } -> std::same_as<typename R::Elem>;
    { ring.pow(a, k) } -> std::same_as<typename R::Elem>;
    { ring.equal(a, b) } -> std::convertible_to<bool>;
    { ring.characteristic() } -> std::convertible_to<std::uint32_t>;
};

/// The ring of integers as a Witt coefficient ring (the ghost-map oracle domain).
struct IntegerRing {
    using Elem = mpz_class;
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem zero() const { return mpz_class(0); }
    Elem one() const { return mpz_class(1); }
    Elem from_mpz(const mpz_class& z) const { return z; }
    Elem pow(const Elem& a, std::uint64_t k) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
        return r;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::uint32_t characteristic() const { return 0; }
};

/// Length-n coordinate tuple over a coefficient ring.
template <CoefficientRing R>
struct WittVector {
    const R* ring = nullptr;
    std::uint32_t p = 2;
    std::vector<typename R::Elem> coords;

    std::uint32_t length() const { return std::uint32_t(coords.size()); }
};

namespace detail {

template <CoefficientRing R>
typename R::Elem eval_poly(const R& ring, const SparsePoly& f,
                           std::span<const typename R::Elem> args) {
    std::vector<std::vector<typename R::Elem>> pows(args.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const typename R::Elem& {
        auto& pv = pows[v];
        if (pv.empty()) pv.push_back(ring.one());
        while (pv.size() <= e) pv.push_back(ring.mul(pv.back(), args[v]));
        return pv[e];
    };
    typename R::Elem acc = ring.zero();
    for (const auto& t : f.terms()) {
        typename R::Elem term = ring.from_mpz(t.coeff);
        for (std::size_t v = 0; v < args.size(); ++v)
            if (t.mono[v] != 0) term = ring.mul(term, power(v, t.mono[v]));
        acc = ring.add(acc, term);
    }
    return acc;
}

template <CoefficientRing R>
const WittTable& table_for(const WittVector<R>& x) {
    std::uint32_t c = x.ring->characteristic();
    if (c == 0) return witt_table(x.p, x.length());
    require(c == x.p, "coefficient characteristic does not match the Witt prime");
    return witt_table_modp(x.p, x.length());
}

template <CoefficientRing R>
void check_compatible(const WittVector<R>& x, const WittVector<R>& y) {
    require(x.ring == y.ring, "Witt vectors over different coefficient rings");
    require(x.p == y.p && x.length() == y.length(),
            "Witt vector length or prime mismatch");
}

}  // namespace detail

template <CoefficientRing R>
WittVector<R> make_witt(const R& ring, std::uint32_t p,
                        std::vector<typename R::Elem> coords) {
    require(!coords.empty(), "Witt vector needs positive length");
    return WittVector<R>{&ring, p, std::move(coords)};
}

template <CoefficientRing R>
WittVector<R> witt_zero(const R& ring, std::uint32_t p, std::uint32_t n) {
    return make_witt(ring, p, std::vector<typename R::Elem>(n, ring.zero()));
}

/// Teichmuller lift (r, 0, ..., 0); the multiplicative section.
template <CoefficientRing R>
WittVector<R> teichmuller(const R& ring, std::uint32_t p, std::uint32_t n,
                          const typename R::Elem& r) {
    auto w = witt_zero(ring, p, n);
    w.coords[0] = r;
    return w;
}

template <CoefficientRing R>
WittVector<R> witt_one(const R& ring, std::uint32_t p, std::uint32_t n) {
    return teichmuller(ring, p, n, ring.one());
}

template <CoefficientRing R>
bool witt_equal(const WittVector<R>& x, const WittVector<R>& y) {
    detail::check_compatible(x, y);
    for (std::uint32_t i = 0; i < x.length(); ++i)
        if (!x.ring->equal(x.coords[i], y.coords[i])) return false;
    return true;
}

template <CoefficientRing R>
WittVector<R> witt_add(const WittVector<R>& x, const WittVector<R>& y) {
    detail::check_compatible(x, y);
    const WittTable& t = detail::table_for(x);
    std::vector<typename R::Elem> args(x.coords);
    args.insert(args.end(), y.coords.begin(), y.coords.end());
    std::vector<typename R::Elem> out;
    out.reserve(x.length());
    for (std::uint32_t m = 0; m < x.length(); ++m)
        out.push_back(detail::eval_poly(*x.ring, t.sum[m], std::span(args)));
    return make_witt(*x.ring, x.p, std::move(out));
}

template <CoefficientRing R>
WittVector<R> witt_mul(const WittVector<R>& x, const WittVector<R>& y) {
    detail::check_compatible(x, y);
    const WittTable& t = detail::table_for(x);
    std::vector<typename R::Elem> args(x.coords);
    args.insert(args.end(), y.coords.begin(), y.coords.end());
    std::vector<typename R::Elem> out;
    out.reserve(x.length());
    for (std::uint32_t m = 0; m < x.length(); ++m)
        out.push_back(detail::eval_poly(*x.ring, t.prod[m], std::span(args)));
    return make_witt(*x.ring, x.p, std::move(out));
}

template <CoefficientRing R>
WittVector<R> witt_neg(const WittVector<R>& x) {
    const WittTable& t = detail::table_for(x);
    std::vector<typename R::Elem> out;
    out.reserve(x.length());
    for (std::uint32_t m = 0; m < x.length(); ++m)
        out.push_back(detail::eval_poly(*x.ring, t.negation[m], std::span(x.coords)));
    return make_witt(*x.ring, x.p, std::move(out));
}

template <CoefficientRing R>
WittVector<R> witt_sub(const WittVector<R>& x, const WittVector<R>& y) {
    return witt_add(x, witt_neg(y));
}

/// k * 1 in W_n, by binary doubling (distinct from the Teichmuller lift of k).
template <CoefficientRing R>
WittVector<R> witt_from_int(const R& ring, std::uint32_t p, std::uint32_t n, mpz_class k) {
    bool negate = k < 0;
    if (negate) k = -k;
    WittVector<R> acc = witt_zero(ring, p, n);
    WittVector<R> base = witt_one(ring, p, n);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = witt_add(acc, base);
        k >>= 1;
        if (k > 0) base = witt_add(base, base);
    }
    return negate ? witt_neg(acc) : acc;
}

/// Ghost components (w_0(x), ..., w_{n-1}(x)); only meaningful over
/// torsion-free coefficients, so restricted to characteristic zero.
template <CoefficientRing R>
std::vector<typename R::Elem> ghost_map(const WittVector<R>& x) {
    require(x.ring->characteristic() == 0, "ghost map needs characteristic-zero coefficients");
    std::vector<typename R::Elem> out;
    for (std::uint32_t m = 0; m < x.length(); ++m) {
        SparsePoly w = witt_ghost_poly(x.p, m, x.length(), 0);
        out.push_back(detail::eval_poly(*x.ring, w, std::span(x.coords)));
    }
    return out;
}

/// Witt Frobenius: coordinatewise p-th powers (the functorial image of the
/// ring Frobenius; not the map x -> x^p of the Witt ring itself).
template <CoefficientRing R>
WittVector<R> witt_frobenius(const WittVector<R>& x) {
    require(x.ring->characteristic() == x.p, "Witt Frobenius needs characteristic-p coefficients");
    std::vector<typename R::Elem> out;
    out.reserve(x.length());
    for (const auto& a : x.coords) out.push_back(x.ring->pow(a, x.p));
    return make_witt(*x.ring, x.p, std::move(out));
}

/// Shift (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-1}) into length n+1.
template <CoefficientRing R>
WittVector<R> verschiebung(const WittVector<R>& x) {
    std::vector<typename R::Elem> out;
    out.reserve(x.length() + 1);
    out.push_back(x.ring->zero());
    out.insert(out.end(), x.coords.begin(), x.coords.end());
    return make_witt(*x.ring, x.p, std::move(out));
}

/// Truncated shift W_n -> W_n (drops the overflowing coordinate).
template <CoefficientRing R>
WittVector<R> verschiebung_trunc(const WittVector<R>& x) {
    std::vector<typename R::Elem> out;
    out.reserve(x.length());
    out.push_back(x.ring->zero());
    out.insert(out.end(), x.coords.begin(), x.coords.end() - 1);
    return make_witt(*x.ring, x.p, std::move(out));
}

/// Restriction W_n -> W_{n-1}: drop the last coordinate (a ring map).
template <CoefficientRing R>
WittVector<R> witt_restrict(const WittVector<R>& x) {
    require(x.length() >= 2, "restriction needs length at least 2");
    std::vector<typename R::Elem> out(x.coords.begin(), x.coords.end() - 1);
    return make_witt(*x.ring, x.p, std::move(out));
}

/// p * x, computed as the truncated Verschiebung of the Frobenius; equals
/// F(V(x)) and the table product with (0, 1, 0, ...).
template <CoefficientRing R>
WittVector<R> witt_times_p(const WittVector<R>& x) {
    return verschiebung_trunc(witt_frobenius(x));
}

/// x * V^{n-1}([r]): lands in the kernel of the iterated restriction, with
/// last coordinate x_0^(p^(n-1)) * r.
template <CoefficientRing R>
WittVector<R> ker_restriction_action(const WittVector<R>& x, const typename R::Elem& r) {
    const std::uint32_t n = x.length();
    WittVector<R> shifted = witt_zero(*x.ring, x.p, n);
    shifted.coords[n - 1] = r;
    WittVector<R> prod = witt_mul(x, shifted);
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        require(x.ring->equal(prod.coords[i], x.ring->zero()),
                "kernel action left the restriction kernel");
    return prod;
}

}  // namespace qfp
