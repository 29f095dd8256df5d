#include <algorithm>

#include "qfp/poly.hpp"

namespace qfp {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on small values; requires gcd(a, p) = 1
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "non-invertible residue");
    return std::uint32_t(t < 0 ? t + p : t);
}

/// Scale a nonzero GF(p) polynomial so its leading coefficient is 1.
SparsePoly make_monic(const SparsePoly& f) {
    if (f.is_zero()) return f;
    std::uint32_t p = f.domain().p;
    std::uint32_t lc = std::uint32_t(f.leading_term().coeff.get_ui());
    if (lc == 1) return f;
    return f.mul_scalar(inv_mod(lc, p));
}

/// Terms of f whose exponent in `var` equals e, with that exponent removed.
SparsePoly coeff_in_var(const SparsePoly& f, std::uint32_t var, std::uint32_t e) {
    std::vector<SparsePoly::Term> out;
    for (const auto& t : f.terms()) {
        if (t.mono[var] != e) continue;
        Monomial m = t.mono;
        m[var] = 0;
        out.push_back({std::move(m), t.coeff});
    }
    return SparsePoly::from_terms(f.arity(), f.domain(), std::move(out), f.order());
}

SparsePoly gcd_rec(const SparsePoly& f, const SparsePoly& g);

/// Content of f viewed as a univariate polynomial in `var`.
SparsePoly content_in_var(const SparsePoly& f, std::uint32_t var) {
    SparsePoly c = SparsePoly::zero(f.arity(), f.domain(), f.order());
    std::uint32_t d = f.degree_in(var);
    for (std::uint32_t e = 0; e <= d; ++e) {
        SparsePoly ce = coeff_in_var(f, var, e);
        if (ce.is_zero()) continue;
        c = c.is_zero() ? ce : gcd_rec(c, ce);
        if (c.is_constant()) break;
    }
    return make_monic(c);
}

SparsePoly pseudo_rem(SparsePoly a, const SparsePoly& b, std::uint32_t var) {
    std::uint32_t db = b.degree_in(var);
    SparsePoly lb = coeff_in_var(b, var, db);
    while (!a.is_zero()) {
        std::uint32_t da = a.degree_in(var);
        if (da < db) break;
        SparsePoly la = coeff_in_var(a, var, da);
        SparsePoly shift = SparsePoly::variable(a.arity(), a.domain(), var,
                                                std::uint16_t(da - db), a.order());
        a = a.mul(lb).sub(la.mul(shift).mul(b));
    }
    return a;
}

SparsePoly gcd_rec(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    if (f.is_constant() || g.is_constant())
        return SparsePoly::constant(f.arity(), f.domain(), 1, f.order());

    std::uint32_t var = 0;
    for (std::uint32_t v = f.arity(); v-- > 0;) {
        if (f.degree_in(v) > 0 || g.degree_in(v) > 0) {
            var = v;
            break;
        }
    }
    // gcd with a polynomial free of the main variable reduces to its content
    if (f.degree_in(var) == 0) return gcd_rec(f, content_in_var(g, var));
    if (g.degree_in(var) == 0) return gcd_rec(g, content_in_var(f, var));

    SparsePoly cf = content_in_var(f, var);
    SparsePoly cg = content_in_var(g, var);
    auto fp = try_divide_exact(f, cf);
    auto gp = try_divide_exact(g, cg);
    require(fp && gp, "content must divide");
    SparsePoly cont = gcd_rec(cf, cg);

    SparsePoly a = *fp, b = *gp;
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(var) > 0) {
        SparsePoly r = pseudo_rem(a, b, var);
        if (!r.is_zero()) {
            SparsePoly cr = content_in_var(r, var);
            auto rp = try_divide_exact(r, cr);
            require(rp.has_value(), "content must divide");
            r = *rp;
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!b.is_zero())  // primitive parts became coprime
        return cont;
    return make_monic(cont.mul(a));
}

}  // namespace

std::optional<SparsePoly> try_divide_exact(const SparsePoly& f, const SparsePoly& g) {
    require(f.same_ring(g), "polynomial arity or domain mismatch");
    require(!g.domain().is_integers(), "exact polynomial division implemented over GF(p)");
    require(!g.is_zero(), "division by zero polynomial");
    std::uint32_t p = g.domain().p;
    const auto& lg = g.leading_term();
    mpz_class lg_inv(inv_mod(std::uint32_t(lg.coeff.get_ui()), p));
    SparsePoly r = f;
    SparsePoly q = SparsePoly::zero(f.arity(), f.domain(), f.order());
    while (!r.is_zero()) {
        const auto& lr = r.leading_term();
        if (!mono_divides(lg.mono, lr.mono)) return std::nullopt;
        Monomial m = mono_div(lr.mono, lg.mono);
        mpz_class c = lr.coeff * lg_inv;
        q = q.add(SparsePoly::from_terms(f.arity(), f.domain(), {{m, c}}, f.order()));
        r = r.sub(g.mul_term(m, c));
    }
    return q;
}

SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g) {
    require(f.same_ring(g), "polynomial arity or domain mismatch");
    require(!f.domain().is_integers(), "gcd implemented over GF(p)");
    return gcd_rec(f, g);
}

std::optional<SparsePoly> pth_root(const SparsePoly& f) {
    require(!f.domain().is_integers(), "p-th root needs GF(p) coefficients");
    std::uint32_t p = f.domain().p;
    std::vector<SparsePoly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        for (auto& e : m) {
            if (e % p != 0) return std::nullopt;
            e = std::uint16_t(e / p);
        }
        // coefficients of the prime field are fixed by c -> c^p
        out.push_back({std::move(m), t.coeff});
    }
    return SparsePoly::from_terms(f.arity(), f.domain(), std::move(out), f.order());
}

SquarefreeVerdict squarefree_test(const SparsePoly& f) {
    require(!f.is_zero(), "squarefree test of zero polynomial");
    require(!f.domain().is_integers(), "squarefree test over GF(p)");
    if (f.is_constant()) return {true, {}};

    std::vector<SparsePoly> partials;
    bool any_nonzero = false;
    for (std::uint32_t v = 0; v < f.arity(); ++v) {
        SparsePoly d = derivative(f, v);
        if (!d.is_zero()) any_nonzero = true;
        partials.push_back(std::move(d));
    }

    if (!any_nonzero) {
        auto root = pth_root(f);
        require(root.has_value(), "vanishing differential without p-th root");
        return {false, make_monic(*root)};
    }

    SparsePoly common = f;
    for (const auto& d : partials) {
        if (d.is_zero()) continue;
        common = poly_gcd(common, d);
        if (common.is_constant()) return {true, {}};
    }

    // A repeated factor exists; extract a verified square divisor.
    auto cofactor = try_divide_exact(f, common);
    require(cofactor.has_value(), "gcd must divide");
    SparsePoly witness = poly_gcd(common, *cofactor);
    if (witness.is_constant()) {
        SquarefreeVerdict inner = squarefree_test(common);
        require(!inner.squarefree, "repeated factor extraction failed");
        witness = inner.witness;
    }
    require(try_divide_exact(f, witness.mul(witness)).has_value(),
            "squarefree witness does not divide");
    return {false, make_monic(witness)};
}

}  // namespace qfp
