#include "qfp/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace qfp {
namespace {

std::uint32_t inv_mod_small(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "non-invertible leading coefficient");
    return std::uint32_t(t < 0 ? t + p : t);
}

SparsePoly monic(const SparsePoly& f) {
    if (f.is_zero()) return f;
    std::uint32_t lc = std::uint32_t(f.leading_term().coeff.get_ui());
    if (lc == 1) return f;
    return f.mul_scalar(inv_mod_small(lc, f.domain().p));
}

SparsePoly spoly(const SparsePoly& f, const SparsePoly& g) {
    const auto& lf = f.leading_term();
    const auto& lg = g.leading_term();
    Monomial l = mono_lcm(lf.mono, lg.mono);
    // both inputs are monic
    return f.mul_term(mono_div(l, lf.mono), 1).sub(g.mul_term(mono_div(l, lg.mono), 1));
}

struct Pair {
    std::size_t i, j;
    std::uint32_t sugar;
    Monomial lcm;
};

}  // namespace

IdealBasis make_ideal(std::vector<SparsePoly> gens) {
    IdealBasis b;
    std::erase_if(gens, [](const SparsePoly& g) { return g.is_zero(); });
    if (!gens.empty()) {
        b.order = gens.front().order();
        for (const auto& g : gens) {
            require(!g.domain().is_integers(), "ideal generators must live over GF(p)");
            require(g.same_ring(gens.front()), "ideal generators in mismatched rings");
        }
    }
    b.gens = std::move(gens);
    return b;
}

SparsePoly groebner_normal_form(const SparsePoly& f, const IdealBasis& basis) {
    require(basis.is_groebner, "normal form needs a completed Groebner basis");
    if (f.is_zero()) return f;
    require(f.order() == basis.order, "monomial order mismatch between element and ideal");
    for (const auto& g : basis.gens) require(f.same_ring(g), "element/ideal ring mismatch");

    SparsePoly rem = SparsePoly::zero(f.arity(), f.domain(), f.order());
    SparsePoly h = f;
    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        bool reduced = false;
        for (const auto& g : basis.gens) {
            const auto& lg = g.leading_term();
            if (!mono_divides(lg.mono, lt.mono)) continue;
            h = h.sub(g.mul_term(mono_div(lt.mono, lg.mono), lt.coeff));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem.add(SparsePoly::from_terms(f.arity(), f.domain(),
                                                 {{lt.mono, lt.coeff}}, f.order()));
            h = h.sub(SparsePoly::from_terms(f.arity(), f.domain(),
                                             {{lt.mono, lt.coeff}}, f.order()));
        }
    }
    return rem;
}

IdealBasis buchberger(const IdealBasis& input) {
    IdealBasis out;
    out.order = input.order;
    if (input.gens.empty()) {
        out.is_groebner = true;
        return out;
    }

    std::vector<SparsePoly> basis;
    std::vector<std::uint32_t> sugar;  // total degree bookkeeping per generator
    for (const auto& g : input.gens) {
        if (g.is_zero()) continue;
        basis.push_back(monic(g));
        sugar.push_back(g.degree());
    }

    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& mi = basis[i].leading_term().mono;
            const Monomial& mj = basis[j].leading_term().mono;
            if (mono_is_coprime(mi, mj)) continue;  // Buchberger's first criterion
            Monomial l = mono_lcm(mi, mj);
            std::uint32_t s = std::max(sugar[i] + total_degree(mono_div(l, mi)),
                                       sugar[j] + total_degree(mono_div(l, mj)));
            pairs.push_back({i, j, s, std::move(l)});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    IdealBasis work;
    work.order = out.order;
    work.is_groebner = true;  // division below only needs the current basis
    while (!pairs.empty()) {
        auto best = std::min_element(
            pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                int c = mono_cmp(a.lcm, b.lcm, out.order);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
        Pair p = *best;
        pairs.erase(best);

        work.gens = basis;
        SparsePoly s = spoly(basis[p.i], basis[p.j]);
        SparsePoly r = groebner_normal_form(s, work);
        if (r.is_zero()) continue;
        basis.push_back(monic(r));
        sugar.push_back(std::max(p.sugar, r.degree()));
        push_pairs(basis.size() - 1);
    }

    // interreduce: drop generators whose lead is divisible by another lead,
    // then fully reduce each survivor against the others
    std::vector<SparsePoly> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!mono_divides(basis[j].leading_term().mono, basis[i].leading_term().mono))
                continue;
            if (basis[j].leading_term().mono == basis[i].leading_term().mono && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        IdealBasis rest;
        rest.order = out.order;
        rest.is_groebner = true;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) rest.gens.push_back(reduced[j]);
        reduced[i] = monic(groebner_normal_form(reduced[i], rest));
    }
    std::erase_if(reduced, [](const SparsePoly& g) { return g.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const SparsePoly& a, const SparsePoly& b) {
        return mono_cmp(a.leading_term().mono, b.leading_term().mono, out.order) < 0;
    });

    out.gens = std::move(reduced);
    out.is_groebner = true;
    return out;
}

}  // namespace qfp
