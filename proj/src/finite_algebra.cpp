#include "qfp/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qfp {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fixed irreducible polynomials used to realize GF(p^k).
const std::vector<std::int64_t>* field_min_poly(std::uint32_t p, std::uint32_t k) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::int64_t>>
        table = {
            {{2, 2}, {1, 1, 1}},        // u^2 + u + 1
            {{2, 3}, {1, 1, 0, 1}},     // u^3 + u + 1
            {{2, 4}, {1, 1, 0, 0, 1}},  // u^4 + u + 1
            {{3, 2}, {1, 0, 1}},        // u^2 + 1
            {{3, 3}, {1, 2, 0, 1}},     // u^3 + 2u + 1
            {{5, 2}, {1, 1, 1}},        // u^2 + u + 1
            {{5, 3}, {1, 1, 0, 1}},     // u^3 + u + 1
        };
    auto it = table.find({p, k});
    return it == table.end() ? nullptr : &it->second;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_presentation(std::uint32_t p,
                                               std::vector<std::string> var_names,
                                               std::vector<SparsePoly> relations,
                                               std::size_t dim_cap) {
    require(is_prime(p), "characteristic must be prime");
    require(dim_cap <= kMaxAlgebraDim, "dimension cap exceeds inline element storage");
    const std::uint32_t arity = std::uint32_t(var_names.size());
    for (const auto& r : relations) {
        require(r.arity() == arity, "relation arity mismatch");
        require(r.domain() == gf(p), "relations must live over GF(p)");
    }

    FiniteAlgebra A;
    A.p_ = p;
    A.var_names_ = std::move(var_names);
    A.relations_ = buchberger(make_ideal(std::move(relations)));
    require(std::none_of(A.relations_.gens.begin(), A.relations_.gens.end(),
                         [](const SparsePoly& g) { return g.is_constant(); }),
            "relations generate the unit ideal");

    // zero-dimensionality: every variable needs a pure-power leading monomial
    std::vector<std::uint32_t> bound(arity, 0);
    for (const auto& g : A.relations_.gens) {
        const Monomial& lm = g.leading_term().mono;
        std::uint32_t nz = 0, var = 0;
        for (std::uint32_t v = 0; v < arity; ++v)
            if (lm[v] != 0) {
                ++nz;
                var = v;
            }
        if (nz == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
    }
    for (std::uint32_t v = 0; v < arity; ++v)
        require(bound[v] != 0, "quotient is not finite-dimensional over GF(p)");

    // standard monomials inside the exponent box, filtered by lead divisibility
    std::vector<Monomial> standard;
    Monomial cur(arity, 0);
    while (true) {
        bool divisible = false;
        for (const auto& g : A.relations_.gens)
            if (mono_divides(g.leading_term().mono, cur)) {
                divisible = true;
                break;
            }
        if (!divisible) {
            standard.push_back(cur);
            require(standard.size() <= dim_cap, "algebra dimension exceeds cap");
        }
        std::uint32_t v = 0;
        while (v < arity) {
            if (std::uint32_t(cur[v]) + 1 < bound[v]) {
                ++cur[v];
                break;
            }
            cur[v] = 0;
            ++v;
        }
        if (v == arity) break;
    }
    std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, A.relations_.order) < 0;
    });
    A.basis_ = std::move(standard);

    A.monomial_ideal_ = std::all_of(A.relations_.gens.begin(), A.relations_.gens.end(),
                                    [](const SparsePoly& g) { return g.terms().size() == 1; });
    A.finish_construction();
    return A;
}

void FiniteAlgebra::finish_construction() {
    const std::size_t d = basis_.size();
    require(d >= 1, "algebra has empty basis");
    require(total_degree(basis_[0]) == 0, "basis must contain the unit monomial");
    const std::uint32_t arity = var_names_.empty() ? 0 : std::uint32_t(var_names_.size());

    basis_degree_.clear();
    for (const auto& m : basis_) basis_degree_.push_back(total_degree(m));

    auto to_elem = [&](const SparsePoly& f) {
        Elem e;
        e.dim = std::uint8_t(d);
        for (const auto& t : f.terms()) {
            auto it = std::find(basis_.begin(), basis_.end(), t.mono);
            require(it != basis_.end(), "normal form outside the standard basis");
            e.c[std::size_t(it - basis_.begin())] = std::uint16_t(t.coeff.get_ui());
        }
        return e;
    };

    sc_.assign(d * d, Elem{});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            SparsePoly prod = SparsePoly::from_terms(
                arity, gf(p_), {{mono_mul(basis_[i], basis_[j]), mpz_class(1)}},
                relations_.order);
            Elem e = to_elem(groebner_normal_form(prod, relations_));
            sc_[i * d + j] = e;
            sc_[j * d + i] = e;
        }

    unit_ = Elem{};
    unit_.dim = std::uint8_t(d);
    unit_.c[0] = 1;

    auto span = std::make_shared<GfpRowSpace>(p_, d);
    for (std::size_t i = 0; i < d; ++i) {
        Elem fi = pow(basis_elem(i), p_);
        std::vector<std::uint32_t> row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = fi.c[k];
        span->insert(std::move(row));
    }
    pth_span_ = std::move(span);
}

FiniteAlgebra FiniteAlgebra::finite_field(std::uint32_t p, std::uint32_t k) {
    require(is_prime(p), "field characteristic must be prime");
    if (k <= 1) return from_presentation(p, {}, {});
    const auto* mp = field_min_poly(p, k);
    require(mp != nullptr, "no irreducible polynomial configured for this field size");
    std::vector<SparsePoly::Term> terms;
    for (std::size_t e = 0; e < mp->size(); ++e) {
        if ((*mp)[e] == 0) continue;
        Monomial m(1, 0);
        m[0] = std::uint16_t(e);
        terms.push_back({std::move(m), mpz_class(long((*mp)[e]))});
    }
    return from_presentation(p, {"u"}, {SparsePoly::from_terms(1, gf(p), std::move(terms))});
}

FiniteAlgebra FiniteAlgebra::truncated_line(std::uint32_t p, std::uint32_t order) {
    require(order >= 1 && order <= kMaxAlgebraDim, "truncation order out of range");
    return from_presentation(
        p, {"x"}, {SparsePoly::variable(1, gf(p), 0, std::uint16_t(order))}, order);
}

std::uint64_t FiniteAlgebra::element_count() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < dim(); ++i) n *= p_;
    return n;
}

std::string FiniteAlgebra::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << ")";
    if (!var_names_.empty()) {
        os << "[";
        for (std::size_t i = 0; i < var_names_.size(); ++i)
            os << (i ? "," : "") << var_names_[i];
        os << "]/(";
        for (std::size_t i = 0; i < relations_.gens.size(); ++i)
            os << (i ? ", " : "") << relations_.gens[i].to_string(var_names_);
        os << ")";
    }
    return os.str();
}

AlgElem FiniteAlgebra::zero() const {
    Elem e;
    e.dim = std::uint8_t(dim());
    return e;
}

AlgElem FiniteAlgebra::basis_elem(std::size_t i) const {
    require(i < dim(), "basis index out of range");
    Elem e = zero();
    e.c[i] = 1;
    return e;
}

AlgElem FiniteAlgebra::from_mpz(const mpz_class& c) const {
    mpz_class r = c % p_;
    if (r < 0) r += p_;
    return scalar_mul(std::uint32_t(r.get_ui()), unit_);
}

AlgElem FiniteAlgebra::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    require(coeffs.size() == dim(), "coefficient vector size mismatch");
    Elem e = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = std::uint16_t(coeffs[i] % p_);
    return e;
}

std::vector<std::uint32_t> FiniteAlgebra::coeffs_of(const Elem& a) const {
    std::vector<std::uint32_t> v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = a.c[i];
    return v;
}

AlgElem FiniteAlgebra::add(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (std::size_t i = 0; i < dim(); ++i)
        r.c[i] = std::uint16_t((a.c[i] + b.c[i]) % p_);
    return r;
}

AlgElem FiniteAlgebra::sub(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (std::size_t i = 0; i < dim(); ++i)
        r.c[i] = std::uint16_t((a.c[i] + p_ - b.c[i]) % p_);
    return r;
}

AlgElem FiniteAlgebra::neg(const Elem& a) const { return sub(zero(), a); }

AlgElem FiniteAlgebra::mul(const Elem& a, const Elem& b) const {
    const std::size_t d = dim();
    std::array<std::uint32_t, kMaxAlgebraDim> acc{};
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b.c[j] == 0) continue;
            std::uint32_t s = std::uint32_t(a.c[i]) * b.c[j] % p_;
            const Elem& sc = sc_[i * d + j];
            for (std::size_t k = 0; k < d; ++k) acc[k] += s * sc.c[k];
        }
    }
    Elem r = zero();
    for (std::size_t k = 0; k < d; ++k) r.c[k] = std::uint16_t(acc[k] % p_);
    return r;
}

AlgElem FiniteAlgebra::scalar_mul(std::uint32_t c, const Elem& a) const {
    c %= p_;
    Elem r = zero();
    for (std::size_t i = 0; i < dim(); ++i) r.c[i] = std::uint16_t(a.c[i] * c % p_);
    return r;
}

AlgElem FiniteAlgebra::pow(const Elem& a, std::uint64_t k) const {
    Elem acc = one();
    Elem base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

AlgElem FiniteAlgebra::frobenius(const Elem& a, std::uint32_t e) const {
    Elem r = a;
    for (std::uint32_t i = 0; i < e; ++i) r = pow(r, p_);
    return r;
}

std::uint64_t FiniteAlgebra::index_of(const Elem& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = dim(); i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

AlgElem FiniteAlgebra::elem_at(std::uint64_t index) const {
    Elem e = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        e.c[i] = std::uint16_t(index % p_);
        index /= p_;
    }
    require(index == 0, "element index out of range");
    return e;
}

std::string FiniteAlgebra::to_string(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < var_names_.size(); ++v) {
            if (basis_[i][v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names_[v];
            if (basis_[i][v] > 1) mono += "^" + std::to_string(basis_[i][v]);
        }
        if (mono.empty())
            os << a.c[i];
        else {
            if (a.c[i] != 1) os << a.c[i] << "*";
            os << mono;
        }
    }
    if (first) os << "0";
    return os.str();
}

FiniteAlgebra::ReducedVerdict FiniteAlgebra::is_reduced(std::uint64_t enum_cap) const {
    require(element_count() <= enum_cap, "element enumeration exceeds cap");
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    while (q < dim()) {
        q *= p_;
        ++e;
    }
    for (std::uint64_t i = 1; i < element_count(); ++i) {
        Elem r = elem_at(i);
        if (frobenius(r, e).is_zero()) return {false, r};
    }
    return {true, zero()};
}

std::uint32_t FiniteAlgebra::local_valuation(const Elem& a) const {
    require(monomial_ideal_, "ring has no designated maximal ideal");
    std::uint32_t v = UINT32_MAX;
    for (std::size_t i = 0; i < dim(); ++i)
        if (a.c[i] != 0) v = std::min(v, basis_degree_[i]);
    if (v == UINT32_MAX) {  // zero element: deeper than every basis degree
        std::uint32_t top = 0;
        for (auto d : basis_degree_) top = std::max(top, d);
        return top + 1;
    }
    return v;
}

bool FiniteAlgebra::in_maximal_ideal_power(const Elem& a, std::uint32_t k) const {
    return local_valuation(a) >= k;
}

}  // namespace qfp
