#include "qfp/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qfp {

SparsePoly SparsePoly::zero(std::uint32_t arity, Domain dom, MonomialOrder ord) {
    return SparsePoly(arity, dom, std::move(ord));
}

SparsePoly SparsePoly::constant(std::uint32_t arity, Domain dom, mpz_class c, MonomialOrder ord) {
    SparsePoly r(arity, dom, std::move(ord));
    c = reduce_coeff(c, dom);
    if (c != 0) r.terms_.push_back({Monomial(arity, 0), std::move(c)});
    return r;
}

SparsePoly SparsePoly::variable(std::uint32_t arity, Domain dom, std::uint32_t index,
                                std::uint16_t exp, MonomialOrder ord) {
    require(index < arity, "variable index out of range");
    SparsePoly r(arity, dom, std::move(ord));
    if (exp == 0) return constant(arity, dom, 1, r.ord_);
    Monomial m(arity, 0);
    m[index] = exp;
    r.terms_.push_back({std::move(m), mpz_class(1)});
    return r;
}

SparsePoly SparsePoly::from_terms(std::uint32_t arity, Domain dom, std::vector<Term> terms,
                                  MonomialOrder ord) {
    SparsePoly r(arity, dom, std::move(ord));
    for (auto& t : terms) require(t.mono.size() == arity, "term arity mismatch");
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

mpz_class SparsePoly::reduce_coeff(const mpz_class& c, const Domain& d) {
    if (d.is_integers()) return c;
    mpz_class r = c % d.p;
    if (r < 0) r += d.p;
    return r;
}

void SparsePoly::normalize() {
    for (auto& t : terms_) t.coeff = reduce_coeff(t.coeff, dom_);
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, ord_) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = reduce_coeff(out.back().coeff + t.coeff, dom_);
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = total_degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (total_degree(t.mono) != d) return false;
    return true;
}

mpz_class SparsePoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return mpz_class(0);
}

bool SparsePoly::equals(const SparsePoly& o) const {
    if (arity_ != o.arity_ || !(dom_ == o.dom_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

SparsePoly SparsePoly::add(const SparsePoly& o) const {
    require(same_ring(o), "polynomial arity or domain mismatch");
    SparsePoly r(arity_, dom_, ord_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ord_);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            mpz_class s = reduce_coeff(terms_[i].coeff + o.terms_[j].coeff, dom_);
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SparsePoly SparsePoly::neg() const {
    SparsePoly r(*this);
    for (auto& t : r.terms_) t.coeff = reduce_coeff(-t.coeff, dom_);
    return r;
}

SparsePoly SparsePoly::sub(const SparsePoly& o) const { return add(o.neg()); }

SparsePoly SparsePoly::mul_term(const Monomial& m, const mpz_class& c) const {
    SparsePoly r(arity_, dom_, ord_);
    mpz_class cc = reduce_coeff(c, dom_);
    if (cc == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class v = reduce_coeff(t.coeff * cc, dom_);
        if (v != 0) r.terms_.push_back({mono_mul(t.mono, m), std::move(v)});
    }
    // multiplying by a fixed monomial preserves the term order
    return r;
}

SparsePoly SparsePoly::mul_scalar(const mpz_class& c) const {
    return mul_term(Monomial(arity_, 0), c);
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
    require(same_ring(o), "polynomial arity or domain mismatch");
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, ord_) > 0;  // descending
    };
    std::map<Monomial, mpz_class, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            acc[std::move(m)] += a.coeff * b.coeff;
        }
    SparsePoly r(arity_, dom_, ord_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        mpz_class v = reduce_coeff(c, dom_);
        if (v != 0) r.terms_.push_back({m, std::move(v)});
    }
    return r;
}

SparsePoly SparsePoly::pow(std::uint64_t k) const {
    SparsePoly acc = constant(arity_, dom_, 1, ord_);
    SparsePoly base(*this);
    while (k > 0) {
        if (k & 1) acc = acc.mul(base);
        k >>= 1;
        if (k > 0) base = base.mul(base);
    }
    return acc;
}

SparsePoly SparsePoly::reduced_mod(std::uint32_t p) const {
    require(p > 0, "reduction needs a positive modulus");
    SparsePoly r(arity_, gf(p), ord_);
    r.terms_ = terms_;
    r.normalize();
    return r;
}

SparsePoly SparsePoly::extended_to_arity(std::uint32_t new_arity) const {
    require(new_arity >= arity_, "cannot shrink arity");
    SparsePoly r(new_arity, dom_, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        m.resize(new_arity, 0);
        r.terms_.push_back({std::move(m), t.coeff});
    }
    r.normalize();
    return r;
}

std::string SparsePoly::to_string(std::span<const std::string> var_names) const {
    require(var_names.size() >= arity_, "not enough variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = (t.coeff == 1);
        bool constant_mono = (total_degree(t.mono) == 0);
        if (!unit || constant_mono) os << t.coeff.get_str();
        bool printed = !unit || constant_mono;
        for (std::uint32_t v = 0; v < arity_; ++v) {
            if (t.mono[v] == 0) continue;
            if (printed) os << "*";
            os << var_names[v];
            if (t.mono[v] > 1) os << "^" << t.mono[v];
            printed = true;
        }
    }
    return os.str();
}

SparsePoly exact_div_by_int(const SparsePoly& a, const mpz_class& m) {
    require(a.domain().is_integers(), "exact integer division needs integer coefficients");
    require(m != 0, "division by zero");
    std::vector<SparsePoly::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
        require(mpz_divisible_p(t.coeff.get_mpz_t(), m.get_mpz_t()) != 0,
                "coefficient not divisible in exact division");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), m.get_mpz_t());
        out.push_back({t.mono, std::move(q)});
    }
    return SparsePoly::from_terms(a.arity(), a.domain(), std::move(out), a.order());
}

SparsePoly derivative(const SparsePoly& f, std::uint32_t var) {
    require(var < f.arity(), "variable index out of range");
    std::vector<SparsePoly::Term> out;
    for (const auto& t : f.terms()) {
        if (t.mono[var] == 0) continue;
        Monomial m = t.mono;
        mpz_class c = t.coeff * m[var];
        m[var] -= 1;
        out.push_back({std::move(m), std::move(c)});
    }
    return SparsePoly::from_terms(f.arity(), f.domain(), std::move(out), f.order());
}

}  // namespace qfp
