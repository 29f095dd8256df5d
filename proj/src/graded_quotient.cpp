#include "qfp/graded_quotient.hpp"

#include <algorithm>
#include <sstream>

namespace qfp {

GradedQuotient::GradedQuotient(std::uint32_t p, std::vector<std::string> var_names,
                               std::vector<SparsePoly> relations)
    : p_(p), var_names_(std::move(var_names)) {
    require(p >= 2, "characteristic must be at least 2");
    require(!var_names_.empty(), "graded ring needs at least one variable");
    for (const auto& r : relations) {
        require(r.arity() == num_vars(), "relation arity mismatch");
        require(r.domain() == gf(p), "relations must live over GF(p)");
        require(r.is_homogeneous(), "graded quotient needs homogeneous relations");
    }
    presented_ = relations;
    ideal_ = buchberger(make_ideal(std::move(relations)));
    require(std::none_of(ideal_.gens.begin(), ideal_.gens.end(),
                         [](const SparsePoly& g) { return g.is_constant(); }),
            "relations generate the unit ideal");
}

const SparsePoly& GradedQuotient::hypersurface() const {
    require(is_hypersurface(), "ring is not presented by a single relation");
    return presented_.front();
}

std::string GradedQuotient::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << ")[";
    for (std::size_t i = 0; i < var_names_.size(); ++i) os << (i ? "," : "") << var_names_[i];
    os << "]";
    if (!presented_.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < presented_.size(); ++i)
            os << (i ? ", " : "") << presented_[i].to_string(var_names_);
        os << ")";
    }
    return os.str();
}

const std::vector<Monomial>& GradedQuotient::graded_piece_basis(std::uint32_t e) const {
    std::scoped_lock lock(cache_mu_);
    auto it = piece_cache_.find(e);
    if (it != piece_cache_.end()) return it->second;

    std::vector<Monomial> out;
    const std::uint32_t n = num_vars();
    Monomial cur(n, 0);
    // enumerate exponent vectors of total degree e
    auto rec = [&](auto&& self, std::uint32_t v, std::uint32_t rest) -> void {
        if (v + 1 == n) {
            cur[v] = std::uint16_t(rest);
            bool divisible = false;
            for (const auto& g : ideal_.gens)
                if (mono_divides(g.leading_term().mono, cur)) {
                    divisible = true;
                    break;
                }
            if (!divisible) out.push_back(cur);
            return;
        }
        for (std::uint32_t k = 0; k <= rest; ++k) {
            cur[v] = std::uint16_t(k);
            self(self, v + 1, rest - k);
        }
        cur[v] = 0;
    };
    rec(rec, 0, e);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, ideal_.order) < 0;
    });
    return piece_cache_.emplace(e, std::move(out)).first->second;
}

SparsePoly GradedQuotient::normal_form(const SparsePoly& f) const {
    return groebner_normal_form(f, ideal_);
}

SparsePoly GradedQuotient::make_poly(std::vector<SparsePoly::Term> terms) const {
    return normal_form(
        SparsePoly::from_terms(num_vars(), gf(p_), std::move(terms), ideal_.order));
}

SparsePoly GradedQuotient::var(std::uint32_t v, std::uint16_t exp) const {
    return normal_form(SparsePoly::variable(num_vars(), gf(p_), v, exp, ideal_.order));
}

SparsePoly GradedQuotient::mul(const SparsePoly& a, const SparsePoly& b) const {
    return normal_form(a.mul(b));
}

SparsePoly GradedQuotient::frobenius_power(const SparsePoly& r, std::uint32_t e) const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p_;
        require(q <= (std::uint64_t(1) << 32), "Frobenius iterate out of range");
    }
    return normal_form(r.pow(q));
}

GradedQuotient::ReducedVerdict GradedQuotient::is_reduced() const {
    require(is_hypersurface(),
            "reducedness is only decided for hypersurface presentations");
    SquarefreeVerdict v = squarefree_test(hypersurface());
    if (v.squarefree) return {true, SparsePoly()};
    return {false, v.witness};
}

}  // namespace qfp
