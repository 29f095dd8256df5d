#include "qfp/qmodel.hpp"

#include <algorithm>
#include <sstream>

namespace qfp {
namespace {

/// Quotient subgroup of F_*W_n for the chosen presentation kind.
std::vector<WittVecA> quotient_subgroup(const FiniteAlgebra& ring, std::uint32_t n,
                                        QKind kind, const WbarContext& ctx) {
    if (kind == QKind::ModpQuotient) return ctx.im_p_elements();
    // pushout kernel: F(ker restriction^(n-1)) = {(0, ..., 0, t) : t a p-th power};
    // at n = 1 the restriction power is the identity, so the kernel is trivial
    if (n == 1) return {witt_zero(ring, ring.characteristic(), 1)};
    std::vector<WittVecA> out;
    const GfpRowSpace& span = ring.pth_power_span();
    const std::uint32_t p = ring.characteristic();
    std::uint64_t span_size = 1;
    for (std::size_t i = 0; i < span.rank(); ++i) span_size *= p;
    for (std::uint64_t idx = 0; idx < span_size; ++idx) {
        std::uint64_t rest = idx;
        std::vector<std::uint32_t> acc(ring.dim(), 0);
        for (std::size_t r = 0; r < span.rank(); ++r) {
            std::uint32_t c = std::uint32_t(rest % p);
            rest /= p;
            for (std::size_t k = 0; k < ring.dim(); ++k)
                acc[k] = (acc[k] + c * span.rows()[r][k]) % p;
        }
        WittVecA v = witt_zero(ring, p, n);
        v.coords[n - 1] = ring.from_coeffs(acc);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

QModelFinite::QModelFinite(const FiniteAlgebra& ring, std::uint32_t n, QKind kind,
                           std::uint64_t enum_cap)
    : ring_(&ring), n_(n), kind_(kind), ctx_(ring, n, enum_cap) {
    std::vector<WittVecA> sub = quotient_subgroup(ring, n, kind, ctx_);

    // partition W_n into cosets; first-encounter order fixes the class ids
    const std::uint64_t total = ctx_.witt_count();
    class_of_index_.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (class_of_index_.contains(i)) continue;
        std::uint32_t cls = std::uint32_t(reps_.size());
        WittVecA rep = ctx_.witt_at(i);
        reps_.push_back(rep);
        for (const auto& z : sub) {
            std::uint64_t j = ctx_.index_of(witt_add(rep, z));
            auto [it, inserted] = class_of_index_.emplace(j, cls);
            require(inserted || it->second == cls, "quotient subgroup is not a subgroup");
        }
    }
    zero_class_ = class_of_index_.at(ctx_.index_of(witt_zero(ring, ring.characteristic(), n)));

    const std::size_t nc = reps_.size();
    add_table_.resize(nc * nc);
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            std::uint32_t c = class_of(witt_add(reps_[a], reps_[b]));
            add_table_[a * nc + b] = c;
            add_table_[b * nc + a] = c;
        }

    act_table_.resize(ring.dim() * nc);
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        WittVecA tw = teichmuller(ring, ring.characteristic(), n,
                                  ring.frobenius(ring.basis_elem(i), 1));
        for (std::size_t c = 0; c < nc; ++c)
            act_table_[i * nc + c] = class_of(witt_mul(tw, reps_[c]));
    }

    // classes of p*w over every w
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint32_t c = class_of(witt_times_p(ctx_.witt_at(i)));
        if (std::find(p_image_classes_.begin(), p_image_classes_.end(), c) ==
            p_image_classes_.end())
            p_image_classes_.push_back(c);
    }
    std::sort(p_image_classes_.begin(), p_image_classes_.end());

    // enumeration-checked structure facts
    phi_additive_ = true;
    action_compatible_ = true;
    for (std::uint64_t i = 0; i < ring.element_count() && phi_additive_; ++i)
        for (std::uint64_t j = 0; j < ring.element_count(); ++j) {
            AlgElem r = ring.elem_at(i), s = ring.elem_at(j);
            if (phi(ring.add(r, s)) != add(phi(r), phi(s))) {
                phi_additive_ = false;
                break;
            }
        }
    for (std::uint64_t i = 0; i < ring.element_count() && action_compatible_; ++i)
        for (std::uint64_t j = 0; j < ring.element_count(); ++j) {
            AlgElem r = ring.elem_at(i), s = ring.elem_at(j);
            if (phi(ring.mul(r, s)) != act_elem(r, phi(s))) {
                action_compatible_ = false;
                break;
            }
        }
}

std::uint32_t QModelFinite::class_of(const WittVecA& x) const {
    return class_of_index_.at(ctx_.index_of(x));
}

std::uint32_t QModelFinite::act_elem(const AlgElem& r, std::uint32_t cls) const {
    WittVecA tw = teichmuller(*ring_, ring_->characteristic(), n_, ring_->frobenius(r, 1));
    return class_of(witt_mul(tw, reps_[cls]));
}

std::uint32_t QModelFinite::scalar(std::uint32_t c, std::uint32_t cls) const {
    c %= ring_->characteristic();
    std::uint32_t acc = zero_class_;
    for (std::uint32_t i = 0; i < c; ++i) acc = add(acc, cls);
    return acc;
}

std::uint32_t QModelFinite::phi(const AlgElem& r) const {
    return class_of(
        teichmuller(*ring_, ring_->characteristic(), n_, ring_->frobenius(r, 1)));
}

std::vector<AlgElem> phi_kernel(const QModelFinite& q) {
    std::vector<AlgElem> out;
    const FiniteAlgebra& R = q.ring();
    for (std::uint64_t i = 0; i < R.element_count(); ++i) {
        AlgElem r = R.elem_at(i);
        if (q.phi(r) == q.zero_class()) out.push_back(r);
    }
    return out;
}

QCompareReport compare_q_models(const FiniteAlgebra& ring, std::uint32_t n,
                                std::uint64_t enum_cap) {
    QModelFinite push(ring, n, QKind::Pushout, enum_cap);
    QModelFinite modp(ring, n, QKind::ModpQuotient, enum_cap);

    QCompareReport rep;
    rep.level = n;
    rep.pushout_classes = push.class_count();
    rep.modp_classes = modp.class_count();
    rep.pushout_p_annihilates = push.p_annihilates();

    // canonical map between the two quotients of F_*W_n(R)
    std::vector<std::uint32_t> map(push.class_count(), UINT32_MAX);
    rep.well_defined = true;
    WbarContext ctx(ring, n, enum_cap);
    for (std::uint64_t i = 0; i < ctx.witt_count(); ++i) {
        WittVecA w = ctx.witt_at(i);
        std::uint32_t pc = push.class_of(w);
        std::uint32_t mc = modp.class_of(w);
        if (map[pc] == UINT32_MAX)
            map[pc] = mc;
        else if (map[pc] != mc)
            rep.well_defined = false;
    }
    if (!rep.well_defined) return rep;

    std::vector<std::uint32_t> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.bijective = injective && push.class_count() == modp.class_count();

    rep.additive_equivariant = true;
    for (std::uint32_t a = 0; a < push.class_count() && rep.additive_equivariant; ++a)
        for (std::uint32_t b = 0; b < push.class_count(); ++b)
            if (map[push.add(a, b)] != modp.add(map[a], map[b])) {
                rep.additive_equivariant = false;
                break;
            }
    rep.action_equivariant = true;
    for (std::size_t i = 0; i < ring.dim() && rep.action_equivariant; ++i)
        for (std::uint32_t c = 0; c < push.class_count(); ++c)
            if (map[push.act(i, c)] != modp.act(i, map[c])) {
                rep.action_equivariant = false;
                break;
            }
    return rep;
}

std::string QCompareReport::summary() const {
    std::ostringstream os;
    os << "n=" << level << ": pushout " << pushout_classes << " classes, mod-p "
       << modp_classes << " classes; canonical map "
       << (well_defined ? "well-defined" : "NOT well-defined");
    if (well_defined) {
        os << ", " << (bijective ? "bijective" : "not bijective") << ", "
           << (additive_equivariant && action_equivariant ? "equivariant"
                                                          : "not equivariant");
    }
    os << (isomorphic() ? " -> isomorphic" : " -> discrepancy");
    if (!pushout_p_annihilates) os << " (p does not annihilate the pushout model)";
    return os.str();
}

GradedQBlock graded_q_block(const GradedQuotient& ring, std::uint32_t n,
                            std::uint32_t block) {
    require(n >= 1 && n <= 3, "graded blocks are built for levels 1 to 3");
    auto reduced = ring.is_reduced();
    require(reduced.reduced, "graded splitting target needs a reduced hypersurface");

    const std::uint32_t p = ring.characteristic();
    GradedQBlock out;
    out.block = block;
    std::uint32_t scale = p;
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& basis = ring.graded_piece_basis(scale * block);
        out.coord_dims.push_back(basis.size());
        if (i == 0) {
            out.quotient_dims.push_back(basis.size());
        } else {
            // span of p-th powers of the previous coordinate space
            const auto& prev = ring.graded_piece_basis(scale / p * block);
            GfpRowSpace span(p, basis.size());
            for (const auto& m : prev) {
                Monomial mp = m;
                for (auto& e : mp) e = std::uint16_t(e * p);
                SparsePoly f = ring.normal_form(SparsePoly::from_terms(
                    ring.num_vars(), gf(p), {{mp, mpz_class(1)}}, ring.ideal().order));
                std::vector<std::uint32_t> v(basis.size(), 0);
                for (const auto& t : f.terms()) {
                    auto it = std::find(basis.begin(), basis.end(), t.mono);
                    require(it != basis.end(), "power leaves the graded block");
                    v[std::size_t(it - basis.begin())] = std::uint32_t(t.coeff.get_ui());
                }
                span.insert(std::move(v));
            }
            out.quotient_dims.push_back(basis.size() - span.rank());
        }
        scale *= p;
    }
    return out;
}

}  // namespace qfp

