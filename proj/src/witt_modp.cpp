#include "qfp/witt_modp.hpp"

#include <algorithm>

namespace qfp {

WbarContext::WbarContext(const FiniteAlgebra& ring, std::uint32_t n, std::uint64_t enum_cap)
    : ring_(&ring), n_(n) {
    require(n >= 1, "Witt length must be positive");
    count_ = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        count_ *= ring.element_count();
        require(count_ <= enum_cap, "Witt ring enumeration exceeds cap");
    }

    // im(p) = {0} x (R^p)^(n-1); the p-th powers form a GF(p)-subspace
    const GfpRowSpace& span = ring.pth_power_span();
    std::uint64_t span_size = 1;
    for (std::size_t i = 0; i < span.rank(); ++i) span_size *= ring.characteristic();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        total *= span_size;
        require(total <= enum_cap, "im(p) enumeration exceeds cap");
    }

    std::vector<AlgElem> span_elems;
    span_elems.reserve(span_size);
    const std::uint32_t p = ring.characteristic();
    for (std::uint64_t idx = 0; idx < span_size; ++idx) {
        std::uint64_t rest = idx;
        std::vector<std::uint32_t> acc(ring.dim(), 0);
        for (std::size_t r = 0; r < span.rank(); ++r) {
            std::uint32_t c = std::uint32_t(rest % p);
            rest /= p;
            for (std::size_t k = 0; k < ring.dim(); ++k)
                acc[k] = (acc[k] + c * span.rows()[r][k]) % p;
        }
        span_elems.push_back(ring.from_coeffs(acc));
    }

    im_p_.reserve(total);
    for (std::uint64_t count = 0; count < total; ++count) {
        std::vector<AlgElem> coords(n, ring.zero());
        std::uint64_t rest = count;
        for (std::uint32_t i = 1; i < n; ++i) {
            coords[i] = span_elems[rest % span_size];
            rest /= span_size;
        }
        im_p_.push_back(make_witt(ring, p, std::move(coords)));
    }
}

std::uint64_t WbarContext::index_of(const WittVecA& x) const {
    require(x.ring == ring_ && x.length() == n_, "Witt vector from a different context");
    std::uint64_t idx = 0;
    for (std::uint32_t i = n_; i-- > 0;)
        idx = idx * ring_->element_count() + ring_->index_of(x.coords[i]);
    return idx;
}

WittVecA WbarContext::witt_at(std::uint64_t index) const {
    std::vector<AlgElem> coords;
    coords.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        coords.push_back(ring_->elem_at(index % ring_->element_count()));
        index /= ring_->element_count();
    }
    require(index == 0, "Witt index out of range");
    return make_witt(*ring_, ring_->characteristic(), std::move(coords));
}

bool WbarContext::in_im_p(const WittVecA& x) const {
    if (!x.coords[0].is_zero()) return false;
    const GfpRowSpace& span = ring_->pth_power_span();
    for (std::uint32_t i = 1; i < n_; ++i)
        if (!span.contains(ring_->coeffs_of(x.coords[i]))) return false;
    return true;
}

bool WbarContext::in_im_v(const WittVecA& x) const { return x.coords[0].is_zero(); }

WittVecA WbarContext::canonical_rep(const WittVecA& x) const {
    std::uint64_t best = index_of(x);
    WittVecA rep = x;
    for (const auto& z : im_p_) {
        WittVecA cand = witt_add(x, z);
        std::uint64_t idx = index_of(cand);
        if (idx < best) {
            best = idx;
            rep = std::move(cand);
        }
    }
    return rep;
}

std::uint64_t WbarContext::canonical_index(const WittVecA& x) const {
    return index_of(canonical_rep(x));
}

bool WbarContext::classes_equal(const WittVecA& x, const WittVecA& y) const {
    return in_im_p(witt_sub(x, y));
}

std::vector<std::uint32_t> witt_coordinate_valuations(const WittVecA& x) {
    std::vector<std::uint32_t> v;
    v.reserve(x.length());
    for (const auto& a : x.coords) v.push_back(x.ring->local_valuation(a));
    return v;
}

bool witt_ideal_membership(const WittVecA& x, const WittIdealSpec& spec) {
    const std::uint32_t n = x.length();
    switch (spec.kind) {
        case WittIdealSpec::Kind::MaxIdealPower:
            for (const auto& a : x.coords)
                if (!x.ring->in_maximal_ideal_power(a, spec.exponent)) return false;
            return true;
        case WittIdealSpec::Kind::JPowerBound:
            for (std::uint32_t i = 0; i < n; ++i) {
                std::uint32_t need = spec.exponent > i ? spec.exponent - i : 0;
                if (!x.ring->in_maximal_ideal_power(x.coords[i], need)) return false;
            }
            return true;
    }
    return false;
}

AlgElem sample_algebra_element(const FiniteAlgebra& ring, std::mt19937_64& rng) {
    std::vector<std::uint32_t> coeffs(ring.dim());
    for (auto& c : coeffs) c = std::uint32_t(rng() % ring.characteristic());
    return ring.from_coeffs(coeffs);
}

AlgElem sample_maximal_ideal_element(const FiniteAlgebra& ring, std::mt19937_64& rng) {
    require(ring.has_local_degrees(), "ring has no designated maximal ideal");
    std::vector<std::uint32_t> coeffs(ring.dim(), 0);
    for (std::size_t i = 0; i < ring.dim(); ++i)
        if (total_degree(ring.basis()[i]) >= 1)
            coeffs[i] = std::uint32_t(rng() % ring.characteristic());
    return ring.from_coeffs(coeffs);
}

WittVecA sample_j_element(const FiniteAlgebra& ring, std::uint32_t n, std::mt19937_64& rng) {
    std::vector<AlgElem> coords;
    coords.reserve(n);
    coords.push_back(sample_maximal_ideal_element(ring, rng));
    for (std::uint32_t i = 1; i < n; ++i) coords.push_back(sample_algebra_element(ring, rng));
    return make_witt(ring, ring.characteristic(), std::move(coords));
}

}  // namespace qfp
