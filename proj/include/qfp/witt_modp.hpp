#pragma once

#include <random>

#include "qfp/finite_algebra.hpp"
#include "qfp/witt.hpp"

namespace qfp {

using WittVecA = WittVector<FiniteAlgebra>;

/// Mod-p reduction context for W_n over a finite algebra: enumerates
/// im(p) = {(0, a_0^p, ..., a_{n-2}^p)} and provides canonical coset
/// representatives (coset minimum in enumeration order) and membership tests.
class WbarContext {
public:
    WbarContext(const FiniteAlgebra& ring, std::uint32_t n,
                std::uint64_t enum_cap = kDefaultEnumCap);

    const FiniteAlgebra& ring() const { return *ring_; }
    std::uint32_t length() const { return n_; }
    std::uint64_t witt_count() const { return count_; }

    std::uint64_t index_of(const WittVecA& x) const;
    WittVecA witt_at(std::uint64_t index) const;

    bool in_im_p(const WittVecA& x) const;
    bool in_im_v(const WittVecA& x) const;
    const std::vector<WittVecA>& im_p_elements() const { return im_p_; }

    /// Canonical representative of the class of x in W_n / im(p).
    WittVecA canonical_rep(const WittVecA& x) const;
    std::uint64_t canonical_index(const WittVecA& x) const;
    bool classes_equal(const WittVecA& x, const WittVecA& y) const;

private:
    const FiniteAlgebra* ring_;
    std::uint32_t n_;
    std::uint64_t count_;
    std::vector<WittVecA> im_p_;
};

/// Ideal selector for membership tests in W_n over a designated-maximal-ideal
/// algebra: either the kernel W_n(m^k) of reduction mod m^k, or the
/// coordinate bounds necessarily satisfied by the k-th power of the ideal
/// J = {x : x_0 in m} (a one-sided test: failing it certifies
/// non-membership).
struct WittIdealSpec {
    enum class Kind { MaxIdealPower, JPowerBound } kind;
    std::uint32_t exponent;
};

bool witt_ideal_membership(const WittVecA& x, const WittIdealSpec& spec);

/// Coordinatewise valuations (min supported basis degree per coordinate).
std::vector<std::uint32_t> witt_coordinate_valuations(const WittVecA& x);

/// Uniformly random element of J (first coordinate in m, the rest free).
WittVecA sample_j_element(const FiniteAlgebra& ring, std::uint32_t n, std::mt19937_64& rng);

/// Uniformly random element of the algebra, and of a maximal-ideal power.
AlgElem sample_algebra_element(const FiniteAlgebra& ring, std::mt19937_64& rng);
AlgElem sample_maximal_ideal_element(const FiniteAlgebra& ring, std::mt19937_64& rng);

}  // namespace qfp
