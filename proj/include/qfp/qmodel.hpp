#pragma once

#include <string>
#include <unordered_map>

#include "qfp/graded_quotient.hpp"
#include "qfp/linear.hpp"
#include "qfp/witt_modp.hpp"

namespace qfp {

/// Presentation of the splitting target: as the module pushout of the Witt
/// square (quotient of F_*W_n by the Frobenius image of the restriction
/// kernel), or as the mod-p reduction F_*(W_n/im p).
enum class QKind { Pushout, ModpQuotient };

/// Enumerated model of Q_{R,n} over a finite algebra with tabulated class
/// addition, R-action through Teichmuller twists, and the section source
/// phi(r) = class([r^p]). Structure facts (phi additivity, action
/// compatibility, p-annihilation) are checked by enumeration at build time.
class QModelFinite {
public:
    QModelFinite(const FiniteAlgebra& ring, std::uint32_t n, QKind kind,
                 std::uint64_t enum_cap = kDefaultEnumCap);

    const FiniteAlgebra& ring() const { return *ring_; }
    std::uint32_t level() const { return n_; }
    QKind kind() const { return kind_; }
    std::size_t class_count() const { return reps_.size(); }
    std::uint64_t witt_count() const { return ctx_.witt_count(); }

    std::uint32_t class_of(const WittVecA& x) const;
    const WittVecA& representative(std::uint32_t cls) const { return reps_[cls]; }
    std::uint32_t zero_class() const { return zero_class_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_table_[a * reps_.size() + b];
    }
    /// Action of the basis element with index i.
    std::uint32_t act(std::size_t basis_index, std::uint32_t cls) const {
        return act_table_[basis_index * reps_.size() + cls];
    }
    std::uint32_t act_elem(const AlgElem& r, std::uint32_t cls) const;
    std::uint32_t scalar(std::uint32_t c, std::uint32_t cls) const;
    std::uint32_t phi(const AlgElem& r) const;

    /// Classes of p * w over all w (deduplicated); W_n(R)-linearity of a
    /// section forces sigma to vanish on them. For the mod-p model this is
    /// just the zero class; the pushout model at n >= 3 keeps more.
    const std::vector<std::uint32_t>& p_image_classes() const { return p_image_classes_; }
    bool p_annihilates() const {
        return p_image_classes_.size() == 1 && p_image_classes_[0] == zero_class_;
    }

    bool phi_additive() const { return phi_additive_; }
    bool action_compatible() const { return action_compatible_; }

private:
    const FiniteAlgebra* ring_;
    std::uint32_t n_;
    QKind kind_;
    WbarContext ctx_;
    std::vector<WittVecA> reps_;
    std::unordered_map<std::uint64_t, std::uint32_t> class_of_index_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> act_table_;
    std::vector<std::uint32_t> p_image_classes_;
    std::uint32_t zero_class_ = 0;
    bool phi_additive_ = false;
    bool action_compatible_ = false;
};

/// All elements t with phi(t) = 0; for any level this is {t : t^p = 0}.
std::vector<AlgElem> phi_kernel(const QModelFinite& q);

struct QCompareReport {
    std::uint32_t level = 0;
    std::size_t pushout_classes = 0;
    std::size_t modp_classes = 0;
    bool well_defined = false;
    bool bijective = false;
    bool additive_equivariant = false;
    bool action_equivariant = false;
    bool pushout_p_annihilates = false;

    bool isomorphic() const {
        return well_defined && bijective && additive_equivariant && action_equivariant;
    }
    std::string summary() const;
};

/// Compare the two presentations through the canonical map between the
/// quotients of F_*W_n(R); the outcome is reported, not asserted.
QCompareReport compare_q_models(const FiniteAlgebra& ring, std::uint32_t n,
                                std::uint64_t enum_cap = kDefaultEnumCap);

/// Degree-block data of the graded splitting target: coordinate i of block e
/// lives in R_{p^(i+1) e}, acted on by r through r^(p^(i+1)); coordinates
/// past the first are reduced modulo the span of p-th powers.
struct GradedQBlock {
    std::uint32_t block = 0;
    std::vector<std::size_t> coord_dims;
    std::vector<std::size_t> quotient_dims;  // after the p-th-power reduction
};

/// Block inspection for a reduced graded hypersurface, levels n <= 3.
GradedQBlock graded_q_block(const GradedQuotient& ring, std::uint32_t n,
                            std::uint32_t block);

}  // namespace qfp
