#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfp/groebner.hpp"
#include "qfp/linear.hpp"
#include "qfp/poly.hpp"

namespace qfp {

inline constexpr std::size_t kMaxAlgebraDim = 16;
inline constexpr std::uint64_t kDefaultEnumCap = 1u << 16;

/// Element of a FiniteAlgebra: GF(p)-coefficient vector over the algebra's
/// monomial basis. Inline storage; ops live on the owning algebra.
struct AlgElem {
    std::array<std::uint16_t, kMaxAlgebraDim> c{};
    std::uint8_t dim = 0;

    bool operator==(const AlgElem& o) const {
        if (dim != o.dim) return false;
        for (std::size_t i = 0; i < dim; ++i)
            if (c[i] != o.c[i]) return false;
        return true;
    }
    bool is_zero() const {
        for (std::size_t i = 0; i < dim; ++i)
            if (c[i] != 0) return false;
        return true;
    }
};

/// Finite-dimensional commutative GF(p)-algebra presented by generators and
/// relations; the basis is the set of standard monomials of the relation
/// ideal and multiplication is tabulated through structure constants.
/// Immutable after construction.
class FiniteAlgebra {
public:
    using Elem = AlgElem;

    /// Quotient GF(p)[vars]/(relations); errors when the quotient is not
    /// finite-dimensional or its dimension exceeds the cap.
    static FiniteAlgebra from_presentation(std::uint32_t p, std::vector<std::string> var_names,
                                           std::vector<SparsePoly> relations,
                                           std::size_t dim_cap = kMaxAlgebraDim);
    /// The field GF(p^k), k >= 1, via a fixed irreducible polynomial.
    static FiniteAlgebra finite_field(std::uint32_t p, std::uint32_t k = 1);
    /// GF(p)[x]/(x^N): the truncated line, the designated-maximal-ideal example.
    static FiniteAlgebra truncated_line(std::uint32_t p, std::uint32_t order);

    std::uint32_t characteristic() const { return p_; }
    std::size_t dim() const { return basis_.size(); }
    std::uint64_t element_count() const;
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const IdealBasis& relations() const { return relations_; }
    std::string describe() const;

    Elem zero() const;
    Elem one() const { return unit_; }
    Elem basis_elem(std::size_t i) const;
    Elem from_mpz(const mpz_class& c) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs_of(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scalar_mul(std::uint32_t c, const Elem& a) const;
    Elem pow(const Elem& a, std::uint64_t k) const;
    /// r^(p^e), iterated Frobenius.
    Elem frobenius(const Elem& a, std::uint32_t e = 1) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    /// Deterministic enumeration: mixed-radix coefficients, base p.
    std::uint64_t index_of(const Elem& a) const;
    Elem elem_at(std::uint64_t index) const;

    std::string to_string(const Elem& a) const;

    /// GF(p)-span of the p-th powers; equals the set {r^p : r in R}.
    const GfpRowSpace& pth_power_span() const { return *pth_span_; }

    struct ReducedVerdict {
        bool reduced = true;
        Elem witness;  // nonzero nilpotent when not reduced
    };
    /// Exhaustive nilpotent scan over all elements (guarded by the cap).
    ReducedVerdict is_reduced(std::uint64_t enum_cap = kDefaultEnumCap) const;

    /// Truncated-local-ring structure: available when the relation ideal is
    /// generated by monomials, so the maximal ideal is spanned by the
    /// positive-degree standard monomials.
    bool has_local_degrees() const { return monomial_ideal_; }
    /// Smallest k with a = 0 admissible: min total degree in the support
    /// (returns a value > every basis degree for a = 0).
    std::uint32_t local_valuation(const Elem& a) const;
    bool in_maximal_ideal_power(const Elem& a, std::uint32_t k) const;

private:
    FiniteAlgebra() = default;
    void finish_construction();

    std::uint32_t p_ = 2;
    std::vector<std::string> var_names_;
    IdealBasis relations_;
    std::vector<Monomial> basis_;
    std::vector<std::uint32_t> basis_degree_;
    bool monomial_ideal_ = false;
    Elem unit_;
    std::vector<Elem> sc_;  // structure constants, dim x dim
    std::shared_ptr<GfpRowSpace> pth_span_;
};

}  // namespace qfp
