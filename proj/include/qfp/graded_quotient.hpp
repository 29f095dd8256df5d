#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qfp/groebner.hpp"
#include "qfp/poly.hpp"

namespace qfp {

/// Standard-graded quotient GF(p)[x_0..x_d]/I with all variables in degree 1
/// and I homogeneous. Elements are carried as Groebner normal forms; graded
/// piece bases are cached per degree.
class GradedQuotient {
public:
    GradedQuotient(std::uint32_t p, std::vector<std::string> var_names,
                   std::vector<SparsePoly> relations);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t num_vars() const { return std::uint32_t(var_names_.size()); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const IdealBasis& ideal() const { return ideal_; }
    const std::vector<SparsePoly>& presented_relations() const { return presented_; }
    bool is_hypersurface() const { return presented_.size() == 1; }
    /// Defining polynomial of a hypersurface presentation.
    const SparsePoly& hypersurface() const;
    std::string describe() const;

    /// Standard monomials of degree e modulo the ideal, in a fixed
    /// deterministic order (ascending in the ideal's monomial order).
    const std::vector<Monomial>& graded_piece_basis(std::uint32_t e) const;

    SparsePoly normal_form(const SparsePoly& f) const;
    SparsePoly make_poly(std::vector<SparsePoly::Term> terms) const;
    SparsePoly var(std::uint32_t v, std::uint16_t exp = 1) const;
    SparsePoly mul(const SparsePoly& a, const SparsePoly& b) const;
    /// Canonical representative of r^(p^e).
    SparsePoly frobenius_power(const SparsePoly& r, std::uint32_t e) const;

    struct ReducedVerdict {
        bool reduced = true;
        SparsePoly witness;  // g with g^2 in the structure of f when not reduced
    };
    /// Reducedness for hypersurfaces via repeated-factor detection; reports
    /// an error for non-principal presentations.
    ReducedVerdict is_reduced() const;

private:
    std::uint32_t p_;
    std::vector<std::string> var_names_;
    std::vector<SparsePoly> presented_;
    IdealBasis ideal_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::uint32_t, std::vector<Monomial>> piece_cache_;
};

}  // namespace qfp
