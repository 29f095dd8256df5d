#pragma once

#include <map>
#include <optional>

#include "qfp/graded_quotient.hpp"
#include "qfp/qmodel.hpp"

namespace qfp {

/// Value table of a verified splitting sigma: Q -> R (one entry per class).
struct SigmaTable {
    std::vector<AlgElem> values;
};

struct FiniteSplitResult {
    bool split = false;
    SigmaTable sigma;          // populated when split
    /// printable "sigma(representative) = value" lines for reports
    std::vector<std::string> sigma_display;
    bool certificate_verified = false;
};

/// Decide existence of an additive, R-compatible section sigma with
/// sigma(phi(r)) = r that vanishes where multiplication by p lands; on a
/// finite algebra this is a GF(p) feasibility problem over the class tables.
/// Any certificate is re-verified by direct evaluation before returning.
FiniteSplitResult split_finite(const QModelFinite& q);
FiniteSplitResult split_finite(const FiniteAlgebra& ring, std::uint32_t n,
                               QKind kind = QKind::ModpQuotient,
                               std::uint64_t enum_cap = kDefaultEnumCap);

enum class FedderVerdict { FSplit, NotFSplit };

/// Classical hypersurface criterion used as the independent level-1 oracle:
/// S/(f) is F-split at the origin iff f^(p-1) stays out of (x_0^p, ..., x_d^p).
FedderVerdict fedder_check(const SparsePoly& f);

/// One assembled constraint row of the graded system, kept for certificate
/// re-verification and reporting.
struct GradedRowInfo {
    enum class Tag { SectionUnit, LinearityBase, LinearityQuot } tag;
    std::uint32_t block = 0;  // target degree block e of the row
    std::string detail;
};

struct GradedSplitResult {
    bool feasible = false;
    std::uint32_t level = 1;
    std::uint32_t degree_cap = 0;
    std::size_t num_rows = 0;
    std::size_t num_cols = 0;
    /// Feasible: flattened sigma data per block (degree-0 graded section).
    std::map<std::string, std::string> sigma_values;
    /// Infeasible: a verified GF(p) combination of rows summing to 0 = 1.
    std::vector<std::size_t> farkas_rows;
    std::vector<std::uint32_t> farkas_coeffs;
    std::vector<GradedRowInfo> row_info;
    bool certificate_verified = false;
};

/// Degree-truncated graded splitting system for a reduced hypersurface cone:
/// level 1 for any p, level 2 for p = 2. Unknowns are the section values on
/// standard monomials (and, at level 2, on the square-quotient classes);
/// truncation at degree_cap only drops constraints, so infeasibility is sound
/// evidence of non-splitting while feasibility is evidence only.
GradedSplitResult split_graded_system(const GradedQuotient& ring, std::uint32_t level,
                                      std::uint32_t degree_cap);

}  // namespace qfp
