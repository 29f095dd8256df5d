#pragma once

#include <optional>
#include <string>

#include "qfp/split.hpp"

namespace qfp {

struct HeightValue {
    enum class Kind { Exact, LowerBound, Infinity } kind = Kind::Exact;
    std::uint32_t value = 0;                      // meaningless for Infinity
    std::optional<std::uint32_t> evidence_degree; // degree cap backing evidence
};

struct PerLevelVerdict {
    std::uint32_t level = 1;
    enum class Status {
        Split,                // finite: verified section
        NotSplit,             // finite: system infeasible
        FeasibleUpTo,         // graded: evidence at the degree cap
        InfeasibleCertified,  // graded: verified Farkas certificate
        Gated,                // skipped: ring is not reduced
    } status = Status::Gated;
    std::optional<FiniteSplitResult> finite;
    std::optional<GradedSplitResult> graded;
    std::optional<FedderVerdict> fedder;  // level-1 cross-oracle (graded only)
};

/// Verdict of the height search with certificates. Finite algebras get exact
/// answers; graded hypersurfaces get certified lower bounds plus feasibility
/// evidence carrying the degree cap they were computed at.
struct HeightReport {
    std::string ring_description;
    bool reduced = true;
    std::string nilpotent_witness;  // printable witness when not reduced
    std::vector<PerLevelVerdict> levels;
    HeightValue height;
    std::uint32_t requested_max_level = 0;
    std::uint32_t effective_max_level = 0;
};

HeightReport height_search(const FiniteAlgebra& ring, std::uint32_t max_level,
                           QKind kind = QKind::ModpQuotient,
                           std::uint64_t enum_cap = kDefaultEnumCap);

HeightReport height_search(const GradedQuotient& ring, std::uint32_t max_level,
                           std::uint32_t degree_cap);

}  // namespace qfp
