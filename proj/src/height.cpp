#include "qfp/height.hpp"

namespace qfp {

HeightReport height_search(const FiniteAlgebra& ring, std::uint32_t max_level, QKind kind,
                           std::uint64_t enum_cap) {
    require(max_level >= 1, "height search needs at least one level");
    HeightReport rep;
    rep.ring_description = ring.describe();
    rep.requested_max_level = max_level;
    rep.effective_max_level = max_level;

    auto reduced = ring.is_reduced(enum_cap);
    rep.reduced = reduced.reduced;
    if (!reduced.reduced) {
        rep.nilpotent_witness = ring.to_string(reduced.witness);
        for (std::uint32_t n = 1; n <= max_level; ++n) {
            PerLevelVerdict v;
            v.level = n;
            v.status = PerLevelVerdict::Status::Gated;
            rep.levels.push_back(std::move(v));
        }
        rep.height.kind = HeightValue::Kind::Infinity;
        return rep;
    }

    for (std::uint32_t n = 1; n <= max_level; ++n) {
        PerLevelVerdict v;
        v.level = n;
        v.finite = split_finite(ring, n, kind, enum_cap);
        v.status = v.finite->split ? PerLevelVerdict::Status::Split
                                   : PerLevelVerdict::Status::NotSplit;
        bool done = v.finite->split;
        rep.levels.push_back(std::move(v));
        if (done) {
            rep.height.kind = HeightValue::Kind::Exact;
            rep.height.value = n;
            return rep;
        }
    }
    rep.height.kind = HeightValue::Kind::LowerBound;
    rep.height.value = max_level + 1;
    return rep;
}

HeightReport height_search(const GradedQuotient& ring, std::uint32_t max_level,
                           std::uint32_t degree_cap) {
    require(max_level >= 1, "height search needs at least one level");
    HeightReport rep;
    rep.ring_description = ring.describe();
    rep.requested_max_level = max_level;
    rep.effective_max_level =
        std::min(max_level, ring.characteristic() == 2 ? 2u : 1u);

    auto reduced = ring.is_reduced();
    rep.reduced = reduced.reduced;
    if (!reduced.reduced) {
        rep.nilpotent_witness = reduced.witness.to_string(ring.var_names());
        for (std::uint32_t n = 1; n <= rep.effective_max_level; ++n) {
            PerLevelVerdict v;
            v.level = n;
            v.status = PerLevelVerdict::Status::Gated;
            rep.levels.push_back(std::move(v));
        }
        rep.height.kind = HeightValue::Kind::Infinity;
        return rep;
    }

    // level 1: the truncated system, cross-checked against the exact
    // hypersurface criterion
    {
        PerLevelVerdict v;
        v.level = 1;
        v.fedder = fedder_check(ring.hypersurface());
        v.graded = split_graded_system(ring, 1, degree_cap);
        if (*v.fedder == FedderVerdict::FSplit) {
            // a genuine splitting survives every truncation
            require(v.graded->feasible,
                    "level-1 system infeasible although the hypersurface criterion splits");
            v.status = PerLevelVerdict::Status::FeasibleUpTo;
            rep.levels.push_back(std::move(v));
            rep.height.kind = HeightValue::Kind::Exact;
            rep.height.value = 1;
            return rep;
        }
        // not split at level 1; look for a truncation certificate, widening
        // the cap a little if the obstruction is not yet visible
        std::uint32_t cap = degree_cap;
        while (v.graded->feasible && cap < degree_cap + 3)
            v.graded = split_graded_system(ring, 1, ++cap);
        v.status = v.graded->feasible ? PerLevelVerdict::Status::FeasibleUpTo
                                      : PerLevelVerdict::Status::InfeasibleCertified;
        rep.levels.push_back(std::move(v));
    }

    if (rep.effective_max_level < 2) {
        rep.height.kind = HeightValue::Kind::LowerBound;
        rep.height.value = 2;
        return rep;
    }

    // level 2 (p = 2): feasibility is evidence, infeasibility certifies >= 3
    PerLevelVerdict v;
    v.level = 2;
    v.graded = split_graded_system(ring, 2, degree_cap);
    v.status = v.graded->feasible ? PerLevelVerdict::Status::FeasibleUpTo
                                  : PerLevelVerdict::Status::InfeasibleCertified;
    bool feasible = v.graded->feasible;
    rep.levels.push_back(std::move(v));

    rep.height.kind = HeightValue::Kind::LowerBound;
    if (feasible) {
        rep.height.value = 2;
        rep.height.evidence_degree = degree_cap;
    } else {
        rep.height.value = 3;
    }
    return rep;
}

}  // namespace qfp
