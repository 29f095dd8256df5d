#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qfp {

/// Incrementally built row space over GF(p) in reduced echelon form.
/// Used for membership tests and canonical coset reduction.
class GfpRowSpace {
public:
    GfpRowSpace(std::uint32_t p, std::size_t width) : p_(p), width_(width) {}

    /// Reduce v modulo the span in place (kills every pivot coordinate).
    void reduce(std::vector<std::uint32_t>& v) const;
    /// Insert a vector; returns true when the rank grew.
    bool insert(std::vector<std::uint32_t> v);
    bool contains(std::vector<std::uint32_t> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    std::uint32_t modulus() const { return p_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::uint32_t p_;
    std::size_t width_;
    std::vector<std::vector<std::uint32_t>> rows_;  // each with leading 1 at its pivot
    std::vector<std::size_t> pivots_;
};

struct LinearSolveResult {
    bool feasible = false;
    /// Feasible: one value per column; free variables pinned to zero.
    std::vector<std::uint32_t> solution;
    /// Infeasible: rows and multipliers of a combination summing to 0 = 1.
    std::vector<std::size_t> farkas_rows;
    std::vector<std::uint32_t> farkas_coeffs;
};

/// Dense affine-feasibility solver over GF(p). Rows are retained sparsely so
/// certificates and solutions can be re-verified against the original system.
/// Elimination uses a fixed first-pivot policy, so results are reproducible.
class GfpLinearSystem {
public:
    GfpLinearSystem(std::uint32_t p, std::size_t num_cols);

    std::size_t add_row(std::vector<std::pair<std::size_t, std::uint32_t>> entries,
                        std::uint32_t rhs);
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    LinearSolveResult solve(bool want_certificate) const;

    bool check_solution(const std::vector<std::uint32_t>& sol) const;
    bool check_farkas(const std::vector<std::size_t>& rows,
                      const std::vector<std::uint32_t>& coeffs) const;

private:
    struct Row {
        std::vector<std::pair<std::size_t, std::uint32_t>> entries;
        std::uint32_t rhs;
    };
    LinearSolveResult solve_gf2(bool want_certificate) const;
    LinearSolveResult solve_generic(bool want_certificate) const;

    std::uint32_t p_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

}  // namespace qfp
