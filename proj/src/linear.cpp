#include "qfp/linear.hpp"

#include <algorithm>

#include "qfp/monomial.hpp"

namespace qfp {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "non-invertible residue");
    return std::uint32_t(t < 0 ? t + p : t);
}

struct BitRow {
    std::vector<std::uint64_t> w;
    explicit BitRow(std::size_t bits) : w((bits + 63) / 64, 0) {}
    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    void operator^=(const BitRow& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
};

}  // namespace

void GfpRowSpace::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[pivots_[r]] % p_;
        if (c == 0) continue;
        const auto& row = rows_[r];
        for (std::size_t i = 0; i < width_; ++i)
            v[i] = (v[i] + (p_ - c) * row[i]) % p_;
    }
}

bool GfpRowSpace::insert(std::vector<std::uint32_t> v) {
    for (auto& x : v) x %= p_;
    reduce(v);
    std::size_t piv = width_;
    for (std::size_t i = 0; i < width_; ++i)
        if (v[i] != 0) {
            piv = i;
            break;
        }
    if (piv == width_) return false;
    std::uint32_t inv = inv_mod(v[piv], p_);
    for (auto& x : v) x = (x * inv) % p_;
    // keep earlier rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = rows_[r][piv];
        if (c == 0) continue;
        for (std::size_t i = 0; i < width_; ++i)
            rows_[r][i] = (rows_[r][i] + (p_ - c) * v[i]) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool GfpRowSpace::contains(std::vector<std::uint32_t> v) const {
    for (auto& x : v) x %= p_;
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

GfpLinearSystem::GfpLinearSystem(std::uint32_t p, std::size_t num_cols)
    : p_(p), cols_(num_cols) {
    require(p >= 2, "modulus must be at least 2");
}

std::size_t GfpLinearSystem::add_row(
    std::vector<std::pair<std::size_t, std::uint32_t>> entries, std::uint32_t rhs) {
    std::sort(entries.begin(), entries.end());
    std::vector<std::pair<std::size_t, std::uint32_t>> merged;
    for (auto& [col, c] : entries) {
        require(col < cols_, "row entry out of range");
        if (!merged.empty() && merged.back().first == col)
            merged.back().second = (merged.back().second + c) % p_;
        else
            merged.emplace_back(col, c % p_);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    rows_.push_back({std::move(merged), rhs % p_});
    return rows_.size() - 1;
}

LinearSolveResult GfpLinearSystem::solve(bool want_certificate) const {
    return p_ == 2 ? solve_gf2(want_certificate) : solve_generic(want_certificate);
}

LinearSolveResult GfpLinearSystem::solve_gf2(bool want_certificate) const {
    const std::size_t n = rows_.size();
    const std::size_t track_off = cols_ + 1;
    const std::size_t width = cols_ + 1 + (want_certificate ? n : 0);

    std::vector<BitRow> m;
    m.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        BitRow row(width);
        for (const auto& [col, c] : rows_[r].entries)
            if (c & 1) row.set(col);
        if (rows_[r].rhs & 1) row.set(cols_);
        if (want_certificate) row.set(track_off + r);
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_row_of_col(cols_, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < n; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = next; r < n; ++r)
            if (m[r].get(col)) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(m[piv], m[next]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != next && m[r].get(col)) m[r] ^= m[next];
        pivot_row_of_col[col] = next;
        ++next;
    }

    LinearSolveResult res;
    for (std::size_t r = next; r < n; ++r) {
        if (!m[r].get(cols_)) continue;
        res.feasible = false;
        if (want_certificate) {
            for (std::size_t k = 0; k < n; ++k)
                if (m[r].get(track_off + k)) {
                    res.farkas_rows.push_back(k);
                    res.farkas_coeffs.push_back(1);
                }
        }
        return res;
    }
    res.feasible = true;
    res.solution.assign(cols_, 0);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t r = pivot_row_of_col[col];
        if (r != SIZE_MAX && m[r].get(cols_)) res.solution[col] = 1;
    }
    return res;
}

LinearSolveResult GfpLinearSystem::solve_generic(bool want_certificate) const {
    const std::size_t n = rows_.size();
    const std::size_t width = cols_ + 1;
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(width, 0));
    std::vector<std::vector<std::uint32_t>> track;
    if (want_certificate) track.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& [col, c] : rows_[r].entries) m[r][col] = c;
        m[r][cols_] = rows_[r].rhs;
        if (want_certificate) track[r][r] = 1;
    }

    auto axpy = [&](std::size_t dst, std::size_t src, std::uint32_t c) {
        for (std::size_t i = 0; i < width; ++i)
            m[dst][i] = (m[dst][i] + c * std::uint64_t(m[src][i])) % p_;
        if (want_certificate)
            for (std::size_t i = 0; i < n; ++i)
                track[dst][i] = (track[dst][i] + c * std::uint64_t(track[src][i])) % p_;
    };

    std::vector<std::size_t> pivot_row_of_col(cols_, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < n; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = next; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(m[piv], m[next]);
        if (want_certificate) std::swap(track[piv], track[next]);
        std::uint32_t inv = inv_mod(m[next][col], p_);
        for (std::size_t i = 0; i < width; ++i)
            m[next][i] = std::uint32_t((std::uint64_t(m[next][i]) * inv) % p_);
        if (want_certificate)
            for (std::size_t i = 0; i < n; ++i)
                track[next][i] = std::uint32_t((std::uint64_t(track[next][i]) * inv) % p_);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == next || m[r][col] == 0) continue;
            axpy(r, next, p_ - m[r][col]);
        }
        pivot_row_of_col[col] = next;
        ++next;
    }

    LinearSolveResult res;
    for (std::size_t r = next; r < n; ++r) {
        if (m[r][cols_] == 0) continue;
        res.feasible = false;
        if (want_certificate) {
            std::uint32_t scale = inv_mod(m[r][cols_], p_);
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t c = std::uint32_t((std::uint64_t(track[r][k]) * scale) % p_);
                if (c != 0) {
                    res.farkas_rows.push_back(k);
                    res.farkas_coeffs.push_back(c);
                }
            }
        }
        return res;
    }
    res.feasible = true;
    res.solution.assign(cols_, 0);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t r = pivot_row_of_col[col];
        if (r != SIZE_MAX) res.solution[col] = m[r][cols_];
    }
    return res;
}

bool GfpLinearSystem::check_solution(const std::vector<std::uint32_t>& sol) const {
    if (sol.size() != cols_) return false;
    for (const auto& row : rows_) {
        std::uint64_t acc = 0;
        for (const auto& [col, c] : row.entries) acc += std::uint64_t(c) * sol[col];
        if (acc % p_ != row.rhs % p_) return false;
    }
    return true;
}

bool GfpLinearSystem::check_farkas(const std::vector<std::size_t>& rows,
                                   const std::vector<std::uint32_t>& coeffs) const {
    if (rows.size() != coeffs.size() || rows.empty()) return false;
    std::vector<std::uint64_t> acc(cols_, 0);
    std::uint64_t rhs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_.size()) return false;
        const auto& row = rows_[rows[i]];
        for (const auto& [col, c] : row.entries) acc[col] += std::uint64_t(c) * coeffs[i];
        rhs += std::uint64_t(row.rhs) * coeffs[i];
    }
    for (auto a : acc)
        if (a % p_ != 0) return false;
    return rhs % p_ != 0;
}

}  // namespace qfp
