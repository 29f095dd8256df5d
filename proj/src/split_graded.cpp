#include <algorithm>
#include <sstream>

#include "qfp/split.hpp"

namespace qfp {
namespace {

struct UnknownEntry {
    bool is_quot;       // false: sigma on a base monomial; true: lambda on a class
    std::uint32_t block;
    std::size_t index;  // monomial / quotient-class index inside the block
    std::uint32_t coeff;
};

/// Per-block data of the graded model: bases of the relevant graded pieces
/// and, at level 2, the square-span quotient of the top piece.
struct Block {
    std::vector<Monomial> base;      // R_e
    std::vector<Monomial> mid;       // R_{pe}: sigma arguments
    std::vector<Monomial> top;       // R_{p^2 e}: lambda arguments (level 2)
    GfpRowSpace squares{2, 0};       // span of squares inside the top piece
    std::vector<std::size_t> quot_cols;  // non-pivot top columns = class reps
    std::size_t sigma_col0 = 0;
    std::size_t lambda_col0 = 0;
};

class GradedAssembler {
public:
    GradedAssembler(const GradedQuotient& R, std::uint32_t level, std::uint32_t D)
        : R_(R), level_(level), D_(D), p_(R.characteristic()) {
        require(level == 1 || level == 2, "graded system supports levels 1 and 2");
        if (level == 2) require(p_ == 2, "level-2 graded system is implemented for p = 2");

        blocks_.resize(D + 1);
        std::size_t cols = 0;
        for (std::uint32_t e = 0; e <= D; ++e) {
            Block& b = blocks_[e];
            b.base = R.graded_piece_basis(e);
            b.mid = R.graded_piece_basis(p_ * e);
            b.sigma_col0 = cols;
            cols += b.mid.size() * b.base.size();
            if (level == 2) {
                b.top = R.graded_piece_basis(p_ * p_ * e);
                b.squares = GfpRowSpace(p_, b.top.size());
                for (const auto& m : b.mid) {
                    SparsePoly sq = R.normal_form(
                        SparsePoly::from_terms(R.num_vars(), gf(p_),
                                               {{mono_mul(m, m), mpz_class(1)}},
                                               R.ideal().order));
                    b.squares.insert(coords(sq, b.top));
                }
                std::vector<bool> pivot(b.top.size(), false);
                for (auto c : b.squares.pivots()) pivot[c] = true;
                for (std::size_t c = 0; c < b.top.size(); ++c)
                    if (!pivot[c]) b.quot_cols.push_back(c);
                b.lambda_col0 = cols;
                cols += b.quot_cols.size() * b.base.size();
            }
        }
        sys_ = std::make_unique<GfpLinearSystem>(p_, cols);
    }

    GradedSplitResult run() {
        // unit-section rows: sigma(m^p) = m for base monomials of every block
        for (std::uint32_t e = 0; e <= D_; ++e) {
            const Block& b = blocks_[e];
            for (std::size_t mi = 0; mi < b.base.size(); ++mi) {
                SparsePoly mp = R_.normal_form(SparsePoly::from_terms(
                    R_.num_vars(), gf(p_),
                    {{pow_mono(b.base[mi], p_), mpz_class(1)}}, R_.ideal().order));
                auto expr = sigma_expr(e, mp);
                for (std::size_t t = 0; t < b.base.size(); ++t)
                    add_expr_row(expr, t, t == mi ? 1 : 0,
                                 {GradedRowInfo::Tag::SectionUnit, e,
                                  "sigma(" + mono_str(pow_mono(b.base[mi], p_)) +
                                      ") = " + mono_str(b.base[mi]) + " @" +
                                      mono_str(b.base[t])});
            }
        }

        // action rows: sigma(x_j^p * m) = x_j * sigma(m)
        for (std::uint32_t e = 0; e + 1 <= D_; ++e) {
            const Block& b = blocks_[e];
            const Block& bn = blocks_[e + 1];
            for (std::size_t mi = 0; mi < b.mid.size(); ++mi)
                for (std::uint32_t j = 0; j < R_.num_vars(); ++j) {
                    Monomial arg = b.mid[mi];
                    SparsePoly shifted = R_.normal_form(SparsePoly::from_terms(
                        R_.num_vars(), gf(p_),
                        {{mono_mul(arg, var_power(j, p_)), mpz_class(1)}},
                        R_.ideal().order));
                    auto lhs = sigma_expr(e + 1, shifted);
                    // rhs: x_j * sigma(m) expressed over the next base block
                    for (std::size_t t = 0; t < bn.base.size(); ++t) {
                        std::vector<std::pair<std::size_t, std::uint32_t>> row =
                            expr_coords(lhs, t);
                        for (std::size_t s = 0; s < b.base.size(); ++s) {
                            std::uint32_t c = var_mul_coeff(j, b.base[s], bn.base[t]);
                            if (c != 0)
                                row.emplace_back(sigma_col(mi, s, b), (p_ - c) % p_);
                        }
                        sys_->add_row(std::move(row), 0);
                        info_.push_back({GradedRowInfo::Tag::LinearityBase, e + 1,
                                         "sigma(" + R_.var_names()[j] + "^p * " +
                                             mono_str(arg) + ") = " + R_.var_names()[j] +
                                             "*sigma(" + mono_str(arg) + ") @" +
                                             mono_str(bn.base[t])});
                    }
                }
        }

        // level-2 rows: lambda(x_j^(p^2) * c) = x_j * lambda(c)
        if (level_ == 2)
            for (std::uint32_t e = 0; e + 1 <= D_; ++e) {
                const Block& b = blocks_[e];
                const Block& bn = blocks_[e + 1];
                for (std::size_t qi = 0; qi < b.quot_cols.size(); ++qi)
                    for (std::uint32_t j = 0; j < R_.num_vars(); ++j) {
                        const Monomial& rep = b.top[b.quot_cols[qi]];
                        SparsePoly shifted = R_.normal_form(SparsePoly::from_terms(
                            R_.num_vars(), gf(p_),
                            {{mono_mul(rep, var_power(j, p_ * p_)), mpz_class(1)}},
                            R_.ideal().order));
                        auto lhs = lambda_expr(e + 1, shifted);
                        for (std::size_t t = 0; t < bn.base.size(); ++t) {
                            std::vector<std::pair<std::size_t, std::uint32_t>> row =
                                expr_coords(lhs, t);
                            for (std::size_t s = 0; s < b.base.size(); ++s) {
                                std::uint32_t c =
                                    var_mul_coeff(j, b.base[s], bn.base[t]);
                                if (c != 0)
                                    row.emplace_back(lambda_col(qi, s, b), (p_ - c) % p_);
                            }
                            sys_->add_row(std::move(row), 0);
                            info_.push_back({GradedRowInfo::Tag::LinearityQuot, e + 1,
                                             "lambda(" + R_.var_names()[j] + "^(p^2) * " +
                                                 mono_str(rep) + ") = " +
                                                 R_.var_names()[j] + "*lambda(" +
                                                 mono_str(rep) + ") @" +
                                                 mono_str(bn.base[t])});
                        }
                    }
            }

        GradedSplitResult out;
        out.level = level_;
        out.degree_cap = D_;
        out.num_rows = sys_->rows();
        out.num_cols = sys_->cols();
        LinearSolveResult sol = sys_->solve(true);
        out.feasible = sol.feasible;
        out.row_info = info_;
        if (sol.feasible) {
            require(sys_->check_solution(sol.solution), "graded solution failed re-check");
            out.certificate_verified = true;
            for (std::uint32_t e = 0; e <= D_; ++e) {
                const Block& b = blocks_[e];
                for (std::size_t mi = 0; mi < b.mid.size(); ++mi) {
                    std::string v = value_str(sol.solution, b.sigma_col0 + mi * b.base.size(),
                                              b.base);
                    if (v != "0")
                        out.sigma_values["sigma[" + mono_str(b.mid[mi]) + "]"] = v;
                }
                for (std::size_t qi = 0; qi < b.quot_cols.size(); ++qi) {
                    std::string v = value_str(
                        sol.solution, b.lambda_col0 + qi * b.base.size(), b.base);
                    if (v != "0")
                        out.sigma_values["lambda[" + mono_str(b.top[b.quot_cols[qi]]) + "]"] =
                            v;
                }
            }
        } else {
            out.farkas_rows = sol.farkas_rows;
            out.farkas_coeffs = sol.farkas_coeffs;
            out.certificate_verified = sys_->check_farkas(sol.farkas_rows, sol.farkas_coeffs);
            require(out.certificate_verified, "infeasibility certificate failed re-check");
        }
        return out;
    }

private:
    using Expr = std::vector<UnknownEntry>;

    std::size_t sigma_col(std::size_t mi, std::size_t t, const Block& b) const {
        return b.sigma_col0 + mi * b.base.size() + t;
    }
    std::size_t lambda_col(std::size_t qi, std::size_t t, const Block& b) const {
        return b.lambda_col0 + qi * b.base.size() + t;
    }

    static Monomial pow_mono(const Monomial& m, std::uint32_t k) {
        Monomial r = m;
        for (auto& x : r) {
            std::uint32_t v = std::uint32_t(x) * k;
            require(v <= 0xffffu, "monomial exponent overflow");
            x = std::uint16_t(v);
        }
        return r;
    }
    Monomial var_power(std::uint32_t j, std::uint32_t k) const {
        Monomial m(R_.num_vars(), 0);
        m[j] = std::uint16_t(k);
        return m;
    }

    static std::vector<std::uint32_t> coords(const SparsePoly& f,
                                             const std::vector<Monomial>& basis) {
        std::vector<std::uint32_t> v(basis.size(), 0);
        for (const auto& t : f.terms()) {
            auto it = std::find(basis.begin(), basis.end(), t.mono);
            require(it != basis.end(), "element leaves the graded block basis");
            v[std::size_t(it - basis.begin())] = std::uint32_t(t.coeff.get_ui());
        }
        return v;
    }

    /// Value of sigma at a normal-form element of R_{pe}: linear in the
    /// monomial unknowns, with the level-2 pairwise-carry correction landing
    /// in the lambda unknowns of the same block.
    Expr sigma_expr(std::uint32_t e, const SparsePoly& v) {
        const Block& b = blocks_[e];
        Expr out;
        std::vector<std::pair<std::size_t, std::uint32_t>> supp;
        for (const auto& t : v.terms()) {
            auto it = std::find(b.mid.begin(), b.mid.end(), t.mono);
            require(it != b.mid.end(), "sigma argument outside the block basis");
            supp.emplace_back(std::size_t(it - b.mid.begin()),
                              std::uint32_t(t.coeff.get_ui()));
        }
        for (auto& [mi, c] : supp) out.push_back({false, e, mi, c});
        if (level_ == 2 && supp.size() >= 2) {
            SparsePoly carry = SparsePoly::zero(R_.num_vars(), gf(p_), R_.ideal().order);
            for (std::size_t k = 0; k < supp.size(); ++k)
                for (std::size_t l = k + 1; l < supp.size(); ++l)
                    carry = carry.add(R_.normal_form(SparsePoly::from_terms(
                        R_.num_vars(), gf(p_),
                        {{mono_mul(b.mid[supp[k].first], b.mid[supp[l].first]),
                          mpz_class(1)}},
                        R_.ideal().order)));
            Expr lam = lambda_expr(e, carry);
            out.insert(out.end(), lam.begin(), lam.end());
        }
        return out;
    }

    /// Value of lambda at a normal-form element of R_{p^2 e}, reduced modulo
    /// the span of squares.
    Expr lambda_expr(std::uint32_t e, const SparsePoly& v) {
        const Block& b = blocks_[e];
        std::vector<std::uint32_t> c = coords(v, b.top);
        b.squares.reduce(c);
        Expr out;
        for (std::size_t qi = 0; qi < b.quot_cols.size(); ++qi)
            if (c[b.quot_cols[qi]] != 0) out.push_back({true, e, qi, c[b.quot_cols[qi]]});
        return out;
    }

    std::vector<std::pair<std::size_t, std::uint32_t>> expr_coords(const Expr& expr,
                                                                   std::size_t t) const {
        std::vector<std::pair<std::size_t, std::uint32_t>> row;
        for (const auto& u : expr) {
            const Block& b = blocks_[u.block];
            std::size_t col = u.is_quot ? lambda_col(u.index, t, b)
                                        : sigma_col(u.index, t, b);
            row.emplace_back(col, u.coeff);
        }
        return row;
    }

    void add_expr_row(const Expr& expr, std::size_t t, std::uint32_t rhs,
                      GradedRowInfo info) {
        sys_->add_row(expr_coords(expr, t), rhs);
        info_.push_back(std::move(info));
    }

    /// Coefficient of target monomial `to` inside nf(x_j * from).
    std::uint32_t var_mul_coeff(std::uint32_t j, const Monomial& from, const Monomial& to) {
        SparsePoly prod = R_.normal_form(SparsePoly::from_terms(
            R_.num_vars(), gf(p_), {{mono_mul(from, var_power(j, 1)), mpz_class(1)}},
            R_.ideal().order));
        for (const auto& t : prod.terms())
            if (t.mono == to) return std::uint32_t(t.coeff.get_ui());
        return 0;
    }

    std::string mono_str(const Monomial& m) const {
        SparsePoly f = SparsePoly::from_terms(R_.num_vars(), gf(p_), {{m, mpz_class(1)}},
                                              R_.ideal().order);
        return f.to_string(R_.var_names());
    }

    std::string value_str(const std::vector<std::uint32_t>& sol, std::size_t col0,
                          const std::vector<Monomial>& base) const {
        std::vector<SparsePoly::Term> terms;
        for (std::size_t t = 0; t < base.size(); ++t)
            if (sol[col0 + t] != 0)
                terms.push_back({base[t], mpz_class(long(sol[col0 + t]))});
        if (terms.empty()) return "0";
        return SparsePoly::from_terms(R_.num_vars(), gf(p_), std::move(terms),
                                      R_.ideal().order)
            .to_string(R_.var_names());
    }

    const GradedQuotient& R_;
    std::uint32_t level_;
    std::uint32_t D_;
    std::uint32_t p_;
    std::vector<Block> blocks_;
    std::unique_ptr<GfpLinearSystem> sys_;
    std::vector<GradedRowInfo> info_;
};

}  // namespace

FedderVerdict fedder_check(const SparsePoly& f) {
    require(!f.is_zero(), "Fedder check of zero polynomial");
    require(!f.domain().is_integers(), "Fedder check works over GF(p)");
    require(f.is_homogeneous(), "Fedder check needs a homogeneous polynomial");
    const std::uint32_t p = f.domain().p;
    IdealBasis bracket;
    bracket.order = f.order();
    for (std::uint32_t v = 0; v < f.arity(); ++v)
        bracket.gens.push_back(
            SparsePoly::variable(f.arity(), f.domain(), v, std::uint16_t(p), f.order()));
    bracket.is_groebner = true;  // monomial ideals are their own Groebner bases
    SparsePoly power = f.pow(p - 1);
    return groebner_normal_form(power, bracket).is_zero() ? FedderVerdict::NotFSplit
                                                          : FedderVerdict::FSplit;
}

GradedSplitResult split_graded_system(const GradedQuotient& ring, std::uint32_t level,
                                      std::uint32_t degree_cap) {
    require(degree_cap >= 2, "degree cap must be at least 2");
    auto reduced = ring.is_reduced();
    require(reduced.reduced, "graded splitting system requires a reduced hypersurface");
    GradedAssembler assembler(ring, level, degree_cap);
    return assembler.run();
}

}  // namespace qfp
