#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfp/dsl.hpp"
#include "qfp/finite_algebra.hpp"
#include "qfp/graded_quotient.hpp"

using namespace qfp;

namespace {

// hypersurface Hilbert series oracle: dim R_e for GF(p)[x_0..x_{v-1}]/(f),
// deg f = d, computed from binomial coefficients independently of the basis
// enumeration under test
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::uint64_t hypersurface_dim(std::uint32_t vars, std::uint32_t deg_f, std::uint32_t e) {
    std::uint64_t all = binom(e + vars - 1, vars - 1);
    std::uint64_t killed = e >= deg_f ? binom(e - deg_f + vars - 1, vars - 1) : 0;
    return all - killed;
}

}  // namespace

TEST_CASE("finite algebra presentations") {
    // GF(2)[x]/(x^2): two basis monomials, x * x = 0
    FiniteAlgebra A = FiniteAlgebra::truncated_line(2, 2);
    CHECK(A.dim() == 2);
    CHECK(A.mul(A.basis_elem(1), A.basis_elem(1)).is_zero());

    // GF(2)[u]/(u^2+u+1) is the field with four elements
    FiniteAlgebra F4 = FiniteAlgebra::finite_field(2, 2);
    CHECK(F4.dim() == 2);
    CHECK(F4.element_count() == 4);
    // every nonzero element has an inverse: r^3 = 1
    for (std::uint64_t i = 1; i < 4; ++i)
        CHECK(F4.pow(F4.elem_at(i), 3) == F4.one());

    // GF(2)[x]/(x^2+x) decomposes: x and x+1 are complementary idempotents
    std::vector<std::string> v = {"x"};
    FiniteAlgebra B = FiniteAlgebra::from_presentation(
        2, v, {parse_poly_text("x^2 + x", v, gf(2))});
    AlgElem e1 = B.basis_elem(1);
    AlgElem e2 = B.add(B.one(), e1);
    CHECK(B.mul(e1, e1) == e1);
    CHECK(B.mul(e2, e2) == e2);
    CHECK(B.mul(e1, e2).is_zero());
    CHECK(B.add(e1, e2) == B.one());

    // an infinite-dimensional quotient is rejected
    std::vector<std::string> xy = {"x", "y"};
    CHECK_THROWS_AS(FiniteAlgebra::from_presentation(
                        2, xy,
                        {parse_poly_text("x^2", xy, gf(2)),
                         parse_poly_text("x*y", xy, gf(2))}),
                    error);

    // dimension caps are enforced
    CHECK_THROWS_AS(FiniteAlgebra::from_presentation(
                        2, v, {parse_poly_text("x^2", v, gf(2))}, 1),
                    error);
}

TEST_CASE("graded piece bases") {
    std::vector<std::string> v = {"x", "y", "z"};
    GradedQuotient R(2, v, {parse_poly_text("x^3 + y^2*z + y*z^2", v, gf(2))});

    CHECK(R.graded_piece_basis(0).size() == 1);
    auto deg1 = R.graded_piece_basis(1);
    CHECK(deg1.size() == 3);
    CHECK(R.graded_piece_basis(3).size() == 9);  // ten cubics minus one relation

    // Hilbert series cross-check through degree 8
    for (std::uint32_t e = 0; e <= 8; ++e)
        CHECK(R.graded_piece_basis(e).size() == hypersurface_dim(3, 3, e));

    // piece bases multiply consistently with the grading
    SparsePoly a = R.var(0), b = R.var(1);
    CHECK(R.mul(a, b).is_homogeneous());
    CHECK(R.mul(a, b).degree() == 2);
}

TEST_CASE("frobenius powers") {
    FiniteAlgebra A = FiniteAlgebra::truncated_line(2, 2);
    CHECK(A.frobenius(A.basis_elem(1), 1).is_zero());  // x^2 = 0

    FiniteAlgebra F4 = FiniteAlgebra::finite_field(2, 2);
    AlgElem u = F4.basis_elem(1);
    CHECK(F4.frobenius(u, 2) == u);       // Frobenius has order 2 on GF(4)
    CHECK_FALSE(F4.frobenius(u, 1) == u); // and is nontrivial

    std::vector<std::string> v = {"x", "y", "z"};
    GradedQuotient R(2, v, {parse_poly_text("x^3 + y^2*z + y*z^2", v, gf(2))});
    SparsePoly s = R.make_poly({{Monomial{1, 0, 0}, 1}, {Monomial{0, 1, 0}, 1}});  // x+y
    CHECK(R.frobenius_power(s, 1).equals(parse_poly_text("x^2 + y^2", v, gf(2))));
}

TEST_CASE("frobenius is a ring endomorphism, exhaustively within the cap") {
    std::vector<FiniteAlgebra> gallery;
    gallery.push_back(FiniteAlgebra::finite_field(2, 2));
    gallery.push_back(FiniteAlgebra::finite_field(3));
    gallery.push_back(FiniteAlgebra::truncated_line(2, 3));
    for (const auto& A : gallery) {
        for (std::uint64_t i = 0; i < A.element_count(); ++i)
            for (std::uint64_t j = 0; j < A.element_count(); ++j) {
                AlgElem r = A.elem_at(i), s = A.elem_at(j);
                CHECK(A.frobenius(A.add(r, s), 1) ==
                      A.add(A.frobenius(r, 1), A.frobenius(s, 1)));
                CHECK(A.frobenius(A.mul(r, s), 1) ==
                      A.mul(A.frobenius(r, 1), A.frobenius(s, 1)));
            }
    }
}

TEST_CASE("reducedness verdicts") {
    // GF(2)[x]/(x^2): witness x
    FiniteAlgebra A = FiniteAlgebra::truncated_line(2, 2);
    auto va = A.is_reduced();
    CHECK_FALSE(va.reduced);
    CHECK(va.witness == A.basis_elem(1));

    // GF(4): a field is reduced
    CHECK(FiniteAlgebra::finite_field(2, 2).is_reduced().reduced);

    // exhaustive agreement: the verdict matches a direct r^dim scan
    std::vector<FiniteAlgebra> gallery;
    gallery.push_back(FiniteAlgebra::truncated_line(2, 4));
    gallery.push_back(FiniteAlgebra::finite_field(3));
    std::vector<std::string> v = {"x"};
    gallery.push_back(
        FiniteAlgebra::from_presentation(2, v, {parse_poly_text("x^2 + x", v, gf(2))}));
    for (const auto& R : gallery) {
        bool direct = true;
        for (std::uint64_t i = 1; i < R.element_count(); ++i)
            if (R.pow(R.elem_at(i), R.dim()).is_zero()) direct = false;
        CHECK(R.is_reduced().reduced == direct);
    }

    // graded hypersurface: the repeated-factor witness squares to zero
    std::vector<std::string> v3 = {"x", "y", "z"};
    GradedQuotient Q(2, v3, {parse_poly_text("x^2 + y^2 + z^2", v3, gf(2))});
    auto vq = Q.is_reduced();
    CHECK_FALSE(vq.reduced);
    CHECK(Q.frobenius_power(Q.normal_form(vq.witness), 1).is_zero());

    // non-principal graded presentations are reported as unsupported
    GradedQuotient NP(2, v3,
                      {parse_poly_text("x^2", v3, gf(2)), parse_poly_text("y^2", v3, gf(2))});
    CHECK_THROWS_AS(NP.is_reduced(), error);
}

TEST_CASE("local valuations on the truncated line") {
    FiniteAlgebra R = FiniteAlgebra::truncated_line(2, 12);
    CHECK(R.has_local_degrees());
    CHECK(R.local_valuation(R.one()) == 0);
    CHECK(R.local_valuation(R.basis_elem(3)) == 3);
    CHECK(R.local_valuation(R.zero()) == 12);
    CHECK(R.in_maximal_ideal_power(R.basis_elem(5), 5));
    CHECK_FALSE(R.in_maximal_ideal_power(R.basis_elem(5), 6));

    // a ring without monomial relations has no designated maximal ideal
    CHECK_FALSE(FiniteAlgebra::finite_field(2, 2).has_local_degrees());
    CHECK_THROWS_AS(FiniteAlgebra::finite_field(2, 2).local_valuation(
                        FiniteAlgebra::finite_field(2, 2).one()),
                    error);
}
