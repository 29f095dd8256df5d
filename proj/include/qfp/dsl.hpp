#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qfp/finite_algebra.hpp"
#include "qfp/graded_quotient.hpp"
#include "qfp/poly.hpp"

namespace qfp {

/// Parsed ring declaration:
///   ring NAME = GF(q)[x, y] / (f, g) finite|graded
struct RingDecl {
    enum class Mode { Finite, Graded };

    std::string name;
    std::uint32_t q = 2;           // field size as written
    std::uint32_t p = 2;           // characteristic
    std::uint32_t ext_degree = 1;  // q = p^ext_degree
    std::vector<std::string> vars;
    std::vector<SparsePoly> relations;  // over GF(p), arity = vars.size()
    Mode mode = Mode::Finite;

    bool operator==(const RingDecl& o) const;
};

/// Syntax errors carry position and the expected-token set.
struct ParseError : error {
    ParseError(std::size_t line, std::size_t col, const std::string& what,
               const std::string& expected);
    std::size_t line, col;
    std::string expected;
};

std::vector<RingDecl> parse_ring_file(const std::string& text);
RingDecl parse_ring_decl(const std::string& text);
std::string print_ring_decl(const RingDecl& decl);

/// Standalone polynomial expression parser over the declared variables
/// (used by the declaration grammar and by tests).
SparsePoly parse_poly_text(const std::string& text, const std::vector<std::string>& vars,
                           Domain dom);

/// A declaration realized as a computable ring object (exactly one is set).
struct RealizedRing {
    std::shared_ptr<FiniteAlgebra> finite;
    std::shared_ptr<GradedQuotient> graded;
};
RealizedRing realize(const RingDecl& decl, std::size_t finite_dim_cap = kMaxAlgebraDim);

}  // namespace qfp
