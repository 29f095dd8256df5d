#pragma once

#include <vector>

#include "qfp/poly.hpp"

namespace qfp {

/// Generating set of an ideal over GF(p), optionally completed to a reduced
/// Gröbner basis for its monomial order.
struct IdealBasis {
    std::vector<SparsePoly> gens;
    MonomialOrder order;
    bool is_groebner = false;
};

IdealBasis make_ideal(std::vector<SparsePoly> gens);

/// Buchberger completion with the sugar selection strategy; the result is
/// interreduced and monic.
IdealBasis buchberger(const IdealBasis& input);

/// Unique reduced normal form of f modulo a Gröbner basis; zero iff f lies in
/// the ideal.
SparsePoly groebner_normal_form(const SparsePoly& f, const IdealBasis& basis);

}  // namespace qfp
