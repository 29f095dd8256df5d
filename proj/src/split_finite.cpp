#include "qfp/split.hpp"

namespace qfp {

FiniteSplitResult split_finite(const QModelFinite& q) {
    const FiniteAlgebra& R = q.ring();
    const std::uint32_t p = R.characteristic();
    const std::size_t dim = R.dim();
    const std::size_t nc = q.class_count();
    const std::size_t cols = nc * dim;
    auto col = [&](std::uint32_t cls, std::size_t k) { return std::size_t(cls) * dim + k; };

    GfpLinearSystem sys(p, cols);

    // additivity on every class pair
    for (std::uint32_t a = 0; a < nc; ++a)
        for (std::uint32_t b = 0; b <= a; ++b) {
            std::uint32_t s = q.add(a, b);
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<std::pair<std::size_t, std::uint32_t>> row;
                row.emplace_back(col(s, k), 1);
                row.emplace_back(col(a, k), p - 1);
                row.emplace_back(col(b, k), p - 1);
                sys.add_row(std::move(row), 0);
            }
        }

    // compatibility with the action of each basis element:
    // sigma(b_i . c) = b_i * sigma(c)
    for (std::size_t i = 0; i < dim; ++i) {
        AlgElem bi = R.basis_elem(i);
        for (std::uint32_t c = 0; c < nc; ++c) {
            std::uint32_t ac = q.act(i, c);
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<std::pair<std::size_t, std::uint32_t>> row;
                row.emplace_back(col(ac, k), 1);
                // subtract the k-th coordinate of b_i * sigma(c)
                for (std::size_t j = 0; j < dim; ++j) {
                    AlgElem prod = R.mul(bi, R.basis_elem(j));
                    if (prod.c[k] != 0)
                        row.emplace_back(col(c, j), (p - prod.c[k]) % p);
                }
                sys.add_row(std::move(row), 0);
            }
        }
    }

    // unit section on the basis: sigma(phi(b_i)) = b_i
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint32_t c = q.phi(R.basis_elem(i));
        for (std::size_t k = 0; k < dim; ++k)
            sys.add_row({{col(c, k), 1}}, k == i ? 1 : 0);
    }

    // W_n-linearity forces sigma to vanish where multiplication by p lands
    for (std::uint32_t c : q.p_image_classes())
        for (std::size_t k = 0; k < dim; ++k) sys.add_row({{col(c, k), 1}}, 0);

    LinearSolveResult sol = sys.solve(false);
    FiniteSplitResult out;
    out.split = sol.feasible;
    if (!sol.feasible) return out;

    out.sigma.values.reserve(nc);
    for (std::uint32_t c = 0; c < nc; ++c) {
        std::vector<std::uint32_t> coeffs(dim);
        for (std::size_t k = 0; k < dim; ++k) coeffs[k] = sol.solution[col(c, k)];
        out.sigma.values.push_back(R.from_coeffs(coeffs));
    }

    // independent re-verification of the certificate by direct evaluation
    bool ok = true;
    auto sigma = [&](std::uint32_t c) { return out.sigma.values[c]; };
    for (std::uint32_t a = 0; a < nc && ok; ++a)
        for (std::uint32_t b = 0; b < nc; ++b)
            if (!(sigma(q.add(a, b)) == R.add(sigma(a), sigma(b)))) {
                ok = false;
                break;
            }
    for (std::uint64_t i = 0; i < R.element_count() && ok; ++i) {
        AlgElem r = R.elem_at(i);
        if (!(sigma(q.phi(r)) == r)) ok = false;
        for (std::uint32_t c = 0; c < nc && ok; ++c)
            if (!(sigma(q.act_elem(r, c)) == R.mul(r, sigma(c)))) ok = false;
    }
    for (std::uint32_t c : q.p_image_classes())
        if (!sigma(c).is_zero()) ok = false;
    require(ok, "splitting certificate failed re-verification");
    out.certificate_verified = ok;

    for (std::uint32_t c = 0; c < nc; ++c) {
        const auto& rep = q.representative(c);
        std::string s = "sigma(";
        for (std::uint32_t i = 0; i < rep.length(); ++i)
            s += (i ? "," : "") + R.to_string(rep.coords[i]);
        out.sigma_display.push_back(s + ") = " + R.to_string(out.sigma.values[c]));
    }
    return out;
}

FiniteSplitResult split_finite(const FiniteAlgebra& ring, std::uint32_t n, QKind kind,
                               std::uint64_t enum_cap) {
    QModelFinite q(ring, n, kind, enum_cap);
    return split_finite(q);
}

}  // namespace qfp
