#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfp {

/// Thrown on precondition violations and configured-cap overruns.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw error(msg);
}

// Hard limit on the total degree of any monomial produced by arithmetic.
// Exponents are stored as 16-bit integers; operations check instead of wrapping.
inline constexpr std::uint32_t kMaxTotalDegree = 4096;

/// Exponent vector of fixed arity.
using Monomial = std::vector<std::uint16_t>;

inline std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t e = std::uint32_t(a[i]) + b[i];
        require(e <= 0xffffu, "monomial exponent overflow");
        r[i] = std::uint16_t(e);
        deg += e;
    }
    require(deg <= kMaxTotalDegree, "monomial degree cap exceeded");
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    // a / b, requires b | a
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] >= b[i], "monomial division not exact");
        r[i] = std::uint16_t(a[i] - b[i]);
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool mono_is_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

/// Term order on monomials. Graded reverse lexicographic by default, with an
/// optional variable priority permutation (priority[k] = variable index read
/// at rank k; empty means identity).
struct MonomialOrder {
    enum class Kind : std::uint8_t { Grevlex };
    Kind kind = Kind::Grevlex;
    std::vector<std::uint32_t> priority;

    bool operator==(const MonomialOrder&) const = default;
};

/// Three-way comparison; negative means a < b in the order.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    const std::size_t k = a.size();
    // grevlex tie-break: last differing variable, smaller exponent wins
    if (ord.priority.empty()) {
        for (std::size_t i = k; i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    require(ord.priority.size() == k, "order priority arity mismatch");
    for (std::size_t i = k; i-- > 0;) {
        std::uint32_t v = ord.priority[i];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

}  // namespace qfp
