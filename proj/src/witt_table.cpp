#include <map>
#include <memory>
#include <mutex>

#include "qfp/witt.hpp"

namespace qfp {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t default_length_cap(std::uint32_t p) {
    if (p == 2 || p == 3) return 4;
    if (p == 5) return 3;
    return 2;
}

mpz_class p_power(std::uint32_t p, std::uint32_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

std::uint64_t int_pow(std::uint32_t p, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= p;
    return r;
}

WittTable generate(std::uint32_t p, std::uint32_t n) {
    const std::uint32_t arity2 = 2 * n;
    WittTable t;
    t.p = p;
    t.n = n;

    for (std::uint32_t m = 0; m < n; ++m) {
        SparsePoly gx = witt_ghost_poly(p, m, arity2, 0);
        SparsePoly gy = witt_ghost_poly(p, m, arity2, n);

        SparsePoly num_s = gx.add(gy);
        SparsePoly num_p = gx.mul(gy);
        for (std::uint32_t i = 0; i < m; ++i) {
            mpz_class pi = p_power(p, i);
            std::uint64_t q = int_pow(p, m - i);
            num_s = num_s.sub(t.sum[i].pow(q).mul_scalar(pi));
            num_p = num_p.sub(t.prod[i].pow(q).mul_scalar(pi));
        }
        t.sum.push_back(exact_div_by_int(num_s, p_power(p, m)));
        t.prod.push_back(exact_div_by_int(num_p, p_power(p, m)));

        SparsePoly g1 = witt_ghost_poly(p, m, n, 0);
        SparsePoly num_n = g1.neg();
        for (std::uint32_t i = 0; i < m; ++i)
            num_n = num_n.sub(t.negation[i].pow(int_pow(p, m - i)).mul_scalar(p_power(p, i)));
        t.negation.push_back(exact_div_by_int(num_n, p_power(p, m)));
    }
    return t;
}

struct TableCache {
    std::mutex mu;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<WittTable>> entries;
};

const WittTable& cached(TableCache& cache, std::uint32_t p, std::uint32_t n, bool modp,
                        std::uint32_t cap_override) {
    require(is_prime(p), "Witt prime must be prime");
    require(n >= 1, "Witt length must be positive");
    std::uint32_t cap = cap_override ? cap_override : default_length_cap(p);
    require(n <= cap, "Witt length exceeds the configured cap");

    std::scoped_lock lock(cache.mu);
    auto key = std::make_pair(p, n);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *it->second;

    auto table = std::make_unique<WittTable>(modp ? WittTable{} : generate(p, n));
    if (modp) {
        const WittTable& z = witt_table(p, n, cap_override);
        table->p = p;
        table->n = n;
        for (const auto& f : z.sum) table->sum.push_back(f.reduced_mod(p));
        for (const auto& f : z.prod) table->prod.push_back(f.reduced_mod(p));
        for (const auto& f : z.negation) table->negation.push_back(f.reduced_mod(p));
    }
    return *cache.entries.emplace(key, std::move(table)).first->second;
}

}  // namespace

SparsePoly witt_ghost_poly(std::uint32_t p, std::uint32_t m, std::uint32_t arity,
                           std::uint32_t offset) {
    require(offset + m < arity, "ghost component index out of range");
    std::vector<SparsePoly::Term> terms;
    for (std::uint32_t i = 0; i <= m; ++i) {
        Monomial mono(arity, 0);
        mono[offset + i] = std::uint16_t(int_pow(p, m - i));
        terms.push_back({std::move(mono), p_power(p, i)});
    }
    return SparsePoly::from_terms(arity, integers(), std::move(terms));
}

const WittTable& witt_table(std::uint32_t p, std::uint32_t n, std::uint32_t cap_override) {
    static TableCache cache;
    return cached(cache, p, n, false, cap_override);
}

const WittTable& witt_table_modp(std::uint32_t p, std::uint32_t n,
                                 std::uint32_t cap_override) {
    static TableCache cache;
    return cached(cache, p, n, true, cap_override);
}

}  // namespace qfp
