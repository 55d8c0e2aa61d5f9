#include "regzeta/orders.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace regzeta {

namespace {

// (x^d - eps^d) as an integer polynomial.
IntPolynomial power_term(int d, int eps) {
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1, Integer(0));
    const int sign = (eps == 1 || d % 2 == 0) ? 1 : -1;  // eps^d
    c[0] = -sign;
    c[static_cast<std::size_t>(d)] = 1;
    return IntPolynomial(std::move(c));
}

void check_eps(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

std::mutex cache_mutex;

}  // namespace

const IntPolynomial& v_poly(int n, int eps) {
    check_eps(eps);
    if (n < 1) throw std::invalid_argument("v_poly: n must be positive");
    static std::map<std::pair<int, int>, IntPolynomial> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({n, eps});
    if (it != cache.end()) return it->second;

    // x^{n^2} prod (1 - eps^d x^{-d}) = x^{n^2 - n(n+1)/2} prod (x^d - eps^d).
    IntPolynomial p = IntPolynomial::constant(Integer(1));
    for (int d = 1; d <= n; ++d) p = p * power_term(d, eps);
    p = p.shift_up(static_cast<std::size_t>(n) * n - static_cast<std::size_t>(n) * (n + 1) / 2);
    return cache.emplace(std::make_pair(n, eps), std::move(p)).first->second;
}

const IntPolynomial& u_poly(const NType& tau, int eps) {
    check_eps(eps);
    static std::map<std::pair<std::string, int>, IntPolynomial> cache;
    std::lock_guard lock(cache_mutex);
    const std::string key = std::to_string(tau.n) + tau.str();
    auto it = cache.find({key, eps});
    if (it != cache.end()) return it->second;

    // x^n prod (1 - eps^d x^{-d})^{tau_{d,e}}; the x-power left over is
    // n - sum d*tau_{d,e} = sum d(e-1)tau_{d,e} >= 0.
    IntPolynomial p = IntPolynomial::constant(Integer(1));
    long long deg_sum = 0;
    for (const auto& [d, e, m] : tau.entries) {
        (void)e;
        for (int i = 0; i < m; ++i) p = p * power_term(d, eps);
        deg_sum += static_cast<long long>(d) * m;
    }
    p = p.shift_up(static_cast<std::size_t>(tau.n - deg_sum));
    return cache.emplace(std::make_pair(std::move(key), eps), std::move(p)).first->second;
}

CentralizerShape centralizer_shape(const NType& tau, int eps) {
    check_eps(eps);
    CentralizerShape shape;
    for (const auto& [d, e, m] : tau.entries) {
        const bool unitary_block = (eps == -1 && d % 2 == 1);
        shape.factors.push_back({unitary_block ? CentralizerFactor::Kind::GU1
                                               : CentralizerFactor::Kind::GL1,
                                 d, e, m});
    }
    return shape;
}

Integer shape_order(const CentralizerShape& shape, const Integer& q) {
    if (q < 2) throw std::invalid_argument("shape_order: q must be >= 2");
    Integer order = 1;
    for (const auto& f : shape.factors) {
        const Integer qd = ipow(q, static_cast<std::uint64_t>(f.d));
        Integer block = ipow(q, static_cast<std::uint64_t>(f.d) * (f.e - 1));
        block *= (f.kind == CentralizerFactor::Kind::GU1) ? Integer(qd + 1) : Integer(qd - 1);
        order *= ipow(block, static_cast<std::uint64_t>(f.mult));
    }
    return order;
}

IntPolynomial orbit_degree_poly(const NType& tau, int eps) {
    return div_exact(v_poly(tau.n, eps), u_poly(tau, eps));
}

}  // namespace regzeta
