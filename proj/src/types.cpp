#include "regzeta/types.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace regzeta {

NType NType::make(int n, std::vector<std::array<int, 3>> entries) {
    if (n < 1) throw std::invalid_argument("NType: n must be positive");
    std::sort(entries.begin(), entries.end());
    long long weight = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto [d, e, m] = entries[i];
        if (d < 1 || e < 1 || d > n || e > n)
            throw std::invalid_argument("NType: entry indices out of range");
        if (m < 1) throw std::invalid_argument("NType: multiplicities must be positive");
        if (i > 0 && entries[i - 1][0] == d && entries[i - 1][1] == e)
            throw std::invalid_argument("NType: duplicate (d,e) entry");
        weight += static_cast<long long>(d) * e * m;
    }
    if (weight != n) throw std::invalid_argument("NType: weights do not sum to n");
    NType t;
    t.n = n;
    t.entries = std::move(entries);
    return t;
}

int NType::multiplicity(int d, int e) const {
    for (const auto& [dd, ee, m] : entries)
        if (dd == d && ee == e) return m;
    return 0;
}

int NType::block_count() const {
    int total = 0;
    for (const auto& ent : entries) total += ent[2];
    return total;
}

namespace {

// Block word of a type: the (d, e) pairs repeated with multiplicity,
// sorted descending. Same-n words are never prefixes of one another.
std::vector<std::pair<int, int>> block_word(const NType& t) {
    std::vector<std::pair<int, int>> w;
    for (const auto& [d, e, m] : t.entries)
        for (int i = 0; i < m; ++i) w.emplace_back(d, e);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

}  // namespace

bool NType::operator<(const NType& o) const {
    if (n != o.n) return n < o.n;
    return block_word(*this) < block_word(o);
}

std::string NType::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << "(" << entries[i][0] << "," << entries[i][1] << "):" << entries[i][2];
    }
    os << "}";
    return os.str();
}

const char* GroupForm::name() const {
    switch (family) {
        case Family::GL: return "GL";
        case Family::GU: return "GU";
        case Family::SL: return "SL";
        case Family::SU: return "SU";
    }
    return "?";
}

GroupForm GroupForm::parse(std::string token) {
    for (auto& ch : token) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (token == "gl") return {Family::GL};
    if (token == "gu") return {Family::GU};
    if (token == "sl") return {Family::SL};
    if (token == "su") return {Family::SU};
    throw std::invalid_argument("unknown group form '" + token + "' (expected gl|gu|sl|su)");
}

namespace {

// Depth-first enumeration: (d, e) pairs visited in descending order, each
// either skipped or assigned a multiplicity that fits the remaining weight.
void enumerate_rec(int remaining, std::size_t idx,
                   const std::vector<std::pair<int, int>>& pairs,
                   std::vector<std::array<int, 3>>& acc, int n,
                   std::vector<NType>& out) {
    if (remaining == 0) {
        out.push_back(NType::make(n, acc));
        return;
    }
    if (idx == pairs.size()) return;
    auto [d, e] = pairs[idx];
    enumerate_rec(remaining, idx + 1, pairs, acc, n, out);
    const int w = d * e;
    for (int m = 1; m * w <= remaining; ++m) {
        acc.push_back({d, e, m});
        enumerate_rec(remaining - m * w, idx + 1, pairs, acc, n, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<NType> enumerate_types(int n) {
    if (n < 1 || n > kMaxTypeRank)
        throw BoundExceeded("enumerate_types: n must lie in [1, " +
                            std::to_string(kMaxTypeRank) + "]");
    std::vector<std::pair<int, int>> pairs;
    for (int d = 1; d <= n; ++d)
        for (int e = 1; d * e <= n && e <= n; ++e) pairs.emplace_back(d, e);
    std::sort(pairs.begin(), pairs.end(), std::greater<>());

    std::vector<NType> out;
    std::vector<std::array<int, 3>> acc;
    enumerate_rec(n, 0, pairs, acc, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int primes = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

RatPolynomial w_poly(int d) {
    if (d < 1) throw std::invalid_argument("w_poly: d must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int m = 1; m <= d; ++m)
        if (d % m == 0) c[static_cast<std::size_t>(m)] = Rational(moebius(d / m), d);
    return RatPolynomial(std::move(c));
}

Integer w_value(int d, const Integer& q) {
    Rational v = w_poly(d)(Rational(q));
    return require_integer(v, "w_value");
}

Integer iota(const NType& tau, const Integer& r) {
    Integer g = r;
    for (const auto& [d, e, m] : tau.entries) {
        (void)d;
        (void)m;
        g = gcd(g, Integer(e));
    }
    if (g < 0) g = -g;
    return g;
}

Integer multinomial(std::uint64_t total, std::span<const std::uint64_t> parts) {
    std::uint64_t sum = 0;
    for (auto p : parts) sum += p;
    if (sum != total)
        throw PartsMismatch("multinomial: parts sum to " + std::to_string(sum) +
                            ", expected " + std::to_string(total));
    Integer num = 1;
    for (std::uint64_t i = 2; i <= total; ++i) num *= i;
    for (auto p : parts) {
        Integer f = 1;
        for (std::uint64_t i = 2; i <= p; ++i) f *= i;
        num = exact_div(num, f);
    }
    return num;
}

Integer binomial(const Integer& top, std::uint64_t k) {
    Integer r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= (top - static_cast<long long>(i));
        r = exact_div(r, Integer(i + 1));  // always exact: running product of binomials
    }
    if (r < 0) throw std::invalid_argument("binomial: negative top argument");
    return r;
}

Integer type_combinatorial_factor(const NType& tau, const Integer& q) {
    if (q < 2) throw std::invalid_argument("type_combinatorial_factor: q must be >= 2");
    // Group the exponent multiplicities by degree d.
    std::map<int, std::vector<std::uint64_t>> by_degree;
    for (const auto& [d, e, m] : tau.entries) {
        (void)e;
        by_degree[d].push_back(static_cast<std::uint64_t>(m));
    }
    Integer result = 1;
    for (const auto& [d, parts] : by_degree) {
        std::uint64_t total = 0;
        for (auto p : parts) total += p;
        result *= multinomial(total, parts);
        result *= binomial(w_value(d, q), total);
    }
    return result;
}

}  // namespace regzeta
