#include "regzeta/fqpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace regzeta {

namespace {

void trim(std::vector<ffe>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Deterministic PRNG for equal-degree splitting.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t seed_from(const FieldDesc& F, const FqPoly& f) {
    SplitMix64 mix{0x243f6a8885a308d3ULL ^ F.q()};
    std::uint64_t h = mix.next();
    for (ffe c : f.coeffs()) {
        mix.state ^= c + 0x9e3779b97f4a7c15ULL;
        h ^= mix.next();
    }
    return h;
}

}  // namespace

FqPoly::FqPoly(const FieldDesc& F, std::vector<ffe> coeffs) : c_(std::move(coeffs)) {
    for (ffe v : c_)
        if (v >= F.q()) throw std::invalid_argument("FqPoly: coefficient out of range");
    trim(c_);
}

FqPoly FqPoly::one(const FieldDesc& F) { return FqPoly(F, {1}); }

FqPoly FqPoly::x(const FieldDesc& F) { return FqPoly(F, {0, 1}); }

FqPoly FqPoly::constant(const FieldDesc& F, ffe c) { return FqPoly(F, {c}); }

FqPoly FqPoly::monic_from_index(const FieldDesc& F, std::uint64_t idx, int degree) {
    if (degree < 0) throw std::invalid_argument("monic_from_index: negative degree");
    std::vector<ffe> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<ffe>(idx % F.q());
        idx /= F.q();
    }
    if (idx != 0) throw std::invalid_argument("monic_from_index: index out of range");
    c[static_cast<std::size_t>(degree)] = 1;
    return FqPoly(F, std::move(c));
}

std::uint64_t FqPoly::index(const FieldDesc& F) const {
    if (c_.empty()) return 0;
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size() - 1; i-- > 0;) idx = idx * F.q() + c_[i];
    return idx;
}

bool FqPoly::is_monic(const FieldDesc&) const { return !c_.empty() && c_.back() == 1; }

bool FqPoly::operator<(const FqPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string FqPoly::str(const FieldDesc&) const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const ffe c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

FqPoly fq_add(const FieldDesc& F, const FqPoly& a, const FqPoly& b) {
    std::vector<ffe> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return FqPoly(F, std::move(r));
}

FqPoly fq_sub(const FieldDesc& F, const FqPoly& a, const FqPoly& b) {
    std::vector<ffe> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return FqPoly(F, std::move(r));
}

FqPoly fq_mul(const FieldDesc& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly();
    std::vector<ffe> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const ffe ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(ai, b.coeff(j)));
    }
    return FqPoly(F, std::move(r));
}

FqPoly fq_scale(const FieldDesc& F, const FqPoly& a, ffe s) {
    std::vector<ffe> r(a.coeffs());
    for (auto& v : r) v = F.mul(v, s);
    return FqPoly(F, std::move(r));
}

void fq_divmod(const FieldDesc& F, const FqPoly& num, const FqPoly& den, FqPoly& q, FqPoly& r) {
    if (den.is_zero()) throw DivisionByZero("fq_divmod: zero divisor");
    std::vector<ffe> rem(num.coeffs());
    const int dd = den.degree();
    if (num.degree() < dd) {
        q = FqPoly();
        r = num;
        return;
    }
    const ffe lead_inv = F.inv(den.coeff(static_cast<std::size_t>(dd)));
    std::vector<ffe> quot(static_cast<std::size_t>(num.degree() - dd) + 1, 0);
    for (int k = num.degree() - dd; k >= 0; --k) {
        const ffe top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        const ffe qk = F.mul(top, lead_inv);
        quot[static_cast<std::size_t>(k)] = qk;
        for (int i = 0; i <= dd; ++i) {
            auto& cell = rem[static_cast<std::size_t>(k + i)];
            cell = F.sub(cell, F.mul(qk, den.coeff(static_cast<std::size_t>(i))));
        }
    }
    q = FqPoly(F, std::move(quot));
    r = FqPoly(F, std::move(rem));
}

FqPoly fq_mod(const FieldDesc& F, const FqPoly& a, const FqPoly& m) {
    FqPoly q, r;
    fq_divmod(F, a, m, q, r);
    return r;
}

FqPoly fq_monic(const FieldDesc& F, const FqPoly& a) {
    if (a.is_zero()) return a;
    const ffe lead = a.coeff(static_cast<std::size_t>(a.degree()));
    return lead == 1 ? a : fq_scale(F, a, F.inv(lead));
}

FqPoly fq_gcd(const FieldDesc& F, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fq_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_monic(F, a);
}

FqPoly fq_powmod(const FieldDesc& F, FqPoly base, const Integer& e, const FqPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("fq_powmod: modulus must have degree >= 1");
    FqPoly result = FqPoly::one(F);
    base = fq_mod(F, base, m);
    if (e == 0) return fq_mod(F, result, m);
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = fq_mod(F, fq_mul(F, result, result), m);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            result = fq_mod(F, fq_mul(F, result, base), m);
    }
    return result;
}

FqPoly fq_derivative(const FieldDesc& F, const FqPoly& a) {
    if (a.degree() < 1) return FqPoly();
    std::vector<ffe> r(static_cast<std::size_t>(a.degree()), 0);
    for (int i = 1; i <= a.degree(); ++i) {
        ffe scalar = static_cast<ffe>(static_cast<std::uint32_t>(i) % F.p());
        r[static_cast<std::size_t>(i - 1)] = F.mul(a.coeff(static_cast<std::size_t>(i)), scalar);
    }
    return FqPoly(F, std::move(r));
}

ffe fq_eval(const FieldDesc& F, const FqPoly& a, ffe x) {
    ffe acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeff(i));
    return acc;
}

bool is_irreducible(const FieldDesc& F, const FqPoly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    // Rabin: x^{q^n} = x mod f, and x^{q^{n/r}} - x coprime to f for the
    // prime divisors r of n.
    const Integer q(F.q());
    const FqPoly x = FqPoly::x(F);
    FqPoly xq = fq_powmod(F, x, ipow(q, static_cast<std::uint64_t>(n)), f);
    if (!(fq_sub(F, xq, x).is_zero())) return false;
    int m = n;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        FqPoly t = fq_powmod(F, x, ipow(q, static_cast<std::uint64_t>(n / r)), f);
        if (fq_gcd(F, fq_sub(F, t, x), f).degree() != 0) return false;
    }
    if (m > 1) {
        FqPoly t = fq_powmod(F, x, ipow(q, static_cast<std::uint64_t>(n / m)), f);
        if (fq_gcd(F, fq_sub(F, t, x), f).degree() != 0) return false;
    }
    return true;
}

namespace {

// f = g(x^p) -> g, via the inverse Frobenius on coefficients.
FqPoly pth_root(const FieldDesc& F, const FqPoly& f) {
    const std::uint32_t p = F.p();
    std::vector<ffe> r(static_cast<std::size_t>(f.degree() / static_cast<int>(p)) + 1, 0);
    std::uint64_t inv_frob = 1;  // p^{f-1}: p-th root exponent
    for (std::uint32_t i = 0; i + 1 < F.f(); ++i) inv_frob *= p;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.pow(f.coeff(i * p), inv_frob);
    return FqPoly(F, std::move(r));
}

// Multiplicity-graded squarefree decomposition (char p aware).
void squarefree_split(const FieldDesc& F, FqPoly f, int outer,
                      std::vector<std::pair<FqPoly, int>>& out) {
    if (f.degree() < 1) return;
    FqPoly deriv = fq_derivative(F, f);
    if (deriv.is_zero()) {
        squarefree_split(F, pth_root(F, f), outer * static_cast<int>(F.p()), out);
        return;
    }
    FqPoly c = fq_gcd(F, f, deriv);
    FqPoly w, dummy;
    fq_divmod(F, f, c, w, dummy);
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fq_gcd(F, w, c);
        FqPoly z, rest;
        fq_divmod(F, w, y, z, rest);
        if (z.degree() > 0) out.emplace_back(fq_monic(F, z), i * outer);
        w = std::move(y);
        fq_divmod(F, c, w, c, rest);
        ++i;
    }
    if (c.degree() > 0) squarefree_split(F, pth_root(F, c), outer * static_cast<int>(F.p()), out);
}

// Equal-degree splitting of a squarefree monic product of irreducibles of
// degree d; appends the irreducible factors to out.
void edf(const FieldDesc& F, const FqPoly& f, int d, SplitMix64& rng,
         std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Integer q(F.q());
    FqPoly g;
    while (true) {
        // Deterministic pseudorandom polynomial of degree < deg f.
        std::vector<ffe> rc(static_cast<std::size_t>(f.degree()), 0);
        for (auto& v : rc) v = static_cast<ffe>(rng.next() % F.q());
        FqPoly r(F, std::move(rc));
        if (r.degree() < 1) continue;
        g = fq_gcd(F, r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) break;
        if (F.p() == 2) {
            // Trace splitting: T(r) = r + r^2 + r^4 + ... (k*d terms, q = 2^k).
            FqPoly t = fq_mod(F, r, f);
            FqPoly acc = t;
            std::uint64_t steps = static_cast<std::uint64_t>(F.f()) * static_cast<std::uint64_t>(d);
            for (std::uint64_t i = 1; i < steps; ++i) {
                t = fq_mod(F, fq_mul(F, t, t), f);
                acc = fq_add(F, acc, t);
            }
            g = fq_gcd(F, acc, f);
        } else {
            const Integer e = (ipow(q, static_cast<std::uint64_t>(d)) - 1) / 2;
            FqPoly s = fq_powmod(F, r, e, f);
            g = fq_gcd(F, fq_sub(F, s, FqPoly::one(F)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    FqPoly h, rest;
    fq_divmod(F, f, g, h, rest);
    edf(F, fq_monic(F, g), d, rng, out);
    edf(F, fq_monic(F, h), d, rng, out);
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FieldDesc& F, const FqPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    if (!f.is_monic(F)) throw std::invalid_argument("factor: polynomial must be monic");
    std::vector<std::pair<FqPoly, int>> result;
    if (f.degree() == 0) return result;

    std::vector<std::pair<FqPoly, int>> squarefree;
    squarefree_split(F, f, 1, squarefree);

    SplitMix64 rng{seed_from(F, f)};
    const Integer q(F.q());
    for (const auto& [part, mult] : squarefree) {
        // Distinct-degree split of the squarefree part.
        FqPoly rem = part;
        FqPoly h = fq_mod(F, FqPoly::x(F), rem);
        for (int d = 1; rem.degree() > 0 && 2 * d <= rem.degree(); ++d) {
            h = fq_powmod(F, h, q, rem);
            FqPoly g = fq_gcd(F, fq_sub(F, h, FqPoly::x(F)), rem);
            if (g.degree() > 0) {
                std::vector<FqPoly> irreducibles;
                edf(F, g, d, rng, irreducibles);
                for (auto& irr : irreducibles) result.emplace_back(std::move(irr), mult);
                FqPoly rest;
                FqPoly quot;
                fq_divmod(F, rem, g, quot, rest);
                rem = std::move(quot);
                h = fq_mod(F, h, rem);
            }
        }
        if (rem.degree() > 0) result.emplace_back(rem, mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

FqPoly tilde(const FieldDesc& F, const FqPoly& h) {
    if (!F.has_tower()) throw std::logic_error("tilde: field has no quadratic tower");
    if (h.is_zero()) return h;
    const int m = h.degree();
    std::vector<ffe> r(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i <= m; ++i) {
        ffe v = F.conj(h.coeff(static_cast<std::size_t>(i)));
        if ((m - i) % 2 == 1) v = F.neg(v);
        r[static_cast<std::size_t>(i)] = v;
    }
    return FqPoly(F, std::move(r));
}

NType gl_type_of(const FieldDesc& F, const FqPoly& f) {
    const auto factors = factor(F, f);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& [g, e] : factors) ++counts[{g.degree(), e}];
    std::vector<std::array<int, 3>> entries;
    for (const auto& [de, m] : counts) entries.push_back({de.first, de.second, m});
    return NType::make(f.degree(), std::move(entries));
}

std::optional<NType> gu_type_of(const FieldDesc& F, const FqPoly& f) {
    if (f.is_zero() || !f.is_monic(F))
        throw std::invalid_argument("gu_type_of: polynomial must be monic");
    if (!(tilde(F, f) == f)) return std::nullopt;

    const auto factors = factor(F, f);
    std::map<std::pair<int, int>, int> counts;
    std::vector<bool> used(factors.size(), false);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        const auto& [g, e] = factors[i];
        FqPoly gt = tilde(F, g);
        if (gt == g) {
            ++counts[{g.degree(), e}];
            used[i] = true;
            continue;
        }
        bool paired = false;
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (used[j]) continue;
            if (factors[j].first == gt) {
                if (factors[j].second != e)
                    throw std::logic_error("gu_type_of: dual pair with unequal multiplicity");
                used[i] = used[j] = true;
                ++counts[{2 * g.degree(), e}];
                paired = true;
                break;
            }
        }
        if (!paired) throw std::logic_error("gu_type_of: missing tilde partner");
    }
    std::vector<std::array<int, 3>> entries;
    for (const auto& [de, m] : counts) entries.push_back({de.first, de.second, m});
    return NType::make(f.degree(), std::move(entries));
}

}  // namespace regzeta
