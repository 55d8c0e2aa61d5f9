#include "regzeta/ff.hpp"

#include <algorithm>
#include <stdexcept>

#include "regzeta/fqpoly.hpp"

namespace regzeta {

namespace {

std::vector<std::uint32_t> digits_of(ffe a, std::uint32_t p, std::uint32_t f) {
    std::vector<std::uint32_t> d(f);
    for (std::uint32_t i = 0; i < f; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

ffe pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    ffe a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

}  // namespace

ffe FieldDesc::add_slow(ffe a, ffe b) const {
    ffe r = 0, mult = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

ffe FieldDesc::mul_slow(ffe a, ffe b) const {
    if (a == 0 || b == 0) return 0;
    const auto da = digits_of(a, p_, f_);
    const auto db = digits_of(b, p_, f_);
    std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
    for (std::uint32_t i = 0; i < f_; ++i)
        for (std::uint32_t j = 0; j < f_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    // Reduce by the monic modulus, top down.
    for (std::size_t k = prod.size(); k-- > f_;) {
        const std::uint64_t c = prod[k] % p_;
        if (c == 0) continue;
        for (std::uint32_t i = 0; i < f_; ++i)
            prod[k - f_ + i] += std::uint64_t(p_ - modulus_[i]) % p_ * c;
        prod[k] = 0;
    }
    std::vector<std::uint32_t> out(f_);
    for (std::uint32_t i = 0; i < f_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
    return pack(out, p_);
}

ffe FieldDesc::inv(ffe a) const {
    if (a == 0) throw DivisionByZero("FieldDesc::inv: zero element");
    if (q_ == 2) return 1;
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

ffe FieldDesc::pow(ffe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (q_ == 2) return 1;
    const std::uint64_t r = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

ffe FieldDesc::pow(ffe a, const Integer& e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (q_ == 2) return 1;
    const Integer r = e % (q_ - 1);
    return pow(a, r.convert_to<std::uint64_t>());
}

std::uint32_t FieldDesc::sub_q() const {
    if (!has_tower()) throw std::logic_error("FieldDesc: no quadratic tower (f is odd)");
    std::uint32_t s = 1;
    for (std::uint32_t i = 0; i < f_ / 2; ++i) s *= p_;
    return s;
}

const std::vector<ffe>& FieldDesc::trace_zero_elements() const {
    if (!has_tower()) throw std::logic_error("FieldDesc: no quadratic tower (f is odd)");
    return trace_zero_;
}

const std::vector<ffe>& FieldDesc::subfield_elements() const {
    if (!has_tower()) throw std::logic_error("FieldDesc: no quadratic tower (f is odd)");
    return subfield_;
}

FieldDesc FieldDesc::make(std::uint32_t p, std::uint32_t f) {
    if (!is_prime_u64(p)) throw NotPrime("make_field: p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw std::invalid_argument("make_field: f must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw BoundExceeded("make_field: p^f exceeds the 2^20 table guard");
    }

    FieldDesc F;
    F.p_ = p;
    F.f_ = f;
    F.q_ = static_cast<std::uint32_t>(q);

    if (f == 1) {
        F.modulus_ = {0, 1};  // t
    } else {
        // First irreducible monic polynomial in ascending encoding order of
        // the lower coefficient vector.
        FieldDesc Fp = FieldDesc::make(p, 1);
        std::uint64_t enc = 0;
        for (;; ++enc) {
            if (enc >= q) throw std::logic_error("make_field: no irreducible modulus found");
            FqPoly cand = FqPoly::monic_from_index(Fp, enc, f);
            if (is_irreducible(Fp, cand)) {
                F.modulus_.assign(cand.coeffs().begin(), cand.coeffs().end());
                break;
            }
        }
    }

    F.build_tables();
    return F;
}

void FieldDesc::build_tables() {
    const std::uint32_t q = q_;

    neg_.resize(q);
    for (ffe a = 0; a < q; ++a) {
        auto d = digits_of(a, p_, f_);
        for (auto& v : d) v = v ? p_ - v : 0;
        neg_[a] = pack(d, p_);
    }

    // Factor q-1 for the order test.
    std::vector<std::uint64_t> prime_factors;
    {
        std::uint64_t m = q - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_factors.push_back(m);
    }

    auto pow_slow = [&](ffe a, std::uint64_t e) {
        ffe r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };

    gen_ = 1;
    if (q > 2) {
        for (ffe cand = 2; cand < q; ++cand) {
            bool maximal = true;
            for (auto r : prime_factors)
                if (pow_slow(cand, (q - 1) / r) == 1) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                gen_ = cand;
                break;
            }
        }
    }

    exp_.resize(q - 1);
    log_.assign(q, 0);
    ffe cur = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, gen_);
    }

    if (q <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q) * q);
        for (ffe a = 0; a < q; ++a)
            for (ffe b = 0; b < q; ++b)
                add_table_[static_cast<std::size_t>(a) * q + b] = add_slow(a, b);
    }

    conj_.resize(q);
    if (has_tower()) {
        std::uint32_t sq = 1;
        for (std::uint32_t i = 0; i < f_ / 2; ++i) sq *= p_;
        for (ffe a = 0; a < q; ++a) conj_[a] = pow(a, sq);
        for (ffe a = 0; a < q; ++a) {
            if (add(a, conj_[a]) == 0) trace_zero_.push_back(a);
            if (conj_[a] == a) subfield_.push_back(a);
        }
    } else {
        for (ffe a = 0; a < q; ++a) conj_[a] = a;
    }
}

}  // namespace regzeta
