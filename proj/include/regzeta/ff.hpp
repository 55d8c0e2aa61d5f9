#pragma once

#include <cstdint>
#include <vector>

#include "regzeta/integer.hpp"

namespace regzeta {

/// Field element of F_{p^f}: the coordinate vector over F_p relative to the
/// power basis of the modulus, packed as the base-p integer
/// c_0 + c_1 p + ... + c_{f-1} p^{f-1} < p^f.
using ffe = std::uint32_t;

/// Small explicit finite field F_{p^f}, p^f <= 2^20, with multiplication via
/// generator exp/log tables. Construction is deterministic: the modulus is
/// the first irreducible monic polynomial of degree f over F_p in ascending
/// constant-first encoding order, and the generator is the least encoding of
/// maximal multiplicative order.
///
/// When f is even the field carries the quadratic tower F_{p^{f/2}} subset
/// F_{p^f}: conj(x) = x^{p^{f/2}} is the Galois conjugation fixing exactly
/// the subfield, and the trace-zero set {x : x + conj(x) = 0} is exposed for
/// the anti-hermitian enumerations.
class FieldDesc {
public:
    static constexpr std::uint64_t kMaxOrder = 1ull << 20;

    /// Throws NotPrime if p is composite, BoundExceeded if p^f > 2^20.
    static FieldDesc make(std::uint32_t p, std::uint32_t f);

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint32_t q() const { return q_; }
    /// Monic modulus, coefficients ascending, length f+1 over F_p.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    ffe generator() const { return gen_; }

    ffe add(ffe a, ffe b) const {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    ffe neg(ffe a) const { return neg_[a]; }
    ffe sub(ffe a, ffe b) const { return add(a, neg_[b]); }
    ffe mul(ffe a, ffe b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    ffe inv(ffe a) const;
    ffe pow(ffe a, std::uint64_t e) const;
    ffe pow(ffe a, const Integer& e) const;
    ffe frobenius(ffe a) const { return pow(a, p_); }

    bool has_tower() const { return f_ % 2 == 0; }
    std::uint32_t sub_q() const;  // p^{f/2}; requires the tower
    ffe conj(ffe a) const { return conj_[a]; }
    /// {x : x + conj(x) = 0}, ascending; size sub_q().
    const std::vector<ffe>& trace_zero_elements() const;
    /// Fixed field of conj (the embedded F_{sub_q}), ascending; size sub_q().
    const std::vector<ffe>& subfield_elements() const;

    /// Multiplication through the coordinate representation; used to build
    /// the tables and kept for cross-checking them.
    ffe mul_slow(ffe a, ffe b) const;
    ffe add_slow(ffe a, ffe b) const;

private:
    FieldDesc() = default;
    void build_tables();

    std::uint32_t p_ = 0, f_ = 0, q_ = 0;
    ffe gen_ = 1;
    std::vector<std::uint32_t> modulus_;
    std::vector<ffe> exp_, log_, neg_, conj_;
    std::vector<ffe> add_table_;  // populated for q <= 1024
    std::vector<ffe> trace_zero_, subfield_;
};

}  // namespace regzeta
