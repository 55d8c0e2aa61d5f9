#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regzeta/errors.hpp"
#include "regzeta/integer.hpp"

namespace regzeta {

/// Dense univariate polynomial with exact coefficients, stored from degree 0
/// upward. Canonical form: no trailing zero coefficients, so degree() is the
/// index of the last stored coefficient (-1 for the zero polynomial).
/// Everything the order/degree formulas need has degree <= n^2, hence dense.
template <class T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

    static Polynomial monomial(std::size_t k, T coeff = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the stored range).
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    const std::vector<T>& coefficients() const { return c_; }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    /// Exact Horner evaluation.
    template <class V>
    V operator()(const V& x) const {
        V acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    /// p(-x).
    Polynomial negate_variable() const {
        std::vector<T> r(c_);
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Polynomial(std::move(r));
    }

    /// p(x) * x^k.
    Polynomial shift_up(std::size_t k) const {
        if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
        std::vector<T> r(c_.size() + k, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Polynomial(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Exact quotient num/den in T[x]; throws InexactDivision when a nonzero
/// remainder (or a non-dividing leading coefficient over ℤ) shows up.
template <class T>
Polynomial<T> div_exact(const Polynomial<T>& num, const Polynomial<T>& den) {
    if (den.is_zero()) throw DivisionByZero("poly_div_exact: zero divisor");
    if (num.is_zero()) return Polynomial<T>();
    if (num.degree() < den.degree())
        throw InexactDivision("poly_div_exact: divisor degree exceeds dividend degree");

    std::vector<T> rem(num.coefficients());
    const int dq = num.degree() - den.degree();
    std::vector<T> quot(static_cast<std::size_t>(dq) + 1, T(0));
    const T lead = den.leading();
    for (int k = dq; k >= 0; --k) {
        const T& top = rem[static_cast<std::size_t>(k + den.degree())];
        T q;
        if constexpr (std::is_same_v<T, Integer>) {
            if (top == 0) continue;
            q = top / lead;
            if (q * lead != top)
                throw InexactDivision("poly_div_exact: leading coefficient does not divide");
        } else {
            q = top / lead;
        }
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= den.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * den.coeff(static_cast<std::size_t>(i));
    }
    for (const T& v : rem)
        if (v != T(0)) throw InexactDivision("poly_div_exact: nonzero remainder");
    return Polynomial<T>(std::move(quot));
}

inline RatPolynomial to_rational_polynomial(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

template <class T>
std::string to_string(const Polynomial<T>& p, const char* var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        T c = p.coeff(static_cast<std::size_t>(i));
        if (c == T(0)) continue;
        const bool neg = c < T(0);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        if (i == 0 || c != T(1)) {
            os << c.str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace regzeta
