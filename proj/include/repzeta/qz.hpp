#pragma once
/**
 * @file qz.hpp
 * @brief Exact arithmetic scalars: rationals and elements of Q/Z.
 *
 * Everything downstream (character values, cocycle entries, Dirichlet
 * coefficients) must compare bit-exactly, so all arithmetic here is integer
 * based.  Magnitudes stay tiny (denominators divide small group exponents);
 * intermediate products use 128-bit integers and abort on overflow instead
 * of wrapping.
 */

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace repzeta {

using i64 = long long;
using i128 = __int128_t;
using u32 = std::uint32_t;

inline i64 checked_cast(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return (i64)v;
}

/** Exact rational number n/d, always normalized (d > 0, gcd(|n|,d) = 1). */
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        i128 n = i128(a.num) * b.den + i128(b.num) * a.den;
        i128 d = i128(a.den) * b.den;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        i128 n = i128(a.num) * b.den - i128(b.num) * a.den;
        i128 d = i128(a.den) * b.den;
        return make(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero rational");
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num = checked_cast(n);
        r.den = checked_cast(d);
        if (r.den == 0) throw std::domain_error("rational with zero denominator");
        return r;
    }
};

/**
 * Element of Q/Z, stored as a reduced fraction a/n with 0 <= a < n.
 * Additively written; the identity is 0/1.  Under the exponential map
 * a/n corresponds to the root of unity e^(2 pi i a/n), so QZ doubles as
 * the RootExp representation (root_add = +, root_neg = -, root_pow = *k).
 */
struct QZ {
    i64 a = 0;  ///< numerator, 0 <= a < n
    i64 n = 1;  ///< denominator, >= 1

    QZ() = default;
    QZ(i64 num, i64 den) {
        if (den <= 0) throw std::domain_error("Q/Z denominator must be positive");
        i64 r = num % den;
        if (r < 0) r += den;
        i64 g = std::gcd(r, den);
        a = r / g;
        n = den / g;
    }

    bool is_zero() const { return a == 0; }

    friend QZ operator+(const QZ& x, const QZ& y) {
        i128 d = i128(x.n) * y.n;
        i128 num = i128(x.a) * y.n + i128(y.a) * x.n;
        return QZ(checked_cast(num % d), checked_cast(d));
    }
    friend QZ operator-(const QZ& x) { return QZ(x.n - x.a, x.n); }
    friend QZ operator-(const QZ& x, const QZ& y) { return x + (-y); }
    friend QZ operator*(const QZ& x, i64 k) {
        i128 num = i128(x.a) * (k % x.n);
        return QZ(checked_cast(((num % x.n) + x.n) % x.n), x.n);
    }
    friend bool operator==(const QZ& x, const QZ& y) { return x.a == y.a && x.n == y.n; }
    friend bool operator!=(const QZ& x, const QZ& y) { return !(x == y); }
    friend bool operator<(const QZ& x, const QZ& y) {
        // Total order for canonical/deterministic choices: by value a/n.
        i128 l = i128(x.a) * y.n, r = i128(y.a) * x.n;
        if (l != r) return l < r;
        return x.n < y.n;
    }

    /** Multiplicative order of the corresponding root of unity. */
    i64 order() const { return n; }

    std::string str() const { return std::to_string(a) + "/" + std::to_string(n); }
};

/// Convenience aliases matching the domain vocabulary: a RootExp is an
/// element of Q/Z read through the exponential isomorphism with the group
/// of roots of unity.
using RootExp = QZ;

inline RootExp root_add(const RootExp& x, const RootExp& y) { return x + y; }
inline RootExp root_neg(const RootExp& x) { return -x; }
inline RootExp root_pow(const RootExp& x, i64 k) { return x * k; }

/** q-primary component of x in Q/Z (the part with q-power denominator). */
inline QZ primary_part(const QZ& x, i64 q) {
    i64 qpart = 1;
    i64 rest = x.n;
    while (rest % q == 0) { qpart *= q; rest /= q; }
    if (qpart == 1) return QZ(0, 1);
    // CRT: x = u/qpart + v/rest; u/qpart = x * (rest * inv(rest mod qpart)).
    i64 inv = 0;
    for (i64 c = 0; c < qpart; ++c)
        if ((i128(rest) * c) % qpart == 1) { inv = c; break; }
    return x * checked_cast(i128(rest) * inv % (i128(qpart) * rest));
}

inline i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    while (e-- > 0) r = checked_cast(i128(r) * b);
    return r;
}

}  // namespace repzeta
