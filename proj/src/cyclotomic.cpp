#include "repzeta/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace repzeta {

CycInt CycInt::integer(i64 k) {
    CycInt z(1);
    z.c[0] = k;
    return z;
}

CycInt CycInt::root(const QZ& r) {
    CycInt z(r.n);
    z.c[r.a] = 1;
    return z;
}

CycInt CycInt::lifted(i64 m) const {
    if (m == n) return *this;
    if (m % n != 0) throw std::invalid_argument("CycInt::lifted: level mismatch");
    CycInt z(m);
    i64 step = m / n;
    for (i64 j = 0; j < n; ++j) z.c[j * step] = c[j];
    return z;
}

CycInt CycInt::canonical() const {
    CycInt z = *this;
    i64 rest = n;
    for (i64 p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        i64 np = 1;
        while (rest % p == 0) { rest /= p; np *= p; }
        // Orbits j, j + n/p, ..., j + (p-1) n/p share all prime components
        // except the top p-adic digit of the n_p-part, which cycles through
        // all p values.  The unique orbit member with top digit p-1 is
        // rewritten as minus the sum of the others.
        i64 stride = n / p;
        i64 digit_unit = np / p;
        for (i64 j = 0; j < n; ++j) {
            if ((j % np) / digit_unit != p - 1 || z.c[j] == 0) continue;
            i64 v = z.c[j];
            z.c[j] = 0;
            for (i64 i = 1; i < p; ++i) {
                i64 k = (j + i * stride) % n;
                if (k != j) z.c[k] = checked_cast(i128(z.c[k]) - v);
            }
        }
    }
    return z;
}

CycInt CycInt::conj() const {
    CycInt z(n);
    for (i64 j = 0; j < n; ++j) z.c[(n - j) % n] = c[j];
    return z;
}

bool CycInt::is_zero() const {
    CycInt z = canonical();
    for (i64 v : z.c)
        if (v != 0) return false;
    return true;
}

bool CycInt::is_integer() const {
    CycInt z = canonical();
    for (i64 j = 1; j < z.n; ++j)
        if (z.c[j] != 0) return false;
    return true;
}

i64 CycInt::as_integer() const {
    CycInt z = canonical();
    for (i64 j = 1; j < z.n; ++j)
        if (z.c[j] != 0) throw std::domain_error("CycInt::as_integer: not rational");
    return z.c[0];
}

CycInt operator+(const CycInt& x, const CycInt& y) {
    i64 m = std::lcm(x.n, y.n);
    CycInt a = x.lifted(m), b = y.lifted(m);
    for (i64 j = 0; j < m; ++j) a.c[j] = checked_cast(i128(a.c[j]) + b.c[j]);
    return a;
}

CycInt operator-(const CycInt& x, const CycInt& y) {
    return x + (-1) * y;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
    i64 m = std::lcm(x.n, y.n);
    CycInt a = x.lifted(m), b = y.lifted(m);
    CycInt z(m);
    for (i64 j = 0; j < m; ++j) {
        if (a.c[j] == 0) continue;
        for (i64 k = 0; k < m; ++k) {
            if (b.c[k] == 0) continue;
            i64 t = (j + k) % m;
            z.c[t] = checked_cast(i128(z.c[t]) + i128(a.c[j]) * b.c[k]);
        }
    }
    return z;
}

CycInt operator*(i64 k, const CycInt& x) {
    CycInt z = x;
    for (auto& v : z.c) v = checked_cast(i128(k) * v);
    return z;
}

bool operator==(const CycInt& x, const CycInt& y) {
    i64 m = std::lcm(x.n, y.n);
    CycInt a = x.lifted(m).canonical(), b = y.lifted(m).canonical();
    return a.c == b.c;
}

std::string CycInt::str() const {
    CycInt z = canonical();
    std::string s;
    for (i64 j = 0; j < z.n; ++j) {
        if (z.c[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(z.c[j]);
        if (j != 0) s += "*z" + std::to_string(z.n) + "^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

Rat inner_product(const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("inner_product: table size mismatch");
    CycInt s = CycInt::integer(0);
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i].conj();
    return Rat(s.as_integer(), (i64)a.size());
}

}  // namespace repzeta
