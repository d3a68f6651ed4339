/**
 * @file cohomology.cpp
 * @brief Cocycle arithmetic and coboundary solving (see cohomology.hpp).
 */
#include "repzeta/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "repzeta/linalg.hpp"

namespace repzeta {

int QuotientTable::local_of(int global) const {
    if (global < 0 || global >= (int)local.size() || local[global] < 0)
        throw std::invalid_argument("coset index not in quotient");
    return local[global];
}

i64 QuotientTable::order_of(int i) const {
    i64 k = 1;
    int j = i;
    while (j != 0) {
        j = gam[j][i];
        ++k;
    }
    return k;
}

i64 QuotientTable::exponent() const {
    i64 e = 1;
    for (int i = 0; i < r(); ++i) e = std::lcm(e, order_of(i));
    return e;
}

QuotientTable QuotientTable::of(const ExtGroup& G, const SubgroupG& K) {
    QuotientTable Q;
    Q.idx = K.idx;
    Q.local.assign(G.m, -1);
    for (int i = 0; i < (int)Q.idx.size(); ++i) Q.local[Q.idx[i]] = i;
    Q.gam.assign(Q.idx.size(), std::vector<int>(Q.idx.size()));
    for (size_t i = 0; i < Q.idx.size(); ++i)
        for (size_t j = 0; j < Q.idx.size(); ++j) {
            int g = G.gam[Q.idx[i]][Q.idx[j]];
            if (Q.local[g] < 0)
                throw std::invalid_argument("index set not closed under gamma");
            Q.gam[i][j] = Q.local[g];
        }
    return Q;
}

Cocycle2 Cocycle2::zero(int r) {
    Cocycle2 c;
    c.z.assign(r, std::vector<QZ>(r));
    return c;
}

Cocycle2 Cocycle2::operator+(const Cocycle2& o) const {
    Cocycle2 out = *this;
    for (int i = 0; i < r(); ++i)
        for (int j = 0; j < r(); ++j) out.z[i][j] = out.z[i][j] + o.z[i][j];
    return out;
}

Cocycle2 Cocycle2::operator-(const Cocycle2& o) const {
    Cocycle2 out = *this;
    for (int i = 0; i < r(); ++i)
        for (int j = 0; j < r(); ++j) out.z[i][j] = out.z[i][j] - o.z[i][j];
    return out;
}

i64 Cocycle2::denominator() const {
    i64 d = 1;
    for (const auto& row : z)
        for (const QZ& v : row) d = std::lcm(d, v.n);
    return d;
}

bool is_cocycle2(const QuotientTable& Q, const Cocycle2& z) {
    if (z.r() != Q.r()) return false;
    for (int i = 0; i < Q.r(); ++i)
        for (int j = 0; j < Q.r(); ++j)
            for (int k = 0; k < Q.r(); ++k)
                if (z.z[Q.gam[i][j]][k] + z.z[i][j] !=
                    z.z[i][Q.gam[j][k]] + z.z[j][k])
                    return false;
    return true;
}

std::optional<std::vector<QZ>> coboundary_witness(const QuotientTable& Q,
                                                  const Cocycle2& z, i64 M) {
    int r = Q.r();
    if (z.r() != r) throw std::invalid_argument("cochain/quotient size mismatch");
    if (M % z.denominator() != 0) return std::nullopt;
    // Unknowns B_i = b_i * M in Z/M; equations B_i + B_j - B_gamma = z_ij * M.
    Mat A;
    Vec rhs;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Vec row(r, 0);
            row[i] += 1;
            row[j] += 1;
            row[Q.gam[i][j]] -= 1;
            for (i64& v : row) v = ((v % M) + M) % M;
            A.push_back(std::move(row));
            rhs.push_back((i128(z.z[i][j].a) * (M / z.z[i][j].n)) % M);
        }
    auto sol = solve_mod(A, rhs, M);
    if (!sol) return std::nullopt;
    std::vector<QZ> b;
    b.reserve(r);
    for (i64 v : *sol) b.emplace_back(v, M);
    return b;
}

bool is_coboundary2(const QuotientTable& Q, const Cocycle2& z, i64 M) {
    return coboundary_witness(Q, z, M).has_value();
}

Cocycle2 class_of_pair(const NContext& ctx, const QuotientTable& Q,
                       const SubgroupH& H, const NPair& pair) {
    if (H.idx != Q.idx)
        throw std::invalid_argument("H transversal not aligned with quotient");
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    int r = Q.r();
    Cocycle2 out = Cocycle2::zero(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int gi = Q.idx[i], gj = Q.idx[j];
            u32 tg = H.tails[Q.gam[i][j]];
            u32 n = N.mul(N.mul(N.inv(tg), G.a[gi][gj]),
                          N.mul(G.phi_inv(gj, H.tails[i]), H.tails[j]));
            out.z[i][j] = -ctx.eval(pair, n);
        }
    return out;
}

i64 class_modulus(const NContext& ctx, const QuotientTable& Q, const NPair& pair) {
    i64 e = 1;
    for (const QZ& v : pair.dvals) e = std::lcm(e, v.n);
    i64 p = ctx.N().p;
    i64 exp_p = 1, q = Q.exponent();
    while (q % p == 0) {
        exp_p *= p;
        q /= p;
    }
    return e * exp_p;
}

bool satisfies_class(const NContext& ctx, const QuotientTable& Q,
                     const SubgroupH& H, const NPair& pair, const Cocycle2& c) {
    Cocycle2 diff = class_of_pair(ctx, Q, H, pair) - c;
    i64 M = std::lcm(class_modulus(ctx, Q, pair), diff.denominator());
    return is_coboundary2(Q, diff, M);
}

std::vector<Cocycle2> h2_classes(const QuotientTable& Q, i64 M) {
    int r = Q.r();
    // Kernel of the cocycle identity over (1/M) Z/Z, variables scaled by M.
    Mat A;
    auto var = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                Vec row(r * r, 0);
                row[var(Q.gam[i][j], k)] += 1;
                row[var(i, j)] += 1;
                row[var(i, Q.gam[j][k])] -= 1;
                row[var(j, k)] -= 1;
                for (i64& v : row) v = ((v % M) + M) % M;
                A.push_back(std::move(row));
            }
    std::vector<Vec> gens = kernel_mod(A, M);
    auto to_cocycle = [&](const Vec& v) {
        Cocycle2 c = Cocycle2::zero(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) c.z[i][j] = QZ(v[var(i, j)], M);
        return c;
    };
    // Explore the class group generated by the kernel generators.
    i64 Mb = M * Q.exponent();  // coboundary witnesses may need finer values
    std::vector<Cocycle2> reps = {Cocycle2::zero(r)};
    std::deque<Cocycle2> queue = {reps[0]};
    while (!queue.empty()) {
        Cocycle2 base = queue.front();
        queue.pop_front();
        for (const Vec& g : gens) {
            Cocycle2 cand = base + to_cocycle(g);
            bool fresh = true;
            for (const Cocycle2& rep : reps)
                if (is_coboundary2(Q, cand - rep, Mb)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                reps.push_back(cand);
                queue.push_back(cand);
            }
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

Cocycle2 restrict_cocycle(const QuotientTable& Qsub, const Cocycle2& z,
                          const QuotientTable& Q) {
    Cocycle2 out = Cocycle2::zero(Qsub.r());
    for (int i = 0; i < Qsub.r(); ++i)
        for (int j = 0; j < Qsub.r(); ++j)
            out.z[i][j] = z.z[Q.local_of(Qsub.idx[i])][Q.local_of(Qsub.idx[j])];
    return out;
}

Cocycle2 primary_component(const Cocycle2& z, i64 q) {
    Cocycle2 out = z;
    for (auto& row : out.z)
        for (QZ& v : row) v = primary_part(v, q);
    return out;
}

}  // namespace repzeta
