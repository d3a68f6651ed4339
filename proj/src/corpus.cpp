#include "repzeta/corpus.hpp"

#include <stdexcept>

namespace repzeta {

namespace {

/** Digits of v in base p, least significant first, padded to len. */
ExpVec digits(i64 v, i64 p, int len) {
    ExpVec e(len, 0);
    for (int i = 0; i < len; ++i) { e[i] = v % p; v /= p; }
    return e;
}

}  // namespace

std::shared_ptr<const PcGroupN> cyclic_chained(i64 p, int e) {
    std::vector<ExpVec> power(e, ExpVec(e, 0));
    for (int i = 0; i + 1 < e; ++i) power[i][i + 1] = 1;
    std::vector<std::vector<ExpVec>> comm(e);
    for (int j = 0; j < e; ++j) comm[j].assign(j, ExpVec(e, 0));
    return std::make_shared<PcGroupN>(PcGroupN::build(p, power, comm));
}

std::shared_ptr<const PcGroupN> elementary(i64 p, int rank) {
    std::vector<ExpVec> power(rank, ExpVec(rank, 0));
    std::vector<std::vector<ExpVec>> comm(rank);
    for (int j = 0; j < rank; ++j) comm[j].assign(j, ExpVec(rank, 0));
    return std::make_shared<PcGroupN>(PcGroupN::build(p, power, comm));
}

std::shared_ptr<const PcGroupN> heisenberg_modp(i64 p, int m) {
    // Chained generators x_1..x_m, y_1..y_m, z_1..z_m for the group of
    // triples (a, b, c) mod p^m with (a,b,c)(a',b',c') = (a+a', b+b',
    // c+c'-b a'); then [y_1, x_1] = z^{-1} and normal-form exponents are the
    // base-p digits of (a, b, c).
    int d = 3 * m;
    i64 q = ipow(p, m);
    std::vector<ExpVec> power(d, ExpVec(d, 0));
    for (int blk = 0; blk < 3; ++blk)
        for (int k = 0; k + 1 < m; ++k) power[blk * m + k][blk * m + k + 1] = 1;
    std::vector<std::vector<ExpVec>> comm(d);
    for (int j = 0; j < d; ++j) comm[j].assign(j, ExpVec(d, 0));
    for (int J = 0; J < m; ++J)
        for (int I = 0; I < m; ++I) {
            if (I + J >= m) continue;  // [y_{J+1}, x_{I+1}] = z^{-p^{I+J}}
            i64 c = (q - ipow(p, I + J)) % q;
            ExpVec w(d, 0);
            ExpVec dg = digits(c, p, m);
            for (int k = 0; k < m; ++k) w[2 * m + k] = dg[k];
            comm[m + J][I] = std::move(w);
        }
    return std::make_shared<PcGroupN>(PcGroupN::build(p, power, comm));
}

std::shared_ptr<const ExtGroup> m_type_modular(i64 p, int m) {
    if (m < 2) throw std::invalid_argument("m_type_modular: need m >= 2");
    auto N = cyclic_chained(p, m);
    int top = (int)p;
    std::vector<std::vector<int>> gamma(top, std::vector<int>(top));
    std::vector<std::vector<u32>> a(top, std::vector<u32>(top, 0));
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < top; ++j) gamma[i][j] = (i + j) % top;
    // phi_k: n -> n^{1 + k p^{m-1}}; fixes the chained generators n_2..n_m.
    std::vector<std::vector<ExpVec>> phis(top);
    for (int k = 1; k < top; ++k) {
        std::vector<ExpVec> imgs(m);
        for (int g = 0; g < m; ++g) {
            ExpVec e(m, 0);
            e[g] = 1;
            if (g == 0) e[m - 1] = k % p;
            imgs[g] = std::move(e);
        }
        phis[k] = std::move(imgs);
    }
    return std::make_shared<ExtGroup>(ExtGroup::build(N, gamma, a, phis));
}

namespace {

std::shared_ptr<const ExtGroup> shared_ext(ExtGroup G) {
    return std::make_shared<ExtGroup>(std::move(G));
}

std::shared_ptr<const ExtGroup> make_trivial_top(std::shared_ptr<const PcGroupN> N) {
    return shared_ext(ExtGroup::trivial_top(std::move(N)));
}

/** Split extension with cyclic top C_t and phi given per exponent. */
std::shared_ptr<const ExtGroup> cyclic_top(std::shared_ptr<const PcGroupN> N, int t,
                                           const std::vector<std::vector<ExpVec>>& phis,
                                           std::vector<std::vector<u32>> a = {}) {
    std::vector<std::vector<int>> gamma(t, std::vector<int>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) gamma[i][j] = (i + j) % t;
    if (a.empty()) a.assign(t, std::vector<u32>(t, 0));
    return shared_ext(ExtGroup::build(std::move(N), gamma, a, phis));
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string id, std::string gid, std::shared_ptr<const ExtGroup> G) {
        out.push_back({std::move(id), std::move(gid), std::move(G)});
    };

    add("C2", "C2", make_trivial_top(cyclic_chained(2, 1)));
    add("C3", "C3", make_trivial_top(cyclic_chained(3, 1)));
    add("C4", "C4", make_trivial_top(cyclic_chained(2, 2)));
    add("C9", "C9", make_trivial_top(cyclic_chained(3, 2)));
    add("C2xC2", "C2xC2", make_trivial_top(elementary(2, 2)));
    add("C3xC3", "C3xC3", make_trivial_top(elementary(3, 2)));
    add("H2", "H2", make_trivial_top(heisenberg_modp(2, 1)));

    // Heisenberg group of order 27 with three admissible normals.
    add("H3/G", "H3", make_trivial_top(heisenberg_modp(3, 1)));
    {
        // N = <n_2, n_3> = C3 x C3, top generated by n_1; phi(n_2) = n_2 n_3^k.
        auto N = elementary(3, 2);
        std::vector<std::vector<ExpVec>> phis(3);
        for (int k = 1; k < 3; ++k) phis[k] = {ExpVec{1, (i64)k}, ExpVec{0, 1}};
        add("H3/C3xC3", "H3", cyclic_top(N, 3, phis));
    }
    {
        // N = Z = <n_3>, top = C3 x C3 on indices k = i + 3j for n_1^i n_2^j;
        // moving n_2^j past n_1^{i'} contributes [n_2, n_1]^{j i'} = n_3^{2 j i'}.
        auto N = cyclic_chained(3, 1);
        std::vector<std::vector<int>> gamma(9, std::vector<int>(9));
        std::vector<std::vector<u32>> a(9, std::vector<u32>(9));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int i2 = 0; i2 < 3; ++i2)
                    for (int j2 = 0; j2 < 3; ++j2) {
                        int from = i + 3 * j, to = i2 + 3 * j2;
                        gamma[from][to] = (i + i2) % 3 + 3 * ((j + j2) % 3);
                        a[from][to] = (u32)((2 * j * i2) % 3);
                    }
        std::vector<std::vector<ExpVec>> phis(9);  // Z is central: all identity
        add("H3/Z", "H3", shared_ext(ExtGroup::build(N, gamma, a, phis)));
    }

    add("M27", "M27", m_type_modular(3, 2));

    {
        // Q8 and D4 over N = C4: top swaps cosets, phi inverts N.
        auto inv_phi = std::vector<std::vector<ExpVec>>{
            {}, {ExpVec{1, 1}, ExpVec{0, 1}}};  // n_1 -> n_1 n_2 = n_1^{-1}
        auto NC4 = cyclic_chained(2, 2);
        std::vector<std::vector<u32>> aq(2, std::vector<u32>(2, 0));
        aq[1][1] = NC4->encode({0, 1});  // y^2 = n_2 (the central involution)
        add("Q8", "Q8", cyclic_top(NC4, 2, inv_phi, aq));
        add("D4/C4", "D4", cyclic_top(cyclic_chained(2, 2), 2, inv_phi));
    }
    {
        // D4 over N = <s, r^2> = C2 x C2 with y = r: phi swaps s and r^2 s.
        auto N = elementary(2, 2);
        std::vector<std::vector<ExpVec>> phis = {{}, {ExpVec{1, 1}, ExpVec{0, 1}}};
        std::vector<std::vector<u32>> a(2, std::vector<u32>(2, 0));
        a[1][1] = N->encode({0, 1});  // r^2
        add("D4/V4", "D4", cyclic_top(N, 2, phis, a));
    }
    {
        // D4 over its center: top = C2 x C2 on indices 1 <-> r, 2 <-> s,
        // 3 <-> rs; tails record where products fall back into <r^2>.
        auto N = cyclic_chained(2, 1);
        std::vector<std::vector<int>> gamma(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gamma[i][j] = i ^ j;
        std::vector<std::vector<u32>> a(4, std::vector<u32>(4, 0));
        a[1][1] = 1;  // r * r = r^2
        a[2][1] = 1;  // s * r = (rs) r^2
        a[1][3] = 1;  // r * rs = s r^2
        a[2][3] = 1;  // s * rs = r r^2
        std::vector<std::vector<ExpVec>> phis(4);  // center: all identity
        add("D4/Z", "D4", shared_ext(ExtGroup::build(N, gamma, a, phis)));
    }

    {
        // S3 = C3 x| C2 by inversion.
        std::vector<std::vector<ExpVec>> phis = {{}, {ExpVec{2}}};
        add("S3", "S3", cyclic_top(cyclic_chained(3, 1), 2, phis));
    }
    {
        // C3 x| C4, the generator of C4 acting by inversion.
        std::vector<std::vector<ExpVec>> phis(4);
        phis[1] = {ExpVec{2}};
        phis[3] = {ExpVec{2}};
        add("C3:C4", "C3:C4", cyclic_top(cyclic_chained(3, 1), 4, phis));
    }
    {
        // C3 x S3 over N = C3 x C3: the involution inverts the second factor.
        std::vector<std::vector<ExpVec>> phis = {{}, {ExpVec{1, 0}, ExpVec{0, 2}}};
        add("C3xS3", "C3xS3", cyclic_top(elementary(3, 2), 2, phis));
    }

    // Heisenberg group over Z/9 (order 729).
    add("Heis9/G", "Heis9", make_trivial_top(heisenberg_modp(3, 2)));
    {
        // N = <x, z> = C9 x C9 (chained: X1, X2, Z1, Z2), top = C9 by y;
        // y^k x y^{-k} = x z^{-k} and z is central.
        auto N = PcGroupN::build(
            3,
            {ExpVec{0, 1, 0, 0}, ExpVec{0, 0, 0, 0}, ExpVec{0, 0, 0, 1}, ExpVec{0, 0, 0, 0}},
            {{},
             {ExpVec(4, 0)},
             {ExpVec(4, 0), ExpVec(4, 0)},
             {ExpVec(4, 0), ExpVec(4, 0), ExpVec(4, 0)}});
        auto Np = std::make_shared<PcGroupN>(std::move(N));
        std::vector<std::vector<ExpVec>> phis(9);
        for (int k = 1; k < 9; ++k) {
            ExpVec zk = digits((9 - k) % 9, 3, 2);        // z^{-k}
            ExpVec z3k = digits((9 - 3 * k % 9) % 9, 3, 2);  // z^{-3k}
            phis[k] = {ExpVec{1, 0, zk[0], zk[1]},        // X1 -> X1 z^{-k}
                       ExpVec{0, 1, z3k[0], z3k[1]},      // X2 -> X2 z^{-3k}
                       ExpVec{0, 0, 1, 0}, ExpVec{0, 0, 0, 1}};
        }
        add("Heis9/XZ", "Heis9", cyclic_top(Np, 9, phis));
    }

    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus())
        if (e.id == id) return e;
    throw std::out_of_range("unknown corpus entry: " + id);
}

}  // namespace repzeta
