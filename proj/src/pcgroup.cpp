#include "repzeta/pcgroup.hpp"

#include <random>
#include <stdexcept>

namespace repzeta {

namespace {

void append_word_letters(std::vector<int>& out, const ExpVec& w) {
    for (size_t g = 0; g < w.size(); ++g)
        for (i64 i = 0; i < w[g]; ++i) out.push_back((int)g);
}

}  // namespace

u32 PcGroupN::encode(const ExpVec& e) const {
    u32 code = 0;
    for (int i = d - 1; i >= 0; --i) code = (u32)(code * p + e[i]);
    return code;
}

ExpVec PcGroupN::decode(u32 code) const {
    ExpVec e(d);
    for (int i = 0; i < d; ++i) { e[i] = code % p; code /= (u32)p; }
    return e;
}

std::vector<int> PcGroupN::letters_of(u32 x) const {
    std::vector<int> w;
    append_word_letters(w, decode(x));
    return w;
}

ExpVec PcGroupN::collect(std::vector<int> w) const {
    size_t steps = 0;
    for (;;) {
        if (++steps > 5'000'000)
            throw std::runtime_error("collection did not terminate (presentation not weighted?)");
        // Leftmost inversion: n_j n_i -> n_i n_j [n_j, n_i]  (j > i).
        bool changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] <= w[i + 1]) continue;
            int j = w[i], g = w[i + 1];
            std::vector<int> repl = {g, j};
            append_word_letters(repl, comm[j][g]);
            w.erase(w.begin() + (long)i, w.begin() + (long)i + 2);
            w.insert(w.begin() + (long)i, repl.begin(), repl.end());
            changed = true;
            break;
        }
        if (changed) continue;
        // Word is sorted; leftmost run of p equal letters -> power relation.
        for (size_t i = 0; i + (size_t)p <= w.size(); ++i) {
            bool run = true;
            for (i64 k = 1; k < p; ++k) run &= w[i + k] == w[i];
            if (!run) continue;
            int g = w[i];
            std::vector<int> repl;
            append_word_letters(repl, power[g]);
            w.erase(w.begin() + (long)i, w.begin() + (long)i + p);
            w.insert(w.begin() + (long)i, repl.begin(), repl.end());
            changed = true;
            break;
        }
        if (!changed) break;
    }
    ExpVec e(d, 0);
    for (int g : w) ++e[g];
    return e;
}

u32 PcGroupN::mul(u32 a, u32 b) const {
    ExpVec eb = decode(b);
    u32 x = a;
    for (int g = 0; g < d; ++g)
        for (i64 i = 0; i < eb[g]; ++i) x = gen_mul_[g][x];
    return x;
}

std::vector<u32> PcGroupN::elements() const {
    std::vector<u32> out((size_t)size);
    for (i64 i = 0; i < size; ++i) out[(size_t)i] = (u32)i;
    return out;
}

PcGroupN PcGroupN::build(i64 p, std::vector<ExpVec> power,
                         std::vector<std::vector<ExpVec>> comm) {
    PcGroupN N;
    N.p = p;
    N.d = (int)power.size();
    if (p < 2) throw std::invalid_argument("pc presentation: p must be a prime >= 2");
    for (i64 q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("pc presentation: p is not prime");
    N.size = ipow(p, N.d);
    if (N.size > (i64)1 << 30) throw std::invalid_argument("pc presentation: group too large");
    if ((int)comm.size() != N.d)
        throw std::invalid_argument("pc presentation: commutator table has wrong shape");
    for (int i = 0; i < N.d; ++i) {
        if ((int)power[i].size() != N.d)
            throw std::invalid_argument("pc presentation: power word has wrong length");
        for (int c = 0; c < N.d; ++c) {
            if (power[i][c] < 0 || power[i][c] >= p)
                throw std::invalid_argument("pc presentation: exponent out of range");
            if (c <= i && power[i][c] != 0)
                throw std::invalid_argument("pc presentation: power word not weighted");
        }
        if ((int)comm[i].size() != i)
            throw std::invalid_argument("pc presentation: commutator table has wrong shape");
        for (int j = 0; j < i; ++j) {
            if ((int)comm[i][j].size() != N.d)
                throw std::invalid_argument("pc presentation: commutator word has wrong length");
            for (int c = 0; c < N.d; ++c) {
                if (comm[i][j][c] < 0 || comm[i][j][c] >= p)
                    throw std::invalid_argument("pc presentation: exponent out of range");
                if (c <= i && comm[i][j][c] != 0)
                    throw std::invalid_argument("pc presentation: commutator word not weighted");
            }
        }
    }
    N.power = std::move(power);
    N.comm = std::move(comm);

    // Multiplication tables from collection.
    N.gen_mul_.assign((size_t)N.d, std::vector<u32>((size_t)N.size));
    for (i64 x = 0; x < N.size; ++x) {
        std::vector<int> base = N.letters_of((u32)x);
        for (int g = 0; g < N.d; ++g) {
            std::vector<int> w = base;
            w.push_back(g);
            N.gen_mul_[g][(size_t)x] = N.encode(N.collect(std::move(w)));
        }
    }

    // Inverses by cycling through powers.
    N.inv_.assign((size_t)N.size, 0);
    std::vector<char> done((size_t)N.size, 0);
    for (i64 x = 0; x < N.size; ++x) {
        if (done[(size_t)x]) continue;
        std::vector<u32> cyc = {(u32)x};
        while (cyc.back() != 0 || cyc.size() == 1) {
            u32 nxt = N.mul(cyc.back(), (u32)x);
            if (nxt == (u32)x) break;  // x == identity
            cyc.push_back(nxt);
            if (nxt == 0) break;
        }
        // cyc = x, x^2, ..., x^n = e  (or just {e} for the identity).
        size_t n = cyc.size();
        for (size_t k = 0; k < n; ++k) {
            u32 e = cyc[k];
            N.inv_[e] = cyc[(n - 2 - k + n) % n];
            done[e] = 1;
        }
        if (cyc.back() != 0 && (u32)x != 0)
            throw std::logic_error("pc group: power cycle did not reach the identity");
    }
    N.inv_[0] = 0;

    // Associativity sweep: exhaustive for |N| <= 3^5, randomized otherwise.
    auto check = [&](u32 a, u32 b, u32 c) {
        if (N.mul(N.mul(a, b), c) != N.mul(a, N.mul(b, c)))
            throw std::invalid_argument("pc presentation: multiplication is not associative");
    };
    if (N.size <= 243) {
        for (i64 a = 0; a < N.size; ++a)
            for (i64 b = 0; b < N.size; ++b)
                for (i64 c = 0; c < N.size; ++c) check((u32)a, (u32)b, (u32)c);
    } else {
        std::mt19937 rng(0xC0FFEE);
        for (int t = 0; t < 10000; ++t)
            check(rng() % (u32)N.size, rng() % (u32)N.size, rng() % (u32)N.size);
    }
    return N;
}

}  // namespace repzeta
