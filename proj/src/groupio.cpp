/**
 * @file groupio.cpp
 * @brief Text format reader and writer (groupio.hpp).
 */
#include "repzeta/groupio.hpp"

#include <fstream>
#include <sstream>

namespace repzeta {

namespace {

struct Line {
    int no;
    std::vector<std::string> words;
};

/** Tokenized non-empty lines, comments stripped. */
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        Line ln{no, {}};
        std::string w;
        while (ls >> w) ln.words.push_back(w);
        if (!ln.words.empty()) out.push_back(std::move(ln));
    }
    return out;
}

i64 parse_int(const Line& ln, const std::string& w) {
    size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != w.size())
        throw GroupParseError(ln.no, "expected an integer, got '" + w + "'");
    return v;
}

/** Words [from, to) as an exponent vector of length d (empty list = zeros). */
ExpVec parse_vec(const Line& ln, size_t from, size_t to, int d, i64 p) {
    if (from == to) return ExpVec((size_t)d, 0);
    if ((int)(to - from) != d)
        throw GroupParseError(ln.no, "expected " + std::to_string(d) +
                                         " exponents, got " +
                                         std::to_string(to - from));
    ExpVec e;
    for (size_t k = from; k < to; ++k) {
        i64 v = parse_int(ln, ln.words[k]);
        if (v < 0 || v >= p)
            throw GroupParseError(ln.no, "exponent " + std::to_string(v) +
                                             " out of range [0, " +
                                             std::to_string(p) + ")");
        e.push_back(v);
    }
    return e;
}

/** Index of "=" in ln.words, or throws. */
size_t eq_pos(const Line& ln) {
    for (size_t k = 0; k < ln.words.size(); ++k)
        if (ln.words[k] == "=") return k;
    throw GroupParseError(ln.no, "expected '=' in '" + ln.words[0] + "' line");
}

}  // namespace

std::shared_ptr<const ExtGroup> read_group_text(std::istream& in) {
    std::vector<Line> lines = tokenize(in);
    size_t at = 0;
    auto next_is = [&](const std::string& key) {
        return at < lines.size() && lines[at].words[0] == key;
    };

    // Header: p, then d.
    auto header_int = [&](const std::string& key, i64 lo) {
        int no = at < lines.size() ? lines[at].no : (int)lines.size() + 1;
        if (!next_is(key))
            throw GroupParseError(no, "expected '" + key + " <value>'");
        const Line& ln = lines[at++];
        if (ln.words.size() != 2)
            throw GroupParseError(ln.no, "'" + key + "' takes one value");
        i64 v = parse_int(ln, ln.words[1]);
        if (v < lo)
            throw GroupParseError(ln.no, "'" + key + "' must be at least " +
                                             std::to_string(lo));
        return v;
    };
    i64 p = header_int("p", 2);
    int d = (int)header_int("d", 1);

    // Presentation of N.
    std::vector<ExpVec> power((size_t)d, ExpVec((size_t)d, 0));
    std::vector<std::vector<ExpVec>> comm((size_t)d);
    for (int j = 0; j < d; ++j) comm[(size_t)j].assign((size_t)j, ExpVec((size_t)d, 0));
    while (at < lines.size() &&
           (lines[at].words[0] == "power" || lines[at].words[0] == "comm")) {
        const Line& ln = lines[at++];
        size_t eq = eq_pos(ln);
        if (ln.words[0] == "power") {
            if (eq != 2)
                throw GroupParseError(ln.no, "usage: power <i> = <exponents>");
            i64 i = parse_int(ln, ln.words[1]);
            if (i < 1 || i > d)
                throw GroupParseError(ln.no, "generator index out of range");
            power[(size_t)(i - 1)] = parse_vec(ln, eq + 1, ln.words.size(), d, p);
        } else {
            if (eq != 3)
                throw GroupParseError(ln.no, "usage: comm <j> <i> = <exponents>");
            i64 j = parse_int(ln, ln.words[1]), i = parse_int(ln, ln.words[2]);
            if (i < 1 || j <= i || j > d)
                throw GroupParseError(ln.no, "need d >= j > i >= 1");
            comm[(size_t)(j - 1)][(size_t)(i - 1)] =
                parse_vec(ln, eq + 1, ln.words.size(), d, p);
        }
    }
    std::shared_ptr<const PcGroupN> N;
    try {
        N = std::make_shared<PcGroupN>(PcGroupN::build(p, power, comm));
    } catch (const std::invalid_argument& e) {
        int no = at > 0 ? lines[at - 1].no : 1;
        throw GroupParseError(no, std::string("invalid presentation: ") + e.what());
    }

    // Top data.
    int m = 1;
    if (next_is("m")) m = (int)header_int("m", 1);
    std::vector<std::vector<int>> gamma;
    if (m == 1) {
        gamma = {{0}};
    } else {
        for (int r = 0; r < m; ++r) {
            int no = at < lines.size() ? lines[at].no : lines.back().no + 1;
            if (!next_is("gamma"))
                throw GroupParseError(no, "expected " + std::to_string(m) +
                                              " 'gamma' rows");
            const Line& ln = lines[at++];
            if ((int)ln.words.size() != m + 1)
                throw GroupParseError(ln.no, "gamma row needs " +
                                                 std::to_string(m) + " entries");
            std::vector<int> row;
            for (int k = 1; k <= m; ++k) {
                i64 v = parse_int(ln, ln.words[(size_t)k]);
                if (v < 0 || v >= m)
                    throw GroupParseError(ln.no, "coset index out of range");
                row.push_back((int)v);
            }
            gamma.push_back(std::move(row));
        }
    }
    std::vector<std::vector<u32>> a((size_t)m, std::vector<u32>((size_t)m, 0));
    std::vector<std::vector<ExpVec>> phis((size_t)m);
    while (at < lines.size() &&
           (lines[at].words[0] == "tail" || lines[at].words[0] == "phi")) {
        const Line& ln = lines[at++];
        size_t eq = eq_pos(ln);
        if (ln.words[0] == "tail") {
            if (eq != 3)
                throw GroupParseError(ln.no, "usage: tail <i> <j> = <exponents>");
            i64 i = parse_int(ln, ln.words[1]), j = parse_int(ln, ln.words[2]);
            if (i < 0 || i >= m || j < 0 || j >= m)
                throw GroupParseError(ln.no, "coset index out of range");
            a[(size_t)i][(size_t)j] =
                N->encode(parse_vec(ln, eq + 1, ln.words.size(), d, p));
        } else {
            if (eq != 2)
                throw GroupParseError(ln.no, "usage: phi <i> = <d images>");
            i64 i = parse_int(ln, ln.words[1]);
            if (i < 0 || i >= m)
                throw GroupParseError(ln.no, "coset index out of range");
            // Images separated by '/'.
            std::vector<ExpVec> imgs;
            size_t from = eq + 1;
            for (size_t k = eq + 1; k <= ln.words.size(); ++k) {
                if (k < ln.words.size() && ln.words[k] != "/") continue;
                imgs.push_back(parse_vec(ln, from, k, d, p));
                from = k + 1;
            }
            if ((int)imgs.size() != d)
                throw GroupParseError(ln.no, "expected " + std::to_string(d) +
                                                 " generator images");
            phis[(size_t)i] = std::move(imgs);
        }
    }
    if (at < lines.size())
        throw GroupParseError(lines[at].no,
                              "unexpected directive '" + lines[at].words[0] + "'");
    try {
        return std::make_shared<ExtGroup>(ExtGroup::build(N, gamma, a, phis));
    } catch (const std::exception& e) {
        throw GroupParseError(lines.empty() ? 1 : lines.back().no,
                              std::string("inconsistent extension data: ") + e.what());
    }
}

std::shared_ptr<const ExtGroup> read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_group_text(in);
}

std::string write_group_text(const ExtGroup& G) {
    const PcGroupN& N = *G.N;
    std::ostringstream out;
    auto vec = [&](const ExpVec& e) {
        std::string s;
        for (size_t k = 0; k < e.size(); ++k)
            s += (k ? " " : "") + std::to_string(e[k]);
        return s;
    };
    out << "p " << N.p << "\n";
    out << "d " << N.d << "\n";
    for (int i = 0; i < N.d; ++i)
        out << "power " << (i + 1) << " = " << vec(N.power[(size_t)i]) << "\n";
    for (int j = 1; j < N.d; ++j)
        for (int i = 0; i < j; ++i)
            out << "comm " << (j + 1) << " " << (i + 1) << " = "
                << vec(N.comm[(size_t)j][(size_t)i]) << "\n";
    out << "m " << G.m << "\n";
    if (G.m > 1)
        for (int i = 0; i < G.m; ++i) {
            out << "gamma";
            for (int j = 0; j < G.m; ++j) out << " " << G.gam[(size_t)i][(size_t)j];
            out << "\n";
        }
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j)
            if (G.a[(size_t)i][(size_t)j] != 0)
                out << "tail " << i << " " << j << " = "
                    << vec(N.decode(G.a[(size_t)i][(size_t)j])) << "\n";
    for (int i = 1; i < G.m; ++i) {
        bool identity = true;
        std::vector<ExpVec> imgs;
        for (int g = 0; g < N.d; ++g) {
            ExpVec unit((size_t)N.d, 0);
            unit[(size_t)g] = 1;
            ExpVec img = N.decode(G.phi(i, N.encode(unit)));
            if (img != unit) identity = false;
            imgs.push_back(std::move(img));
        }
        if (identity) continue;
        out << "phi " << i << " =";
        for (int g = 0; g < N.d; ++g)
            out << (g ? " / " : " ") << vec(imgs[(size_t)g]);
        out << "\n";
    }
    return out.str();
}

}  // namespace repzeta
