/**
 * @file repzeta_cli.cpp
 * @brief Command line interface: group catalogue and text format, exact
 *        series computation, verification suites, and pro-p towers.
 *
 * Machine-readable results are emitted as versioned OutputRecord JSON
 * ({"format": "repzeta-output", "format_version": 1, ...}) carrying the tool
 * version and the seed; every record is reparsed before it is written, so
 * emitted output always round-trips losslessly.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "repzeta/groupio.hpp"
#include "repzeta/oracle.hpp"
#include "repzeta/zeta.hpp"

using nlohmann::json;
using namespace repzeta;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kFormatVersion = 1;

json series_json(const DirichletPoly& z) {
    json arr = json::array();
    for (const auto& [deg, coeff] : z.c)
        arr.push_back({{"degree", deg}, {"num", coeff.num}, {"den", coeff.den}});
    return arr;
}

DirichletPoly series_from_json(const json& arr) {
    DirichletPoly z;
    for (const auto& e : arr)
        z.add(e.at("degree").get<i64>(),
              Rat(e.at("num").get<i64>(), e.at("den").get<i64>()));
    return z;
}

json series_record(const DirichletPoly& z) {
    json j{{"series", series_json(z)}, {"display", z.str()}};
    // Losslessness of the series encoding, checked on every emission.
    if (!(series_from_json(j["series"]) == z))
        throw std::logic_error("series serialization is not lossless");
    return j;
}

/** Write one OutputRecord; returns the process exit code. */
int emit_record(const std::string& command, i64 seed, const json& input,
                const json& result, const std::string& json_path) {
    json rec{{"format", "repzeta-output"},
             {"format_version", kFormatVersion},
             {"tool", {{"name", "repzeta"}, {"version", kToolVersion}}},
             {"seed", seed},
             {"command", command},
             {"input", input},
             {"result", result}};
    std::string text = rec.dump(2);
    if (json::parse(text) != rec) {
        std::cerr << "internal error: output record does not round-trip\n";
        return 1;
    }
    if (json_path.empty() || json_path == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 1;
        }
        out << text << "\n";
    }
    return 0;
}

/** Resolve --group/--file to an extension group plus a display label. */
std::pair<std::shared_ptr<const ExtGroup>, std::string> resolve_group(
    const std::string& id, const std::string& file) {
    if (!id.empty()) return {corpus_entry(id).G, id};
    return {read_group_file(file), file};
}

// ---------------------------------------------------------------- verify --

using SuiteResult = std::optional<std::string>;  ///< first failing identity

SuiteResult verify_assembly(i64 max_order) {
    for (const auto& e : corpus()) {
        if (e.G->order() > max_order) continue;
        NContext ctx(e.G);
        if (!(zeta_assemble(ctx) == zeta_direct(ctx)))
            return e.id + ": fibered plain series != direct enumeration";
        if (!(twist_assemble(ctx) == twist_direct(ctx)))
            return e.id + ": fibered twist series != direct enumeration";
    }
    return std::nullopt;
}

SuiteResult verify_jaikin(i64 max_order) {
    struct Baseline {
        std::string id;
        DirichletPoly plain, twist;
    };
    std::map<std::string, Baseline> seen;
    for (const auto& e : corpus()) {
        if (e.G->order() > max_order) continue;
        NContext ctx(e.G);
        DirichletPoly z = zeta_assemble(ctx), t = twist_assemble(ctx);
        auto it = seen.find(e.group_id);
        if (it == seen.end()) {
            seen.emplace(e.group_id, Baseline{e.id, std::move(z), std::move(t)});
            continue;
        }
        if (!(z == it->second.plain))
            return e.group_id + ": plain series differs between " +
                   it->second.id + " and " + e.id;
        if (!(t == it->second.twist))
            return e.group_id + ": twist series differs between " +
                   it->second.id + " and " + e.id;
    }
    return std::nullopt;
}

SuiteResult verify_sylow(i64 max_order) {
    for (const auto& e : corpus()) {
        if (e.G->order() > max_order) continue;
        NContext ctx(e.G);
        const auto& irr = ctx.irr_pairs();
        for (size_t i = 0; i < irr.size(); ++i) {
            SylowReport rep = sylow_reduction_checks(ctx, irr[i]);
            if (!rep.struct_ok)
                return e.id + " theta#" + std::to_string(i) +
                       ": Gamma_K != Gamma_K^0 . (Gamma_K)_p";
            if (!rep.red_ok)
                return e.id + " theta#" + std::to_string(i) +
                       ": restriction (Gamma_K)_p -> Gamma_{K_p} not bijective";
            if (!rep.t_q_ok)
                return e.id + " theta#" + std::to_string(i) +
                       ": a q-part of L acts nontrivially modulo Lin(G)";
        }
    }
    return std::nullopt;
}

TwistChoices random_choices(const NContext& ctx, std::mt19937& rng) {
    TwistChoices ch;
    auto gen = std::make_shared<std::mt19937>(rng());
    ch.chooser = [gen](const std::vector<u32>& cands) {
        return cands[(*gen)() % cands.size()];
    };
    ch.scan_order = ctx.N().elements();
    std::shuffle(ch.scan_order.begin(), ch.scan_order.end(), rng);
    ch.psi_order.resize(ctx.lin_G_count());
    for (size_t t = 0; t < ch.psi_order.size(); ++t) ch.psi_order[t] = t;
    std::shuffle(ch.psi_order.begin(), ch.psi_order.end(), rng);
    return ch;
}

SuiteResult verify_twist(i64 max_order, i64 seed, int trials) {
    std::mt19937 rng((unsigned)seed);
    for (const auto& e : corpus()) {
        if (e.G->order() > max_order) continue;
        NContext ctx(e.G);
        for (const auto& cls : ctx.twist_classes()) {
            const NPair& theta = ctx.irr_pairs()[cls[0]];
            TwistContext base(ctx, theta);
            auto gamma0 = gamma_group(base);
            auto t0 = t_invariant(base, gamma0);
            for (int trial = 0; trial < trials; ++trial) {
                TwistContext redo(ctx, theta, random_choices(ctx, rng));
                std::string where = e.id + " theta#" + std::to_string(cls[0]) +
                                    " trial " + std::to_string(trial);
                auto gamma1 = gamma_group(redo);
                if (!(gamma0 == gamma1))
                    return where + ": Gamma changed under re-chosen data";
                auto t1 = t_invariant(redo, gamma1);
                if (!(t0.classes[t0.mu_class] == t1.classes[t1.mu_class]))
                    return where + ": T class changed under re-chosen data";
                Cocycle2 diff = base.pair_class() - redo.pair_class();
                i64 M = std::max<i64>(1, diff.denominator()) *
                        base.QK().exponent();
                if (!is_coboundary2(base.QK(), diff, M))
                    return where + ": pair classes differ in H^2";
            }
        }
    }
    return std::nullopt;
}

SuiteResult verify_oracles(i64 max_order, i64 seed) {
    for (const auto& e : corpus()) {
        if (e.G->order() > max_order) continue;
        NContext ctx(e.G);
        auto T = oracle::irr_by_values(*e.G);
        DirichletPoly oz;
        for (i64 d : T.degrees) oz.add(d, Rat(1));
        if (!(oz == zeta_direct(ctx)))
            return e.id + ": oracle character degrees != direct enumeration";
        DirichletPoly tw;
        for (const auto& cls : oracle::twist_partition(T))
            tw.add(T.degrees[cls[0]], Rat(1));
        if (!(tw == twist_direct(ctx)))
            return e.id + ": oracle twist partition != direct twist series";
    }
    // Coboundary decisions against the exhaustive search.
    std::mt19937 rng((unsigned)seed);
    for (const std::string& id : {"D4/Z", "H3/C3xC3"}) {
        if (corpus_entry(id).G->order() > max_order) continue;
        NContext ctx(corpus_entry(id).G);
        SubgroupG full;
        for (int i = 0; i < ctx.G().m; ++i) full.idx.push_back(i);
        QuotientTable Q = QuotientTable::of(ctx.G(), full);
        const i64 M = 8;
        for (int trial = 0; trial < 200; ++trial) {
            Cocycle2 z = Cocycle2::zero(Q.r());
            for (auto& row : z.z)
                for (QZ& v : row) v = QZ((i64)(rng() % (u32)M), M);
            if (coboundary_witness(Q, z, M).has_value() !=
                oracle::coboundary_exhaustive(Q.gam, z.z, M).has_value())
                return id + " trial " + std::to_string(trial) +
                       ": coboundary solver disagrees with exhaustive search";
        }
    }
    return std::nullopt;
}

int run_suites(const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& suites) {
    bool all_ok = true;
    for (const auto& [name, fn] : suites) {
        SuiteResult fail = fn();
        if (fail) {
            std::cout << "FAIL " << name << ": " << *fail << "\n";
            all_ok = false;
        } else {
            std::cout << "PASS " << name << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact representation zeta engine for finite group extensions"};
    app.require_subcommand(1);
    i64 seed = 0;
    app.add_option("--seed", seed, "seed for randomized verification choices");

    // group ------------------------------------------------------------
    auto* grp = app.add_subcommand("group", "catalogue and text format");
    grp->require_subcommand(1);
    grp->add_subcommand("list", "list the built-in catalogue");
    std::string show_id;
    auto* grp_show = grp->add_subcommand("show", "print an entry in text format");
    grp_show->add_option("id", show_id, "catalogue entry id")->required();
    std::string load_path;
    bool load_canonical = false;
    auto* grp_load = grp->add_subcommand("load", "parse and validate a group file");
    grp_load->add_option("file", load_path, "group text file")->required();
    grp_load->add_flag("--canonical", load_canonical,
                       "echo the canonical serialization after validating");

    // compute ----------------------------------------------------------
    std::string what, cg_id, cg_file, cg_json;
    auto* cmp = app.add_subcommand("compute", "exact series and invariants");
    cmp->add_option("what", what, "zeta | twist-zeta | partial | invariants")
        ->required()
        ->check(CLI::IsMember({"zeta", "twist-zeta", "partial", "invariants"}));
    auto* opt_id = cmp->add_option("--group", cg_id, "catalogue entry id");
    cmp->add_option("--file", cg_file, "group text file")->excludes(opt_id);
    cmp->add_option("--json", cg_json, "write the OutputRecord here ('-' = stdout)");

    // verify -----------------------------------------------------------
    std::string suite;
    i64 max_order = 648;
    int trials = 3;
    auto* ver = app.add_subcommand("verify", "cross-check suites (exit 0 iff all pass)");
    ver->add_option("suite", suite,
                    "all | assembly | jaikin | sylow | twist | oracles")
        ->required()
        ->check(CLI::IsMember({"all", "assembly", "jaikin", "sylow", "twist", "oracles"}));
    ver->add_option("--max-order", max_order, "largest |G| to include");
    ver->add_option("--trials", trials, "randomized re-choices per invariant");

    // tower ------------------------------------------------------------
    std::string family = "heisenberg", tw_json;
    i64 tower_p = 3;
    int levels = 2;
    bool twisted = false, fit = false;
    auto* twr = app.add_subcommand("tower", "pro-p tower of a group family");
    twr->add_option("--family", family, "family name")
        ->check(CLI::IsMember({"heisenberg"}));
    twr->add_option("--p", tower_p, "the prime")->required();
    twr->add_option("--levels", levels, "number of levels")->required();
    twr->add_flag("--twist", twisted, "twist series instead of plain");
    twr->add_flag("--fit", fit, "fit a rational model to the coefficients");
    twr->add_option("--json", tw_json, "write the OutputRecord here ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (grp->parsed()) {
            if (grp->get_subcommand("list")->parsed()) {
                std::cout << "id            group   |G|   |N|   cosets\n";
                for (const auto& e : corpus()) {
                    char buf[96];
                    std::snprintf(buf, sizeof buf, "%-13s %-7s %-5lld %-5lld %d",
                                  e.id.c_str(), e.group_id.c_str(), e.G->order(),
                                  e.G->N->size, e.G->m);
                    std::cout << buf << "\n";
                }
                return 0;
            }
            if (grp_show->parsed()) {
                std::cout << write_group_text(*corpus_entry(show_id).G);
                return 0;
            }
            // load
            std::shared_ptr<const ExtGroup> G;
            try {
                G = read_group_file(load_path);
            } catch (const GroupParseError& e) {
                std::cerr << load_path << ": parse error: " << e.what() << "\n";
                return 1;
            }
            std::cout << "ok: |G| = " << G->order() << ", p = " << G->N->p
                      << ", |N| = " << G->N->size << ", cosets = " << G->m << "\n";
            if (load_canonical) std::cout << write_group_text(*G);
            return 0;
        }

        if (cmp->parsed()) {
            if (cg_id.empty() && cg_file.empty())
                throw CLI::ValidationError("compute", "need --group or --file");
            auto [G, label] = resolve_group(cg_id, cg_file);
            NContext ctx(G);
            json input{{"group", label}, {"order", G->order()}};
            json result;
            if (what == "zeta") {
                result = series_record(zeta_assemble(ctx));
            } else if (what == "twist-zeta") {
                result = series_record(twist_assemble(ctx));
            } else if (what == "partial") {
                json plain = json::array();
                for (const auto& cell : zeta_cells(ctx))
                    plain.push_back({{"K_idx", cell.K_idx},
                                     {"class_modulus", cell.modulus},
                                     {"members", cell.members.size()},
                                     {"f", series_record(cell.f)},
                                     {"part", series_record(cell.part)}});
                json twist = json::array();
                for (const auto& cell : twist_cells(ctx))
                    twist.push_back({{"L_idx", cell.L_idx},
                                     {"K_idx", cell.K_idx},
                                     {"class_modulus", cell.modulus},
                                     {"gamma_order", cell.Gamma.size()},
                                     {"members", cell.members.size()},
                                     {"f", series_record(cell.f)},
                                     {"part", series_record(cell.part)}});
                result = json{{"plain_cells", plain}, {"twist_cells", twist}};
            } else {  // invariants
                json rows = json::array();
                const auto& irr = ctx.irr_pairs();
                for (size_t i = 0; i < irr.size(); ++i) {
                    TwistContext tc(ctx, irr[i]);
                    auto gamma = gamma_group(tc);
                    auto T = t_invariant(tc, gamma);
                    rows.push_back(
                        {{"index", i},
                         {"degree", ipow(ctx.N().p, ctx.degree_exponent(irr[i]))},
                         {"K_idx", tc.K().idx},
                         {"L_idx", tc.L().idx},
                         {"gamma_order", gamma.size()},
                         {"t_classes", T.classes.size()},
                         {"t_class_index", T.mu_class}});
                }
                result = json{{"irreducibles", rows}};
            }
            return emit_record("compute " + what, seed, input, result, cg_json);
        }

        if (ver->parsed()) {
            std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites;
            auto want = [&](const std::string& s) {
                return suite == "all" || suite == s;
            };
            if (want("assembly"))
                suites.emplace_back("assembly", [&] { return verify_assembly(max_order); });
            if (want("jaikin"))
                suites.emplace_back("jaikin", [&] { return verify_jaikin(max_order); });
            if (want("sylow"))
                suites.emplace_back("sylow", [&] {
                    return verify_sylow(std::min<i64>(max_order, 243));
                });
            if (want("twist"))
                suites.emplace_back("twist", [&] {
                    return verify_twist(std::min<i64>(max_order, 243), seed, trials);
                });
            if (want("oracles"))
                suites.emplace_back("oracles", [&] {
                    return verify_oracles(std::min<i64>(max_order, 243), seed);
                });
            return run_suites(suites);
        }

        // tower
        auto tower = heisenberg_tower(tower_p, levels, twisted);
        json lv = json::array();
        std::vector<Rat> last_coeffs;
        for (const auto& level : tower) {
            lv.push_back({{"level", level.level},
                          {"order", level.group_order},
                          {"series", series_record(level.series)}});
            if (level.level == levels) {
                for (const auto& [deg, coeff] : level.series.c) {
                    // Coefficient of p^{-ks} at position k, zeros filled in.
                    i64 k = 0, v = deg;
                    while (v > 1) { v /= tower_p; ++k; }
                    while ((i64)last_coeffs.size() <= k) last_coeffs.push_back(Rat(0));
                    last_coeffs[(size_t)k] = coeff;
                }
            }
        }
        json result{{"family", family},
                    {"p", tower_p},
                    {"twisted", twisted},
                    {"levels", lv}};
        if (fit) {
            auto model = rational_fit(last_coeffs, tower_p);
            if (model) {
                json num = json::array();
                for (const Rat& c : model->num)
                    num.push_back({{"num", c.num}, {"den", c.den}});
                json factors = json::array();
                for (auto [i, j] : model->factors) factors.push_back({i, j});
                result["fit"] = json{{"display", model->str(tower_p)},
                                     {"numerator", num},
                                     {"factors", factors}};
            } else {
                result["fit"] = nullptr;
            }
        }
        return emit_record("tower", seed, json{{"family", family}}, result, tw_json);
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
