// liekit: exact-arithmetic Lie theory toolkit CLI.
//
// Subcommands: rootsys, weyl, verma, bgg, jh, drinfeld, audit.
// Output is deterministic JSON (default) or an aligned text table.

#include <liekit/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace liekit;

namespace {

std::string resolve_type(const std::string& t, long gl_dim) {
    if (gl_dim > 0) return "GL" + std::to_string(gl_dim);
    return t;
}

QVec parse_tuple(const std::string& s) {
    QVec out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
    return out;
}

std::set<int> parse_parabolic(const std::string& s, int rank) {
    std::set<int> I;
    if (s.empty()) return I;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int i = std::stoi(tok);
        if (i < 1 || i > rank) throw invalid_input("parabolic index out of range: " + tok);
        I.insert(i - 1);
    }
    return I;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
    QVec c = parse_tuple(s);
    if (rs.type.gl) {
        if (c.size() != size_t(rs.rank() + 1))
            throw invalid_input("expected a gl tuple of length " + std::to_string(rs.rank() + 1));
        return Weight::gl(std::move(c));
    }
    if (c.size() != size_t(rs.rank()))
        throw invalid_input("expected fundamental coordinates of length " + std::to_string(rs.rank()));
    return Weight::fundamental(std::move(c));
}

IVec parse_root(const RootSystem& rs, const std::string& s) {
    QVec c = parse_tuple(s);
    IVec r;
    for (const Rat& x : c) {
        if (!is_integer(x)) throw invalid_input("root coordinates must be integers");
        r.push_back(x.get_num().get_si());
    }
    if ((int)r.size() != rs.rank()) throw invalid_input("root coordinate length mismatch");
    return r;
}

SmoothLabel parse_smooth(const std::string& s) {
    if (s == "trivial" || s == "1" || s.empty()) return SmoothLabel::trivial();
    if (s.rfind("opaque:", 0) == 0) {
        std::string rest = s.substr(7);
        bool irr = false;
        auto pos = rest.find(":irreducible");
        if (pos != std::string::npos) {
            irr = true;
            rest = rest.substr(0, pos);
        }
        return SmoothLabel::opaque(rest, irr);
    }
    throw invalid_input("unknown smooth input (use 'trivial' or 'opaque:NAME[:irreducible]'): " + s);
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ",";
        s += rat_str(w.coords[i]);
    }
    return s + ")";
}

void emit(const Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // generic flat table rendering of a JSON document
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& v, const std::string& prefix) {
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it)
                walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
            for (size_t i = 0; i < v.size(); ++i) walk(v[i], prefix + "[" + std::to_string(i) + "]");
        } else {
            std::cout << std::left << std::setw(44) << prefix << " " << v.dump() << "\n";
        }
    };
    walk(j, "");
}

struct CommonOpts {
    std::string type = "A1";
    std::string format = "json";
};

int run_cli(int argc, char** argv) {
    CLI::App app{"exact computational Lie theory toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    // rootsys
    auto* rootsys = app.add_subcommand("rootsys", "root system and Chevalley constants");
    std::string rs_type = "A2";
    long gl_dim = 0;
    app.add_option("--gl-dim", gl_dim, "use GL_N weight conventions (equivalent to --type GLN)");
    rootsys->add_option("--type", rs_type, "e.g. A2, B3, G2, GL4");

    // weyl
    auto* weyl = app.add_subcommand("weyl", "Weyl group and minimal coset representatives");
    std::string w_type = "A2", w_parab;
    weyl->add_option("--type", w_type);
    weyl->add_option("--parabolic", w_parab, "comma list of simple-root indices, empty = Borel");

    // verma
    auto* verma = app.add_subcommand("verma", "truncated Verma window: dimensions, Gram ranks, JH oracle");
    std::string v_type = "A1", v_weight = "0", v_cache;
    long v_depth = 6;
    bool v_jh = false;
    verma->add_option("--type", v_type);
    verma->add_option("--verma-weight", v_weight, "highest weight, comma tuple");
    verma->add_option("--depth", v_depth);
    verma->add_flag("--jh", v_jh, "run the brute-force Jordan-Hoelder oracle");
    verma->add_option("--cache-dir", v_cache);

    // bgg
    auto* bgg = app.add_subcommand("bgg", "(parabolic) BGG resolution, dual labels, Euler check");
    std::string b_type = "A2", b_weight = "0,0", b_parab;
    long b_depth = 8;
    bgg->add_option("--type", b_type);
    bgg->add_option("--weight", b_weight);
    bgg->add_option("--parabolic", b_parab);
    bgg->add_option("--depth", b_depth);

    // jh
    auto* jh = app.add_subcommand("jh", "composition-series labels of F^G_P(M(lambda), V)");
    std::string j_type = "A1", j_weight = "0", j_parab, j_smooth = "trivial";
    long j_depth = 6;
    unsigned long j_prime = 5;
    jh->add_option("--type", j_type);
    jh->add_option("--verma-weight", j_weight);
    jh->add_option("--parabolic", j_parab);
    jh->add_option("--smooth", j_smooth);
    jh->add_option("--depth", j_depth);
    jh->add_option("--prime", j_prime);

    // drinfeld
    auto* dr = app.add_subcommand("drinfeld", "line-bundle filtration report on the half space");
    long d_d = 1, d_r = 0, d_s = 0, d_window = 6;
    bool d_verify = false;
    dr->add_option("--d", d_d)->required();
    dr->add_option("--r", d_r)->required();
    dr->add_option("--s", d_s);
    dr->add_option("--window", d_window);
    dr->add_flag("--verify-cohomology", d_verify, "run the local-cohomology window checks for every i");

    // audit
    auto* audit = app.add_subcommand("audit", "appendix verifications");
    std::string a_mode, a_type = "A2", a_weight, a_gamma;
    long a_n = 2, a_k = 2, a_depth = 8, a_powers = 4, a_height = 4;
    unsigned long a_prime = 5;
    audit->add_option("mode", a_mode, "abcd | commutator | coefficient | locfinite | injective | units")
        ->required();
    audit->add_option("--type", a_type);
    audit->add_option("--verma-weight", a_weight);
    audit->add_option("--gamma", a_gamma, "root in simple-root coordinates, comma tuple");
    audit->add_option("--n", a_n);
    audit->add_option("--k", a_k);
    audit->add_option("--depth", a_depth);
    audit->add_option("--powers", a_powers);
    audit->add_option("--height", a_height);
    audit->add_option("--prime", a_prime);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rootsys) {
            RootSystem rs = build_root_system(resolve_type(rs_type, gl_dim));
            ChevalleyBasis cb = chevalley_constants(rs);
            emit(root_system_json(rs, &cb), format);
        } else if (*weyl) {
            RootSystem rs = build_root_system(resolve_type(w_type, gl_dim));
            WeylGroup wg(rs);
            CosetSystem cs = wg.min_coset_reps(parse_parabolic(w_parab, rs.rank()));
            emit(coset_json(rs, cs), format);
        } else if (*verma) {
            RootSystem rs = build_root_system(resolve_type(v_type, gl_dim));
            ChevalleyBasis cb(rs);
            Weight lam = parse_weight(rs, v_weight);
            const char* env = std::getenv("LIEKIT_CACHE_DIR");
            std::string cache_dir = !v_cache.empty() ? v_cache : (env ? env : "");
            Json doc;
            doc["schema"] = kSchemaVersion;
            doc["kind"] = "verma-window";
            doc["type"] = rs.type.name();
            doc["lambda"] = weight_json(lam);
            doc["depth"] = v_depth;
            doc["order"] = kOrderTag;
            Json payload;
            std::string warning;
            bool from_cache = false;
            if (!cache_dir.empty()) {
                auto cached = load_window_cache(cache_dir, rs, lam, v_depth, &warning);
                if (cached) {
                    payload = *cached;
                    from_cache = true;
                }
            }
            VermaWindow w = build_window(rs, cb, lam, v_depth);
            if (!from_cache) {
                payload = window_payload(w);
                if (!cache_dir.empty()) store_window_cache(cache_dir, w);
            }
            Json spaces = Json::array();
            for (const Json& dj : payload) {
                const Json& g = dj["gram"];
                QMat gm(g.size(), g.size());
                for (size_t i = 0; i < g.size(); ++i)
                    for (size_t j2 = 0; j2 < g.size(); ++j2)
                        gm(i, j2) = rat_parse(g[i][j2].get<std::string>());
                Json sj;
                sj["drop"] = dj["drop"];
                sj["dim"] = g.size();
                sj["simple_dim"] = linalg::rank(gm);
                spaces.push_back(std::move(sj));
            }
            doc["weight_spaces"] = spaces;
            if (!warning.empty()) doc["warning"] = warning;
            if (v_jh) {
                WeylGroup wg(rs);
                auto factors = jh_verma_bruteforce(rs, cb, wg, lam, v_depth);
                Json fj = Json::array();
                for (const JHFactor& f : factors)
                    fj.push_back(Json{{"mu", weight_json(f.mu)},
                                      {"drop", ivec_json(f.drop)},
                                      {"multiplicity", f.multiplicity}});
                doc["jh_factors"] = fj;
            }
            emit(doc, format);
        } else if (*bgg) {
            RootSystem rs = build_root_system(resolve_type(b_type, gl_dim));
            WeylGroup wg(rs);
            Weight lam = parse_weight(rs, b_weight);
            std::set<int> I = parse_parabolic(b_parab, rs.rank());
            Resolution res = parabolic_bgg_resolution(rs, wg, I, lam);
            Json doc = resolution_json(res);
            doc["dual"] = dual_resolution_json(dual_la_resolution(rs, wg, I, lam));
            EulerReport er = euler_check(rs, res, b_depth);
            doc["euler_check"] = Json{{"depth", b_depth}, {"ok", er.ok}};
            if (!er.ok) {
                doc["euler_check"]["offending_drop"] = ivec_json(er.offending_drop);
                doc["euler_check"]["residual"] = er.residual;
            }
            emit(doc, format);
        } else if (*jh) {
            RootSystem rs = build_root_system(resolve_type(j_type, gl_dim));
            ChevalleyBasis cb(rs);
            WeylGroup wg(rs);
            Weight lam = parse_weight(rs, j_weight);
            ParabolicSubset P;
            P.I = parse_parabolic(j_parab, rs.rank());
            auto factors = jh_verma_bruteforce(rs, cb, wg, lam, j_depth);
            std::vector<Weight> flat;
            for (const JHFactor& f : factors)
                for (long m = 0; m < f.multiplicity; ++m) flat.push_back(f.mu);
            JHSeries series = jh_series(rs, flat, parse_smooth(j_smooth), P);
            Json doc = jh_series_json(rs, series);
            Json fj = Json::array();
            for (const JHFactor& f : factors)
                fj.push_back(Json{{"mu", weight_json(f.mu)}, {"multiplicity", f.multiplicity}});
            doc["verma_factors"] = fj;
            Json verdicts = Json::array();
            for (const ConstituentLabel& c : series.constituents) {
                IrreducibilityVerdict v = irreducibility_test(rs, c.mu, c.smooth, P, j_prime);
                Json vj;
                vj["mu"] = weight_json(c.mu);
                vj["smooth"] = c.smooth.display(rs.rank());
                vj["verdict"] = verdict_str(v.verdict);
                Json warn = Json::array();
                for (auto& s : v.warnings) warn.push_back(s);
                if (!warn.empty()) vj["warnings"] = warn;
                verdicts.push_back(std::move(vj));
            }
            doc["irreducibility"] = verdicts;
            emit(doc, format);
        } else if (*dr) {
            if (d_d < 1) throw invalid_input("--d must be >= 1");
            RootSystem rs = drinfeld_root_system((int)d_d);
            WeylGroup wg(rs);
            LineBundleSpec spec{(int)d_d, d_r, d_s};
            Json doc = filtration_json(filtration_report(rs, wg, spec));
            Json table = Json::array();
            std::vector<Weight> wt = weight_table(rs, wg, spec);
            for (int i = 0; i <= spec.d; ++i) table.push_back(weight_json(wt[i]));
            doc["weight_table"] = table;
            Json mus = Json::array();
            for (int i = 1; i <= spec.d; ++i) mus.push_back(weight_json(mu_weight(rs, wg, spec, i)));
            doc["mu_table"] = mus;
            if (d_verify) {
                Json checks = Json::array();
                for (int i = 1; i <= spec.d; ++i) {
                    LocalCohomologyReport rep = verify_local_cohomology(rs, wg, spec, i, d_window);
                    checks.push_back(Json{{"i", i},
                                          {"window", rep.window_size},
                                          {"maximal_vector", rep.maximal_vector_ok},
                                          {"weight", rep.weight_ok},
                                          {"cyclic", rep.cyclic_ok},
                                          {"cocyclic", rep.cocyclic_ok},
                                          {"passed", rep.passed()}});
                }
                doc["local_cohomology_checks"] = checks;
            }
            if (format == "table") {
                // aligned summary before the flat dump
                std::cout << "lambda = " << weight_str(spec.lambda()) << "  i0 = " << doc["bott"]["i0"]
                          << (doc["bott"]["degenerate"].get<bool>() ? " (degenerate)" : "")
                          << "  h_dim = " << doc["bott"]["h_dim"].get<std::string>() << "\n";
                for (int i = 0; i <= spec.d; ++i)
                    std::cout << "  w_" << i << ".lambda = " << weight_str(wt[i]) << "\n";
            }
            emit(doc, format);
        } else if (*audit) {
            RootSystem rs = build_root_system(resolve_type(a_type, gl_dim));
            if (a_mode == "abcd") {
                DecompositionSet ds = decomposition_enumerate(rs, a_gamma.empty()
                                                                      ? rs.positive.back()
                                                                      : parse_root(rs, a_gamma),
                                                              a_n);
                Json doc;
                doc["schema"] = kSchemaVersion;
                doc["kind"] = "decomposition-audit";
                doc["type"] = rs.type.name();
                doc["gamma"] = ivec_json(ds.gamma);
                doc["n"] = ds.n;
                doc["solutions"] = ds.solutions.size();
                doc["inequality_holds"] = ds.inequality_holds();
                Json viol = Json::array();
                for (size_t i : ds.violations)
                    viol.push_back(Json{{"nu", ivec_json(ds.solutions[i])}, {"sum", sum(ds.solutions[i])}});
                doc["violations"] = viol;
                emit(doc, format);
            } else if (a_mode == "commutator") {
                Json doc;
                doc["schema"] = kSchemaVersion;
                doc["kind"] = "commutator-audit";
                doc["k"] = a_k;
                doc["n"] = a_n;
                doc["holds"] = commutator_expansion_check((int)a_k, (int)a_n);
                emit(doc, format);
            } else if (a_mode == "coefficient") {
                ChevalleyBasis cb(rs);
                Weight lam = parse_weight(rs, a_weight);
                VermaWindow w(rs, cb, lam, a_depth);
                IVec gamma = parse_root(rs, a_gamma);
                RelationAudit ra = relation_coefficient_audit(w, gamma, a_n, a_prime);
                emit(audit_json(ra, rs.type.name(), w.basis(a_n * gamma)), format);
            } else if (a_mode == "locfinite") {
                ChevalleyBasis cb(rs);
                Weight lam = parse_weight(rs, a_weight);
                ParabolicSubset I = max_parabolic_for(rs, lam);
                std::set<IVec> levi;
                for (const IVec& b : levi_positive_roots(rs, I.I)) levi.insert(b);
                Json gens = Json::array();
                for (size_t g = 0; g < rs.num_positive(); ++g) {
                    const IVec& gamma = rs.root((int)g);
                    // locally finite generators stabilize at <lambda,gamma^vee>+1,
                    // so the probe must look just past that point
                    long N = a_powers;
                    if (levi.count(gamma))
                        N = std::max(N, rs.coroot_pairing(lam, gamma).get_num().get_si() + 2);
                    Json entry{{"generator", "y"}, {"root", ivec_json(gamma)}};
                    long need = N * sum(gamma);
                    if (need > a_depth) {
                        entry["error"] = "window too shallow: need depth " + std::to_string(need);
                    } else {
                        VermaWindow w(rs, cb, lam, need);
                        LieElt y{{LieGen{LieGen::Y, (int)g}, Rat(1)}};
                        LocallyFiniteReport rep = locally_finite_probe(w, y, N);
                        entry["span_dim"] = rep.span_dim;
                        entry["powers"] = rep.powers;
                        entry["locally_finite"] = rep.locally_finite_within_window;
                        entry["predicted"] = rep.predicted_locally_finite;
                        entry["agrees"] = rep.agrees;
                    }
                    gens.push_back(std::move(entry));
                }
                Json doc;
                doc["schema"] = kSchemaVersion;
                doc["kind"] = "locally-finite-audit";
                doc["type"] = rs.type.name();
                doc["lambda"] = weight_json(lam);
                doc["lowering_generators"] = gens;
                emit(doc, format);
            } else if (a_mode == "injective") {
                ChevalleyBasis cb(rs);
                Weight lam = parse_weight(rs, a_weight);
                VermaWindow w(rs, cb, lam, a_depth);
                IVec gamma = parse_root(rs, a_gamma);
                LieElt y{{LieGen{LieGen::Y, rs.index(gamma)}, Rat(1)}};
                InjectivityReport rep = injectivity_probe(w, y, a_height);
                Json doc;
                doc["schema"] = kSchemaVersion;
                doc["kind"] = "injectivity-audit";
                doc["type"] = rs.type.name();
                doc["lambda"] = weight_json(lam);
                doc["gamma"] = ivec_json(gamma);
                doc["injective"] = rep.injective;
                doc["levels_checked"] = rep.levels_checked;
                Json fails = Json::array();
                for (const IVec& l : rep.failing_levels) fails.push_back(ivec_json(l));
                doc["failing_levels"] = fails;
                emit(doc, format);
            } else if (a_mode == "units") {
                ChevalleyBasis cb(rs);
                auto obs = unit_claim_check(rs, cb, a_prime);
                Json doc;
                doc["schema"] = kSchemaVersion;
                doc["kind"] = "unit-claim-audit";
                doc["type"] = rs.type.name();
                doc["p"] = a_prime;
                Json oj = Json::array();
                bool all = true;
                for (const auto& o : obs) {
                    all = all && o.unit;
                    oj.push_back(Json{{"gamma", ivec_json(o.gamma)},
                                      {"alpha", o.simple_index + 1},
                                      {"k0", o.k0},
                                      {"c", rat_str(o.constant)},
                                      {"unit", o.unit}});
                }
                doc["observations"] = oj;
                doc["all_units"] = all;
                emit(doc, format);
            } else {
                throw invalid_input("unknown audit mode: " + a_mode);
            }
        }
    } catch (const domain_error& e) {
        std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_json("internal", e.what()).dump(2) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
