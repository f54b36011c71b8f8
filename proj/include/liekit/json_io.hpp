#pragma once

#include <liekit/bgg.hpp>
#include <liekit/drinfeld.hpp>
#include <liekit/jh.hpp>
#include <liekit/relation_lab.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace liekit {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kOrderTag = "htlex-v1";
constexpr const char* kCodeVersion = "liekit-1";

inline Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const Rat& c : w.coords) {
        if (is_integer(c))
            a.push_back((long)c.get_num().get_si());
        else
            a.push_back(rat_str(c));
    }
    return a;
}

inline Json ivec_json(const IVec& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(x);
    return a;
}

inline Json set_json(const std::set<int>& s) {
    Json a = Json::array();
    for (int i : s) a.push_back(i + 1);  // 1-based simple-root indices outward
    return a;
}

inline Json qmat_json(const QMat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json root_system_json(const RootSystem& rs, const ChevalleyBasis* cb = nullptr) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "root-system";
    j["type"] = rs.type.name();
    j["rank"] = rs.rank();
    Json cm = Json::array();
    for (const IVec& row : rs.cartan) cm.push_back(ivec_json(row));
    j["cartan_matrix"] = cm;
    Json roots = Json::array();
    for (const IVec& b : rs.positive) roots.push_back(ivec_json(b));
    j["positive_roots"] = roots;
    Json d = Json::array();
    for (const Rat& x : rs.d) d.push_back(rat_str(x));
    j["root_half_norms"] = d;
    if (cb) {
        Json cons = Json::array();
        for (size_t a = 0; a < rs.num_positive(); ++a)
            for (size_t b = 0; b < rs.num_positive(); ++b) {
                if (a == b || !rs.is_positive_root(rs.root(a) + rs.root(b))) continue;
                cons.push_back(Json::array({(int)a, (int)b, cb->pos_constant((int)a, (int)b)}));
            }
        j["chevalley"] = {{"sign_convention", ChevalleyBasis::kSignConvention}, {"constants", cons}};
    }
    return j;
}

inline Json coset_json(const RootSystem& rs, const CosetSystem& cs) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "coset-system";
    j["type"] = rs.type.name();
    j["I"] = set_json(cs.I);
    Json reps = Json::array();
    for (const WeylElement& w : cs.reps) {
        Json e;
        Json word = Json::array();
        for (int i : w.word) word.push_back(i + 1);
        e["word"] = word;
        e["length"] = w.word.size();
        Json m = Json::array();
        for (const IVec& row : w.root_mat) m.push_back(ivec_json(row));
        e["action"] = m;
        reps.push_back(std::move(e));
    }
    j["reps"] = reps;
    return j;
}

inline Json resolution_json(const Resolution& res) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = res.I.empty() ? "bgg-resolution" : "parabolic-bgg-resolution";
    j["lambda"] = weight_json(res.lambda);
    j["I"] = set_json(res.I);
    Json terms = Json::array();
    for (const ResolutionTerm& t : res.terms) {
        Json tj;
        tj["degree"] = t.degree;
        Json sums = Json::array();
        for (const ResolutionSummand& s : t.summands) {
            Json word = Json::array();
            for (int i : s.w.word) word.push_back(i + 1);
            sums.push_back(Json{{"word", word}, {"weight", weight_json(s.weight)}});
        }
        tj["summands"] = sums;
        terms.push_back(std::move(tj));
    }
    j["terms"] = terms;
    j["augmentation"] = "V(lambda)";
    j["duplicate_weights"] = res.has_duplicate_weights;
    return j;
}

inline Json dual_resolution_json(const DualResolutionLabel& dual) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "dual-locally-analytic-resolution";
    j["lambda"] = weight_json(dual.lambda);
    j["I"] = set_json(dual.I);
    Json terms = Json::array();
    for (size_t k = 0; k < dual.terms.size(); ++k) {
        Json tj;
        tj["degree"] = k;
        Json labels = Json::array();
        for (const ResolutionSummand& s : dual.terms[k]) {
            Json word = Json::array();
            for (int i : s.w.word) word.push_back(i + 1);
            labels.push_back(Json{{"label", "Ind^G_P(V_I(w.lambda)')"},
                                  {"word", word},
                                  {"weight", weight_json(s.weight)}});
        }
        tj["labels"] = labels;
        terms.push_back(std::move(tj));
    }
    j["terms"] = terms;
    j["augmentation"] = dual.augmentation;
    return j;
}

inline Json jh_series_json(const RootSystem& rs, const JHSeries& s) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "jh-series";
    j["P"] = set_json(s.P.I);
    j["V"] = s.input_smooth.display(rs.rank());
    Json cons = Json::array();
    for (const ConstituentLabel& c : s.constituents) {
        Json cj;
        cj["index"] = Json::array({c.factor_index, c.refinement_pos});
        cj["Q"] = set_json(c.Q.I);
        cj["mu"] = weight_json(c.mu);
        cj["smooth"] = c.smooth.display(rs.rank());
        cj["multiplicity"] = 1;
        cj["resolved"] = c.resolved;
        cons.push_back(std::move(cj));
    }
    j["constituents"] = cons;
    j["total_length"] = s.total_length();
    j["fully_resolved"] = s.fully_resolved;
    return j;
}

inline const char* verdict_str(Irreducibility v) {
    switch (v) {
        case Irreducibility::Irreducible:
            return "irreducible";
        case Irreducibility::Reducible:
            return "reducible";
        default:
            return "unknown";
    }
}

inline Json bott_json(const BottResult& b) {
    Json j;
    j["degenerate"] = b.degenerate;
    j["i0"] = b.i0;
    j["h_dim"] = b.h_dim.get_str();
    j["h_weight"] = weight_json(b.h_weight);
    return j;
}

inline Json filtration_json(const FiltrationReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "drinfeld-filtration";
    j["d"] = rep.spec.d;
    j["r"] = rep.spec.r;
    j["s"] = rep.spec.s;
    j["lambda"] = weight_json(rep.spec.lambda());
    j["bott"] = bott_json(rep.bott_result);
    Json pieces = Json::array();
    for (const GradedPieceReport& g : rep.pieces) {
        Json pj;
        pj["j"] = g.j;
        pj["cohomology_degree"] = g.coh_degree;
        pj["cohomology_dim"] = g.coh_dim.get_str();
        Json st;
        st["present"] = g.steinberg_present;
        if (g.steinberg_present) {
            Json blocks = Json::array();
            for (int b : g.steinberg_blocks) blocks.push_back(b);
            st["parabolic_blocks"] = blocks;
            st["coefficient_weight"] = weight_json(g.steinberg_weight);
            st["irreducible"] = true;
        }
        pj["steinberg_part"] = st;
        Json ind;
        Json blocks = Json::array();
        for (int b : g.induction_blocks) blocks.push_back(b);
        ind["parabolic_blocks"] = blocks;
        ind["mu"] = weight_json(g.mu);
        ind["twist"] = g.twist_note;
        ind["smooth"] = "levi-steinberg";
        ind["parabolic_matches_block"] = g.parabolic_matches_block;
        ind["verdict"] = verdict_str(g.induction_verdict);
        pj["induction_part"] = ind;
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = pieces;
    j["bottom"] = {{"dim", rep.bottom_dim.get_str()}, {"weight", weight_json(rep.bottom_weight)}};
    j["total_constituents"] = rep.total_constituents;
    j["dim_discrepancy"] = rep.dim_discrepancy;
    return j;
}

inline Json audit_json(const RelationAudit& a, const std::string& type_name,
                       const std::vector<Mono>& basis) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "coefficient-audit";
    j["type"] = type_name;
    j["lambda"] = weight_json(a.lambda);
    j["gamma"] = ivec_json(a.gamma);
    j["n"] = a.n;
    j["p"] = a.p;
    j["weight_space_dim"] = a.weight_space_dim;
    j["solution_space_dim"] = a.solution_space_dim;
    Json good = Json::array();
    for (size_t i : a.good_set) good.push_back(ivec_json(basis[i]));
    j["good_set"] = good;
    j["verdict"] = a.verdict;
    j["witness"] = {{"nu", ivec_json(a.base_witness)}, {"c", "1"}};
    if (a.counter_witness) {
        Json cw = Json::array();
        for (const Rat& c : *a.counter_witness) cw.push_back(rat_str(c));
        j["counter_witness"] = cw;
    }
    Json warn = Json::array();
    for (const std::string& w : a.warnings) warn.push_back(w);
    j["warnings"] = warn;
    return j;
}

inline Json error_json(const std::string& kind, const std::string& message) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "error";
    j["error"] = {{"category", kind}, {"message", message}};
    return j;
}

// ---- window cache -------------------------------------------------------

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string cache_key(const RootSystem& rs, const Weight& lambda, long depth) {
    std::string k = rs.type.name() + ";";
    for (const Rat& c : lambda.coords) k += rat_str(c) + ",";
    k += ";" + std::to_string(depth) + ";" + kOrderTag + ";" + kCodeVersion;
    return k;
}

inline Json window_payload(const VermaWindow& w) {
    const RootSystem& rs = w.roots();
    Json drops = Json::array();
    for (const IVec& d : drops_up_to(rs.rank(), w.depth())) {
        const std::vector<Mono>& b = w.basis(d);
        if (b.empty()) continue;
        Json dj;
        dj["drop"] = ivec_json(d);
        Json basis = Json::array();
        for (const Mono& m : b) basis.push_back(ivec_json(m));
        dj["basis"] = basis;
        dj["gram"] = qmat_json(w.gram(d));
        // action tables between adjacent weight spaces, per generator
        Json lower = Json::array(), raise = Json::array();
        for (size_t g = 0; g < rs.num_positive(); ++g) {
            if (sum(d + rs.root((int)g)) <= w.depth() && !w.basis(d + rs.root((int)g)).empty())
                lower.push_back(Json{{"root", (int)g}, {"matrix", qmat_json(w.y_matrix((int)g, d))}});
            if (all_nonneg(d - rs.root((int)g)) && !w.basis(d - rs.root((int)g)).empty())
                raise.push_back(Json{{"root", (int)g}, {"matrix", qmat_json(w.x_matrix((int)g, d))}});
        }
        dj["lowering"] = lower;
        dj["raising"] = raise;
        drops.push_back(std::move(dj));
    }
    return drops;
}

struct CacheEntry {
    std::string key;
    Json payload;
    uint64_t checksum = 0;
};

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(key));
    return dir / (std::string("window-") + buf + ".json");
}

inline void store_window_cache(const std::filesystem::path& dir, const VermaWindow& w) {
    std::filesystem::create_directories(dir);
    std::string key = cache_key(w.roots(), w.highest_weight(), w.depth());
    Json payload = window_payload(w);
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "verma-window-cache";
    doc["key"] = key;
    doc["payload"] = payload;
    doc["checksum"] = fnv1a64(payload.dump());
    std::filesystem::path tmp = cache_path(dir, key);
    std::filesystem::path final = tmp;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        os << doc.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, final);  // whole-file atomic replace
}

inline std::optional<Json> load_window_cache(const std::filesystem::path& dir, const RootSystem& rs,
                                             const Weight& lambda, long depth, std::string* warning = nullptr) {
    std::string key = cache_key(rs, lambda, depth);
    std::filesystem::path p = cache_path(dir, key);
    if (!std::filesystem::exists(p)) return std::nullopt;
    std::ifstream is(p);
    Json doc = Json::parse(is, nullptr, false);
    if (doc.is_discarded() || !doc.contains("key") || doc["key"] != key || !doc.contains("payload") ||
        !doc.contains("checksum") || fnv1a64(doc["payload"].dump()) != doc["checksum"].get<uint64_t>()) {
        if (warning) *warning = "cache entry invalid or corrupted; recomputing";
        return std::nullopt;
    }
    return doc["payload"];
}

}  // namespace liekit
