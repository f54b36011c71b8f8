#pragma once

#include <liekit/weyl.hpp>

#include <sstream>

namespace liekit {

// Label for a smooth representation entering or produced by the recipe.
//  - Trivial: the trivial representation of the relevant Levi.
//  - GenSteinberg: v^{L_ambient}_{sub}, the generalized Steinberg
//    representation (sub == ambient is the trivial representation).
//  - Opaque: user-supplied smooth input, irreducibility only if asserted.
//  - Induction: symbolic i^{L_ambient}_{base}(inner), emitted when the
//    smooth induction's composition series is genuinely external input.
struct SmoothLabel {
    enum Kind { Trivial, GenSteinberg, Opaque, Induction } kind = Trivial;
    std::set<int> ambient;  // Levi subset it lives on (full Delta = the group)
    std::set<int> sub;      // GenSteinberg: parabolic; Induction: induced-from
    std::string name;       // Opaque payload / Induction inner payload
    bool asserted_irreducible = false;

    static SmoothLabel trivial() { return SmoothLabel{}; }
    static SmoothLabel steinberg(std::set<int> ambient, std::set<int> sub) {
        SmoothLabel s;
        s.kind = GenSteinberg;
        s.ambient = std::move(ambient);
        s.sub = std::move(sub);
        return s;
    }
    static SmoothLabel opaque(std::string name, bool irreducible) {
        SmoothLabel s;
        s.kind = Opaque;
        s.name = std::move(name);
        s.asserted_irreducible = irreducible;
        return s;
    }

    bool is_irreducible_known() const {
        switch (kind) {
            case Trivial:
            case GenSteinberg:
                return true;
            case Opaque:
                return asserted_irreducible;
            case Induction:
                return false;
        }
        return false;
    }

    bool operator==(const SmoothLabel& o) const {
        return kind == o.kind && ambient == o.ambient && sub == o.sub && name == o.name;
    }
    bool operator<(const SmoothLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (ambient != o.ambient) return ambient < o.ambient;
        if (sub != o.sub) return sub < o.sub;
        return name < o.name;
    }

    std::string display(int rank) const {
        auto set_str = [rank](const std::set<int>& s) {
            if ((int)s.size() == rank) return std::string("G");
            std::ostringstream os;
            os << "{";
            bool first = true;
            for (int i : s) {
                if (!first) os << ",";
                os << (i + 1);
                first = false;
            }
            os << "}";
            return os.str();
        };
        switch (kind) {
            case Trivial:
                return "1";
            case GenSteinberg:
                if (sub == ambient) return "1";
                return "v^" + set_str(ambient) + "_" + set_str(sub);
            case Opaque:
                return name;
            case Induction:
                return "i^" + set_str(ambient) + "_" + set_str(sub) + "(" + name + ")";
        }
        return "?";
    }
};

// All irreducible constituents of the smooth induction i^{L_Q}_{P cap L_Q}(1):
// one generalized Steinberg v^{L_Q}_{Q'} per standard parabolic P <= Q' <= Q,
// each with multiplicity one.  Ordered by |I_{Q'}| descending, then lex.
inline std::vector<SmoothLabel> steinberg_constituents(const std::set<int>& P, const std::set<int>& Q) {
    if (!std::includes(Q.begin(), Q.end(), P.begin(), P.end()))
        throw invalid_input("steinberg_constituents: parabolics not nested");
    std::vector<int> extra;
    for (int i : Q)
        if (!P.count(i)) extra.push_back(i);
    std::vector<std::set<int>> subsets;
    size_t n = extra.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::set<int> s = P;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) s.insert(extra[b]);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const std::set<int>& a, const std::set<int>& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<SmoothLabel> out;
    for (auto& s : subsets) out.push_back(SmoothLabel::steinberg(Q, std::move(s)));
    return out;
}

// One Jordan-Hoelder factor label of F^G_P(M, V).
struct ConstituentLabel {
    ParabolicSubset Q;  // maximal parabolic for mu
    Weight mu;          // simple factor L(mu)
    SmoothLabel smooth;
    int factor_index = 0;    // position i in the filtration of M
    int refinement_pos = 0;  // position within the smooth refinement
    bool resolved = true;    // false for symbolic induction labels
};

struct JHSeries {
    ParabolicSubset P;
    SmoothLabel input_smooth;
    std::vector<Weight> input_factors;
    std::vector<ConstituentLabel> constituents;
    bool fully_resolved = true;

    size_t total_length() const { return constituents.size(); }
};

// The composition-series recipe: M given by its ordered factor list
// (top quotient first), V a smooth input, P the inducing parabolic.
inline JHSeries jh_series(const RootSystem& rs, const std::vector<Weight>& factors, const SmoothLabel& V,
                          const ParabolicSubset& P) {
    JHSeries out;
    out.P = P;
    out.input_smooth = V;
    out.input_factors = factors;
    for (size_t i = 0; i < factors.size(); ++i) {
        ParabolicSubset Q = max_parabolic_for(rs, factors[i]);
        if (!Q.contains(P))
            throw invalid_input("jh_series: factor " + std::to_string(i) +
                                " does not lie in the category of the inducing parabolic");
        std::vector<SmoothLabel> refinement;
        if (V.kind == SmoothLabel::Trivial) {
            refinement = steinberg_constituents(P.I, Q.I);
        } else if (Q.I == P.I) {
            refinement.push_back(V);
        } else {
            SmoothLabel ind;
            ind.kind = SmoothLabel::Induction;
            ind.ambient = Q.I;
            ind.sub = P.I;
            ind.name = V.display(rs.rank());
            refinement.push_back(ind);
            out.fully_resolved = false;
        }
        for (size_t j = 0; j < refinement.size(); ++j) {
            ConstituentLabel c;
            c.Q = Q;
            c.mu = factors[i];
            c.smooth = refinement[j];
            c.factor_index = (int)i;
            c.refinement_pos = (int)j;
            c.resolved = refinement[j].kind != SmoothLabel::Induction &&
                         (refinement[j].kind != SmoothLabel::Opaque || refinement[j].asserted_irreducible);
            if (!c.resolved) out.fully_resolved = false;
            out.constituents.push_back(std::move(c));
        }
    }
    return out;
}

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityVerdict {
    Irreducibility verdict = Irreducibility::Unknown;
    std::vector<std::string> warnings;
};

// Decision predicate from the main theorem: F^G_P(L(mu), V) is irreducible
// iff the maximal parabolic Q for L(mu) equals P and V is irreducible; a
// trivial V over Q != P forces reducibility (>= 2 Steinberg constituents).
inline IrreducibilityVerdict irreducibility_test(const RootSystem& rs, const Weight& mu, const SmoothLabel& V,
                                                 const ParabolicSubset& P, unsigned long residue_char) {
    IrreducibilityVerdict out;
    bool bcf = false, g2 = false;
    switch (rs.type.family) {
        case 'B':
        case 'C':
            bcf = true;
            break;
        case 'F':
            bcf = true;
            break;
        case 'G':
            g2 = true;
            break;
        default:
            break;
    }
    if (bcf && residue_char == 2)
        out.warnings.push_back("residue characteristic 2 violates the oddness hypothesis for types B/C/F4");
    if (g2 && residue_char <= 3)
        out.warnings.push_back("residue characteristic <= 3 violates the hypothesis for type G2");

    ParabolicSubset Q = max_parabolic_for(rs, mu);
    if (!Q.contains(P)) throw invalid_input("irreducibility_test: L(mu) not in the category of P");
    if (Q.I == P.I) {
        out.verdict = V.is_irreducible_known() ? Irreducibility::Irreducible : Irreducibility::Unknown;
    } else if (V.kind == SmoothLabel::Trivial) {
        out.verdict = Irreducibility::Reducible;
    } else {
        out.verdict = Irreducibility::Unknown;
    }
    return out;
}

// A functor-image label F^G_P(L(mu), V), the unit the transitivity rule
// rewrites.
struct FunctorLabel {
    ParabolicSubset P;
    Weight mu;
    SmoothLabel smooth;
};

// F^G_P(M, V) = F^G_Q(M, i^{L_Q}_{L_P(L_Q cap U_P)}(V)) for M in O^q.
inline FunctorLabel transitivity_rewrite(const RootSystem& rs, const FunctorLabel& label,
                                         const ParabolicSubset& Q) {
    ParabolicSubset maxQ = max_parabolic_for(rs, label.mu);
    if (!std::includes(maxQ.I.begin(), maxQ.I.end(), Q.I.begin(), Q.I.end()))
        throw invalid_input("transitivity_rewrite: factor not in the target parabolic category");
    if (!std::includes(Q.I.begin(), Q.I.end(), label.P.I.begin(), label.P.I.end()))
        throw invalid_input("transitivity_rewrite: parabolics not nested");
    FunctorLabel out;
    out.P = Q;
    out.mu = label.mu;
    if (Q.I == label.P.I) {
        out.smooth = label.smooth;
        return out;
    }
    SmoothLabel ind;
    ind.kind = SmoothLabel::Induction;
    ind.ambient = Q.I;
    ind.sub = label.P.I;
    ind.name = label.smooth.display(rs.rank());
    out.smooth = ind;
    return out;
}

// Expansion of a symbolic induction of the trivial representation into its
// Steinberg constituents; identity on everything else.
inline std::vector<SmoothLabel> expand_smooth(const SmoothLabel& s) {
    if (s.kind == SmoothLabel::Induction && s.name == "1") return steinberg_constituents(s.sub, s.ambient);
    return {s};
}

}  // namespace liekit
