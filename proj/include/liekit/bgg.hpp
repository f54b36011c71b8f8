#pragma once

#include <liekit/verma.hpp>

namespace liekit {

struct ResolutionSummand {
    WeylElement w;
    Weight weight;  // w . lambda
};

struct ResolutionTerm {
    int degree = 0;
    std::vector<ResolutionSummand> summands;
};

// A (parabolic) BGG resolution as a graded object.  Differentials are
// deliberately unlabeled arrows; the Euler characteristic is the testable
// shadow of exactness.
struct Resolution {
    Weight lambda;
    std::set<int> I;  // empty = ordinary resolution by Verma modules
    std::vector<ResolutionTerm> terms;
    bool has_duplicate_weights = false;  // singular lambda may repeat weights

    size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

struct DualResolutionLabel {
    Weight lambda;
    std::set<int> I;
    // degree-k entries: induction labels Ind^G_P(V_I(w.lambda)')
    std::vector<std::vector<ResolutionSummand>> terms;
    std::string augmentation;  // "V(lambda) (x) i^G_P"
};

inline Resolution parabolic_bgg_resolution(const RootSystem& rs, const WeylGroup& wg, const std::set<int>& I,
                                           const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw invalid_input("BGG resolution requires a dominant weight");
    Resolution res;
    res.lambda = lambda;
    res.I = I;
    CosetSystem cs = wg.min_coset_reps(I);
    size_t maxlen = cs.max_rep().length();
    res.terms.resize(maxlen + 1);
    std::set<Weight> seen;
    for (const WeylElement& w : cs.reps) {
        ResolutionSummand s{w, dot_action(rs, w, lambda)};
        if (!seen.insert(s.weight).second) res.has_duplicate_weights = true;
        ResolutionTerm& t = res.terms[w.length()];
        t.degree = (int)w.length();
        t.summands.push_back(std::move(s));
    }
    for (size_t k = 0; k <= maxlen; ++k) res.terms[k].degree = (int)k;
    return res;
}

inline Resolution bgg_resolution(const RootSystem& rs, const WeylGroup& wg, const Weight& lambda) {
    return parabolic_bgg_resolution(rs, wg, {}, lambda);
}

inline DualResolutionLabel dual_la_resolution(const RootSystem& rs, const WeylGroup& wg, const std::set<int>& I,
                                              const Weight& lambda) {
    Resolution res = parabolic_bgg_resolution(rs, wg, I, lambda);
    DualResolutionLabel dual;
    dual.lambda = lambda;
    dual.I = I;
    dual.terms.reserve(res.terms.size());
    for (const ResolutionTerm& t : res.terms) dual.terms.push_back(t.summands);
    dual.augmentation = "V(lambda) (x) i^G_P";
    return dual;
}

struct EulerReport {
    bool ok = true;
    IVec offending_drop;
    long residual = 0;
};

// sum_k (-1)^k char(term_k) must equal char V(lambda) at every drop of the
// window, exactly.
inline EulerReport euler_check(const RootSystem& rs, const Resolution& res, long depth) {
    std::map<IVec, long> acc;
    for (const ResolutionTerm& term : res.terms) {
        long sign = term.degree % 2 == 0 ? 1 : -1;
        for (const ResolutionSummand& s : term.summands) {
            auto diff = rs.root_coords_of_difference(res.lambda, s.weight);
            if (!diff) throw internal_error("resolution weight outside the linkage lattice");
            IVec delta(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) delta[j] = (*diff)[j].get_num().get_si();
            long rem = depth - sum(delta);
            if (rem < 0) continue;
            CharacterWindow ch = res.I.empty() ? verma_char(rs, s.weight, rem)
                                               : parabolic_verma_char(rs, res.I, s.weight, rem);
            for (const auto& [d, m] : ch.mult) acc[delta + d] += sign * m;
        }
    }
    CharacterWindow target = freudenthal_char(rs, res.lambda, depth);
    EulerReport rep;
    for (const IVec& d : drops_up_to(rs.rank(), depth)) {
        long lhs = acc.count(d) ? acc.at(d) : 0;
        long rhs = target.at(d);
        if (lhs != rhs) {
            rep.ok = false;
            rep.offending_drop = d;
            rep.residual = lhs - rhs;
            return rep;
        }
    }
    return rep;
}

}  // namespace liekit
