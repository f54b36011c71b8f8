#pragma once

#include <liekit/characters.hpp>
#include <liekit/jh.hpp>

namespace liekit {

// Homogeneous line bundle on P^d with fibre weight lambda = (r, s, ..., s),
// i.e. O(r-s) twisted by det^s.
struct LineBundleSpec {
    int d = 1;
    long r = 0, s = 0;

    long twist() const { return r - s; }
    Weight lambda() const {
        QVec c(d + 1, Rat(s));
        c[0] = r;
        return Weight::gl(std::move(c));
    }
};

struct BottResult {
    bool degenerate = false;
    int i0 = 0;       // nondegenerate: the unique nonvanishing degree;
                      // degenerate: s - r - 1, where w_{i0}.lambda = w_{i0+1}.lambda
    Int h_dim = 0;    // dim H^{i0}(P^d, L_lambda), 0 when degenerate
    Weight h_weight;  // w_{i0}.lambda
};

inline RootSystem drinfeld_root_system(int d) { return build_root_system(CartanType{'A', d, true}); }

// w_i . lambda for i = 0..d, computed through the Weyl machinery (the
// closed-form tuple of the table is what the tests compare against).
inline std::vector<Weight> weight_table(const RootSystem& rs, const WeylGroup& wg, const LineBundleSpec& spec) {
    std::vector<Weight> out;
    for (int i = 0; i <= spec.d; ++i) out.push_back(dot_action(rs, wg.gl_w(i), spec.lambda()));
    return out;
}

inline BottResult bott(const RootSystem& rs, const WeylGroup& wg, const LineBundleSpec& spec) {
    BottResult b;
    std::vector<Weight> table = weight_table(rs, wg, spec);
    if (spec.r >= spec.s) {
        b.i0 = 0;
    } else if (spec.s >= spec.r + spec.d + 1) {
        b.i0 = spec.d;
    } else {
        b.degenerate = true;
        b.i0 = (int)(spec.s - spec.r - 1);
    }
    b.h_weight = table[b.i0];
    if (!b.degenerate) b.h_dim = weyl_dim(rs, b.h_weight);
    return b;
}

// mu_{i,lambda} = w_{i-1}.lambda for i <= i0, w_i.lambda for i > i0.
inline Weight mu_weight(const RootSystem& rs, const WeylGroup& wg, const LineBundleSpec& spec, int i) {
    if (i < 1 || i > spec.d) throw invalid_input("mu_weight: index out of range");
    BottResult b = bott(rs, wg, spec);
    Weight mu = dot_action(rs, wg.gl_w(i <= b.i0 ? i - 1 : i), spec.lambda());
    std::set<int> levi;  // L_{(i, d-i+1)}: all simple roots except alpha_i
    for (int k = 0; k < spec.d; ++k)
        if (k != i - 1) levi.insert(k);
    if (!rs.is_levi_dominant(mu, levi)) throw internal_error("mu_{i,lambda} not Levi-dominant");
    return mu;
}

// 0-indexed simple roots missing from the Levi of P_{(n_1, ..., n_s)}.
inline std::set<int> blocks_to_subset(const std::vector<int>& blocks, int d) {
    std::set<int> I;
    for (int k = 0; k < d; ++k) I.insert(k);
    int acc = 0;
    for (size_t b = 0; b + 1 < blocks.size(); ++b) {
        acc += blocks[b];
        I.erase(acc - 1);
    }
    return I;
}

// The local-cohomology monomial module of Serre-twist degree r-s: Laurent
// monomials X^k with k_0..k_{i-1} < 0 <= k_i..k_d, sum k = r-s.  Torus
// weight of X^k is k + s(1,..,1); the Lie algebra acts by
// L_{(a,b)} X^k = k_b X^{k + e_a - e_b}, results outside the sign pattern
// are zero in the quotient.
struct MonomialModuleWindow {
    LineBundleSpec spec;
    int i = 1;
    long bound = 0;        // max drop height from the highest weight
    Weight mu;             // highest weight mu_{i,lambda}
    IVec top_exponents;    // the designated maximal vector
    std::vector<IVec> monomials;  // window basis, sorted
};

inline Weight monomial_weight(const LineBundleSpec& spec, const IVec& k) {
    QVec c(k.begin(), k.end());
    for (Rat& x : c) x += spec.s;
    return Weight::gl(std::move(c));
}

// drop height of mu - weight(k) inside the gl root lattice; nullopt when
// the difference is not a nonnegative root combination.
inline std::optional<long> monomial_drop_height(const RootSystem& rs, const Weight& mu,
                                                const LineBundleSpec& spec, const IVec& k) {
    auto c = rs.root_coords_of_difference(mu, monomial_weight(spec, k));
    if (!c) return std::nullopt;
    long h = 0;
    for (const Rat& x : *c) {
        if (x < 0 || !is_integer(x)) return std::nullopt;
        h += x.get_num().get_si();
    }
    return h;
}

inline bool monomial_valid(const IVec& k, int i, long m) {
    long tot = 0;
    for (size_t j = 0; j < k.size(); ++j) {
        if ((int)j < i && k[j] >= 0) return false;
        if ((int)j >= i && k[j] < 0) return false;
        tot += k[j];
    }
    return tot == m;
}

// One application of L_{(a,b)}; nullopt when the coefficient vanishes or the
// image dies in the local-cohomology quotient.
inline std::optional<std::pair<long, IVec>> monomial_step(const IVec& k, int a, int b, int i, long m) {
    if (k[b] == 0) return std::nullopt;
    IVec k2 = k;
    k2[a] += 1;
    k2[b] -= 1;
    if (!monomial_valid(k2, i, m)) return std::nullopt;
    return std::make_pair(k[b], k2);
}

inline MonomialModuleWindow build_monomial_window(const RootSystem& rs, const WeylGroup& wg,
                                                  const LineBundleSpec& spec, int i, long bound) {
    if (i < 1 || i > spec.d) throw invalid_input("monomial window: index out of range");
    MonomialModuleWindow w;
    w.spec = spec;
    w.i = i;
    w.bound = bound;
    w.mu = mu_weight(rs, wg, spec, i);
    const long m = spec.twist();
    BottResult b = bott(rs, wg, spec);
    w.top_exponents.assign(spec.d + 1, 0);
    if (i > b.i0) {
        for (int j = 0; j < i; ++j) w.top_exponents[j] = -1;
        w.top_exponents[i] = m + i;
    } else {
        for (int j = 0; j + 1 < i; ++j) w.top_exponents[j] = -1;
        w.top_exponents[i - 1] = m + i - 1;
    }
    if (!monomial_valid(w.top_exponents, i, m)) throw internal_error("maximal vector outside the module");

    // enumerate exponent vectors box-wise; per-coordinate bounds follow from
    // the drop budget (each unit of drop moves one exponent step)
    IVec cur(spec.d + 1, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == spec.d + 1) {
            if (!monomial_valid(cur, i, m)) return;
            auto h = monomial_drop_height(rs, w.mu, spec, cur);
            if (h && *h <= bound) w.monomials.push_back(cur);
            return;
        }
        long lo = (pos < i) ? w.top_exponents[pos] - bound : 0;
        long hi = w.top_exponents[pos] + bound;
        if (pos < i) hi = -1;
        for (long v = lo; v <= hi; ++v) {
            cur[pos] = v;
            rec(pos + 1, left);
        }
        cur[pos] = 0;
    };
    rec(0, bound);
    std::sort(w.monomials.begin(), w.monomials.end());
    return w;
}

struct LocalCohomologyReport {
    bool maximal_vector_ok = false;  // annihilated by every raising operator
    bool weight_ok = false;          // torus weight equals mu_{i,lambda}
    bool cyclic_ok = false;          // every window monomial reachable from v
    bool cocyclic_ok = false;        // v reachable from every window monomial
    size_t window_size = 0;
    size_t unreached = 0;
    size_t not_reaching_top = 0;
    bool passed() const { return maximal_vector_ok && weight_ok && cyclic_ok && cocyclic_ok; }
};

inline LocalCohomologyReport verify_local_cohomology(const RootSystem& rs, const WeylGroup& wg,
                                                     const LineBundleSpec& spec, int i, long bound) {
    MonomialModuleWindow w = build_monomial_window(rs, wg, spec, i, bound);
    const long m = spec.twist();
    LocalCohomologyReport rep;
    rep.window_size = w.monomials.size();

    rep.weight_ok = monomial_weight(spec, w.top_exponents) == w.mu;
    rep.maximal_vector_ok = true;
    for (int a = 0; a <= spec.d && rep.maximal_vector_ok; ++a)
        for (int b = a + 1; b <= spec.d; ++b)
            if (monomial_step(w.top_exponents, a, b, i, m)) {
                rep.maximal_vector_ok = false;
                break;
            }

    std::map<IVec, size_t> index;
    for (size_t k = 0; k < w.monomials.size(); ++k) index[w.monomials[k]] = k;

    // cyclicity: breadth-first search along lowering moves (a > b); drops
    // increase strictly, so paths between window monomials stay inside it
    std::vector<bool> reach(w.monomials.size(), false);
    std::vector<size_t> queue;
    auto push = [&](const IVec& k) {
        auto it = index.find(k);
        if (it == index.end() || reach[it->second]) return;
        reach[it->second] = true;
        queue.push_back(it->second);
    };
    push(w.top_exponents);
    for (size_t q = 0; q < queue.size(); ++q) {
        const IVec k = w.monomials[queue[q]];
        for (int a = 0; a <= spec.d; ++a)
            for (int b = 0; b < a; ++b)
                if (auto st = monomial_step(k, a, b, i, m)) push(st->second);
    }
    rep.unreached = 0;
    for (bool r : reach)
        if (!r) ++rep.unreached;
    rep.cyclic_ok = rep.unreached == 0;

    // co-cyclicity: reverse search from v along raising moves
    std::vector<bool> up(w.monomials.size(), false);
    std::vector<size_t> q2;
    up[index.at(w.top_exponents)] = true;
    q2.push_back(index.at(w.top_exponents));
    for (size_t q = 0; q < q2.size(); ++q) {
        const IVec k = w.monomials[q2[q]];
        for (int a = 0; a <= spec.d; ++a)
            for (int b = a + 1; b <= spec.d; ++b) {
                IVec pre = k;
                pre[a] -= 1;
                pre[b] += 1;
                auto it = index.find(pre);
                if (it == index.end() || up[it->second]) continue;
                auto st = monomial_step(pre, a, b, i, m);
                if (st && st->second == k) {
                    up[it->second] = true;
                    q2.push_back(it->second);
                }
            }
    }
    rep.not_reaching_top = 0;
    for (bool r : up)
        if (!r) ++rep.not_reaching_top;
    rep.cocyclic_ok = rep.not_reaching_top == 0;
    return rep;
}

struct GradedPieceReport {
    int j = 0;
    int coh_degree = 0;  // d - j
    Int coh_dim = 0;
    bool steinberg_present = false;
    std::vector<int> steinberg_blocks;  // (j+1, 1, ..., 1)
    Weight steinberg_weight;            // coefficients H^{d-j}(P^d, L)'
    std::vector<int> induction_blocks;  // (j+1, d-j)
    Weight mu;                          // mu_{d-j, lambda}
    std::string twist_note;
    bool parabolic_matches_block = false;
    Irreducibility induction_verdict = Irreducibility::Unknown;
};

struct FiltrationReport {
    LineBundleSpec spec;
    BottResult bott_result;
    std::vector<GradedPieceReport> pieces;
    Int bottom_dim = 0;   // dim H^0(P^d, L_lambda)
    Weight bottom_weight;
    size_t total_constituents = 0;
    bool dim_discrepancy = false;  // a nonvanishing H^{i0} of dimension > 1
};

inline FiltrationReport filtration_report(const RootSystem& rs, const WeylGroup& wg,
                                          const LineBundleSpec& spec, unsigned long residue_char = 5) {
    FiltrationReport rep;
    rep.spec = spec;
    rep.bott_result = bott(rs, wg, spec);
    const int d = spec.d;
    for (int j = 0; j <= d - 1; ++j) {
        GradedPieceReport g;
        g.j = j;
        g.coh_degree = d - j;
        g.coh_dim = (!rep.bott_result.degenerate && rep.bott_result.i0 == d - j) ? rep.bott_result.h_dim : 0;
        g.steinberg_present = g.coh_dim != 0;
        g.steinberg_blocks = {j + 1};
        for (int k = 0; k < d - j; ++k) g.steinberg_blocks.push_back(1);
        g.steinberg_weight = rep.bott_result.h_weight;
        g.induction_blocks = {j + 1, d - j};
        const int i = d - j;
        g.mu = mu_weight(rs, wg, spec, i);
        g.twist_note = "weight given on the upper-parabolic side; conjugate by the (" + std::to_string(i) +
                       "," + std::to_string(d - i + 1) + ") block swap for the lower parabolic";
        std::set<int> block_subset;
        for (int k = 0; k < d; ++k)
            if (k != i - 1) block_subset.insert(k);
        ParabolicSubset maxQ = max_parabolic_for(rs, g.mu);
        g.parabolic_matches_block = maxQ.I == block_subset;
        if (g.parabolic_matches_block) {
            // smooth part is the Levi Steinberg representation, irreducible;
            // Q is the maximal parabolic for L(mu), so the theorem applies
            ParabolicSubset Q;
            Q.I = block_subset;
            IrreducibilityVerdict v =
                irreducibility_test(rs, g.mu, SmoothLabel::opaque("levi-steinberg", true), Q, residue_char);
            g.induction_verdict = v.verdict;
        }
        rep.pieces.push_back(std::move(g));
    }
    rep.bottom_dim = (!rep.bott_result.degenerate && rep.bott_result.i0 == 0) ? rep.bott_result.h_dim : 0;
    rep.bottom_weight = spec.lambda();
    rep.total_constituents = 0;
    for (const GradedPieceReport& g : rep.pieces) rep.total_constituents += g.steinberg_present ? 2 : 1;
    if (rep.bottom_dim != 0) rep.total_constituents += 1;
    rep.dim_discrepancy = !rep.bott_result.degenerate && rep.bott_result.h_dim > 1;
    return rep;
}

}  // namespace liekit
