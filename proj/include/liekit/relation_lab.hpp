#pragma once

#include <liekit/free_algebra.hpp>
#include <liekit/verma.hpp>

namespace liekit {

// All ways to write n*gamma as a nonnegative combination of positive roots,
// with the per-solution inequality n <= sum(nu).
struct DecompositionSet {
    IVec gamma;
    long n = 0;
    std::vector<Mono> solutions;     // exponent vectors over the PBW root order
    std::vector<size_t> violations;  // indices with sum(nu) < n
    bool inequality_holds() const { return violations.empty(); }
};

inline DecompositionSet decomposition_enumerate(const RootSystem& rs, const IVec& gamma, long n) {
    if (!rs.is_positive_root(gamma)) throw invalid_input("decomposition_enumerate: gamma not a positive root");
    DecompositionSet out;
    out.gamma = gamma;
    out.n = n;
    IVec target = n * gamma;
    Mono cur(rs.num_positive(), 0);
    std::function<void(size_t, IVec)> rec = [&](size_t k, IVec rem) {
        if (k == rs.num_positive()) {
            if (is_zero(rem)) out.solutions.push_back(cur);
            return;
        }
        long e = 0;
        for (;;) {
            cur[k] = e;
            rec(k + 1, rem);
            rem = rem - rs.root((int)k);
            if (!all_nonneg(rem)) break;
            ++e;
        }
        cur[k] = 0;
    };
    rec(0, target);
    for (size_t i = 0; i < out.solutions.size(); ++i)
        if (sum(out.solutions[i]) < n) out.violations.push_back(i);
    return out;
}

// Application of a Lie algebra element (combination of Chevalley basis
// generators) to a vector of the Verma window.
inline MonoComb apply_lie(const VermaWindow& w, const LieElt& x, const MonoComb& v) {
    const RootSystem& rs = w.roots();
    MonoComb out;
    for (const auto& [g, c] : x) {
        switch (g.kind) {
            case LieGen::X:
                for (const auto& [m, cm] : v)
                    for (const auto& [t, ct] : w.act_x(g.idx, m)) add_term(out, t, c * cm * ct);
                break;
            case LieGen::Y:
                for (const auto& [m, cm] : v)
                    for (const auto& [t, ct] : w.mul_y(g.idx, m)) add_term(out, t, c * cm * ct);
                break;
            case LieGen::H: {
                IVec e(rs.rank(), 0);
                e[g.idx] = 1;
                for (const auto& [m, cm] : v) {
                    Rat h = rs.coroot_pairing(rs.sub_drop(w.highest_weight(), w.drop_of(m)), e);
                    add_term(out, m, c * cm * h);
                }
                break;
            }
        }
    }
    return out;
}

inline long max_lowering_height(const RootSystem& rs, const LieElt& x) {
    long h = 0;
    for (const auto& [g, c] : x)
        if (g.kind == LieGen::Y) h = std::max(h, sum(rs.root(g.idx)));
    return h;
}

inline bool element_in_parabolic(const RootSystem& rs, const LieElt& x, const std::set<int>& I) {
    std::set<IVec> levi;
    for (const IVec& b : levi_positive_roots(rs, I)) levi.insert(b);
    for (const auto& [g, c] : x)
        if (g.kind == LieGen::Y && !levi.count(rs.root(g.idx))) return false;
    return true;
}

struct LocallyFiniteReport {
    long span_dim = 0;  // dim span{x^j v+ : 0 <= j <= N} in the simple quotient
    long powers = 0;    // N
    bool locally_finite_within_window = false;
    bool predicted_locally_finite = false;  // x in p_{I(lambda)}
    bool agrees = false;
};

// Measure dim span{x^j v+ : j <= N} modulo the Gram radical, and compare
// with the parabolic prediction.
inline LocallyFiniteReport locally_finite_probe(const VermaWindow& w, const LieElt& x, long N) {
    const RootSystem& rs = w.roots();
    long need = N * max_lowering_height(rs, x);
    if (need > w.depth()) throw window_too_shallow("locally_finite_probe: need depth " + std::to_string(need));

    if (x.size() == 1 && x.begin()->first.kind == LieGen::Y) {
        // single lowering generator: the iterates y^j v+ are basis monomials
        // in pairwise distinct weight spaces, so the span dimension is
        // 1 + #{j : the Gram row of y^j v+ is nonzero}
        int g = x.begin()->first.idx;
        LocallyFiniteReport rep;
        rep.powers = N;
        rep.span_dim = 1;
        for (long j = 1; j <= N; ++j) {
            Mono m(rs.num_positive(), 0);
            m[g] = j;
            bool nonzero = false;
            for (const Mono& tau : w.basis(w.drop_of(m))) {
                if (w.gram_entry(m, tau) != 0) {
                    nonzero = true;
                    break;
                }
            }
            if (nonzero) ++rep.span_dim;
        }
        rep.locally_finite_within_window = rep.span_dim < N + 1;
        ParabolicSubset I = max_parabolic_for(rs, w.highest_weight());
        rep.predicted_locally_finite = element_in_parabolic(rs, x, I.I);
        rep.agrees = rep.locally_finite_within_window == rep.predicted_locally_finite;
        return rep;
    }

    std::vector<MonoComb> iterates;
    MonoComb cur{{Mono(rs.num_positive(), 0), Rat(1)}};
    iterates.push_back(cur);
    for (long j = 1; j <= N; ++j) {
        cur = apply_lie(w, x, cur);
        iterates.push_back(cur);
    }

    // coordinates over the union of touched weight spaces, radical rows added
    std::set<IVec> drops;
    for (const MonoComb& v : iterates)
        for (const auto& [m, c] : v) drops.insert(w.drop_of(m));
    std::map<Mono, size_t> col;
    std::vector<IVec> drop_list(drops.begin(), drops.end());
    for (const IVec& d : drop_list)
        for (const Mono& m : w.basis(d)) col.emplace(m, col.size());

    std::vector<QVec> rad_rows;
    for (const IVec& d : drop_list) {
        QMat rad = w.radical(d);
        const std::vector<Mono>& b = w.basis(d);
        for (size_t r = 0; r < rad.rows(); ++r) {
            QVec row(col.size(), Rat(0));
            for (size_t j = 0; j < b.size(); ++j) row[col.at(b[j])] = rad(r, j);
            rad_rows.push_back(std::move(row));
        }
    }
    auto to_row = [&](const MonoComb& v) {
        QVec row(col.size(), Rat(0));
        for (const auto& [m, c] : v) row[col.at(m)] = c;
        return row;
    };
    QMat base(rad_rows.size(), col.size());
    for (size_t i = 0; i < rad_rows.size(); ++i)
        for (size_t j = 0; j < col.size(); ++j) base(i, j) = rad_rows[i][j];
    size_t rank_rad = linalg::rank(base);

    QMat full(rad_rows.size() + iterates.size(), col.size());
    for (size_t i = 0; i < rad_rows.size(); ++i)
        for (size_t j = 0; j < col.size(); ++j) full(i, j) = rad_rows[i][j];
    for (size_t i = 0; i < iterates.size(); ++i) {
        QVec row = to_row(iterates[i]);
        for (size_t j = 0; j < col.size(); ++j) full(rad_rows.size() + i, j) = row[j];
    }
    LocallyFiniteReport rep;
    rep.powers = N;
    rep.span_dim = (long)(linalg::rank(full) - rank_rad);
    rep.locally_finite_within_window = rep.span_dim < N + 1;
    ParabolicSubset I = max_parabolic_for(rs, w.highest_weight());
    rep.predicted_locally_finite = element_in_parabolic(rs, x, I.I);
    rep.agrees = rep.locally_finite_within_window == rep.predicted_locally_finite;
    return rep;
}

struct InjectivityReport {
    bool injective = true;
    std::vector<IVec> failing_levels;
    long levels_checked = 0;
};

// Injectivity of a lowering element on every simple-quotient level with
// headroom: ker(G_target A) must be contained in ker(G_source).
inline InjectivityReport injectivity_probe(const VermaWindow& w, const LieElt& y, long max_height) {
    const RootSystem& rs = w.roots();
    long need = max_lowering_height(rs, y);
    if (need == 0) throw invalid_input("injectivity_probe: no lowering component");
    if (max_height + need > w.depth()) throw window_too_shallow("injectivity_probe: window too shallow");

    InjectivityReport rep;
    for (const IVec& d : drops_up_to(rs.rank(), max_height)) {
        const std::vector<Mono>& src = w.basis(d);
        if (src.empty()) continue;
        ++rep.levels_checked;
        // target drops: d + gamma over lowering components
        std::set<IVec> tdrops;
        for (const auto& [g, c] : y)
            if (g.kind == LieGen::Y) tdrops.insert(d + rs.root(g.idx));
        std::map<Mono, size_t> tcol;
        std::vector<IVec> tlist(tdrops.begin(), tdrops.end());
        for (const IVec& t : tlist)
            for (const Mono& m : w.basis(t)) tcol.emplace(m, tcol.size());
        QMat A(tcol.size(), src.size());
        for (size_t j = 0; j < src.size(); ++j) {
            MonoComb img = apply_lie(w, y, MonoComb{{src[j], Rat(1)}});
            for (const auto& [m, c] : img) A(tcol.at(m), j) = c;
        }
        // block-diagonal target Gram
        QMat G(tcol.size(), tcol.size());
        for (const IVec& t : tlist) {
            const std::vector<Mono>& tb = w.basis(t);
            const QMat& g = w.gram(t);
            for (size_t i = 0; i < tb.size(); ++i)
                for (size_t j = 0; j < tb.size(); ++j) G(tcol.at(tb[i]), tcol.at(tb[j])) = g(i, j);
        }
        QMat GA = G * A;
        const QMat& Gs = w.gram(d);
        QMat stacked(GA.rows() + Gs.rows(), src.size());
        for (size_t i = 0; i < GA.rows(); ++i)
            for (size_t j = 0; j < src.size(); ++j) stacked(i, j) = GA(i, j);
        for (size_t i = 0; i < Gs.rows(); ++i)
            for (size_t j = 0; j < src.size(); ++j) stacked(GA.rows() + i, j) = Gs(i, j);
        if (linalg::rank(GA) != linalg::rank(stacked)) {
            rep.injective = false;
            rep.failing_levels.push_back(d);
        }
    }
    return rep;
}

struct RelationAudit {
    Weight lambda;
    IVec gamma;
    long n = 0;
    unsigned long p = 5;
    size_t weight_space_dim = 0;
    size_t solution_space_dim = 0;  // dim of the Gram radical at drop n*gamma
    std::vector<size_t> good_set;   // indices nu with sum(nu) >= n
    bool verdict = false;           // TRUE: no expression has all good coords with |c|<1
    Mono base_witness;              // the tautological expression y_gamma^n itself
    std::optional<QVec> counter_witness;  // full coefficient vector, when verdict is FALSE
    std::vector<std::string> warnings;
};

// Decide whether every PBW expression of y_gamma^n v+ in L(lambda) admits a
// coordinate nu with sum(nu) >= n and |c_nu|_p >= 1.  The affine space of
// expressions is base + radical; emptiness of the all-good-coordinates-
// divisible locus is exact Z_(p) lattice solvability.
inline RelationAudit relation_coefficient_audit(const VermaWindow& w, const IVec& gamma, long n,
                                                unsigned long p) {
    const RootSystem& rs = w.roots();
    if (!rs.is_positive_root(gamma)) throw invalid_input("audit: gamma not a positive root");
    ParabolicSubset I = max_parabolic_for(rs, w.highest_weight());
    std::set<IVec> levi;
    for (const IVec& b : levi_positive_roots(rs, I.I)) levi.insert(b);
    if (levi.count(gamma)) throw invalid_input("audit: gamma lies in the Levi of I(lambda)");

    RelationAudit audit;
    audit.lambda = w.highest_weight();
    audit.gamma = gamma;
    audit.n = n;
    audit.p = p;

    // paper hypothesis: p must not divide any nonzero <beta, alpha^vee>
    bool hypothesis_ok = true;
    for (const IVec& a : rs.positive)
        for (const IVec& b : rs.positive) {
            if (a == b) continue;
            Rat pr = Rat(2) * rs.inner(b, a) / rs.inner(a, a);
            if (!is_integer(pr)) throw internal_error("non-integral root pairing");
            long v = pr.get_num().get_si();
            if (v != 0 && v % (long)p == 0) hypothesis_ok = false;
        }
    if (!hypothesis_ok)
        audit.warnings.push_back("p divides a nonzero root pairing; hypothesis violated, running anyway");

    IVec drop = n * gamma;
    if (sum(drop) > w.depth()) throw window_too_shallow("audit: drop n*gamma beyond window depth");

    const std::vector<Mono>& basis = w.basis(drop);
    audit.weight_space_dim = basis.size();
    int gidx = rs.index(gamma);
    Mono base(rs.num_positive(), 0);
    base[gidx] = n;
    audit.base_witness = base;
    size_t base_col = std::find(basis.begin(), basis.end(), base) - basis.begin();
    if (base_col == basis.size()) throw internal_error("y_gamma^n monomial missing from its weight space");

    for (size_t i = 0; i < basis.size(); ++i)
        if (sum(basis[i]) >= n) audit.good_set.push_back(i);

    QMat rad = w.radical(drop);  // rows span the radical
    audit.solution_space_dim = rad.rows();

    // restrict to good coordinates: columns of R_J are the radical basis
    const std::vector<size_t>& J = audit.good_set;
    QMat rj(J.size(), rad.rows());
    QVec bj(J.size(), Rat(0));
    for (size_t ji = 0; ji < J.size(); ++ji) {
        for (size_t k = 0; k < rad.rows(); ++k) rj(ji, k) = rad(k, J[ji]);
        if (J[ji] == base_col) bj[ji] = 1;
    }
    // rows of C span the left kernel of R_J
    QMat C = linalg::kernel(rj.transposed());
    QVec target(C.rows(), Rat(0));
    for (size_t i = 0; i < C.rows(); ++i) {
        Rat s = 0;
        for (size_t j = 0; j < J.size(); ++j) s += C(i, j) * bj[j];
        target[i] = s / Rat((long)p);
    }
    std::optional<QVec> z = C.rows() == 0 ? std::make_optional(QVec(J.size(), Rat(0)))
                                          : linalg::solve_local(C, target, p);
    if (!z) {
        audit.verdict = true;
        return audit;
    }
    // violating c_J = p z must also be reachable: solve R_J t = b_J - p z
    QVec rhs(J.size());
    for (size_t j = 0; j < J.size(); ++j) rhs[j] = bj[j] - Rat((long)p) * (*z)[j];
    auto t = linalg::solve(rj, rhs);
    if (!t) {
        // left-kernel test said solvable, so this is unreachable
        throw internal_error("audit: inconsistent lattice solve");
    }
    QVec c(basis.size(), Rat(0));
    c[base_col] = 1;
    for (size_t k = 0; k < rad.rows(); ++k)
        for (size_t j = 0; j < basis.size(); ++j) c[j] -= (*t)[k] * rad(k, j);
    audit.counter_witness = c;
    audit.verdict = false;
    return audit;
}

struct UnitClaimObservation {
    IVec gamma;
    int simple_index = 0;
    long k0 = 0;
    Rat constant;     // c in [x_alpha^{(k0)}, y_gamma] = k0! c y_{gamma-k0 alpha}
    bool unit = true;  // |c|_p = 1
};

// The footnote's claim that [x_alpha^{(k0)}, y_gamma] = k0! c y_{gamma-k0 alpha}
// with c a p-adic unit, checked through the structure constants.
inline std::vector<UnitClaimObservation> unit_claim_check(const RootSystem& rs, const ChevalleyBasis& cb,
                                                          unsigned long p) {
    std::vector<UnitClaimObservation> out;
    for (const IVec& gamma : rs.positive) {
        for (int i = 0; i < rs.rank(); ++i) {
            IVec alpha(rs.rank(), 0);
            alpha[i] = 1;
            if (gamma == alpha) continue;
            if (!rs.is_root(gamma - alpha)) continue;
            long k0 = 0;
            while (rs.is_positive_root(gamma - (k0 + 1) * alpha)) ++k0;
            if (k0 == 0) continue;
            LieElt cur{{LieGen{LieGen::Y, rs.index(gamma)}, Rat(1)}};
            LieElt xa{{LieGen{LieGen::X, rs.index(alpha)}, Rat(1)}};
            for (long k = 0; k < k0; ++k) cur = cb.bracket(xa, cur);
            UnitClaimObservation obs;
            obs.gamma = gamma;
            obs.simple_index = i;
            obs.k0 = k0;
            LieGen expect{LieGen::Y, rs.index(gamma - k0 * alpha)};
            auto it = cur.find(expect);
            if (it == cur.end() || cur.size() != 1) throw internal_error("unexpected iterated bracket support");
            obs.constant = it->second / Rat(factorial(k0));
            obs.unit = obs.constant != 0 && padic_val(obs.constant, p) == 0;
            out.push_back(obs);
        }
    }
    return out;
}

}  // namespace liekit
