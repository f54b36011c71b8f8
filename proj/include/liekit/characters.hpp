#pragma once

#include <liekit/weyl.hpp>

namespace liekit {

// Finite window of a formal character: multiplicities of lambda - mu for
// drops mu with ht(mu) <= depth.
struct CharacterWindow {
    Weight base;
    long depth = 0;
    std::map<IVec, long> mult;

    long at(const IVec& drop) const {
        auto it = mult.find(drop);
        return it == mult.end() ? 0 : it->second;
    }
};

inline std::vector<IVec> drops_up_to(int rank, long depth) {
    std::vector<IVec> out;
    IVec cur(rank, 0);
    // lexicographic enumeration of all vectors with coordinate sum <= depth
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == rank) {
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, depth);
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
        long ha = sum(a), hb = sum(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

// Vector partition count over a fixed list of positive roots.
class KostantCounter {
public:
    explicit KostantCounter(std::vector<IVec> roots) : roots_(std::move(roots)) {}

    long count(const IVec& mu) const {
        if (!all_nonneg(mu)) return 0;
        return rec(roots_.size(), mu);
    }

private:
    long rec(size_t k, const IVec& mu) const {
        if (is_zero(mu)) return 1;
        if (k == 0) return 0;
        auto key = std::make_pair(k, mu);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        long total = 0;
        IVec cur = mu;
        for (;;) {
            total += rec(k - 1, cur);
            cur = cur - roots_[k - 1];
            if (!all_nonneg(cur)) break;
        }
        memo_[key] = total;
        return total;
    }

    std::vector<IVec> roots_;
    mutable std::map<std::pair<size_t, IVec>, long> memo_;
};

inline long kostant_count(const RootSystem& rs, const IVec& mu) {
    if (!all_nonneg(mu)) throw invalid_input("kostant_count: drop not in Z>=0 Delta");
    KostantCounter kc(rs.positive);
    return kc.count(mu);
}

// (lambda, v) for a weight and a rational root-lattice vector.
inline Rat weight_root_inner(const RootSystem& rs, const Weight& w, const QVec& v) {
    rs.check_weight(w);
    Rat s = 0;
    if (rs.type.gl) {
        for (int j = 0; j < rs.rank(); ++j)
            if (v[j] != 0) s += v[j] * (w.coords[j] - w.coords[j + 1]);
    } else {
        for (int j = 0; j < rs.rank(); ++j)
            if (v[j] != 0) s += v[j] * w.coords[j] * rs.d[j];
    }
    return s;
}

inline Rat root_inner(const RootSystem& rs, const QVec& a, const QVec& b) {
    Rat s = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rs.rank(); ++j)
            if (b[j] != 0) s += a[i] * b[j] * rs.d[i] * rs.cartan[i][j];
    }
    return s;
}

inline QVec to_qvec(const IVec& v) { return QVec(v.begin(), v.end()); }

// dim V_I(lambda) by the Weyl dimension formula over the Levi; I = all
// simple roots gives dim V(lambda).
inline Int weyl_dim_levi(const RootSystem& rs, const std::set<int>& I, const Weight& lam) {
    if (!rs.is_levi_dominant(lam, I)) throw invalid_input("weyl_dim: weight not dominant for the Levi");
    Weight rho = rs.rho();
    Rat dim = 1;
    for (const IVec& beta : levi_positive_roots(rs, I)) {
        Rat num = rs.coroot_pairing(lam, beta) + rs.coroot_pairing(rho, beta);
        Rat den = rs.coroot_pairing(rho, beta);
        dim *= num / den;
    }
    if (!is_integer(dim) || dim <= 0) throw internal_error("Weyl dimension not a positive integer");
    return dim.get_num();
}

inline Int weyl_dim(const RootSystem& rs, const Weight& lam) {
    std::set<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.insert(i);
    return weyl_dim_levi(rs, all, lam);
}

// Freudenthal recursion on a window, restricted to the Levi subsystem
// spanned by I (I = all simple roots recovers the full character of
// V(lambda)).  Multiplicity zero at drops where the Casimir denominator
// vanishes: those lambda-linked weights are never weights of V.
inline CharacterWindow freudenthal_levi(const RootSystem& rs, const std::set<int>& I, const Weight& lam,
                                        long depth) {
    if (!rs.is_levi_dominant(lam, I)) throw invalid_input("freudenthal: weight not dominant for the Levi");
    std::vector<IVec> lroots = levi_positive_roots(rs, I);
    Weight rho = rs.rho();
    CharacterWindow cw;
    cw.base = lam;
    cw.depth = depth;
    cw.mult[IVec(rs.rank(), 0)] = 1;
    for (const IVec& drop : drops_up_to(rs.rank(), depth)) {
        if (is_zero(drop)) continue;
        bool supported = true;
        for (int j = 0; j < rs.rank(); ++j)
            if (drop[j] != 0 && !I.count(j)) supported = false;
        if (!supported) continue;
        QVec dq = to_qvec(drop);
        // denom = 2(lambda, drop) + 2(rho, drop) - (drop, drop); rho may be
        // used in place of rho_I because drop lies in the span of I.
        Rat denom = 2 * weight_root_inner(rs, lam, dq) + 2 * weight_root_inner(rs, rho, dq) - root_inner(rs, dq, dq);
        if (denom == 0) continue;  // not a weight of V
        Rat rhs = 0;
        for (const IVec& beta : lroots) {
            QVec bq = to_qvec(beta);
            Rat lb = weight_root_inner(rs, lam, bq);
            Rat db = root_inner(rs, dq, bq);
            Rat bb = root_inner(rs, bq, bq);
            IVec up = drop - beta;
            long k = 1;
            while (all_nonneg(up)) {
                auto it = cw.mult.find(up);
                if (it != cw.mult.end() && it->second != 0) rhs += 2 * Rat(it->second) * (lb - db + k * bb);
                up = up - beta;
                ++k;
            }
        }
        Rat m = rhs / denom;
        if (!is_integer(m) || m < 0) throw internal_error("Freudenthal produced a bad multiplicity");
        long mv = m.get_num().get_si();
        if (mv != 0) cw.mult[drop] = mv;
    }
    return cw;
}

inline CharacterWindow freudenthal_char(const RootSystem& rs, const Weight& lam, long depth) {
    std::set<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.insert(i);
    return freudenthal_levi(rs, all, lam, depth);
}

// char M_I(lambda) = char V_I(lambda) * prod_{beta in Phi+ \ Phi_I+}
// (1 - e^{-beta})^{-1}, on the window.
inline CharacterWindow parabolic_verma_char(const RootSystem& rs, const std::set<int>& I, const Weight& lam,
                                            long depth) {
    CharacterWindow levi = freudenthal_levi(rs, I, lam, depth);
    std::vector<IVec> lroots = levi_positive_roots(rs, I);
    std::set<IVec> lset(lroots.begin(), lroots.end());
    std::vector<IVec> rest;
    for (const IVec& beta : rs.positive)
        if (!lset.count(beta)) rest.push_back(beta);
    KostantCounter kc(rest);
    CharacterWindow out;
    out.base = lam;
    out.depth = depth;
    for (const IVec& drop : drops_up_to(rs.rank(), depth)) {
        long total = 0;
        for (const auto& [nu, m] : levi.mult) {
            IVec rem = drop - nu;
            if (!all_nonneg(rem)) continue;
            total += m * kc.count(rem);
        }
        if (total != 0) out.mult[drop] = total;
    }
    return out;
}

// Verma character window: multiplicities are Kostant counts.
inline CharacterWindow verma_char(const RootSystem& rs, const Weight& lam, long depth) {
    KostantCounter kc(rs.positive);
    CharacterWindow out;
    out.base = lam;
    out.depth = depth;
    for (const IVec& drop : drops_up_to(rs.rank(), depth)) {
        long v = kc.count(drop);
        if (v != 0) out.mult[drop] = v;
    }
    return out;
}

// dim L(lambda)_{lambda-mu} for dominant lambda by the Weyl-Kostant
// alternating sum over the Weyl group.
inline long kostant_alternating_dim(const RootSystem& rs, const WeylGroup& wg, const Weight& lam,
                                    const IVec& mu) {
    if (!rs.is_dominant(lam)) throw invalid_input("kostant_alternating_dim: weight not dominant");
    KostantCounter kc(rs.positive);
    long total = 0;
    for (const WeylElement& w : wg.elements()) {
        Weight wl = dot_action(rs, w, lam);
        auto delta = rs.root_coords_of_difference(lam, wl);
        if (!delta) throw internal_error("dot action left the root lattice");
        IVec dv(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) {
            if (!is_integer((*delta)[j])) throw internal_error("non-integral linkage drop");
            dv[j] = (*delta)[j].get_num().get_si();
        }
        IVec arg = mu - dv;
        if (!all_nonneg(arg)) continue;
        long term = kc.count(arg);
        total += (w.length() % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace liekit
