#pragma once

#include <liekit/root_system.hpp>

namespace liekit {

// Basis elements of the Lie algebra: raising x_beta, lowering y_beta for
// each positive root, and the simple coroots h_i.
struct LieGen {
    enum Kind { X, Y, H } kind;
    int idx;  // positive-root index for X/Y, simple index for H

    bool operator==(const LieGen& o) const { return kind == o.kind && idx == o.idx; }
    bool operator<(const LieGen& o) const { return kind != o.kind ? kind < o.kind : idx < o.idx; }
};

using LieElt = std::map<LieGen, Rat>;  // sparse combination of basis elements

// Structure constants in a Chevalley basis, signs fixed by the
// extraspecial-pair convention (tagged below).  All constants are integers;
// |N(alpha,beta)| = p+1 with p the chain length.
class ChevalleyBasis {
public:
    static constexpr const char* kSignConvention = "extraspecial-positive";

    explicit ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
        build_positive_constants();
        if (rs.rank() <= 4) {
            verify_chain_rule();
            verify_jacobi();
        }
    }

    const RootSystem& roots() const { return *rs_; }

    // N(a, b) for arbitrary roots a, b (signed simple-root coordinates)
    // with a + b a root.  [e_a, e_b] = N(a,b) e_{a+b}.
    long constant(const IVec& a, const IVec& b) const {
        const RootSystem& rs = *rs_;
        IVec s = a + b;
        if (!rs.is_root(s)) throw invalid_input("constant: a+b not a root");
        bool apos = rs.is_positive_root(a), bpos = rs.is_positive_root(b);
        if (apos && bpos) return pos_constant(rs.index(a), rs.index(b));
        if (!apos && !bpos) return -constant(negate(a), negate(b));
        if (!apos) return -constant(b, a);
        // a > 0, b < 0
        if (rs.is_positive_root(s)) {
            // N(a,-nu) = (mu,mu)/(a,a) N(mu,nu) with mu = a - nu = s
            IVec nu = negate(b);
            Rat f = rs.inner(s, s) / rs.inner(a, a);
            Rat v = f * pos_constant(rs.index(s), rs.index(nu));
            return to_long(v);
        }
        // s < 0: N(a,b) = -N(-a,-b) = N(-b,-a); -b>0, -a<0, (-b)+(-a) = -s > 0
        IVec nb = negate(b), na = negate(a), ns = negate(s);
        Rat f = rs.inner(ns, ns) / rs.inner(nb, nb);
        Rat v = f * pos_constant(rs.index(ns), rs.index(a));
        return to_long(v);
    }

    long pos_constant(int i, int j) const {
        if (i == j) throw invalid_input("constant: equal roots");
        if (i > j) return -pos_constant(j, i);
        auto it = npos_.find({i, j});
        if (it == npos_.end()) throw invalid_input("constant: sum not a root");
        return it->second;
    }

    bool pair_has_constant(int i, int j) const {
        return rs_->is_positive_root(rs_->root(i) + rs_->root(j));
    }

    // Chain length p = max{k : b - k a in Phi}.
    long chain_down(const IVec& a, const IVec& b) const {
        long p = 0;
        IVec cur = b - a;
        while (rs_->is_root(cur)) {
            ++p;
            cur = cur - a;
        }
        return p;
    }

    // [g1, g2] as a sparse combination.
    LieElt bracket(const LieGen& g1, const LieGen& g2) const {
        const RootSystem& rs = *rs_;
        LieElt out;
        auto add = [&](LieGen g, Rat c) {
            if (c == 0) return;
            out[g] += c;
            if (out[g] == 0) out.erase(g);
        };
        if (g1.kind == LieGen::H && g2.kind == LieGen::H) return out;
        if (g1.kind == LieGen::H) {
            long pr = rs.pairing_with_simple_coroot(rs.root(g2.idx), g1.idx);
            add(g2, g2.kind == LieGen::X ? Rat(pr) : Rat(-pr));
            return out;
        }
        if (g2.kind == LieGen::H) {
            for (auto& [g, c] : bracket(g2, g1)) add(g, -c);
            return out;
        }
        IVec a = g1.kind == LieGen::X ? rs.root(g1.idx) : negate(rs.root(g1.idx));
        IVec b = g2.kind == LieGen::X ? rs.root(g2.idx) : negate(rs.root(g2.idx));
        IVec s = a + b;
        if (is_zero(s)) {
            // [x_beta, y_beta] = h_beta (the coroot), coefficient 1
            IVec cv = rs.coroot(rs.root(g1.idx));
            Rat sign = g1.kind == LieGen::X ? 1 : -1;
            for (int i = 0; i < rs.rank(); ++i) add(LieGen{LieGen::H, i}, sign * Rat(cv[i]));
            return out;
        }
        if (!rs.is_root(s)) return out;
        long n = constant(a, b);
        if (rs.is_positive_root(s))
            add(LieGen{LieGen::X, rs.index(s)}, Rat(n));
        else
            add(LieGen{LieGen::Y, rs.index(negate(s))}, Rat(n));
        return out;
    }

    LieElt bracket(const LieElt& u, const LieElt& v) const {
        LieElt out;
        for (const auto& [g1, c1] : u)
            for (const auto& [g2, c2] : v)
                for (const auto& [g, c] : bracket(g1, g2)) {
                    out[g] += c1 * c2 * c;
                    if (out[g] == 0) out.erase(g);
                }
        return out;
    }

    size_t dimension() const { return 2 * rs_->num_positive() + rs_->rank(); }

    std::vector<LieGen> basis() const {
        std::vector<LieGen> b;
        for (size_t i = 0; i < rs_->num_positive(); ++i) b.push_back({LieGen::X, (int)i});
        for (size_t i = 0; i < rs_->num_positive(); ++i) b.push_back({LieGen::Y, (int)i});
        for (int i = 0; i < rs_->rank(); ++i) b.push_back({LieGen::H, i});
        return b;
    }

    // Exhaustive checks; throw internal_error on failure (unreachable
    // unless the construction itself is broken).
    void verify_chain_rule() const {
        for (size_t i = 0; i < rs_->num_positive(); ++i)
            for (size_t j = 0; j < rs_->num_positive(); ++j) {
                if (i == j) continue;
                IVec s = rs_->root(i) + rs_->root(j);
                if (!rs_->is_positive_root(s)) continue;
                long p = chain_down(rs_->root(i), rs_->root(j));
                long n = pos_constant((int)i, (int)j);
                if (std::abs(n) != p + 1) throw internal_error("structure constant != +-(p+1)");
            }
    }

    void verify_jacobi() const {
        auto b = basis();
        for (const LieGen& u : b)
            for (const LieGen& v : b)
                for (const LieGen& w : b) {
                    LieElt s = bracket(bracket(u, v), LieElt{{w, Rat(1)}});
                    for (const auto& [g, c] : bracket(bracket(v, w), LieElt{{u, Rat(1)}})) {
                        s[g] += c;
                        if (s[g] == 0) s.erase(g);
                    }
                    for (const auto& [g, c] : bracket(bracket(w, u), LieElt{{v, Rat(1)}})) {
                        s[g] += c;
                        if (s[g] == 0) s.erase(g);
                    }
                    if (!s.empty()) throw internal_error("Jacobi identity failed");
                }
    }

private:
    static IVec negate(const IVec& v) {
        IVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
        return r;
    }

    static long to_long(const Rat& v) {
        if (!is_integer(v)) throw internal_error("non-integral structure constant");
        return v.get_num().get_si();
    }

    // Positive special pairs, filled in increasing height of the sum.
    // Extraspecial pairs get N = p+1; the rest follow from the four-root
    // Jacobi identity against the extraspecial pair of the same sum.
    void build_positive_constants() {
        const RootSystem& rs = *rs_;
        for (size_t g = 0; g < rs.num_positive(); ++g) {
            const IVec& gamma = rs.root(g);
            if (sum(gamma) == 1) continue;
            // all special pairs (i < j) with root_i + root_j = gamma
            std::vector<std::pair<int, int>> pairs;
            for (size_t i = 0; i < rs.num_positive(); ++i) {
                IVec rem = gamma - rs.root(i);
                if (!all_nonneg(rem)) continue;
                int j = rs.index(rem);
                if (j >= 0 && (int)i < j) pairs.emplace_back((int)i, j);
            }
            if (pairs.empty()) throw internal_error("non-simple root without special pair");
            auto [xi, eta] = pairs.front();  // minimal first component = extraspecial
            long p = chain_down(rs.root(xi), rs.root(eta));
            npos_[{xi, eta}] = p + 1;
            for (size_t k = 1; k < pairs.size(); ++k) {
                auto [ai, bi] = pairs[k];
                npos_[{ai, bi}] = special_from_extraspecial(xi, eta, ai, bi);
            }
        }
    }

    // Carter's evaluation: quadruple (xi, eta, -a, -b) sums to zero, so
    // N(xi,eta)N(-a,-b)/(g,g) + N(eta,-a)N(xi,-b)/(eta-a,eta-a)
    //   + N(-a,xi)N(eta,-b)/(xi-a,xi-a) = 0,
    // terms dropped when the inner sum is not a root.  All constants on the
    // right involve sums of strictly smaller height, already available.
    long special_from_extraspecial(int xi, int eta, int ai, int bi) const {
        const RootSystem& rs = *rs_;
        IVec x = rs.root(xi), e = rs.root(eta), a = rs.root(ai), b = rs.root(bi);
        IVec g = x + e;
        Rat acc = 0;
        IVec ema = e - a;
        if (rs.is_root(ema))
            acc += Rat(constant(e, negate(a))) * Rat(constant(x, negate(b))) / rs.inner(ema, ema);
        IVec xma = x - a;
        if (rs.is_root(xma))
            acc += Rat(constant(negate(a), x)) * Rat(constant(e, negate(b))) / rs.inner(xma, xma);
        // N(xi,eta) N(-a,-b) / (g,g) = -acc ; N(a,b) = -N(-a,-b)
        Rat nab = acc * rs.inner(g, g) / Rat(pos_constant(xi, eta));
        return to_long(nab);
    }

    const RootSystem* rs_;
    std::map<std::pair<int, int>, long> npos_;
};

inline ChevalleyBasis chevalley_constants(const RootSystem& rs) {
    if (rs.rank() > 8) throw bound_exceeded("chevalley_constants: rank > 8");
    return ChevalleyBasis(rs);
}

}  // namespace liekit
