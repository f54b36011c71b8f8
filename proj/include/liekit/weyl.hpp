#pragma once

#include <liekit/root_system.hpp>

#include <algorithm>
#include <set>

namespace liekit {

// Integer matrix acting on simple-root coordinates.
using IMat = std::vector<IVec>;

inline IMat imat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IVec imat_apply(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size();
    IMat r(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// A Weyl group element.  Words are witnesses; the identity of an element is
// its action matrix on the root lattice.
struct WeylElement {
    std::vector<int> word;  // s_{word[0]} s_{word[1]} ... , rightmost applied first
    IMat root_mat;          // action on simple-root coordinates
    IMat inv_root_mat;

    size_t length() const { return word.size(); }
    bool operator==(const WeylElement& o) const { return root_mat == o.root_mat; }
};

struct ParabolicSubset {
    std::set<int> I;          // simple-root indices (0-based)
    std::vector<int> blocks;  // GL block decomposition, empty otherwise

    bool operator==(const ParabolicSubset& o) const { return I == o.I; }
    bool contains(const ParabolicSubset& o) const {
        return std::includes(I.begin(), I.end(), o.I.begin(), o.I.end());
    }
};

struct CosetSystem {
    std::set<int> I;
    std::vector<WeylElement> reps;  // increasing length, lex word within a length
    const WeylElement& max_rep() const { return reps.back(); }
};

class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs, size_t bound = 100000) : rs_(&rs) {
        const int n = rs.rank();
        std::vector<IMat> refl(n);
        for (int i = 0; i < n; ++i) {
            refl[i] = imat_identity(n);
            // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
            for (int j = 0; j < n; ++j) refl[i][i][j] -= rs.cartan[i][j];
        }
        std::map<IMat, size_t> seen;
        WeylElement id{{}, imat_identity(n), imat_identity(n)};
        elements_.push_back(id);
        seen[id.root_mat] = 0;
        size_t head = 0;
        while (head < elements_.size()) {
            WeylElement w = elements_[head++];
            for (int i = 0; i < n; ++i) {
                IMat m = imat_mul(w.root_mat, refl[i]);
                if (seen.count(m)) continue;
                if (elements_.size() >= bound)
                    throw bound_exceeded("Weyl group larger than bound " + std::to_string(bound));
                WeylElement nw;
                nw.word = w.word;
                nw.word.push_back(i);
                nw.root_mat = m;
                nw.inv_root_mat = imat_mul(refl[i], w.inv_root_mat);
                seen[m] = elements_.size();
                elements_.push_back(std::move(nw));
            }
        }
        std::stable_sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
            if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
            return a.word < b.word;
        });
    }

    const RootSystem& roots() const { return *rs_; }
    size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& identity() const { return elements_.front(); }
    const WeylElement& longest() const { return elements_.back(); }

    // inversion count #{beta > 0 : w(beta) < 0}
    size_t inversions(const WeylElement& w) const {
        size_t c = 0;
        for (const IVec& beta : rs_->positive) {
            IVec im = imat_apply(w.root_mat, beta);
            bool neg = true;
            for (long x : im)
                if (x > 0) {
                    neg = false;
                    break;
                }
            if (neg) ++c;
        }
        return c;
    }

    WeylElement simple_reflection(int i) const {
        for (const WeylElement& w : elements_)
            if (w.word.size() == 1 && w.word[0] == i) return w;
        throw invalid_input("no such simple reflection");
    }

    WeylElement product(const WeylElement& a, const WeylElement& b) const {
        IMat m = imat_mul(a.root_mat, b.root_mat);
        return canonical(m);
    }

    WeylElement canonical(const IMat& root_mat) const {
        for (const WeylElement& w : elements_)
            if (w.root_mat == root_mat) return w;
        throw internal_error("matrix not in Weyl group");
    }

    // Minimal-length representatives of W_I \ W, ordered by (length, lex).
    CosetSystem min_coset_reps(const std::set<int>& I) const {
        CosetSystem cs;
        cs.I = I;
        for (const WeylElement& w : elements_) {
            bool minimal = true;
            for (int i : I) {
                IVec e(rs_->rank(), 0);
                e[i] = 1;
                IVec im = imat_apply(w.inv_root_mat, e);
                bool pos = false;
                for (long x : im)
                    if (x > 0) pos = true;
                if (!pos) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) cs.reps.push_back(w);
        }
        return cs;
    }

    // The GL family w_j = s_j ... s_1 (0-indexed word [j-1, ..., 0]).
    WeylElement gl_w(int j) const {
        WeylElement w = identity();
        for (int k = 0; k < j; ++k) w = product(w, simple_reflection(j - 1 - k));
        return w;
    }

private:
    const RootSystem* rs_;
    std::vector<WeylElement> elements_;
};

inline std::vector<WeylElement> generate_weyl(const RootSystem& rs, size_t bound = 100000) {
    return WeylGroup(rs, bound).elements();
}

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
inline Weight reflect_weight(const RootSystem& rs, int i, const Weight& w) {
    Rat pr = rs.coroot_pairing_simple(w, i);
    Weight r = w;
    if (rs.type.gl) {
        r.coords[i] -= pr;
        r.coords[i + 1] += pr;
    } else {
        for (int k = 0; k < rs.rank(); ++k) r.coords[k] -= pr * rs.cartan[k][i];
    }
    return r;
}

inline Weight weyl_apply(const RootSystem& rs, const WeylElement& w, const Weight& lam) {
    Weight r = lam;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = reflect_weight(rs, *it, r);
    return r;
}

// w . chi = w(chi + rho) - rho
inline Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& chi) {
    Weight shifted = chi;
    Weight rho = rs.rho();
    for (size_t i = 0; i < shifted.coords.size(); ++i) shifted.coords[i] += rho.coords[i];
    Weight moved = weyl_apply(rs, w, shifted);
    for (size_t i = 0; i < moved.coords.size(); ++i) moved.coords[i] -= rho.coords[i];
    return moved;
}

// I(lambda) = {alpha in Delta : <lambda, alpha^vee> in Z_{>=0}}, the largest
// standard parabolic whose category contains L(lambda).
inline ParabolicSubset max_parabolic_for(const RootSystem& rs, const Weight& lam) {
    if (!lam.is_integral()) throw invalid_input("max_parabolic_for: weight not integral");
    ParabolicSubset ps;
    for (int i = 0; i < rs.rank(); ++i) {
        Rat pr = rs.coroot_pairing_simple(lam, i);
        if (is_integer(pr) && pr >= 0) ps.I.insert(i);
    }
    if (rs.type.gl) {
        int run = 1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (ps.I.count(i))
                ++run;
            else {
                ps.blocks.push_back(run);
                run = 1;
            }
        }
        ps.blocks.push_back(run);
    }
    return ps;
}

// Positive roots of the Levi subsystem spanned by I.
inline std::vector<IVec> levi_positive_roots(const RootSystem& rs, const std::set<int>& I) {
    std::vector<IVec> out;
    for (const IVec& beta : rs.positive) {
        bool in = true;
        for (int j = 0; j < rs.rank(); ++j)
            if (beta[j] != 0 && !I.count(j)) {
                in = false;
                break;
            }
        if (in) out.push_back(beta);
    }
    return out;
}

}  // namespace liekit
