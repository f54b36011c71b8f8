#pragma once

#include <liekit/characters.hpp>
#include <liekit/chevalley.hpp>

#include <functional>

namespace liekit {

// PBW monomial in the lowering operators: exponent vector over the positive
// roots in the fixed (height, lex) order.  y^m = y_{b1}^{m1} ... y_{br}^{mr}.
using Mono = IVec;
using MonoComb = std::map<Mono, Rat>;

inline void add_term(MonoComb& out, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

// Truncated Verma module M(lambda): PBW bases of the weight spaces down to
// depth D, raising/lowering action and the contravariant Gram form, all
// computed lazily per weight space and memoized.
class VermaWindow {
public:
    VermaWindow(const RootSystem& rs, const ChevalleyBasis& cb, Weight lambda, long depth)
        : rs_(&rs), cb_(&cb), lambda_(std::move(lambda)), depth_(depth) {
        rs.check_weight(lambda_);
        if (depth_ < 0) throw invalid_input("window depth must be nonnegative");
    }

    const RootSystem& roots() const { return *rs_; }
    const ChevalleyBasis& chevalley() const { return *cb_; }
    const Weight& highest_weight() const { return lambda_; }
    long depth() const { return depth_; }

    IVec drop_of(const Mono& m) const {
        IVec d(rs_->rank(), 0);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) d = d + m[i] * rs_->root((int)i);
        return d;
    }

    // Ordered PBW basis of the weight space at the given drop.
    const std::vector<Mono>& basis(const IVec& drop) const {
        auto it = basis_.find(drop);
        if (it != basis_.end()) return it->second;
        std::vector<Mono> out;
        Mono cur(rs_->num_positive(), 0);
        std::function<void(size_t, IVec)> rec = [&](size_t k, IVec rem) {
            if (k == rs_->num_positive()) {
                if (is_zero(rem)) out.push_back(cur);
                return;
            }
            long e = 0;
            for (;;) {
                cur[k] = e;
                rec(k + 1, rem);
                rem = rem - rs_->root((int)k);
                if (!all_nonneg(rem)) break;
                ++e;
            }
            cur[k] = 0;
        };
        if (all_nonneg(drop)) rec(0, drop);
        return basis_.emplace(drop, std::move(out)).first->second;
    }

    long dim(const IVec& drop) const { return (long)basis(drop).size(); }

    // y_{b_g} . y^m, rewritten to PBW normal form.
    const MonoComb& mul_y(int g, const Mono& m) const {
        auto key = std::make_pair(g, m);
        auto it = muly_.find(key);
        if (it != muly_.end()) return it->second;
        MonoComb out;
        int i = first_support(m);
        if (i < 0 || g <= i) {
            Mono r = m;
            r[g] += 1;
            out.emplace(std::move(r), Rat(1));
        } else {
            Mono rest = m;
            rest[i] -= 1;
            for (const auto& [t, c] : mul_y(g, rest)) {
                Mono r = t;
                r[i] += 1;  // i <= first support of t here
                add_term(out, r, c);
            }
            IVec s = rs_->root(g) + rs_->root(i);
            if (rs_->is_positive_root(s)) {
                Rat c = -Rat(cb_->pos_constant(g, i));
                for (const auto& [t, c2] : mul_y(rs_->index(s), rest)) add_term(out, t, c * c2);
            }
        }
        return muly_.emplace(std::move(key), std::move(out)).first->second;
    }

    // x_{b_a} . y^m v+ expanded over the PBW basis one level up.
    const MonoComb& act_x(int a, const Mono& m) const {
        auto key = std::make_pair(a, m);
        auto it = actx_.find(key);
        if (it != actx_.end()) return it->second;
        MonoComb out;
        int i = first_support(m);
        if (i >= 0) {
            Mono rest = m;
            rest[i] -= 1;
            // x_a y_bi = y_bi x_a + [x_a, y_bi]
            for (const auto& [t, c] : act_x(a, rest))
                for (const auto& [t2, c2] : mul_y(i, t)) add_term(out, t2, c * c2);
            if (a == i) {
                Rat h = rs_->coroot_pairing(rs_->sub_drop(lambda_, drop_of(rest)), rs_->root(a));
                add_term(out, rest, h);
            } else {
                IVec diff = rs_->root(a) - rs_->root(i);
                IVec ndiff(diff.size());
                for (size_t k = 0; k < diff.size(); ++k) ndiff[k] = -diff[k];
                if (rs_->is_positive_root(diff)) {
                    Rat c = Rat(cb_->constant(rs_->root(a), negate_vec(rs_->root(i))));
                    for (const auto& [t, c2] : act_x(rs_->index(diff), rest)) add_term(out, t, c * c2);
                } else if (rs_->is_positive_root(ndiff)) {
                    Rat c = Rat(cb_->constant(rs_->root(a), negate_vec(rs_->root(i))));
                    for (const auto& [t, c2] : mul_y(rs_->index(ndiff), rest)) add_term(out, t, c * c2);
                }
            }
        }
        return actx_.emplace(std::move(key), std::move(out)).first->second;
    }

    MonoComb act_x_comb(int a, const MonoComb& v) const {
        MonoComb out;
        for (const auto& [m, c] : v)
            for (const auto& [t, c2] : act_x(a, m)) add_term(out, t, c * c2);
        return out;
    }

    MonoComb mul_y_comb(int g, const MonoComb& v) const {
        MonoComb out;
        for (const auto& [m, c] : v)
            for (const auto& [t, c2] : mul_y(g, m)) add_term(out, t, c * c2);
        return out;
    }

    // Contravariant form <y^nu v+, y^tau v+>: coefficient of v+ in
    // sigma(y^nu) y^tau v+, sigma the transpose swapping x and y.
    Rat gram_entry(const Mono& nu, const Mono& tau) const {
        const Mono *n = &nu, *t = &tau;
        if (tau < nu) std::swap(n, t);  // symmetric form
        auto key = std::make_pair(*n, *t);
        auto it = grament_.find(key);
        if (it != grament_.end()) return it->second;
        Rat val;
        int i = first_support(*n);
        if (i < 0) {
            val = first_support(*t) < 0 ? 1 : 0;
        } else {
            Mono rest = *n;
            rest[i] -= 1;
            val = 0;
            for (const auto& [s, c] : act_x(i, *t)) val += c * gram_entry(rest, s);
        }
        grament_.emplace(std::move(key), val);
        return val;
    }

    const QMat& gram(const IVec& drop) const {
        auto it = gram_.find(drop);
        if (it != gram_.end()) return it->second;
        const std::vector<Mono>& b = basis(drop);
        QMat g(b.size(), b.size());
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i; j < b.size(); ++j) {
                Rat v = gram_entry(b[i], b[j]);
                g(i, j) = v;
                g(j, i) = v;
            }
        return gram_.emplace(drop, std::move(g)).first->second;
    }

    // dim L(lambda)_{lambda - drop} = rank of the Gram matrix.
    long simple_dim(const IVec& drop) const {
        auto it = rank_.find(drop);
        if (it != rank_.end()) return it->second;
        long r = (long)linalg::rank(gram(drop));
        rank_.emplace(drop, r);
        return r;
    }

    // Rows span the radical (= maximal submodule) inside the weight space.
    QMat radical(const IVec& drop) const { return linalg::kernel(gram(drop)); }

    // Matrix of x_{b_a}: M_drop -> M_{drop - b_a} in the PBW bases.
    QMat x_matrix(int a, const IVec& drop) const {
        const std::vector<Mono>& src = basis(drop);
        IVec tgt_drop = drop - rs_->root(a);
        const std::vector<Mono>& tgt = basis(tgt_drop);
        std::map<Mono, size_t> index;
        for (size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
        QMat m(tgt.size(), src.size());
        for (size_t j = 0; j < src.size(); ++j)
            for (const auto& [t, c] : act_x(a, src[j])) m(index.at(t), j) = c;
        return m;
    }

    QMat y_matrix(int g, const IVec& drop) const {
        const std::vector<Mono>& src = basis(drop);
        IVec tgt_drop = drop + rs_->root(g);
        const std::vector<Mono>& tgt = basis(tgt_drop);
        std::map<Mono, size_t> index;
        for (size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
        QMat m(tgt.size(), src.size());
        for (size_t j = 0; j < src.size(); ++j)
            for (const auto& [t, c] : mul_y(g, src[j])) m(index.at(t), j) = c;
        return m;
    }

    // Kernel of all simple raising operators on the weight space; rows are
    // coordinate vectors of singular vectors.
    QMat singular_vectors(const IVec& drop) const {
        const std::vector<Mono>& b = basis(drop);
        std::vector<QMat> mats;
        size_t total_rows = 0;
        for (int i = 0; i < rs_->rank(); ++i) {
            int a = rs_->index(unit_root(i));
            QMat m = x_matrix(a, drop);
            total_rows += m.rows();
            mats.push_back(std::move(m));
        }
        QMat stacked(total_rows, b.size());
        size_t r0 = 0;
        for (const QMat& m : mats) {
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j) stacked(r0 + i, j) = m(i, j);
            r0 += m.rows();
        }
        if (b.empty()) return QMat(0, 0);
        if (total_rows == 0) return QMat::identity(b.size());
        return linalg::kernel(stacked);
    }

private:
    static int first_support(const Mono& m) {
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) return (int)i;
        return -1;
    }
    static IVec negate_vec(const IVec& v) {
        IVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
        return r;
    }
    IVec unit_root(int i) const {
        IVec e(rs_->rank(), 0);
        e[i] = 1;
        return e;
    }

    const RootSystem* rs_;
    const ChevalleyBasis* cb_;
    Weight lambda_;
    long depth_;

    mutable std::map<IVec, std::vector<Mono>> basis_;
    mutable std::map<std::pair<int, Mono>, MonoComb> muly_;
    mutable std::map<std::pair<int, Mono>, MonoComb> actx_;
    mutable std::map<std::pair<Mono, Mono>, Rat> grament_;
    mutable std::map<IVec, QMat> gram_;
    mutable std::map<IVec, long> rank_;
};

inline VermaWindow build_window(const RootSystem& rs, const ChevalleyBasis& cb, const Weight& lambda,
                                long depth, long depth_bound = 64) {
    if (depth > depth_bound) throw bound_exceeded("window depth exceeds bound");
    return VermaWindow(rs, cb, lambda, depth);
}

inline QMat contravariant_gram(const VermaWindow& w, const IVec& drop) {
    if (sum(drop) > w.depth()) throw window_too_shallow("drop beyond window depth");
    return w.gram(drop);
}

inline long simple_weight_dim(const VermaWindow& w, const IVec& drop) {
    if (sum(drop) > w.depth()) throw window_too_shallow("drop beyond window depth");
    return w.simple_dim(drop);
}

inline QMat singular_vectors(const VermaWindow& w, const IVec& drop) {
    if (sum(drop) > w.depth()) throw window_too_shallow("drop beyond window depth");
    return w.singular_vectors(drop);
}

struct JHFactor {
    Weight mu;
    IVec drop;  // lambda - mu in simple-root coordinates
    long multiplicity = 0;
};

// Brute-force Jordan-Hoelder data of M(lambda) on a window: solve the
// unitriangular system char M(lambda) = sum m_mu char L(mu) over the dot
// orbit, with dim L from the Gram rank oracle.  Refuses silently truncated
// answers: a nonzero boundary residual raises window_too_shallow.
inline std::vector<JHFactor> jh_verma_bruteforce(const RootSystem& rs, const ChevalleyBasis& cb,
                                                 const WeylGroup& wg, const Weight& lambda, long depth,
                                                 bool allow_high_rank = false) {
    if (!lambda.is_integral()) throw invalid_input("jh_verma_bruteforce: weight not integral");
    if (rs.rank() > 2 && !allow_high_rank)
        throw bound_exceeded("jh_verma_bruteforce: rank > 2 (pass allow_high_rank to override)");

    // candidate highest weights {w . lambda} below lambda
    std::map<IVec, Weight> candidates;
    for (const WeylElement& w : wg.elements()) {
        Weight mu = dot_action(rs, w, lambda);
        auto diff = rs.root_coords_of_difference(lambda, mu);
        if (!diff) continue;
        IVec dv(rs.rank());
        bool ok = true;
        for (int j = 0; j < rs.rank(); ++j) {
            if (!is_integer((*diff)[j]) || (*diff)[j] < 0) {
                ok = false;
                break;
            }
            dv[j] = (*diff)[j].get_num().get_si();
        }
        if (!ok) continue;
        if (sum(dv) > depth)
            throw window_too_shallow("candidate factor at drop height " + std::to_string(sum(dv)) +
                                     " beyond window depth " + std::to_string(depth));
        candidates.emplace(dv, mu);
    }

    std::vector<std::pair<IVec, Weight>> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        long ha = sum(a.first), hb = sum(b.first);
        if (ha != hb) return ha < hb;
        return a.first < b.first;
    });

    std::map<IVec, long> residual;
    for (const auto& [drop, m] : verma_char(rs, lambda, depth).mult) residual[drop] = m;

    std::vector<JHFactor> factors;
    for (const auto& [delta, mu] : ordered) {
        long m = residual.count(delta) ? residual[delta] : 0;
        if (m < 0) throw window_too_shallow("negative residual multiplicity; window too shallow");
        if (m == 0) continue;
        VermaWindow wmu(rs, cb, mu, depth - sum(delta));
        for (const IVec& drop : drops_up_to(rs.rank(), depth - sum(delta))) {
            long d = wmu.simple_dim(drop);
            if (d != 0) residual[delta + drop] -= m * d;
        }
        factors.push_back(JHFactor{mu, delta, m});
    }
    for (const auto& [drop, v] : residual)
        if (v != 0)
            throw window_too_shallow("nonzero boundary residual at a window point; result undetermined");
    return factors;
}

}  // namespace liekit
