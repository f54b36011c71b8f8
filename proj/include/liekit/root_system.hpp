#pragma once

#include <liekit/matrix.hpp>

#include <algorithm>
#include <set>

namespace liekit {

// Cartan type: a simple family A..G at an admissible rank, or reductive
// GL_{rank+1} (family A with the gl flag, weights as integer tuples).
struct CartanType {
    char family = 'A';
    int rank = 1;
    bool gl = false;

    std::string name() const {
        if (gl) return "GL" + std::to_string(rank + 1);
        return std::string(1, family) + std::to_string(rank);
    }

    static CartanType parse(const std::string& s) {
        if (s.size() >= 3 && (s.substr(0, 2) == "GL" || s.substr(0, 2) == "gl")) {
            int n = std::stoi(s.substr(2));
            if (n < 2) throw invalid_input("GL dimension must be >= 2: " + s);
            return CartanType{'A', n - 1, true};
        }
        if (s.size() < 2) throw invalid_input("bad type string: " + s);
        char fam = std::toupper(s[0]);
        int rk = std::stoi(s.substr(1));
        return CartanType{fam, rk, false};
    }
};

enum class WeightBasis { Fundamental, GlTuple };

// Integral (or rational, for rho-shifted intermediates) weight.
struct Weight {
    QVec coords;
    WeightBasis basis = WeightBasis::Fundamental;

    bool operator==(const Weight& o) const { return basis == o.basis && coords == o.coords; }
    bool operator<(const Weight& o) const {
        if (basis != o.basis) return basis < o.basis;
        return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end(),
                                            [](const Rat& a, const Rat& b) { return a < b; });
    }

    bool is_integral() const {
        for (const Rat& c : coords)
            if (!is_integer(c)) return false;
        return true;
    }

    static Weight fundamental(QVec c) { return Weight{std::move(c), WeightBasis::Fundamental}; }
    static Weight gl(QVec c) { return Weight{std::move(c), WeightBasis::GlTuple}; }
    static Weight fundamental_int(const IVec& c) {
        QVec q(c.begin(), c.end());
        return Weight{q, WeightBasis::Fundamental};
    }
    static Weight gl_int(const IVec& c) {
        QVec q(c.begin(), c.end());
        return Weight{q, WeightBasis::GlTuple};
    }
};

enum class DominanceOrder { Greater, Less, Equal, Incomparable };

struct RootSystem {
    CartanType type;
    // cartan(i,j) = <alpha_j, alpha_i^vee>
    std::vector<IVec> cartan;
    // positive roots in simple-root coordinates, ordered by (height, lex);
    // this ordering is the PBW ordering used everywhere downstream.
    std::vector<IVec> positive;
    std::map<IVec, int> index_of;
    // d[i] = (alpha_i, alpha_i)/2, long roots normalized to squared length 2
    QVec d;

    int rank() const { return type.rank; }
    size_t num_positive() const { return positive.size(); }

    const IVec& root(int i) const { return positive[i]; }

    int index(const IVec& beta) const {
        auto it = index_of.find(beta);
        return it == index_of.end() ? -1 : it->second;
    }
    bool is_positive_root(const IVec& beta) const { return index_of.count(beta) > 0; }
    bool is_root(const IVec& beta) const {
        if (is_positive_root(beta)) return true;
        IVec neg(beta.size());
        for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
        return is_positive_root(neg);
    }

    long height(const IVec& beta) const {
        if (!is_root(beta)) throw invalid_input("height: not a root");
        return sum(beta);
    }

    // <beta, alpha_i^vee> for beta in simple-root coordinates
    long pairing_with_simple_coroot(const IVec& beta, int i) const {
        long s = 0;
        for (int j = 0; j < rank(); ++j) s += beta[j] * cartan[i][j];
        return s;
    }

    Rat inner(const IVec& a, const IVec& b) const {
        // (alpha_i, alpha_j) = d_i * cartan(i,j)
        Rat s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank(); ++j)
                if (b[j] != 0) s += Rat(a[i]) * Rat(b[j]) * d[i] * cartan[i][j];
        }
        return s;
    }

    // Coroot of beta in the simple-coroot basis; entries are integers.
    IVec coroot(const IVec& beta) const {
        Rat db = inner(beta, beta) / 2;
        IVec c(rank());
        for (int i = 0; i < rank(); ++i) {
            Rat x = Rat(beta[i]) * d[i] / db;
            if (!is_integer(x)) throw internal_error("non-integral coroot coordinate");
            c[i] = static_cast<long>(x.get_num().get_si());
        }
        return c;
    }

    void check_weight(const Weight& w) const {
        if (type.gl) {
            if (w.basis != WeightBasis::GlTuple || w.coords.size() != size_t(rank() + 1))
                throw basis_mismatch("expected gl tuple of length " + std::to_string(rank() + 1));
        } else {
            if (w.basis != WeightBasis::Fundamental || w.coords.size() != size_t(rank()))
                throw basis_mismatch("expected fundamental coordinates of length " + std::to_string(rank()));
        }
    }

    // <lambda, beta^vee>; for gl tuples and beta = eps_a - eps_b this is
    // lambda_a - lambda_b.
    Rat coroot_pairing(const Weight& w, const IVec& beta) const {
        check_weight(w);
        if (type.gl) {
            auto [a, b] = gl_root_support(beta);
            return w.coords[a] - w.coords[b];
        }
        IVec cv = coroot(beta);
        Rat s = 0;
        for (int i = 0; i < rank(); ++i)
            if (cv[i] != 0) s += Rat(cv[i]) * w.coords[i];
        return s;
    }

    Rat coroot_pairing_simple(const Weight& w, int i) const {
        check_weight(w);
        if (type.gl) return w.coords[i] - w.coords[i + 1];
        return w.coords[i];
    }

    // For type A/GL: beta = eps_a - eps_b.
    std::pair<int, int> gl_root_support(const IVec& beta) const {
        int a = -1, b = -1;
        // beta = sum_j beta_j (eps_{j} - eps_{j+1}): coefficient of eps_k is
        // beta_k - beta_{k-1}
        long prev = 0;
        for (int k = 0; k <= rank(); ++k) {
            long cur = (k < rank()) ? beta[k] : 0;
            long coef = cur - prev;
            if (coef == 1 && a < 0)
                a = k;
            else if (coef == -1 && b < 0)
                b = k;
            else if (coef != 0)
                throw invalid_input("not a type-A root");
            prev = cur;
        }
        if (a < 0 || b < 0) throw invalid_input("not a type-A root");
        return {a, b};
    }

    // rho: fundamental (1,...,1); gl (0,-1,...,-d) so that the GL dot-action
    // closed form holds on the nose.
    Weight rho() const {
        if (type.gl) {
            QVec c(rank() + 1);
            for (int i = 0; i <= rank(); ++i) c[i] = -i;
            return Weight::gl(std::move(c));
        }
        return Weight::fundamental(QVec(rank(), Rat(1)));
    }

    Weight zero_weight() const {
        return type.gl ? Weight::gl(QVec(rank() + 1, Rat(0))) : Weight::fundamental(QVec(rank(), Rat(0)));
    }

    // lambda - mu for a drop mu in simple-root coordinates.
    Weight sub_drop(const Weight& w, const IVec& mu) const {
        check_weight(w);
        Weight r = w;
        if (type.gl) {
            for (int j = 0; j < rank(); ++j) {
                r.coords[j] -= mu[j];
                r.coords[j + 1] += mu[j];
            }
        } else {
            for (int k = 0; k < rank(); ++k)
                for (int j = 0; j < rank(); ++j) r.coords[k] -= Rat(mu[j]) * cartan[k][j];
        }
        return r;
    }

    // Difference of two weights as a rational simple-root combination;
    // nullopt when the difference is not in the root space (gl: sum != 0).
    std::optional<QVec> root_coords_of_difference(const Weight& a, const Weight& b) const {
        check_weight(a);
        check_weight(b);
        QVec diff = a.coords - b.coords;
        if (type.gl) {
            Rat tot = 0;
            for (const Rat& x : diff) tot += x;
            if (tot != 0) return std::nullopt;
            QVec c(rank());
            Rat acc = 0;
            for (int j = 0; j < rank(); ++j) {
                acc += diff[j];
                c[j] = acc;
            }
            return c;
        }
        // solve cartan^T? : diff_k = sum_j c_j cartan(k,j)
        QMat m(rank(), rank());
        for (int k = 0; k < rank(); ++k)
            for (int j = 0; j < rank(); ++j) m(k, j) = cartan[k][j];
        auto sol = linalg::solve(m, diff);
        if (!sol) throw internal_error("cartan matrix not invertible");
        return *sol;
    }

    DominanceOrder dominance_compare(const Weight& a, const Weight& b) const {
        auto c = root_coords_of_difference(a, b);
        if (!c) return DominanceOrder::Incomparable;
        bool nonneg = true, nonpos = true, zero = true;
        for (const Rat& x : *c) {
            if (x > 0) nonpos = false;
            if (x < 0) nonneg = false;
            if (x != 0) zero = false;
        }
        if (zero) return DominanceOrder::Equal;
        if (nonneg) return DominanceOrder::Greater;
        if (nonpos) return DominanceOrder::Less;
        return DominanceOrder::Incomparable;
    }

    bool is_dominant(const Weight& w) const {
        for (int i = 0; i < rank(); ++i)
            if (coroot_pairing_simple(w, i) < 0) return false;
        return true;
    }

    bool is_levi_dominant(const Weight& w, const std::set<int>& I) const {
        for (int i : I)
            if (coroot_pairing_simple(w, i) < 0) return false;
        return true;
    }
};

namespace detail {

inline std::vector<IVec> cartan_matrix_for(const CartanType& t) {
    const int n = t.rank;
    auto bad = [&] { return invalid_input("invalid rank for family " + std::string(1, t.family)); };
    std::vector<IVec> c(n, IVec(n, 0));
    auto chain = [&](int upto) {
        for (int i = 0; i < upto; ++i) c[i][i] = 2;
        for (int i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    };
    switch (t.family) {
        case 'A':
            if (n < 1) throw bad();
            chain(n);
            break;
        case 'B':  // alpha_n short
            if (n < 2) throw bad();
            chain(n);
            c[n - 1][n - 2] = -2;
            break;
        case 'C':  // alpha_n long
            if (n < 2) throw bad();
            chain(n);
            c[n - 2][n - 1] = -2;
            break;
        case 'D':
            if (n < 3) throw bad();
            chain(n - 1);
            c[n - 1][n - 1] = 2;
            c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
            break;
        case 'E': {
            if (n < 6 || n > 8) throw bad();
            // Bourbaki: node 2 attached to node 4 of the A-chain 1-3-4-5-6(-7-8)
            chain(n);
            c[0][1] = c[1][0] = 0;
            c[1][2] = c[2][1] = 0;
            c[0][2] = c[2][0] = -1;
            c[1][3] = c[3][1] = -1;
            break;
        }
        case 'F':
            if (n != 4) throw bad();
            chain(4);
            c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2 (alpha_3 short)
            break;
        case 'G':
            if (n != 2) throw bad();
            // alpha_1 short, alpha_2 long (the appendix's alpha, beta)
            c[0][0] = c[1][1] = 2;
            c[0][1] = -3;
            c[1][0] = -1;
            break;
        default:
            throw invalid_input("unknown family: " + std::string(1, t.family));
    }
    return c;
}

}  // namespace detail

inline RootSystem build_root_system(const CartanType& t) {
    if (t.gl && t.family != 'A') throw invalid_input("gl convention only with family A");
    RootSystem rs;
    rs.type = t;
    rs.cartan = detail::cartan_matrix_for(t);
    const int n = t.rank;

    // symmetrize cartan to get d_i, normalized so long roots have (b,b)=2
    rs.d.assign(n, Rat(0));
    {
        std::vector<int> order;
        std::vector<bool> seen(n, false);
        for (int start = 0; start < n; ++start) {
            if (seen[start]) continue;
            rs.d[start] = 1;
            seen[start] = true;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < n; ++j) {
                    if (seen[j] || rs.cartan[i][j] == 0) continue;
                    // d_i c_ij = d_j c_ji
                    rs.d[j] = rs.d[i] * rs.cartan[i][j] / rs.cartan[j][i];
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        Rat dmax = rs.d[0];
        for (const Rat& x : rs.d)
            if (x > dmax) dmax = x;
        for (Rat& x : rs.d) x /= dmax;
    }

    // closure: beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0,
    // q the length of the alpha_i-string below beta
    std::set<IVec> roots;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        roots.insert(e);
    }
    std::vector<IVec> frontier(roots.begin(), roots.end());
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                IVec e(n, 0);
                e[i] = 1;
                long q = 0;
                IVec down = beta - e;
                while (all_nonneg(down) && roots.count(down)) {
                    ++q;
                    down = down - e;
                }
                long pr = 0;
                for (int j = 0; j < n; ++j) pr += beta[j] * rs.cartan[i][j];
                if (q - pr > 0) {
                    IVec up = beta + e;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    rs.positive.assign(roots.begin(), roots.end());
    std::stable_sort(rs.positive.begin(), rs.positive.end(), [](const IVec& a, const IVec& b) {
        long ha = sum(a), hb = sum(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (size_t i = 0; i < rs.positive.size(); ++i) rs.index_of[rs.positive[i]] = static_cast<int>(i);
    return rs;
}

inline RootSystem build_root_system(const std::string& name) { return build_root_system(CartanType::parse(name)); }

}  // namespace liekit
