#pragma once

#include <liekit/common.hpp>

#include <algorithm>
#include <functional>

namespace liekit {

// Element of the free associative algebra over a finite alphabet: an exact
// rational combination of words.  Letter 0 plays the role of x in the
// commutator identities; letters 1..n are the z_i.
class FreeAlgebraElement {
public:
    using Word = std::vector<int>;

    FreeAlgebraElement() = default;
    static FreeAlgebraElement letter(int a) {
        FreeAlgebraElement e;
        e.terms_[{a}] = 1;
        return e;
    }
    static FreeAlgebraElement one() {
        FreeAlgebraElement e;
        e.terms_[{}] = 1;
        return e;
    }

    bool operator==(const FreeAlgebraElement& o) const { return terms_ == o.terms_; }

    FreeAlgebraElement& operator+=(const FreeAlgebraElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }

    FreeAlgebraElement operator*(const FreeAlgebraElement& o) const {
        FreeAlgebraElement r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                r.add(w, c1 * c2);
            }
        return r;
    }

    FreeAlgebraElement operator*(const Rat& c) const {
        FreeAlgebraElement r;
        for (const auto& [w, co] : terms_) r.add(w, co * c);
        return r;
    }

    FreeAlgebraElement operator-(const FreeAlgebraElement& o) const {
        FreeAlgebraElement r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, -c);
        return r;
    }

    FreeAlgebraElement pow(int k) const {
        FreeAlgebraElement r = one();
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

private:
    void add(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<Word, Rat> terms_;
};

inline FreeAlgebraElement commutator(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
    return a * b - b * a;
}

// [x^{(i)}, z]: iterated bracket, [x^{(0)}, z] = z.
inline FreeAlgebraElement iterated_bracket(const FreeAlgebraElement& x, const FreeAlgebraElement& z, int i) {
    FreeAlgebraElement r = z;
    for (int k = 0; k < i; ++k) r = commutator(x, r);
    return r;
}

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rat multinomial(long k, const std::vector<int>& parts) {
    Rat m(factorial(k));
    for (int p : parts) m /= Rat(factorial(p));
    return m;
}

// Both displayed expansions:
//   x^k z_1...z_n = sum multinomial * [x^{(i_1)},z_1]...[x^{(i_n)},z_n] x^{i_{n+1}}
//   [x^{(k)}, z_1...z_n] = sum multinomial * [x^{(i_1)},z_1]...[x^{(i_n)},z_n]
// verified by full expansion to canonical form.
inline bool commutator_expansion_check(int k, int n) {
    if (k > 4 || n > 3) throw bound_exceeded("commutator_expansion_check: free-algebra blowup bound");
    FreeAlgebraElement x = FreeAlgebraElement::letter(0);
    std::vector<FreeAlgebraElement> z;
    for (int i = 1; i <= n; ++i) z.push_back(FreeAlgebraElement::letter(i));

    FreeAlgebraElement zprod = FreeAlgebraElement::one();
    for (const auto& zi : z) zprod = zprod * zi;

    // first identity
    FreeAlgebraElement lhs1 = x.pow(k) * zprod;
    FreeAlgebraElement rhs1;
    std::vector<int> comp(n + 1, 0);
    std::function<void(int, int)> rec1 = [&](int pos, int left) {
        if (pos == n) {
            comp[n] = left;
            FreeAlgebraElement term = FreeAlgebraElement::one();
            for (int i = 0; i < n; ++i) term = term * iterated_bracket(x, z[i], comp[i]);
            term = term * x.pow(comp[n]);
            rhs1 += term * multinomial(k, comp);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            comp[pos] = v;
            rec1(pos + 1, left - v);
        }
        comp[pos] = 0;
    };
    rec1(0, k);
    if (!(lhs1 == rhs1)) return false;

    // bracket variant
    FreeAlgebraElement lhs2 = iterated_bracket(x, zprod, k);
    FreeAlgebraElement rhs2;
    std::vector<int> comp2(n, 0);
    std::function<void(int, int)> rec2 = [&](int pos, int left) {
        if (pos == n - 1) {
            comp2[n - 1] = left;
            FreeAlgebraElement term = FreeAlgebraElement::one();
            for (int i = 0; i < n; ++i) term = term * iterated_bracket(x, z[i], comp2[i]);
            rhs2 += term * multinomial(k, comp2);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            comp2[pos] = v;
            rec2(pos + 1, left - v);
        }
        comp2[pos] = 0;
    };
    if (n > 0)
        rec2(0, k);
    else
        rhs2 = k == 0 ? FreeAlgebraElement::one() : FreeAlgebraElement();
    return lhs2 == rhs2;
}

// Univariate polynomials over Q, for identities symbolic in the highest
// weight.
using Poly = std::vector<Rat>;  // coefficient of m^i at index i

inline Poly poly_const(const Rat& c) { return c == 0 ? Poly{} : Poly{c}; }

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// x^n y^n v+ inside the sl2 Verma module with symbolic highest weight m,
// computed by genuine normal-ordering (x y^a = y x y^{a-1} + h y^{a-1});
// returns the polynomial coefficient of v+.
inline Poly sl2_x_power_y_power(int n) {
    // state: coefficient polynomials of y^a v+, index a
    std::vector<Poly> v(n + 1);
    v[n] = poly_const(1);
    for (int step = 0; step < n; ++step) {
        std::vector<Poly> next(n + 1);
        std::function<std::vector<Poly>(int)> act_on_pow = [&](int a) {
            // x . y^a v+ as coefficients over y^b v+
            std::vector<Poly> out(n + 1);
            if (a == 0) return out;
            // h y^{a-1} v+ = (m - 2(a-1)) y^{a-1} v+
            Poly lin{Rat(-2 * (a - 1)), Rat(1)};
            out[a - 1] = poly_add(out[a - 1], lin);
            std::vector<Poly> inner = act_on_pow(a - 1);
            for (int b = 0; b + 1 <= n; ++b)
                if (!inner[b].empty()) out[b + 1] = poly_add(out[b + 1], inner[b]);
            return out;
        };
        for (int a = 0; a <= n; ++a) {
            if (v[a].empty()) continue;
            std::vector<Poly> acted = act_on_pow(a);
            for (int b = 0; b <= n; ++b)
                if (!acted[b].empty()) next[b] = poly_add(next[b], poly_mul(v[a], acted[b]));
        }
        v = std::move(next);
    }
    return v[0];
}

// n! * prod_{i=0}^{n-1} (m - i), the closed form the engine must reproduce.
inline Poly sl2_product_closed_form(int n) {
    Poly p = poly_const(Rat(factorial(n)));
    for (int i = 0; i < n; ++i) p = poly_mul(p, Poly{Rat(-i), Rat(1)});
    return p;
}

inline bool sl2_product_check(int n) { return sl2_x_power_y_power(n) == sl2_product_closed_form(n); }

}  // namespace liekit
