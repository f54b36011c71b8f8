#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

using Rat = mpq_class;
using Int = mpz_class;

// Error taxonomy used across the library.  The CLI maps `domain_error`
// subclasses to exit code 1 with a structured error object.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline domain_error invalid_input(const std::string& msg) { return domain_error("invalid_input", msg); }
inline domain_error basis_mismatch(const std::string& msg) { return domain_error("basis_mismatch", msg); }
inline domain_error bound_exceeded(const std::string& msg) { return domain_error("bound_exceeded", msg); }
inline domain_error window_too_shallow(const std::string& msg) { return domain_error("window_too_shallow", msg); }
inline domain_error internal_error(const std::string& msg) { return domain_error("internal", msg); }

// Integer vectors index the simple-root lattice (root coordinates, weight
// drops).  Contents are small; arithmetic on them never overflows long.
using IVec = std::vector<long>;

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec operator*(long c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline long sum(const IVec& a) {
    long s = 0;
    for (long x : a) s += x;
    return s;
}

inline bool all_nonneg(const IVec& a) {
    for (long x : a)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const IVec& a) {
    for (long x : a)
        if (x != 0) return false;
    return true;
}

using QVec = std::vector<Rat>;

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero(const QVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// p-adic valuation of a nonzero rational; val(0) = +infinity, represented
// by the caller checking for zero first.
inline long padic_val(const Rat& x, unsigned long p) {
    if (x == 0) throw invalid_input("padic_val of zero");
    long v = 0;
    Int num = x.get_num(), den = x.get_den();
    Int q, r;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), p);
        if (r != 0) break;
        num = q;
        ++v;
    }
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), p);
        if (r != 0) break;
        den = q;
        --v;
    }
    return v;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw invalid_input("bad rational literal: " + s);
    x.canonicalize();
    return x;
}

}  // namespace liekit
