#pragma once

// Exact arithmetic used everywhere: unbounded integers and rationals backed by
// GMP. No floating point appears anywhere in the library.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclecone {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using QVec = std::vector<Rat>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a request exceeds a configured size cap (ambient dimension).
struct resource_error : error {
    using error::error;
};

// Raised by the expression parser; offset is the byte position of the fault.
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : error(what), offset(off) {}
};

// The two-argument Rat constructor does not normalize negative denominators,
// so every signed construction goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    return Rat(num) / Rat(den);
}

inline std::string rat_str(const Rat& q) { return q.str(); }

inline bool rat_is_integer(const Rat& q) { return denominator(q) == 1; }

// Exact conversion; throws if q has a nontrivial denominator.
inline Int rat_to_int(const Rat& q) {
    if (!rat_is_integer(q)) throw error("expected integer value, got " + q.str());
    return numerator(q);
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw error("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// Scales a rational vector to a primitive integer vector (entries coprime).
// The direction is preserved: no sign flip is applied.
inline std::vector<Int> primitive_vector(const QVec& v) {
    Int scale = 1;
    for (const Rat& x : v) scale = lcm(scale, denominator(x));
    std::vector<Int> w;
    w.reserve(v.size());
    Int g = 0;
    for (const Rat& x : v) {
        Int e = numerator(x) * (scale / denominator(x));
        w.push_back(e);
        g = gcd(g, e);
    }
    if (g > 1)
        for (Int& e : w) e /= g;
    return w;
}

inline QVec primitive_qvec(const QVec& v) {
    std::vector<Int> w = primitive_vector(v);
    QVec q;
    q.reserve(w.size());
    for (const Int& e : w) q.emplace_back(e);
    return q;
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace cyclecone
