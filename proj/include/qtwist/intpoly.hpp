#pragma once

// Dense univariate polynomials over arbitrary-precision integers.
// Invariant: coefficient vector has no trailing zeros; empty vector is the
// zero polynomial.  gcd() is exact: a modular (CRT + trial-division verify)
// fast path, with a primitive pseudo-remainder sequence as fallback.  The
// modular result is accepted only after exact division into both inputs, so
// unlucky primes cannot produce a wrong answer.

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtwist/errors.hpp"

namespace qtwist {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(long v) {
        if (v != 0) c_.push_back(BigInt(v));
    }
    explicit IntPoly(BigInt v) {
        if (v != 0) c_.push_back(std::move(v));
    }
    explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

    static IntPoly monomial(int deg, BigInt coeff = BigInt(1)) {
        if (coeff == 0) return IntPoly();
        std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
        c.back() = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& leading() const { return c_.back(); }
    const BigInt& operator[](size_t i) const { return c_[i]; }
    size_t size() const { return c_.size(); }

    // number of leading v-factors (valuation); 0 for the zero polynomial
    int valuation() const {
        if (c_.empty()) return 0;
        int v = 0;
        while (c_[static_cast<size_t>(v)] == 0) ++v;
        return v;
    }

    IntPoly shifted_down(int k) const {  // divide by v^k, caller guarantees exactness
        std::vector<BigInt> c(c_.begin() + k, c_.end());
        return IntPoly(std::move(c));
    }
    IntPoly shifted_up(int k) const {  // multiply by v^k
        if (is_zero()) return IntPoly();
        std::vector<BigInt> c(static_cast<size_t>(k), BigInt(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return IntPoly(std::move(c));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const {
        std::vector<BigInt> c(c_);
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly scaled(const BigInt& k) const {
        if (k == 0) return IntPoly();
        std::vector<BigInt> c(c_);
        for (auto& x : c) x *= k;
        return IntPoly(std::move(c));
    }

    BigInt content() const {  // nonnegative gcd of coefficients, 0 for zero poly
        BigInt g = 0;
        for (const auto& x : c_) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    // exact division by a nonzero divisor; throws if not exact
    friend IntPoly divexact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw DivisionByZero("divexact: zero divisor");
        if (a.is_zero()) return IntPoly();
        if (a.c_.size() < b.c_.size()) throw Error("divexact: not divisible (degree)");
        std::vector<BigInt> r(a.c_);
        std::vector<BigInt> qv(a.c_.size() - b.c_.size() + 1, BigInt(0));
        const BigInt& lb = b.leading();
        for (int i = static_cast<int>(qv.size()) - 1; i >= 0; --i) {
            BigInt& top = r[static_cast<size_t>(i) + b.c_.size() - 1];
            if (top == 0) continue;
            if (top % lb != 0) throw Error("divexact: not divisible (leading)");
            BigInt qc = top / lb;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[static_cast<size_t>(i) + j] -= qc * b.c_[j];
            qv[static_cast<size_t>(i)] = std::move(qc);
        }
        for (const auto& x : r)
            if (x != 0) throw Error("divexact: nonzero remainder");
        return IntPoly(std::move(qv));
    }

    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + static_cast<double>(c_[i]);
        return acc;
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

  private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

namespace detail {

// --- word-size prime field helpers (p < 2^31, products fit in uint64) ---

inline bool small_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline const std::vector<uint64_t>& prime_pool(size_t need) {
    static std::vector<uint64_t> primes;
    static uint64_t next_candidate = (1ull << 31) - 1;
    while (primes.size() < need) {
        while (!small_prime(next_candidate)) next_candidate -= 2;
        primes.push_back(next_candidate);
        next_candidate -= 2;
    }
    return primes;
}

inline uint64_t mod_of(const BigInt& x, uint64_t p) {
    BigInt r = x % static_cast<long long>(p);
    long long v = r.convert_to<long long>();
    if (v < 0) v += static_cast<long long>(p);
    return static_cast<uint64_t>(v);
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<uint64_t>;  // same trailing-zero-free convention

inline ModPoly reduce_mod(const IntPoly& a, uint64_t p) {
    ModPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_of(a[i], p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// monic gcd over F_p by plain Euclid
inline ModPoly gcd_mod(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        // a mod b
        uint64_t inv_lb = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t q = mulmod(a.back(), inv_lb, p);
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t sub = mulmod(q, b[j], p);
                a[off + j] = (a[off + j] + p - sub) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv_la = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv_la, p);
    }
    return a;
}

inline bool divides_exactly(const IntPoly& d, const IntPoly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero() || a.degree() < d.degree()) return false;
    try {
        (void)divexact(a, d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// primitive part with positive leading coefficient
inline IntPoly primitive(const IntPoly& a) {
    if (a.is_zero()) return a;
    BigInt c = a.content();
    if (a.leading() < 0) c = -c;
    if (c == 1) return a;
    return divexact(a, IntPoly(c));
}

// pseudo-remainder: lc(b)^(dega-degb+1) * a  mod  b
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int d = a.degree() - b.degree();
    IntPoly lb(b.leading());
    for (int i = 0; i <= d; ++i) a = a * lb;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        BigInt qc = a.leading() / b.leading();
        IntPoly t = IntPoly::monomial(a.degree() - b.degree(), qc) * b;
        a = a - t;
    }
    return a;
}

inline IntPoly gcd_primitive_prs(IntPoly a, IntPoly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    return primitive(a);
}

}  // namespace detail

// gcd over Z[v], nonnegative content convention, positive leading coefficient
inline IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
    using namespace detail;
    if (a0.is_zero()) return b0.is_zero() ? IntPoly() : primitive(b0).scaled(b0.content());
    if (b0.is_zero()) return primitive(a0).scaled(a0.content());
    BigInt ca = a0.content(), cb = b0.content();
    BigInt cg = boost::multiprecision::gcd(ca, cb);
    IntPoly a = divexact(a0, IntPoly(ca));
    IntPoly b = divexact(b0, IntPoly(cb));
    if (a.leading() < 0) a = -a;
    if (b.leading() < 0) b = -b;
    if (a.degree() == 0 || b.degree() == 0) return IntPoly(cg);

    BigInt lead_g = boost::multiprecision::gcd(a.leading(), b.leading());

    // modular pass: CRT candidates verified by exact division
    int cur_deg = -1;
    BigInt modulus = 0;
    std::vector<BigInt> cand;  // symmetric-range lifted coefficients
    size_t prime_idx = 0;
    bool stable_once = false;
    while (prime_idx < 50) {
        uint64_t p = prime_pool(prime_idx + 1)[prime_idx];
        ++prime_idx;
        if (mod_of(lead_g, p) == 0) continue;
        ModPoly gp = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
        int dp = static_cast<int>(gp.size()) - 1;
        if (dp == 0) return IntPoly(cg);  // coprime primitive parts
        if (cur_deg != -1 && dp > cur_deg) continue;  // unlucky prime
        uint64_t scale = mod_of(lead_g, p);
        std::vector<BigInt> lifted(gp.size());
        for (size_t i = 0; i < gp.size(); ++i) {
            uint64_t v = mulmod(gp[i], scale, p);
            BigInt sv(v);
            if (sv * 2 > BigInt(p)) sv -= p;
            lifted[i] = sv;
        }
        if (cur_deg == -1 || dp < cur_deg) {
            cur_deg = dp;
            modulus = p;
            cand = std::move(lifted);
            stable_once = false;
            continue;
        }
        // CRT merge at equal degree
        BigInt new_mod = modulus * p;
        uint64_t m_inv = invmod(mod_of(modulus, p), p);
        bool changed = false;
        for (size_t i = 0; i < cand.size(); ++i) {
            uint64_t rp = mod_of(lifted[i], p);
            uint64_t rc = mod_of(cand[i], p);
            uint64_t t = mulmod((rp + p - rc) % p, m_inv, p);
            BigInt x = cand[i] + modulus * BigInt(t);
            if (x * 2 > new_mod) x -= new_mod;
            if (x * 2 <= -new_mod) x += new_mod;
            if (x != cand[i]) changed = true;
            cand[i] = std::move(x);
        }
        modulus = new_mod;
        if (!changed) {
            if (stable_once) continue;
            stable_once = true;
            IntPoly c = primitive(IntPoly(std::vector<BigInt>(cand)));
            if (divides_exactly(c, a) && divides_exactly(c, b)) return c.scaled(cg);
        } else {
            stable_once = false;
        }
    }
    return gcd_primitive_prs(a, b).scaled(cg);
}

}  // namespace qtwist
