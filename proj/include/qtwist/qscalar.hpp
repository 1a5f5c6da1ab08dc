#pragma once

// Exact scalar field for the deformation parameter: rational functions in q
// with integer coefficients.  Internally the variable is v with q = v^2, so
// half-integer powers of q (needed by R-matrix normalizations) stay exact.
// Representation: value = v^shift * num(v) / den(v), canonicalized so that
// num and den have nonzero constant terms, gcd(num, den) = 1, and den has a
// positive leading coefficient.  Zero is (shift=0, num=0, den=1).

#include <complex>
#include <string>

#include "qtwist/errors.hpp"
#include "qtwist/intpoly.hpp"

namespace qtwist {

class QScalar {
  public:
    QScalar() : num_(), den_(1) {}
    QScalar(long v) : num_(v), den_(1) {}  // NOLINT: implicit integer embedding
    explicit QScalar(BigInt v) : num_(std::move(v)), den_(1) {}
    QScalar(int shift, IntPoly num, IntPoly den) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static QScalar v_pow(int k) { return QScalar(k, IntPoly(1), IntPoly(1)); }  // q^(k/2)
    static QScalar q_pow(int k) { return v_pow(2 * k); }
    static QScalar q() { return q_pow(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    int shift() const { return shift_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int s = std::min(a.shift_, b.shift_);
        IntPoly na = a.num_.shifted_up(a.shift_ - s);
        IntPoly nb = b.num_.shifted_up(b.shift_ - s);
        if (a.den_ == b.den_) return QScalar(s, na + nb, a.den_);
        return QScalar(s, na * b.den_ + nb * a.den_, a.den_ * b.den_);
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
    QScalar operator-() const {
        QScalar r(*this);
        r.num_ = -r.num_;
        r.normalize_sign();
        return r;
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        if (a.is_zero() || b.is_zero()) return QScalar();
        QScalar r;
        r.shift_ = a.shift_ + b.shift_;
        IntPoly g1 = poly_gcd(a.num_, b.den_);
        IntPoly g2 = poly_gcd(b.num_, a.den_);
        r.num_ = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) * (g2.is_one() ? b.num_ : divexact(b.num_, g2));
        r.den_ = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) * (g1.is_one() ? b.den_ : divexact(b.den_, g1));
        r.normalize_sign();
        return r;
    }
    QScalar invert() const {
        if (is_zero()) throw DivisionByZero("QScalar::invert: zero scalar");
        QScalar r;
        r.shift_ = -shift_;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_sign();
        return r;
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.invert(); }

    QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
    QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
    QScalar& operator*=(const QScalar& b) { return *this = *this * b; }

    QScalar pow(int n) const {
        if (n < 0) return invert().pow(-n);
        QScalar r(1), base(*this);
        while (n) {
            if (n & 1) r = r * base;
            if (n >>= 1) base = base * base;
        }
        return r;
    }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // evaluate at a complex point q0; v = principal sqrt(q0)
    std::complex<double> eval_q(const std::complex<double>& q0) const {
        std::complex<double> v0 = std::sqrt(q0);
        std::complex<double> dv = den_.eval(v0);
        if (std::abs(dv) <= 1e-12)
            throw PoleAtPoint("QScalar::eval_q: denominator vanishes at evaluation point");
        std::complex<double> nv = num_.eval(v0);
        std::complex<double> sv(1.0, 0.0);
        if (shift_ != 0) {
            if (std::abs(v0) <= 1e-300 && shift_ < 0)
                throw PoleAtPoint("QScalar::eval_q: negative power at q = 0");
            sv = std::pow(v0, shift_);
        }
        return sv * nv / dv;
    }

    // canonical text form "P(q)" or "(P(q))/(Q(q))", half powers as q^(k/2)
    std::string to_string() const {
        if (is_zero()) return "0";
        IntPoly p = shift_ >= 0 ? num_.shifted_up(shift_) : num_;
        IntPoly qd = shift_ < 0 ? den_.shifted_up(-shift_) : den_;
        std::string ps = render_poly(p);
        if (qd.is_one()) return ps;
        return "(" + ps + ")/(" + render_poly(qd) + ")";
    }

  private:
    int shift_ = 0;
    IntPoly num_, den_;

    void normalize_sign() {
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("QScalar: zero denominator");
        if (num_.is_zero()) {
            shift_ = 0;
            den_ = IntPoly(1);
            return;
        }
        int k = num_.valuation(), j = den_.valuation();
        if (k) num_ = num_.shifted_down(k);
        if (j) den_ = den_.shifted_down(j);
        shift_ += k - j;
        IntPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        normalize_sign();
    }

    static std::string render_poly(const IntPoly& p) {
        std::string out;
        for (int e = p.degree(); e >= 0; --e) {
            const BigInt& c = p[static_cast<size_t>(e)];
            if (c == 0) continue;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono;
            if (e == 0) {
                mono = a.str();
            } else {
                std::string var = e == 2 ? "q" : (e % 2 == 0 ? "q^" + std::to_string(e / 2) : "q^(" + std::to_string(e) + "/2)");
                mono = (a == 1) ? var : a.str() + "*" + var;
            }
            out += mono;
        }
        return out.empty() ? "0" : out;
    }
};

inline QScalar zero_like(const QScalar&) { return QScalar(); }
inline QScalar one_like(const QScalar&) { return QScalar(1); }
inline bool ring_is_zero(const QScalar& x) { return x.is_zero(); }
inline QScalar ring_invert(const QScalar& x) { return x.invert(); }

}  // namespace qtwist
