#pragma once

// Univariate polynomials and rational functions in one variable (the
// dynamical parameter w) over a coefficient field, normally the exact
// rational functions of q.  Canonical form: numerator and denominator
// coprime, denominator monic.  Keeping q-content inside the coefficient
// field means gcds here are plain Euclid over a field.

#include <string>
#include <vector>

#include "qtwist/errors.hpp"

namespace qtwist {

template <typename F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(F c) {
        if (!ring_is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }
    static Poly monomial(int deg, F c) {
        Poly p;
        if (ring_is_zero(c)) return p;
        p.c_.assign(static_cast<size_t>(deg) + 1, zero_like(c));
        p.c_.back() = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const F& leading() const {
        if (c_.empty()) throw DivisionByZero("Poly::leading: zero polynomial");
        return c_.back();
    }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return c_.empty() ? F{} : zero_like(c_[0]);
        return c_[static_cast<size_t>(k)];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.c_.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                r.c_.push_back(a.c_[i]);
            else
                r.c_.push_back(b.c_[i]);
        }
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    Poly scaled(const F& s) const {
        Poly r(*this);
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    // remainder of *this by b (field coefficients)
    friend Poly poly_rem(Poly a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("poly_rem: zero divisor");
        F linv = ring_invert(b.leading());
        while (!a.is_zero() && a.degree() >= b.degree()) {
            F q = a.leading() * linv;
            int shift = a.degree() - b.degree();
            for (int i = 0; i <= b.degree(); ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                a.c_[idx] = a.c_[idx] - q * b.c_[static_cast<size_t>(i)];
            }
            a.trim();
        }
        return a;
    }
    friend Poly poly_gcd_field(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = poly_rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.scaled(ring_invert(a.leading()));  // monic
    }
    // exact quotient; remainder must vanish
    friend Poly poly_divexact(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("poly_divexact: zero divisor");
        if (a.is_zero()) return Poly();
        if (a.degree() < b.degree()) throw DivisionByZero("poly_divexact: inexact division");
        Poly rem = a, q;
        q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, zero_like(a.c_[0]));
        F linv = ring_invert(b.leading());
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            F qc = rem.leading() * linv;
            int shift = rem.degree() - b.degree();
            q.c_[static_cast<size_t>(shift)] = qc;
            for (int i = 0; i <= b.degree(); ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                rem.c_[idx] = rem.c_[idx] - qc * b.c_[static_cast<size_t>(i)];
            }
            rem.trim();
        }
        if (!rem.is_zero()) throw DivisionByZero("poly_divexact: inexact division");
        q.trim();
        return q;
    }

    // w -> c * w
    Poly substitute_scale(const F& c) const {
        Poly r(*this);
        if (r.c_.empty()) return r;
        F p = one_like(c);
        for (size_t i = 1; i < r.c_.size(); ++i) {
            p = p * c;
            r.c_[i] = r.c_[i] * p;
        }
        r.trim();
        return r;
    }

    F eval(const F& x) const {
        if (c_.empty()) return F{};
        F acc = c_.back();
        for (size_t i = c_.size(); i-- > 1;) acc = acc * x + c_[i - 1];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
};

template <typename F>
class RatFun {
  public:
    RatFun() : num_(), den_(Poly<F>::monomial(0, F(1))) {}
    explicit RatFun(F c) : num_(Poly<F>(std::move(c))), den_(Poly<F>::monomial(0, F(1))) {}
    RatFun(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static RatFun variable() { return RatFun(Poly<F>::monomial(1, F(1)), Poly<F>::monomial(0, F(1))); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFun inverse() const {
        if (num_.is_zero()) throw DivisionByZero("RatFun::inverse: zero");
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    RatFun substitute_scale(const F& c) const {
        return RatFun(num_.substitute_scale(c), den_.substitute_scale(c));
    }

    // value at w = x; denominator must not vanish there
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (ring_is_zero(d)) throw PoleAtPoint("RatFun::eval: denominator vanishes");
        return num_.eval(x) * ring_invert(d);
    }

    // Taylor coefficients at w = 0 through order n; needs den(0) != 0
    std::vector<F> series_coeffs(int n) const {
        F d0 = den_.coeff(0);
        if (ring_is_zero(d0)) throw PoleAtPoint("RatFun::series_coeffs: pole at w = 0");
        F d0inv = ring_invert(d0);
        std::vector<F> c(static_cast<size_t>(n) + 1, F{});
        for (int k = 0; k <= n; ++k) {
            F acc = num_.coeff(k);
            for (int j = 0; j < k; ++j) acc = acc - den_.coeff(k - j) * c[static_cast<size_t>(j)];
            c[static_cast<size_t>(k)] = acc * d0inv;
        }
        return c;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  private:
    Poly<F> num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::monomial(0, F(1));
            return;
        }
        Poly<F> g = poly_gcd_field(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        F linv = ring_invert(den_.leading());
        num_ = num_.scaled(linv);
        den_ = den_.scaled(linv);
    }
};

template <typename F>
RatFun<F> zero_like(const RatFun<F>&) {
    return RatFun<F>();
}
template <typename F>
RatFun<F> one_like(const RatFun<F>&) {
    return RatFun<F>(F(1));
}
template <typename F>
bool ring_is_zero(const RatFun<F>& x) {
    return x.is_zero();
}
template <typename F>
RatFun<F> ring_invert(const RatFun<F>& x) {
    return x.inverse();
}

}  // namespace qtwist
