#pragma once

// Numeric q-series kernel over complex doubles: Pochhammer products with one
// and two bases, the multiplicative theta function, the q-gamma function, and
// the 2phi1 basic hypergeometric series with an a-posteriori tail bound.
// Truncation thresholds are pinned here; callers get either a value meeting
// them or a typed exception naming the violated guard.

#include <cmath>
#include <complex>
#include <string>

#include "qtwist/errors.hpp"

namespace qtwist {

using Cx = std::complex<double>;

inline constexpr double kSeriesEps = 1e-15;
inline constexpr int kSeriesMaxTerms = 40000;

inline void require_base(const Cx& q, const char* who) {
    double a = std::abs(q);
    if (!(a < 1.0)) throw DomainError(std::string(who) + ": base needs |q| < 1");
}

// finite product (a; q)_n
inline Cx qpoch(Cx a, Cx q, int n) {
    if (n < 0) throw DomainError("qpoch: negative length");
    Cx r = 1.0, aq = a;
    for (int k = 0; k < n; ++k) {
        r *= 1.0 - aq;
        aq *= q;
    }
    return r;
}

// infinite product (a; q)_inf; the dropped tail past |a q^K| = t contributes
// a relative error below 2t/(1-|q|) once t <= 1/2
inline Cx qpoch_inf(Cx a, Cx q) {
    require_base(q, "qpoch_inf");
    if (q == Cx(0.0)) return 1.0 - a;
    Cx r = 1.0, aq = a;
    double qa = std::abs(q);
    for (int k = 0; k < kSeriesMaxTerms; ++k) {
        double t = std::abs(aq);
        if (2.0 * t / (1.0 - qa) < kSeriesEps) return r;
        r *= 1.0 - aq;
        aq *= q;
    }
    throw NonConvergent("qpoch_inf: product did not stabilize");
}

// double-base product (a; b1, b2)_inf over both exponents; either base may be 0
inline Cx multipoch_inf(Cx a, Cx b1, Cx b2) {
    require_base(b1, "multipoch_inf");
    require_base(b2, "multipoch_inf");
    if (b2 == Cx(0.0)) return qpoch_inf(a, b1);
    if (b1 == Cx(0.0)) return qpoch_inf(a, b2);
    Cx r = 1.0, ai = a;
    double b2a = std::abs(b2), b1a = std::abs(b1);
    for (int i = 0; i < kSeriesMaxTerms; ++i) {
        // remaining layers i, i+1, ... contribute at most this much (log scale)
        double t = std::abs(ai);
        if (2.0 * t / ((1.0 - b1a) * (1.0 - b2a)) < kSeriesEps) return r;
        r *= qpoch_inf(ai, b1);
        ai *= b2;
    }
    throw NonConvergent("multipoch_inf: product did not stabilize");
}

// multiplicative theta: (z; p)_inf (p/z; p)_inf (p; p)_inf
inline Cx theta(Cx z, Cx p) {
    if (z == Cx(0.0)) throw ZeroArgument("theta: argument must be nonzero");
    require_base(p, "theta");
    if (p == Cx(0.0)) return 1.0 - z;
    return qpoch_inf(z, p) * qpoch_inf(p / z, p) * qpoch_inf(p, p);
}

// reciprocal q-gamma, entire in x: (q^x; q)_inf (1-q)^{x-1} / (q; q)_inf
inline Cx inv_gamma_q(Cx x, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("inv_gamma_q: base needs 0 < q < 1");
    Cx qx = std::exp(x * std::log(q));
    return qpoch_inf(qx, q) * std::pow(Cx(1.0 - q), x - 1.0) / qpoch_inf(q, q);
}

inline Cx gamma_q(Cx x, double q) {
    Cx g = inv_gamma_q(x, q);
    if (std::abs(g) < 1e-250) throw PoleAtNonpositive("gamma_q: pole at a nonpositive integer");
    return 1.0 / g;
}

struct SeriesValue {
    Cx value;
    int terms;
    double tail_bound;
};

// 2phi1(A, B; C; q, z) for |z| < 1; the returned tail bound certifies the
// truncation, via a geometric majorant once the term ratio settles below 1
inline SeriesValue phi21(Cx A, Cx B, Cx C, Cx q, Cx z, double eps = kSeriesEps,
                         int max_terms = kSeriesMaxTerms) {
    require_base(q, "phi21");
    double za = std::abs(z);
    if (!(za < 1.0)) throw NonConvergent("phi21: series argument needs |z| < 1");
    Cx term = 1.0, acc = 1.0, qn = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        Cx cden = 1.0 - C * qn;
        if (std::abs(cden) < 1e-13)
            throw PoleInC("phi21: lower parameter hits q^{-" + std::to_string(n) + "}");
        Cx qden = 1.0 - q * qn;
        term *= (1.0 - A * qn) * (1.0 - B * qn) / (qden * cden) * z;
        acc += term;
        qn *= q;
        double aq = std::abs(qn);
        double ratio = za * (1.0 + std::abs(A) * aq) * (1.0 + std::abs(B) * aq) /
                       ((1.0 - std::abs(q) * aq) * std::max(1e-13, 1.0 - std::abs(C) * aq));
        if (ratio < 1.0) {
            double tail = std::abs(term) * ratio / (1.0 - ratio);
            if (tail < eps * std::max(1.0, std::abs(acc)))
                return SeriesValue{acc, n + 1, tail};
        }
    }
    throw NonConvergent("phi21: series did not meet the tolerance");
}

// ratio of q-gamma values prod Gamma_q(num) / prod Gamma_q(den), computed
// through the entire reciprocal so zeros in the numerator positions survive
inline Cx gamma_ratio(std::initializer_list<Cx> num, std::initializer_list<Cx> den, double q) {
    Cx top = 1.0, bottom = 1.0;
    for (const Cx& x : den) top *= inv_gamma_q(x, q);
    for (const Cx& x : num) bottom *= inv_gamma_q(x, q);
    if (std::abs(bottom) < 1e-250) {
        if (std::abs(top) < 1e-250)
            throw DomainError("gamma_ratio: indeterminate pole over pole");
        return 0.0;  // a numerator gamma is at a pole: the ratio vanishes
    }
    return top / bottom;
}

struct ConnectionValue {
    Cx lhs;
    Cx rhs;
    double residual;
};

// three-term connection between the series at 1/z inside the unit disk and
// two series at q^{c-a-b+1} z; parameters are exponents of the base
inline ConnectionValue connection_value(Cx a, Cx b, Cx c, double q, Cx z) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("connection_value: base needs 0 < q < 1");
    if (!(std::abs(z) > 1.0)) throw DomainError("connection_value: needs |z| > 1");
    auto qp = [&](Cx e) { return std::exp(e * std::log(q)); };
    Cx zr = qp(c - a - b + 1.0) * z;
    if (!(std::abs(zr) < 1.0))
        throw DomainError("connection_value: image argument leaves the unit disk");
    Cx ab = a - b;
    double dist = std::abs(ab - std::round(ab.real()));
    if (ab.imag() == 0.0 && dist < 1e-8)
        throw DomainError("connection_value: upper parameters differ by an integer");

    Cx lhs = phi21(qp(a), qp(b), qp(c), q, 1.0 / z).value;

    auto half = [&](Cx u, Cx v) {
        Cx coef = gamma_ratio({c, v - u}, {v, c - u}, q);
        if (coef == Cx(0.0)) return Cx(0.0);
        Cx th = theta(qp(1.0 - u) * z, q) / theta(q * z, q);
        Cx series = phi21(qp(u), qp(u - c + 1.0), qp(u - v + 1.0), q, zr).value;
        return coef * th * series;
    };
    Cx rhs = half(a, b) + half(b, a);
    return ConnectionValue{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace qtwist
