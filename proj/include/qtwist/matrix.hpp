#pragma once

// Dense square matrices over a caller-chosen entry ring, used for images of
// algebra elements in tensor powers of the 2-dimensional module.  Basis order
// is always v1...v1 first with the last tensor index fastest; the tag rides
// along so emitted reports can state the convention.  Inversion is Gaussian
// elimination with the best available pivot (by magnitude when entries are
// complex, first unit otherwise).

#include <complex>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/ring.hpp"

namespace qtwist {

enum class BasisOrder { LastIndexFastest };

inline std::string basis_order_label(BasisOrder, int dim) {
    if (dim == 4) return "v1v1,v1v2,v2v1,v2v2";
    if (dim == 8) return "v1v1v1,v1v1v2,v1v2v1,v1v2v2,v2v1v1,v2v1v2,v2v2v1,v2v2v2";
    return "lexicographic, last index fastest";
}

template <typename T>
double pivot_quality(const T& x) {
    return ring_is_zero(x) ? 0.0 : 1.0;
}
inline double pivot_quality(const std::complex<double>& x) { return std::abs(x); }

template <typename T>
class SpectralMatrix {
  public:
    SpectralMatrix() = default;
    SpectralMatrix(int n, T fill) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

    static SpectralMatrix identity(int n, const T& proto) {
        SpectralMatrix m(n, zero_like(proto));
        for (int i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
        return m;
    }

    int dim() const { return n_; }
    BasisOrder basis() const { return BasisOrder::LastIndexFastest; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend SpectralMatrix operator+(const SpectralMatrix& x, const SpectralMatrix& y) {
        x.require_same_dim(y);
        SpectralMatrix r(x);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }
    friend SpectralMatrix operator-(const SpectralMatrix& x, const SpectralMatrix& y) {
        x.require_same_dim(y);
        SpectralMatrix r(x);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    SpectralMatrix operator-() const {
        SpectralMatrix r(*this);
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend SpectralMatrix operator*(const SpectralMatrix& x, const SpectralMatrix& y) {
        x.require_same_dim(y);
        const T* proto = &x.a_[0];
        SpectralMatrix r(x.n_, zero_like(*proto));
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const T& xik = x.at(i, k);
                if (ring_is_zero(xik)) continue;
                for (int j = 0; j < x.n_; ++j) {
                    if (ring_is_zero(y.at(k, j))) continue;
                    r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
                }
            }
        return r;
    }

    SpectralMatrix scaled(const T& s) const {
        SpectralMatrix r(*this);
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    SpectralMatrix transposed() const {
        SpectralMatrix r(n_, a_[0]);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    SpectralMatrix inverse() const {
        SpectralMatrix aug(*this);
        SpectralMatrix inv = identity(n_, a_[0]);
        for (int col = 0; col < n_; ++col) {
            int best = -1;
            double bq = 0.0;
            for (int r = col; r < n_; ++r) {
                double q = pivot_quality(aug.at(r, col));
                if (q > bq) {
                    bq = q;
                    best = r;
                }
            }
            if (best < 0) throw DivisionByZero("SpectralMatrix::inverse: singular matrix");
            if (best != col) {
                for (int j = 0; j < n_; ++j) {
                    std::swap(aug.at(best, j), aug.at(col, j));
                    std::swap(inv.at(best, j), inv.at(col, j));
                }
            }
            T piv_inv = ring_invert(aug.at(col, col));
            for (int j = 0; j < n_; ++j) {
                aug.at(col, j) = piv_inv * aug.at(col, j);
                inv.at(col, j) = piv_inv * inv.at(col, j);
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || ring_is_zero(aug.at(r, col))) continue;
                T f = aug.at(r, col);
                for (int j = 0; j < n_; ++j) {
                    aug.at(r, j) = aug.at(r, j) - f * aug.at(col, j);
                    inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    bool all_zero() const {
        for (const auto& v : a_)
            if (!ring_is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const SpectralMatrix& x, const SpectralMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

  private:
    int n_ = 0;
    std::vector<T> a_;

    void require_same_dim(const SpectralMatrix& o) const {
        if (n_ != o.n_) throw RankMismatch("SpectralMatrix: dimension mismatch");
    }
};

template <typename T>
SpectralMatrix<T> kron(const SpectralMatrix<T>& a, const SpectralMatrix<T>& b) {
    int n = a.dim() * b.dim();
    SpectralMatrix<T> r(n, zero_like(a.at(0, 0)));
    for (int i1 = 0; i1 < a.dim(); ++i1)
        for (int j1 = 0; j1 < a.dim(); ++j1)
            for (int i2 = 0; i2 < b.dim(); ++i2)
                for (int j2 = 0; j2 < b.dim(); ++j2)
                    r.at(i1 * b.dim() + i2, j1 * b.dim() + j2) = a.at(i1, j1) * b.at(i2, j2);
    return r;
}

// two-site operator acting in slots (1,2), (2,3) or (1,3) of a three-fold space
template <typename T>
SpectralMatrix<T> embed12(const SpectralMatrix<T>& m) {  // m is 4x4
    return kron(m, SpectralMatrix<T>::identity(2, m.at(0, 0)));
}
template <typename T>
SpectralMatrix<T> embed23(const SpectralMatrix<T>& m) {
    return kron(SpectralMatrix<T>::identity(2, m.at(0, 0)), m);
}
template <typename T>
SpectralMatrix<T> embed13(const SpectralMatrix<T>& m) {
    SpectralMatrix<T> r(8, zero_like(m.at(0, 0)));
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i3 = 0; i3 < 2; ++i3)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j3 = 0; j3 < 2; ++j3)
                    for (int i2 = 0; i2 < 2; ++i2)
                        r.at(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * i2 + j3) = m.at(2 * i1 + i3, 2 * j1 + j3);
    return r;
}

// conjugate a 4x4 two-site matrix by the tensor-factor swap
template <typename T>
SpectralMatrix<T> flip_slots(const SpectralMatrix<T>& m) {
    static const int p[4] = {0, 2, 1, 3};
    SpectralMatrix<T> r(4, zero_like(m.at(0, 0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(p[i], p[j]) = m.at(i, j);
    return r;
}

inline double max_abs(const SpectralMatrix<std::complex<double>>& m) {
    double r = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m.at(i, j)));
    return r;
}
inline double max_abs_diff(const SpectralMatrix<std::complex<double>>& a,
                           const SpectralMatrix<std::complex<double>>& b) {
    return max_abs(a - b);
}

template <typename T>
SpectralMatrix<T> zero_like(const SpectralMatrix<T>& m) {
    return SpectralMatrix<T>(m.dim(), zero_like(m.at(0, 0)));
}
template <typename T>
SpectralMatrix<T> one_like(const SpectralMatrix<T>& m) {
    return SpectralMatrix<T>::identity(m.dim(), m.at(0, 0));
}
template <typename T>
bool ring_is_zero(const SpectralMatrix<T>& m) {
    return m.all_zero();
}
template <typename T>
SpectralMatrix<T> ring_invert(const SpectralMatrix<T>& m) {
    return m.inverse();
}

}  // namespace qtwist
