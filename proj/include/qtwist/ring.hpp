#pragma once

// Ring-protocol helpers for the numeric entry types: machine complex and the
// high-precision complex used by stiff recursions.  Exact scalar and matrix
// types supply their own overloads next to their definitions; generic code
// calls zero_like/one_like/ring_is_zero/ring_invert unqualified.  These
// declarations must precede the matrix templates so ordinary lookup finds
// them for entry types living outside this namespace.

#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

#include "qtwist/errors.hpp"

namespace qtwist {

inline std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
inline std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
inline bool ring_is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
inline std::complex<double> ring_invert(const std::complex<double>& x) {
    if (ring_is_zero(x)) throw DivisionByZero("ring_invert: zero complex value");
    return std::complex<double>(1.0, 0.0) / x;
}

using MpCx = boost::multiprecision::cpp_complex_100;

inline MpCx zero_like(const MpCx&) { return MpCx(0); }
inline MpCx one_like(const MpCx&) { return MpCx(1); }
inline bool ring_is_zero(const MpCx& x) { return x == MpCx(0); }
inline MpCx ring_invert(const MpCx& x) {
    if (ring_is_zero(x)) throw DivisionByZero("ring_invert: zero high-precision value");
    return MpCx(1) / x;
}
inline double pivot_quality(const MpCx& x) { return abs(x).convert_to<double>(); }

}  // namespace qtwist
