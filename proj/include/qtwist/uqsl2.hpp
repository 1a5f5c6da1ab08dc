#pragma once

// Quantized sl2 in PBW form and its tensor powers, with coefficients that are
// truncated power series in the dynamical variable w over exact rational
// functions of q.  A monomial f^a t^m e^b has a,b >= 0 and m in Z; products
// are straightened through memoized expansions of e^b f^a driven by the
// single relation ef - fe = (t - t^{-1})/(q - q^{-1}) together with
// te = q^2 et and tf = q^{-2} ft.  Tensor elements carry a nilpotency cap:
// monomials with an e or f exponent above the cap are discarded, which is the
// truncation the twistor pipeline runs under.

#include <array>
#include <compare>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/matrix.hpp"
#include "qtwist/qscalar.hpp"
#include "qtwist/series.hpp"

namespace qtwist {

// ring protocol for w-series over exact scalars, so matrices may carry them
inline TruncSeries<QScalar> zero_like(const TruncSeries<QScalar>& s) {
    return TruncSeries<QScalar>(s.spec());
}
inline TruncSeries<QScalar> one_like(const TruncSeries<QScalar>& s) {
    return TruncSeries<QScalar>::one(s.spec(), QScalar(1));
}
inline bool ring_is_zero(const TruncSeries<QScalar>& s) { return s.is_zero(); }
inline TruncSeries<QScalar> ring_invert(const TruncSeries<QScalar>& s) { return s.invert_unit(); }

struct PBWMonomial {
    int a = 0;  // power of f
    int m = 0;  // power of t
    int b = 0;  // power of e

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
    bool is_unit() const { return a == 0 && m == 0 && b == 0; }
};

inline PBWMonomial gen_f() { return {1, 0, 0}; }
inline PBWMonomial gen_t(int m = 1) { return {0, m, 0}; }
inline PBWMonomial gen_e() { return {0, 0, 1}; }

using SlotElement = std::map<PBWMonomial, QScalar>;

inline const QScalar& comm_denom_inv() {  // 1/(q - q^{-1})
    static const QScalar d = (QScalar::q_pow(1) - QScalar::q_pow(-1)).invert();
    return d;
}

namespace detail {

inline void slot_add(SlotElement& dst, const PBWMonomial& k, const QScalar& v) {
    auto [it, inserted] = dst.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == QScalar(0)) dst.erase(it);
    }
}

// PBW expansion of e^b f; every term has f-exponent 0 or 1
inline const SlotElement& ef_one(int b) {
    static std::vector<SlotElement> memo = {SlotElement{{PBWMonomial{1, 0, 0}, QScalar(1)}}};
    while (static_cast<int>(memo.size()) <= b) {
        int n = static_cast<int>(memo.size());  // building e^n f from e^(n-1) f
        SlotElement next;
        for (const auto& [k, v] : memo[static_cast<size_t>(n - 1)])
            slot_add(next, PBWMonomial{k.a, k.m, k.b + 1}, v);
        // e^(n-1) (t - t^{-1})/(q - q^{-1})
        slot_add(next, PBWMonomial{0, 1, n - 1}, QScalar::q_pow(-2 * (n - 1)) * comm_denom_inv());
        slot_add(next, PBWMonomial{0, -1, n - 1}, -(QScalar::q_pow(2 * (n - 1)) * comm_denom_inv()));
        memo.push_back(std::move(next));
    }
    return memo[static_cast<size_t>(b)];
}

// x * f for a PBW-expanded x
inline SlotElement right_mul_f(const SlotElement& x) {
    SlotElement r;
    for (const auto& [k, v] : x) {
        if (k.b == 0) {
            slot_add(r, PBWMonomial{k.a + 1, k.m, 0}, v * QScalar::q_pow(-2 * k.m));
            continue;
        }
        for (const auto& [t, c] : ef_one(k.b))
            slot_add(r, PBWMonomial{k.a + t.a, k.m + t.m, t.b}, v * c * QScalar::q_pow(-2 * k.m * t.a));
    }
    return r;
}

// PBW expansion of e^b f^a, memoized
inline const SlotElement& ef_power(int b, int a) {
    static std::map<std::pair<int, int>, SlotElement> memo;
    auto key = std::make_pair(b, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SlotElement val;
    if (a == 0)
        val = SlotElement{{PBWMonomial{0, 0, b}, QScalar(1)}};
    else
        val = right_mul_f(ef_power(b, a - 1));
    return memo.emplace(key, std::move(val)).first->second;
}

}  // namespace detail

// product of two PBW monomials, dropping terms whose e or f exponent exceeds cap
inline SlotElement monomial_product(const PBWMonomial& x, const PBWMonomial& y, int cap) {
    SlotElement r;
    for (const auto& [t, c] : detail::ef_power(x.b, y.a)) {
        int fa = x.a + t.a, eb = t.b + y.b;
        if (fa > cap || eb > cap) continue;
        QScalar factor = c * QScalar::q_pow(-2 * x.m * t.a - 2 * t.b * y.m);
        detail::slot_add(r, PBWMonomial{fa, x.m + t.m + y.m, eb}, factor);
    }
    return r;
}

using PairKey = std::pair<PBWMonomial, PBWMonomial>;
using PairElement = std::map<PairKey, QScalar>;

inline PairElement pair_mul(const PairElement& x, const PairElement& y, int cap) {
    PairElement r;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            QScalar v = vx * vy;
            for (const auto& [m1, c1] : monomial_product(kx.first, ky.first, cap))
                for (const auto& [m2, c2] : monomial_product(kx.second, ky.second, cap)) {
                    QScalar add = v * c1 * c2;
                    auto [it, inserted] = r.try_emplace(PairKey{m1, m2}, add);
                    if (!inserted) {
                        it->second += add;
                        if (it->second == QScalar(0)) r.erase(it);
                    }
                }
        }
    return r;
}

// coproduct of a PBW monomial: f -> f ot t^{-1} + 1 ot f, e -> e ot 1 + t ot e,
// t^m -> t^m ot t^m.  No term exceeds the cap that its input obeyed.
inline const PairElement& coproduct_monomial(const PBWMonomial& mo, int cap) {
    static std::map<std::tuple<int, int, int, int>, PairElement> memo;
    auto key = std::make_tuple(mo.a, mo.m, mo.b, cap);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    static const PairElement df = {{PairKey{gen_f(), gen_t(-1)}, QScalar(1)},
                                   {PairKey{PBWMonomial{}, gen_f()}, QScalar(1)}};
    static const PairElement de = {{PairKey{gen_e(), PBWMonomial{}}, QScalar(1)},
                                   {PairKey{gen_t(1), gen_e()}, QScalar(1)}};
    PairElement acc = {{PairKey{gen_t(mo.m), gen_t(mo.m)}, QScalar(1)}};
    for (int i = 0; i < mo.b; ++i) acc = pair_mul(acc, de, cap);
    for (int i = 0; i < mo.a; ++i) acc = pair_mul(df, acc, cap);
    return memo.emplace(key, std::move(acc)).first->second;
}

using WSeries = TruncSeries<QScalar>;
using TensorKey = std::vector<PBWMonomial>;

class TensorElement {
  public:
    TensorElement(VarSpec spec, int rank, int degree_cap)
        : spec_(std::move(spec)), rank_(rank), dcap_(degree_cap) {}

    static TensorElement one(VarSpec spec, int rank, int degree_cap) {
        TensorElement x(std::move(spec), rank, degree_cap);
        x.add_term(TensorKey(static_cast<size_t>(rank)), WSeries::one(x.spec_, QScalar(1)));
        return x;
    }
    static TensorElement term(VarSpec spec, int degree_cap, TensorKey key, WSeries coeff) {
        TensorElement x(std::move(spec), static_cast<int>(key.size()), degree_cap);
        x.add_term(std::move(key), std::move(coeff));
        return x;
    }

    const VarSpec& spec() const { return spec_; }
    int rank() const { return rank_; }
    int degree_cap() const { return dcap_; }
    bool is_zero() const { return c_.empty(); }
    size_t term_count() const { return c_.size(); }
    const std::map<TensorKey, WSeries>& terms() const { return c_; }

    WSeries coeff(const TensorKey& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? WSeries(spec_) : it->second;
    }

    friend TensorElement operator+(const TensorElement& x, const TensorElement& y) {
        x.require_compatible(y);
        TensorElement r(x.spec_.min_caps(y.spec_), x.rank_, std::min(x.dcap_, y.dcap_));
        for (const auto& [k, v] : x.c_) r.add_term(k, v.truncated(r.spec_));
        for (const auto& [k, v] : y.c_) r.add_term(k, v.truncated(r.spec_));
        return r;
    }
    TensorElement operator-() const {
        TensorElement r(spec_, rank_, dcap_);
        for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
        return r;
    }
    friend TensorElement operator-(const TensorElement& x, const TensorElement& y) { return x + (-y); }

    friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
        x.require_compatible(y);
        TensorElement r(x.spec_.min_caps(y.spec_), x.rank_, std::min(x.dcap_, y.dcap_));
        std::vector<SlotElement> slot(static_cast<size_t>(r.rank_));
        for (const auto& [kx, vx] : x.c_)
            for (const auto& [ky, vy] : y.c_) {
                WSeries s = vx * vy;
                if (s.is_zero()) continue;
                bool dead = false;
                for (int i = 0; i < r.rank_ && !dead; ++i) {
                    slot[static_cast<size_t>(i)] =
                        monomial_product(kx[static_cast<size_t>(i)], ky[static_cast<size_t>(i)], r.dcap_);
                    dead = slot[static_cast<size_t>(i)].empty();
                }
                if (dead) continue;
                TensorKey key(static_cast<size_t>(r.rank_));
                r.accumulate_slots(slot, 0, key, QScalar(1), s);
            }
        return r;
    }

    TensorElement scaled(const WSeries& s) const {
        TensorElement r(spec_, rank_, dcap_);
        for (const auto& [k, v] : c_) r.add_term(k, s * v);
        return r;
    }
    TensorElement scaled_q(const QScalar& s) const {
        TensorElement r(spec_, rank_, dcap_);
        for (const auto& [k, v] : c_) r.add_term(k, v.scaled_left(s));
        return r;
    }

    // place slot i of *this at positions[i] of a rank new_rank element,
    // identity elsewhere; positions need not be increasing
    TensorElement embed(int new_rank, const std::vector<int>& positions) const {
        if (static_cast<int>(positions.size()) != rank_)
            throw RankMismatch("embed: need one target position per slot");
        std::vector<bool> used(static_cast<size_t>(new_rank), false);
        for (int p : positions) {
            if (p < 0 || p >= new_rank) throw SlotOutOfRange("embed: position outside target rank");
            if (used[static_cast<size_t>(p)]) throw SlotOutOfRange("embed: duplicate target position");
            used[static_cast<size_t>(p)] = true;
        }
        TensorElement r(spec_, new_rank, dcap_);
        for (const auto& [k, v] : c_) {
            TensorKey nk(static_cast<size_t>(new_rank));
            for (int i = 0; i < rank_; ++i) nk[static_cast<size_t>(positions[static_cast<size_t>(i)])] = k[static_cast<size_t>(i)];
            r.add_term(nk, v);
        }
        return r;
    }

    // apply the coproduct in the given slot, raising the rank by one
    TensorElement coproduct(int slot) const {
        check_slot(slot);
        TensorElement r(spec_, rank_ + 1, dcap_);
        for (const auto& [k, v] : c_) {
            for (const auto& [pk, qc] : coproduct_monomial(k[static_cast<size_t>(slot)], dcap_)) {
                TensorKey nk;
                nk.reserve(static_cast<size_t>(rank_ + 1));
                for (int i = 0; i < slot; ++i) nk.push_back(k[static_cast<size_t>(i)]);
                nk.push_back(pk.first);
                nk.push_back(pk.second);
                for (int i = slot + 1; i < rank_; ++i) nk.push_back(k[static_cast<size_t>(i)]);
                r.add_term(nk, v.scaled_left(qc));
            }
        }
        return r;
    }

    // apply the counit in the given slot, lowering the rank by one
    TensorElement counit(int slot) const {
        check_slot(slot);
        TensorElement r(spec_, rank_ - 1, dcap_);
        for (const auto& [k, v] : c_) {
            const PBWMonomial& mo = k[static_cast<size_t>(slot)];
            if (mo.a != 0 || mo.b != 0) continue;  // counit kills e and f, fixes t^m
            TensorKey nk;
            nk.reserve(static_cast<size_t>(rank_ - 1));
            for (int i = 0; i < rank_; ++i)
                if (i != slot) nk.push_back(k[static_cast<size_t>(i)]);
            r.add_term(nk, v);
        }
        return r;
    }

    // shift of the dynamical parameter by the weight of the given slot: the
    // coefficient of w^n is left-multiplied by t^{2n} in that slot
    TensorElement dynamical_shift(int slot) const {
        check_slot(slot);
        int widx = spec_.index_of("w");
        TensorElement r(spec_, rank_, dcap_);
        for (const auto& [k, v] : c_) {
            int a = k[static_cast<size_t>(slot)].a;
            for (const auto& [exps, qc] : v.terms()) {
                int n = exps[static_cast<size_t>(widx)];
                TensorKey nk = k;
                nk[static_cast<size_t>(slot)].m += 2 * n;
                r.add_term(nk, WSeries::monomial(spec_, exps, qc * QScalar::q_pow(-4 * n * a)));
            }
        }
        return r;
    }

    // k-th power of the shift automorphism: per slot,
    // f^a t^m e^b -> q^{-2k(b-a)(a+b)} w^{k(b-a)} f^a t^{m+2k(b-a)} e^b.
    // Terms of negative total w-power raise DomainError.
    TensorElement apply_phi_power(int k) const {
        TensorElement r(spec_, rank_, dcap_);
        for (const auto& [key, v] : c_) {
            int net = 0;
            QScalar qf(1);
            TensorKey nk = key;
            for (int i = 0; i < rank_; ++i) {
                int d = key[static_cast<size_t>(i)].b - key[static_cast<size_t>(i)].a;
                net += d;
                qf *= QScalar::q_pow(-2 * k * d * (key[static_cast<size_t>(i)].a + key[static_cast<size_t>(i)].b));
                nk[static_cast<size_t>(i)].m += 2 * k * d;
            }
            r.add_term(nk, v.shifted_exponent("w", k * net).scaled_left(qf));
        }
        return r;
    }

    // inverse of 1 + (terms of positive w-order); verified, so misuse throws
    TensorElement invert_unipotent() const {
        TensorElement one_el = one(spec_, rank_, dcap_);
        TensorElement u = one_el - *this;
        TensorElement inv = one_el;
        long steps = spec_.degree_capacity();
        for (long j = 0; j < steps; ++j) inv = inv * u + one_el;
        if (!(inv * *this == one_el) || !(*this * inv == one_el))
            throw NonUnitConstantTerm("invert_unipotent: element is not 1 + O(w) at these caps");
        return inv;
    }

    // image in the tensor power of the 2-dimensional module; basis order has
    // v1...v1 first, last index fastest
    SpectralMatrix<WSeries> rep2() const {
        int dim = 1 << rank_;
        SpectralMatrix<WSeries> mat(dim, WSeries(spec_));
        std::vector<std::array<QScalar, 4>> slots(static_cast<size_t>(rank_));
        for (const auto& [k, v] : c_) {
            bool dead = false;
            for (int i = 0; i < rank_ && !dead; ++i) {
                slots[static_cast<size_t>(i)] = rep2_slot(k[static_cast<size_t>(i)]);
                dead = k[static_cast<size_t>(i)].a > 1 || k[static_cast<size_t>(i)].b > 1;
            }
            if (dead) continue;
            for (int row = 0; row < dim; ++row)
                for (int col = 0; col < dim; ++col) {
                    QScalar f(1);
                    bool zero = false;
                    for (int i = 0; i < rank_ && !zero; ++i) {
                        int ri = (row >> (rank_ - 1 - i)) & 1, ci = (col >> (rank_ - 1 - i)) & 1;
                        const QScalar& entry = slots[static_cast<size_t>(i)][static_cast<size_t>(2 * ri + ci)];
                        if (entry == QScalar(0))
                            zero = true;
                        else
                            f *= entry;
                    }
                    if (!zero) mat.at(row, col) = mat.at(row, col) + v.scaled_left(f);
                }
        }
        return mat;
    }

    friend bool operator==(const TensorElement& x, const TensorElement& y) {
        return x.rank_ == y.rank_ && x.spec_ == y.spec_ && x.c_ == y.c_;
    }
    friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

    void add_term(const TensorKey& k, WSeries v) {
        if (static_cast<int>(k.size()) != rank_) throw RankMismatch("TensorElement: key rank mismatch");
        if (v.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(k, std::move(v));
        if (!inserted) {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

  private:
    VarSpec spec_;
    int rank_;
    int dcap_;
    std::map<TensorKey, WSeries> c_;

    static std::array<QScalar, 4> rep2_slot(const PBWMonomial& mo) {
        QScalar z(0), qm = QScalar::q_pow(mo.m);
        if (mo.a == 0 && mo.b == 0) return {qm, z, z, QScalar::q_pow(-mo.m)};
        if (mo.a == 0 && mo.b == 1) return {z, qm, z, z};
        if (mo.a == 1 && mo.b == 0) return {z, z, qm, z};
        if (mo.a == 1 && mo.b == 1) return {z, z, z, qm};
        return {z, z, z, z};
    }

    void accumulate_slots(const std::vector<SlotElement>& slot, int i, TensorKey& key, QScalar qf,
                          const WSeries& s) {
        if (i == rank_) {
            add_term(key, s.scaled_left(qf));
            return;
        }
        for (const auto& [mo, c] : slot[static_cast<size_t>(i)]) {
            key[static_cast<size_t>(i)] = mo;
            accumulate_slots(slot, i + 1, key, qf * c, s);
        }
    }

    void require_compatible(const TensorElement& o) const {
        if (rank_ != o.rank_) throw RankMismatch("TensorElement: rank mismatch");
        if (!spec_.same_shape(o.spec_))
            throw VariableMismatch("TensorElement: coefficient series have different shapes");
    }
    void check_slot(int slot) const {
        if (slot < 0 || slot >= rank_) throw SlotOutOfRange("TensorElement: slot index out of range");
    }
};

// diagonal image of q^{-T}, T = h ot h / 2, on the 2-fold module; adjoined at
// matrix level because the Cartan exponential is not a PBW element
inline SpectralMatrix<WSeries> qmt_rep2(const VarSpec& spec) {
    WSeries z(spec);
    SpectralMatrix<WSeries> m(4, z);
    auto c = [&](int vpow) { return WSeries::constant(spec, QScalar::v_pow(vpow)); };
    m.at(0, 0) = c(-1);
    m.at(1, 1) = c(1);
    m.at(2, 2) = c(1);
    m.at(3, 3) = c(-1);
    return m;
}

// nilpotent part of the universal R matrix at e/f-degree cap D:
// exp_{q^2}(-(q - q^{-1}) e t^{-1} ot t f), a rank-2 element with no w content
inline TensorElement r_nilpotent(const VarSpec& spec, int dcap) {
    TensorElement r = TensorElement::one(spec, 2, dcap);
    TensorElement x(spec, 2, dcap);
    x.add_term(TensorKey{PBWMonomial{0, -1, 1}, PBWMonomial{1, 1, 0}},
               WSeries::constant(spec, -(QScalar::q_pow(1) - QScalar::q_pow(-1))));
    TensorElement pw = TensorElement::one(spec, 2, dcap);
    QScalar fact(1);  // (n)_{q^2}! accumulated multiplicatively
    for (int n = 1; n <= dcap; ++n) {
        pw = pw * x;
        fact *= (QScalar(1) - QScalar::q_pow(2 * n)) * (QScalar(1) - QScalar::q_pow(2)).invert();
        r = r + pw.scaled_q(fact.invert());
    }
    return r;
}

}  // namespace qtwist
