#pragma once

// Truncated formal power series in named commuting variables with hard
// per-variable exponent caps.  Coefficients live in a caller-chosen ring R
// (exact scalars, complex doubles, or tensor-algebra elements); R only needs
// +, *, unary -, zero_like/one_like prototypes and ring_is_zero.  Exponents
// are stored in integer units of 1/subdiv per variable, so a variable may
// run on a half-integer lattice (subdiv = 2) while the others stay integral.
// Multiplication truncates to the pairwise minimum caps.  Inversion and the
// left-ordered infinite product assume nothing about commutativity of R.

#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/ring.hpp"

namespace qtwist {

// library-wide default truncation orders
inline constexpr int kDefaultWCap = 6;
inline constexpr int kDefaultZCap = 8;
inline constexpr int kDefaultPCap = 8;

struct VarSpec {
    struct Var {
        std::string name;
        int cap;     // maximum stored exponent, in subdiv units
        int subdiv;  // exponent lattice: stored n means variable^(n/subdiv)

        friend bool operator==(const Var& a, const Var& b) {
            return a.name == b.name && a.cap == b.cap && a.subdiv == b.subdiv;
        }
    };
    std::vector<Var> vars;

    static VarSpec single(const std::string& name, int cap, int subdiv = 1) {
        return VarSpec{{Var{name, cap, subdiv}}};
    }
    VarSpec& add(const std::string& name, int cap, int subdiv = 1) {
        vars.push_back(Var{name, cap, subdiv});
        return *this;
    }
    size_t arity() const { return vars.size(); }
    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return static_cast<int>(i);
        throw VariableMismatch("VarSpec: unknown variable " + name);
    }
    bool same_shape(const VarSpec& o) const {  // names and lattices match; caps may differ
        if (vars.size() != o.vars.size()) return false;
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name != o.vars[i].name || vars[i].subdiv != o.vars[i].subdiv) return false;
        return true;
    }
    VarSpec min_caps(const VarSpec& o) const {
        VarSpec r(*this);
        for (size_t i = 0; i < vars.size(); ++i) r.vars[i].cap = std::min(vars[i].cap, o.vars[i].cap);
        return r;
    }
    // scaled total-degree bookkeeping: lattice_lcm() * (true degree) is integral
    long lattice_lcm() const {
        long l = 1;
        for (const auto& v : vars) l = std::lcm(l, static_cast<long>(v.subdiv));
        return l;
    }
    // largest representable total true degree, rounded down to an integer
    long degree_capacity() const {
        long l = lattice_lcm(), acc = 0;
        for (const auto& v : vars) acc += static_cast<long>(v.cap) * (l / v.subdiv);
        return acc / l;
    }
    friend bool operator==(const VarSpec& a, const VarSpec& b) { return a.vars == b.vars; }
};

template <typename R>
class TruncSeries {
  public:
    using Key = std::vector<int>;

    TruncSeries() = default;
    explicit TruncSeries(VarSpec spec) : spec_(std::move(spec)) {}

    static TruncSeries constant(VarSpec spec, R value) {
        TruncSeries s(std::move(spec));
        s.add_coeff(Key(s.spec_.arity(), 0), std::move(value));
        return s;
    }
    static TruncSeries one(VarSpec spec, const R& proto) { return constant(std::move(spec), one_like(proto)); }
    static TruncSeries monomial(VarSpec spec, Key exps, R value) {
        TruncSeries s(std::move(spec));
        s.set_coeff(std::move(exps), std::move(value));
        return s;
    }

    const VarSpec& spec() const { return spec_; }
    bool is_zero() const { return c_.empty(); }
    size_t term_count() const { return c_.size(); }
    const std::map<Key, R>& terms() const { return c_; }

    R coeff(const Key& k) const {
        auto it = c_.find(k);
        if (it != c_.end()) return it->second;
        for (const auto& x : c_) return zero_like(x.second);
        return R{};
    }

    // explicit writes outside the caps are caller bugs, unlike arithmetic truncation
    void set_coeff(Key k, R value) {
        check_key_strict(k);
        if (ring_is_zero(value))
            c_.erase(k);
        else
            c_[std::move(k)] = std::move(value);
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_shape(b);
        TruncSeries r(a.spec_.min_caps(b.spec_));
        for (const auto& [k, v] : a.c_)
            if (r.within_caps(k)) r.add_coeff(k, v);
        for (const auto& [k, v] : b.c_)
            if (r.within_caps(k)) r.add_coeff(k, v);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    TruncSeries operator-() const {
        TruncSeries r(spec_);
        for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_shape(b);
        TruncSeries r(a.spec_.min_caps(b.spec_));
        Key k(a.spec_.arity());
        for (const auto& [ka, va] : a.c_) {
            for (const auto& [kb, vb] : b.c_) {
                bool ok = true;
                for (size_t i = 0; i < k.size(); ++i) {
                    k[i] = ka[i] + kb[i];
                    if (k[i] > r.spec_.vars[i].cap) {
                        ok = false;
                        break;
                    }
                }
                if (ok) r.add_coeff(k, va * vb);
            }
        }
        return r;
    }

    TruncSeries scaled_left(const R& s) const {
        TruncSeries r(spec_);
        for (const auto& [k, v] : c_) r.add_coeff(k, s * v);
        return r;
    }
    TruncSeries scaled_right(const R& s) const {
        TruncSeries r(spec_);
        for (const auto& [k, v] : c_) r.add_coeff(k, v * s);
        return r;
    }

    // coefficient of var^n is left-multiplied by factor^n (integer lattice only)
    TruncSeries substitute_scale(const std::string& var, const R& factor) const {
        int idx = spec_.index_of(var);
        if (spec_.vars[static_cast<size_t>(idx)].subdiv != 1)
            throw DomainError("substitute_scale: variable " + var + " lives on a fractional lattice");
        TruncSeries r(spec_);
        std::vector<R> powers;  // powers[n] = factor^n, built on demand
        for (const auto& [k, v] : c_) {
            int n = k[static_cast<size_t>(idx)];
            if (powers.empty()) powers.push_back(one_like(v));
            while (static_cast<int>(powers.size()) <= n) powers.push_back(powers.back() * factor);
            r.add_coeff(k, powers[static_cast<size_t>(n)] * v);
        }
        return r;
    }

    // move coefficient of var^n to var^(n+delta); negative targets are a caller bug
    TruncSeries shifted_exponent(const std::string& var, int delta) const {
        int idx = spec_.index_of(var);
        TruncSeries r(spec_);
        for (const auto& [k, v] : c_) {
            Key nk = k;
            nk[static_cast<size_t>(idx)] += delta;
            if (nk[static_cast<size_t>(idx)] < 0)
                throw DomainError("shifted_exponent: negative exponent in variable " + var);
            if (nk[static_cast<size_t>(idx)] <= spec_.vars[static_cast<size_t>(idx)].cap) r.add_coeff(nk, v);
        }
        return r;
    }

    TruncSeries truncated(const VarSpec& target) const {
        if (!spec_.same_shape(target)) throw VariableMismatch("truncated: different variable shape");
        TruncSeries r(spec_.min_caps(target));
        for (const auto& [k, v] : c_)
            if (r.within_caps(k)) r.add_coeff(k, v);
        return r;
    }

    // two-sided inverse of a series whose constant term is a unit in R
    TruncSeries invert_unit() const {
        Key zero_key(spec_.arity(), 0);
        auto it = c_.find(zero_key);
        if (it == c_.end()) throw NonUnitConstantTerm("invert_unit: constant term is zero");
        R c0 = it->second;
        R c0inv = ring_invert(c0);  // throws if not a unit
        TruncSeries one_s = TruncSeries::constant(spec_, one_like(c0));
        TruncSeries u = one_s - scaled_left(c0inv);
        // u has scaled total degree >= 1, so u^(max scaled degree + 1) = 0
        long l = spec_.lattice_lcm();
        long total = 0;
        for (const auto& v : spec_.vars) total += static_cast<long>(v.cap) * (l / v.subdiv);
        TruncSeries inv = one_s;
        for (long j = 0; j < total; ++j) inv = inv * u + one_s;
        return inv.scaled_right(c0inv);
    }

    // smallest scaled total degree among stored terms; scale = spec().lattice_lcm()
    long min_total_degree_scaled() const {
        long l = spec_.lattice_lcm();
        long best = -1;
        for (const auto& [k, v] : c_) {
            (void)v;
            long d = 0;
            for (size_t i = 0; i < k.size(); ++i) d += static_cast<long>(k[i]) * (l / spec_.vars[i].subdiv);
            if (best < 0 || d < best) best = d;
        }
        return best;  // -1 for the zero series
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.spec_ == b.spec_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    void add_coeff(const Key& k, R v) {
        auto [it, inserted] = c_.try_emplace(k, std::move(v));
        if (!inserted) it->second = it->second + v;
        if (ring_is_zero(it->second)) c_.erase(it);
    }

  private:
    VarSpec spec_;
    std::map<Key, R> c_;

    bool within_caps(const Key& k) const {
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] > spec_.vars[i].cap) return false;
        return true;
    }
    void check_key_strict(const Key& k) const {
        if (k.size() != spec_.arity()) throw VariableMismatch("TruncSeries: key arity mismatch");
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] < 0 || k[i] > spec_.vars[i].cap)
                throw DomainError("TruncSeries: exponent outside [0, cap] for " + spec_.vars[i].name);
    }
    void require_same_shape(const TruncSeries& o) const {
        if (!spec_.same_shape(o.spec_))
            throw VariableMismatch("TruncSeries: operands have different variable shape");
    }
};

// left-ordered product: factor(K) * ... * factor(2) * factor(1), where
// factor(k) - 1 must vanish to total degree >= k so the product stabilizes
// once k exceeds the caps' degree capacity
template <typename R>
TruncSeries<R> ordered_product(const VarSpec& spec, const R& proto,
                               const std::function<TruncSeries<R>(int)>& factor) {
    TruncSeries<R> acc = TruncSeries<R>::one(spec, proto);
    long stop = spec.degree_capacity();
    long l = spec.lattice_lcm();
    for (long k = 1; k <= stop; ++k) {
        TruncSeries<R> f = factor(static_cast<int>(k));
        if (!f.spec().same_shape(spec))
            throw VariableMismatch("ordered_product: factor has different variable shape");
        TruncSeries<R> dev = f - TruncSeries<R>::one(f.spec(), proto);
        long mind = dev.min_total_degree_scaled();
        if (mind >= 0 && mind < k * l)
            throw NonStabilizingFactor("ordered_product: factor " + std::to_string(k) +
                                       " deviates from 1 below degree " + std::to_string(k));
        acc = f * acc;
    }
    return acc;
}

}  // namespace qtwist
