#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgva/laurent.hpp"

namespace fgva {

// Sparse rational vector over an implicit finite basis (component -> value).
struct Vec {
    std::map<int, Rat> c;

    static Vec unit(int i) {
        Vec v;
        v.c[i] = 1;
        return v;
    }
    bool is_zero() const { return c.empty(); }
    void prune() {
        for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
    }
    Vec& operator+=(const Vec& o) {
        for (const auto& [i, v] : o.c) c[i] += v;
        prune();
        return *this;
    }
    Vec operator+(const Vec& o) const {
        Vec r(*this);
        r += o;
        return r;
    }
    Vec operator-() const {
        Vec r(*this);
        for (auto& [i, v] : r.c) v = -v;
        return r;
    }
    Vec operator-(const Vec& o) const { return *this + (-o); }
    Vec operator*(const Rat& k) const {
        if (k == 0) return Vec{};
        Vec r(*this);
        for (auto& [i, v] : r.c) v *= k;
        return r;
    }
    bool operator==(const Vec& o) const { return c == o.c; }
    Rat at(int i) const {
        auto it = c.find(i);
        return it == c.end() ? Rat(0) : it->second;
    }
};

template <class V>
inline bool value_is_zero(const V& v) {
    return v.is_zero();
}
template <>
inline bool value_is_zero<Rat>(const Rat& v) {
    return v == 0;
}

// Multivariate (arity <= 3) series with per-variable rectangle precision and
// at most one weighted-diagonal facet. Semantics per coefficient key e:
//   - e_i < low_i for some i        -> exactly zero
//   - e_i >= ord_i for some i, or
//     sum_i fw_i*e_i >= ford        -> unknown (outside precision)
//   - otherwise                     -> the stored value (or exact zero)
// Variables are named; binary operations align operands by name.
template <class V>
class MSeries {
  public:
    using Key = std::array<int, 3>;

    MSeries() = default;
    explicit MSeries(std::vector<std::string> vars) : vars_(std::move(vars)) {
        low_.fill(0);
        ord_.fill(kExpInf);
        fw_.fill(0);
    }

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const;

    const std::map<Key, V>& coeffs() const { return c_; }
    std::map<Key, V>& mutable_coeffs() { return c_; }

    int low(int i) const { return low_[i]; }
    int ord(int i) const { return ord_[i]; }
    int facet_weight(int i) const { return fw_[i]; }
    std::array<int, 3> facet_weights() const { return fw_; }
    int facet_ord() const { return ford_; }
    // facet support-valuation promise: every (true) support point e has
    // w.e >= fwlow; -kExpInf means "derive from the rectangle lows"
    int facet_wlow() const { return fwlow_; }
    bool facet_trivial() const { return ford_ >= kExpInf && fwlow_ <= -kExpInf; }

    // The best provable lower bound for w.e over the full support.
    int eff_wlow(const std::array<int, 3>& w) const {
        int base = 0;
        for (int i = 0; i < arity(); ++i) base = sat_add(base, sat_mul(w[i], low_[i]));
        if (fwlow_ > -kExpInf && fw_ == w) return std::max(base, fwlow_);
        return base;
    }

    void set_low(int i, int v) { low_[i] = v; }
    void set_ord(int i, int v) { ord_[i] = v; }
    void set_facet(std::array<int, 3> w, int bound, int wlow = -kExpInf) {
        fw_ = w;
        ford_ = bound;
        fwlow_ = wlow;
    }

    bool known(const Key& e) const {
        for (int i = 0; i < arity(); ++i) {
            if (e[i] >= ord_[i]) return false;
        }
        if (ford_ < kExpInf) {
            long long wd = 0;
            for (int i = 0; i < arity(); ++i) wd += static_cast<long long>(fw_[i]) * e[i];
            if (wd >= ford_) return false;
        }
        return true;
    }

    // The stored value (exact zero when absent); requires known(e).
    V at(const Key& e) const;

    void add_term(const Key& e, const V& v);
    void prune();  // drop zeros and out-of-precision keys; tighten lows

    bool is_zero() const { return c_.empty(); }

    MSeries operator-() const;
    MSeries operator+(const MSeries& o) const;
    MSeries operator-(const MSeries& o) const;
    MSeries operator*(const Rat& k) const;

    // Restrict precision to the given per-variable exclusive upper bounds.
    MSeries truncated(const Key& ords) const;

    // Reinterpret over a variable superset (by name); new variables get
    // exponent 0 support and unconstrained precision.
    MSeries embedded(const std::vector<std::string>& out_vars) const;

    // Same data under new variable names (positional).
    MSeries renamed(std::vector<std::string> new_vars) const {
        MSeries r(*this);
        if (new_vars.size() != vars_.size()) throw Error("renamed: arity mismatch");
        r.vars_ = std::move(new_vars);
        return r;
    }

    std::string str() const;

  private:
    template <class W>
    friend class MSeries;

    std::vector<std::string> vars_;
    std::map<Key, V> c_;
    Key low_{0, 0, 0};
    Key ord_{kExpInf, kExpInf, kExpInf};
    Key fw_{0, 0, 0};
    int ford_ = kExpInf;
    int fwlow_ = -kExpInf;

    template <class A, class B>
    friend MSeries<B> mul_impl(const MSeries<A>&, const MSeries<B>&);
};

using MRat = MSeries<Rat>;
using MVec = MSeries<Vec>;

// Scalar-by-anything product (operands aligned by variable names already).
MRat operator*(const MRat& a, const MRat& b);
MVec operator*(const MRat& a, const MVec& b);

// Lift a univariate series onto the named variable of a variable list.
MRat lift_series(const LaurentSeries& s, const std::string& var,
                 const std::vector<std::string>& out_vars);
MRat mrat_const(const Rat& c, const std::vector<std::string>& vars);

// Slice: the coefficient of var^e as a series over the remaining variables.
template <class V>
MSeries<V> slice_var(const MSeries<V>& a, int var, int e);

// Collapse a 2-variable scalar series to univariate in vars[keep].
LaurentSeries to_laurent_1d(const MRat& a);

// Integer powers of an LP series (Laurent in lv, series in sv). Negative
// powers go through lp_invert; results are cached.
MRat lp_invert(const MRat& s, int laurent_var, int series_var,
               std::optional<int> sv_order = std::nullopt);

class PowerCache {
  public:
    // weights: per-var weights w over s's vars with w-degree of every monomial
    // of s >= 1 (a weighted valuation); used by substitution for tail
    // precision. laurent/series var roles drive inversion of negative powers.
    PowerCache(MRat s, int laurent_var, int series_var, std::array<int, 3> weights);

    const MRat& base() const { return s_; }
    const MRat& power(long long m);
    const std::array<int, 3>& weights() const { return w_; }

  private:
    MRat s_;
    int lv_, sv_;
    std::array<int, 3> w_{0, 0, 0};
    std::map<long long, MRat> pows_;
};

// Replace x_v in A by pows.base(); output variables are A's remaining
// variables merged (by name) with the substituent's. When A is truncated in
// x_v the unknown tail is recorded as a weighted-diagonal facet derived from
// the substituent's weight vector (weighted valuation >= 1).
template <class V>
MSeries<V> substitute_var_by(const MSeries<V>& A, int v, PowerCache& pows);

// Substitution that guarantees rectangle coverage of out_ords (exclusive, in
// the output variable order), truncating the substituent as needed and
// retrying with wider margins; PrecisionExhausted when coverage is impossible.
template <class V>
MSeries<V> substitute_covering(const MSeries<V>& A, int v, const MRat& s, int laurent_var,
                               int series_var, const std::array<int, 3>& weights,
                               const std::vector<std::pair<std::string, int>>& out_ords);

struct Window {
    // inclusive bounds per variable, aligned with the series' variables
    std::vector<std::pair<int, int>> range;
};

struct MismatchWitness {
    std::array<int, 3> exponents;
    std::string lhs, rhs;  // printed values (scalar or vector component)
    int component = -1;    // basis component for vector values
};

template <class V>
struct WindowCompare {
    long long compared = 0;   // points known on both sides
    long long unknown = 0;    // points of the window outside joint precision
    std::optional<MismatchWitness> mismatch;
    bool equal_on_known() const { return !mismatch.has_value(); }
};

template <class V>
WindowCompare<V> compare_on_window(const MSeries<V>& a, const MSeries<V>& b, const Window& w);

}  // namespace fgva
