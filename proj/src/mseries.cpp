#include "fgva/mseries.hpp"

#include <algorithm>
#include <sstream>

#include "fgva/errors.hpp"

namespace fgva {

namespace {

std::string value_str(const Rat& v) { return rat_to_string(v); }
std::string value_str(const Vec& v) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [i, q] : v.c) {
        if (!first) out << ", ";
        out << i << ": " << rat_to_string(q);
        first = false;
    }
    out << "}";
    return out.str();
}

long long wdot(const std::array<int, 3>& w, const std::array<int, 3>& e, int arity) {
    long long s = 0;
    for (int i = 0; i < arity; ++i) s += static_cast<long long>(w[i]) * e[i];
    return s;
}

int wdot_sat(const std::array<int, 3>& w, const std::array<int, 3>& lows, int arity) {
    int s = 0;
    for (int i = 0; i < arity; ++i) s = sat_add(s, sat_mul(w[i], lows[i]));
    return s;
}

}  // namespace

template <class V>
int MSeries<V>::var_index(const std::string& name) const {
    for (int i = 0; i < arity(); ++i) {
        if (vars_[i] == name) return i;
    }
    throw Error("unknown variable '" + name + "'");
}

template <class V>
V MSeries<V>::at(const Key& e) const {
    if (!known(e)) {
        throw PrecisionExhausted("coefficient requested beyond precision");
    }
    auto it = c_.find(e);
    return it == c_.end() ? V{} : it->second;
}

template <class V>
void MSeries<V>::add_term(const Key& e, const V& v) {
    if (value_is_zero(v)) return;
    auto [it, inserted] = c_.try_emplace(e, v);
    if (!inserted) {
        if constexpr (std::is_same_v<V, Rat>) {
            it->second += v;
        } else {
            it->second += v;
        }
        if (value_is_zero(it->second)) c_.erase(it);
    }
}

template <class V>
void MSeries<V>::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (value_is_zero(it->second) || !known(it->first)) {
            it = c_.erase(it);
        } else {
            ++it;
        }
    }
}

template <class V>
MSeries<V> MSeries<V>::operator-() const {
    MSeries<V> r(*this);
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

template <class V>
MSeries<V> MSeries<V>::operator+(const MSeries<V>& o) const {
    if (vars_ != o.vars_) throw Error("variable mismatch in series addition");
    MSeries<V> r(vars_);
    for (int i = 0; i < arity(); ++i) {
        r.low_[i] = std::min(low_[i], o.low_[i]);
        r.ord_[i] = std::min(ord_[i], o.ord_[i]);
    }
    if (facet_trivial()) {
        r.fw_ = o.fw_;
        r.ford_ = o.ford_;
        r.fwlow_ = o.facet_trivial() ? -kExpInf : std::min(eff_wlow(o.fw_), o.eff_wlow(o.fw_));
    } else if (o.facet_trivial()) {
        r.fw_ = fw_;
        r.ford_ = ford_;
        r.fwlow_ = std::min(eff_wlow(fw_), o.eff_wlow(fw_));
    } else if (fw_ == o.fw_) {
        r.fw_ = fw_;
        r.ford_ = std::min(ford_, o.ford_);
        r.fwlow_ = std::min(eff_wlow(fw_), o.eff_wlow(fw_));
    } else {
        throw Error("incompatible precision facets in series addition");
    }
    r.c_ = c_;
    for (const auto& [e, v] : o.c_) r.add_term(e, v);
    r.prune();
    return r;
}

template <class V>
MSeries<V> MSeries<V>::operator-(const MSeries<V>& o) const {
    return *this + (-o);
}

template <class V>
MSeries<V> MSeries<V>::operator*(const Rat& k) const {
    MSeries<V> r(*this);
    if (k == 0) {
        r.c_.clear();
        return r;
    }
    for (auto& [e, v] : r.c_) v = v * k;
    return r;
}

template <class V>
MSeries<V> MSeries<V>::truncated(const Key& ords) const {
    MSeries<V> r(*this);
    for (int i = 0; i < arity(); ++i) r.ord_[i] = std::min(r.ord_[i], ords[i]);
    r.prune();
    return r;
}

template <class V>
MSeries<V> MSeries<V>::embedded(const std::vector<std::string>& out_vars) const {
    MSeries<V> r(out_vars);
    std::array<int, 3> pos{-1, -1, -1};
    for (int i = 0; i < arity(); ++i) {
        int j = -1;
        for (int k = 0; k < r.arity(); ++k) {
            if (out_vars[k] == vars_[i]) j = k;
        }
        if (j < 0) throw Error("embedded: variable '" + vars_[i] + "' missing from target");
        pos[i] = j;
    }
    for (int k = 0; k < r.arity(); ++k) {
        r.low_[k] = 0;
        r.ord_[k] = kExpInf;
    }
    r.fw_.fill(0);
    for (int i = 0; i < arity(); ++i) {
        r.low_[pos[i]] = low_[i];
        r.ord_[pos[i]] = ord_[i];
        r.fw_[pos[i]] = fw_[i];
    }
    r.ford_ = ford_;
    for (const auto& [e, v] : c_) {
        Key k{0, 0, 0};
        for (int i = 0; i < arity(); ++i) k[pos[i]] = e[i];
        r.c_[k] = v;
    }
    return r;
}

template <class V>
std::string MSeries<V>::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) out << " + ";
        out << value_str(v);
        for (int i = 0; i < arity(); ++i) {
            if (e[i] != 0) out << "*" << vars_[i] << "^" << e[i];
        }
        first = false;
    }
    if (first) out << "0";
    bool any = false;
    for (int i = 0; i < arity(); ++i) any = any || ord_[i] < kExpInf;
    if (any) {
        out << " + O(";
        bool f2 = true;
        for (int i = 0; i < arity(); ++i) {
            if (ord_[i] >= kExpInf) continue;
            if (!f2) out << ", ";
            out << vars_[i] << "^" << ord_[i];
            f2 = false;
        }
        out << ")";
    }
    return out.str();
}

template <class A, class B>
MSeries<B> mul_impl(const MSeries<A>& a, const MSeries<B>& b) {
    if (a.vars_ != b.vars_) throw Error("variable mismatch in series multiplication");
    MSeries<B> r(a.vars_);
    const int n = a.arity();
    for (int i = 0; i < n; ++i) {
        r.low_[i] = sat_add(a.low_[i], b.low_[i]);
        r.ord_[i] = std::min(sat_add(a.ord_[i], b.low_[i]), sat_add(b.ord_[i], a.low_[i]));
    }
    if (a.facet_trivial() && b.facet_trivial()) {
        r.ford_ = kExpInf;
    } else {
        std::array<int, 3> w = a.facet_trivial() ? b.fw_ : a.fw_;
        if (!a.facet_trivial() && !b.facet_trivial() && a.fw_ != b.fw_) {
            throw Error("incompatible precision facets in series multiplication");
        }
        r.fw_ = w;
        int wa = a.eff_wlow(w), wb = b.eff_wlow(w);
        r.ford_ = std::min(sat_add(a.ford_, wb), sat_add(b.ford_, wa));
        r.fwlow_ = sat_add(wa, wb);
    }
    for (const auto& [ea, va] : a.coeffs()) {
        for (const auto& [eb, vb] : b.coeffs()) {
            MSeries<Rat>::Key e{0, 0, 0};
            for (int i = 0; i < n; ++i) e[i] = sat_add(ea[i], eb[i]);
            if (!r.known(e)) continue;
            r.add_term(e, vb * va);
        }
    }
    r.prune();
    return r;
}

MRat operator*(const MRat& a, const MRat& b) { return mul_impl(a, b); }
MVec operator*(const MRat& a, const MVec& b) { return mul_impl(a, b); }

MRat lift_series(const LaurentSeries& s, const std::string& var,
                 const std::vector<std::string>& out_vars) {
    MRat one_d({var});
    one_d.set_low(0, std::min(s.low(), kExpInf));
    one_d.set_ord(0, s.order());
    for (const auto& [e, v] : s.coeffs()) one_d.add_term({e, 0, 0}, v);
    return one_d.embedded(out_vars);
}

MRat mrat_const(const Rat& c, const std::vector<std::string>& vars) {
    MRat r(vars);
    if (c != 0) r.add_term({0, 0, 0}, c);
    return r;
}

template <class V>
MSeries<V> slice_var(const MSeries<V>& a, int var, int e) {
    std::vector<std::string> out_vars;
    std::array<int, 3> keep{};
    int n = a.arity(), k = 0;
    for (int i = 0; i < n; ++i) {
        if (i == var) continue;
        out_vars.push_back(a.vars()[i]);
        keep[k++] = i;
    }
    MSeries<V> r(out_vars);
    if (e >= a.ord(var)) throw PrecisionExhausted("slice beyond variable precision");
    for (int j = 0; j < k; ++j) {
        r.set_low(j, a.low(keep[j]));
        r.set_ord(j, a.ord(keep[j]));
    }
    if (!a.facet_trivial()) {
        int rem = sat_add(a.facet_ord(), -sat_mul(a.facet_weight(var), e));
        bool all_zero = true;
        std::array<int, 3> w{0, 0, 0};
        for (int j = 0; j < k; ++j) {
            w[j] = a.facet_weight(keep[j]);
            all_zero = all_zero && w[j] == 0;
        }
        if (all_zero) {
            if (rem <= 0) {
                for (int j = 0; j < k; ++j) r.set_ord(j, -kExpInf);
            }
        } else {
            r.set_facet(w, rem);
        }
    }
    for (const auto& [key, v] : a.coeffs()) {
        if (key[var] != e) continue;
        std::array<int, 3> out{0, 0, 0};
        for (int j = 0; j < k; ++j) out[j] = key[keep[j]];
        r.add_term(out, v);
    }
    r.prune();
    return r;
}

LaurentSeries to_laurent_1d(const MRat& a) {
    int keep = -1;
    for (int i = 0; i < a.arity(); ++i) {
        bool used = false;
        for (const auto& [e, v] : a.coeffs()) used = used || e[i] != 0;
        if (used || a.ord(i) < kExpInf || a.facet_weight(i) != 0) {
            if (keep >= 0 && used) throw Error("to_laurent_1d: series is not univariate");
            if (keep < 0) keep = i;
        }
    }
    if (keep < 0) keep = 0;
    int order = a.ord(keep);
    if (!a.facet_trivial()) {
        int w = a.facet_weight(keep);
        if (w > 0) {
            long long bound = (static_cast<long long>(a.facet_ord()) + w - 1) / w;
            order = std::min<long long>(order, bound);
        } else if (a.facet_ord() <= 0) {
            order = -kExpInf;
        }
    }
    std::map<int, Rat> c;
    for (const auto& [e, v] : a.coeffs()) c[e[keep]] = v;
    return LaurentSeries::from_coeffs(std::move(c), order);
}

MRat lp_invert(const MRat& s, int laurent_var, int series_var, std::optional<int> sv_order) {
    const int lv = laurent_var, sv = series_var;
    int first = s.low(sv);
    int sv_ord = std::min(s.ord(sv), sv_order.value_or(kExpInf));
    if (sv_ord >= kExpInf) {
        // exact in the series variable: only usable when a single column exists
        int max_col = first;
        for (const auto& [e, v] : s.coeffs()) max_col = std::max(max_col, e[sv]);
        if (!s.is_zero() && max_col != first) {
            throw PrecisionExhausted("lp_invert needs a series-variable truncation");
        }
        sv_ord = first + 1;
    }
    int sigma = first;
    LaurentSeries d;
    for (; sigma < sv_ord; ++sigma) {
        d = to_laurent_1d(slice_var(s, sv, sigma));
        if (!d.is_zero()) break;
    }
    if (sigma >= sv_ord || d.is_zero()) {
        throw ZeroDenominator("inverse of a series that is zero modulo its precision");
    }
    LaurentSeries dinv = d.inverse();
    const auto& vars = s.vars();
    MRat dinv_l = lift_series(dinv, vars[lv], vars);
    MRat shift(vars);
    {
        std::array<int, 3> e{0, 0, 0};
        e[sv] = -sigma;
        shift.add_term(e, 1);
        shift.set_low(sv, -sigma);
    }
    MRat unit = (s * shift) * dinv_l;  // 1 + (positive sv-valuation)
    MRat rmt = mrat_const(1, vars) - unit;
    const int relK = sv_ord - sigma;
    MRat acc = mrat_const(1, vars);
    MRat p = mrat_const(1, vars);
    for (int k = 1; k < relK; ++k) {
        p = p * rmt;
        if (p.is_zero()) break;
        acc = acc + p;
    }
    MRat out = (acc * dinv_l) * shift;
    // the geometric tail r^relK has sv-valuation >= relK - sigma... record the
    // honest sv order directly: inverse is valid modulo sv^(sv_ord - 2*sigma)
    out.set_ord(sv, std::min(out.ord(sv), sv_ord - 2 * sigma));
    out.prune();
    return out;
}

PowerCache::PowerCache(MRat s, int laurent_var, int series_var, std::array<int, 3> weights)
    : s_(std::move(s)), lv_(laurent_var), sv_(series_var), w_(weights) {
    for (const auto& [e, v] : s_.coeffs()) {
        if (wdot(w_, e, s_.arity()) < 1) {
            throw Error("substituent has a monomial of weighted valuation < 1");
        }
    }
    pows_[0] = mrat_const(1, s_.vars());
    pows_[1] = s_;
}

const MRat& PowerCache::power(long long m) {
    auto it = pows_.find(m);
    if (it != pows_.end()) return it->second;
    if (m > 0) {
        const MRat& prev = power(m - 1);
        return pows_.emplace(m, prev * s_).first->second;
    }
    if (pows_.find(-1) == pows_.end()) {
        pows_.emplace(-1, lp_invert(s_, lv_, sv_));
    }
    const MRat& prev = power(m + 1);
    return pows_.emplace(m, prev * pows_.at(-1)).first->second;
}

template <class V>
MSeries<V> substitute_var_by(const MSeries<V>& A, int v, PowerCache& pows) {
    const MRat& s = pows.base();
    if (!A.facet_trivial() && A.facet_weight(v) != 0) {
        throw Error("substitute_var_by: unsupported facet on the substituted variable");
    }
    std::vector<std::string> out_vars;
    for (int i = 0; i < A.arity(); ++i) {
        if (i != v) out_vars.push_back(A.vars()[i]);
    }
    std::vector<std::string> pass_vars = out_vars;
    for (const auto& name : s.vars()) {
        if (std::find(out_vars.begin(), out_vars.end(), name) == out_vars.end()) {
            out_vars.push_back(name);
        }
    }
    if (out_vars.size() > 3) throw Error("substitute_var_by: more than 3 variables");

    // collect the v-exponents present
    std::map<int, bool> ms;
    for (const auto& [e, val] : A.coeffs()) ms[e[v]] = true;

    MSeries<V> acc(out_vars);
    for (const auto& [m, unused] : ms) {
        (void)unused;
        MSeries<V> sl = slice_var(A, v, m).embedded(out_vars);
        MRat pw = pows.power(m).embedded(out_vars);
        acc = acc + pw * sl;
    }
    // tail of A in x_v: unknown from A.ord(v) on; powers s^m (m >= ord) have
    // weighted valuation >= m, so the tail sits at weighted degree >= ord.
    if (A.ord(v) < kExpInf) {
        if (A.ord(v) <= 0) throw PrecisionExhausted("substitution: no known coefficients");
        std::array<int, 3> w{0, 0, 0};
        const auto& sw = pows.weights();
        for (int i = 0; i < s.arity(); ++i) {
            const std::string& name = s.vars()[i];
            for (size_t k = 0; k < out_vars.size(); ++k) {
                if (out_vars[k] == name) w[k] = sw[i];
            }
        }
        int tail_ford = A.ord(v);
        // passthrough variables contribute their weighted lows
        for (const auto& name : pass_vars) {
            int ai = A.var_index(name);
            size_t k = 0;
            for (; k < out_vars.size(); ++k) {
                if (out_vars[k] == name) break;
            }
            tail_ford = sat_add(tail_ford, sat_mul(w[k], A.low(ai)));
        }
        std::array<int, 3> aw{acc.facet_weight(0), acc.facet_weight(1), acc.facet_weight(2)};
        if (acc.facet_trivial()) {
            acc.set_facet(w, tail_ford);
        } else if (aw == w) {
            acc.set_facet(w, std::min(acc.facet_ord(), tail_ford));
        } else {
            throw Error("substitute_var_by: facet conflict with tail bound");
        }
        acc.prune();
    }
    return acc;
}

template <class V>
MSeries<V> substitute_covering(const MSeries<V>& A, int v, const MRat& s, int laurent_var,
                               int series_var, const std::array<int, 3>& weights,
                               const std::vector<std::pair<std::string, int>>& out_ords) {
    int extra = 4;
    for (int attempt = 0; attempt < 3; ++attempt) {
        // widen the substituent's truncation until the output covers out_ords
        MRat::Key t{kExpInf, kExpInf, kExpInf};
        int span = 0;
        for (const auto& [name, ord] : out_ords) span = std::max(span, std::abs(ord));
        int amp = std::max(1, std::abs(A.low(v)));
        t[laurent_var] = sat_add(sat_mul(span, amp + 1), extra);
        t[series_var] = sat_add(sat_mul(span, amp + 1), extra);
        MRat sw = s.truncated(t);
        PowerCache cache(sw, laurent_var, series_var, weights);
        MSeries<V> out = substitute_var_by(A, v, cache);
        bool ok = true;
        for (const auto& [name, ord] : out_ords) {
            int i = out.var_index(name);
            if (out.ord(i) < ord) ok = false;
        }
        if (ok) return out;
        extra = extra * 4 + 8;
    }
    throw PrecisionExhausted("substitution cannot cover the requested window");
}

template <class V>
WindowCompare<V> compare_on_window(const MSeries<V>& a, const MSeries<V>& b, const Window& w) {
    if (a.vars() != b.vars()) throw Error("variable mismatch in window comparison");
    if (static_cast<int>(w.range.size()) != a.arity()) throw Error("window arity mismatch");
    WindowCompare<V> out;
    std::array<int, 3> e{0, 0, 0};
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < a.arity(); ++i) {
        lo[i] = w.range[i].first;
        hi[i] = w.range[i].second;
    }
    for (int i = a.arity(); i < 3; ++i) lo[i] = hi[i] = 0;
    for (e[0] = lo[0]; e[0] <= hi[0]; ++e[0]) {
        for (e[1] = lo[1]; e[1] <= hi[1]; ++e[1]) {
            for (e[2] = lo[2]; e[2] <= hi[2]; ++e[2]) {
                if (!a.known(e) || !b.known(e)) {
                    ++out.unknown;
                    continue;
                }
                ++out.compared;
                V va = a.at(e), vb = b.at(e);
                if (va == vb) continue;
                if (out.mismatch) continue;
                MismatchWitness wit;
                wit.exponents = e;
                if constexpr (std::is_same_v<V, Rat>) {
                    wit.lhs = rat_to_string(va);
                    wit.rhs = rat_to_string(vb);
                } else {
                    for (const auto& [i, q] : va.c) {
                        if (vb.at(i) != q) {
                            wit.component = i;
                            break;
                        }
                    }
                    if (wit.component < 0) {
                        for (const auto& [i, q] : vb.c) {
                            if (va.at(i) != q) {
                                wit.component = i;
                                break;
                            }
                        }
                    }
                    wit.lhs = rat_to_string(va.at(wit.component));
                    wit.rhs = rat_to_string(vb.at(wit.component));
                }
                out.mismatch = wit;
            }
        }
    }
    return out;
}

template class MSeries<Rat>;
template class MSeries<Vec>;
template MSeries<Rat> slice_var<Rat>(const MSeries<Rat>&, int, int);
template MSeries<Vec> slice_var<Vec>(const MSeries<Vec>&, int, int);
template MSeries<Rat> substitute_var_by<Rat>(const MSeries<Rat>&, int, PowerCache&);
template MSeries<Vec> substitute_var_by<Vec>(const MSeries<Vec>&, int, PowerCache&);
template MSeries<Rat> substitute_covering<Rat>(const MSeries<Rat>&, int, const MRat&, int, int,
                                               const std::array<int, 3>&,
                                               const std::vector<std::pair<std::string, int>>&);
template MSeries<Vec> substitute_covering<Vec>(const MSeries<Vec>&, int, const MRat&, int, int,
                                               const std::array<int, 3>&,
                                               const std::vector<std::pair<std::string, int>>&);
template WindowCompare<Rat> compare_on_window<Rat>(const MSeries<Rat>&, const MSeries<Rat>&, const Window&);
template WindowCompare<Vec> compare_on_window<Vec>(const MSeries<Vec>&, const MSeries<Vec>&, const Window&);

}  // namespace fgva
