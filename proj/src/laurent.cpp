#include "fgva/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fgva {

int sat_add(int a, int b) {
    // +-kExpInf are absorbing ("exact" / "nothing known").
    if (a == kExpInf || b == kExpInf) return kExpInf;
    if (a == -kExpInf || b == -kExpInf) return -kExpInf;
    long long s = static_cast<long long>(a) + b;
    if (s >= kExpInf) return kExpInf;
    if (s <= -kExpInf) return -kExpInf;
    return static_cast<int>(s);
}

int sat_mul(int a, int b) {
    long long s = static_cast<long long>(a) * b;
    if (s > kExpInf) return kExpInf;
    if (s < -kExpInf) return -kExpInf;
    return static_cast<int>(s);
}

void LaurentSeries::normalize() {
    if (order_ > kExpInf) order_ = kExpInf;
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0 || it->first >= order_) {
            it = c_.erase(it);
        } else {
            ++it;
        }
    }
    low_ = c_.empty() ? order_ : c_.begin()->first;
}

LaurentSeries LaurentSeries::zero(int order) {
    LaurentSeries s;
    s.order_ = order;
    s.low_ = order;
    return s;
}

LaurentSeries LaurentSeries::constant(const Rat& c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::monomial(const Rat& c, int exp, int order) {
    LaurentSeries s;
    s.order_ = order;
    if (c != 0 && exp < order) s.c_[exp] = c;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(std::map<int, Rat> coeffs, int order) {
    LaurentSeries s;
    s.order_ = order;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

Rat LaurentSeries::coeff(int e) const {
    if (e >= order_) {
        throw PrecisionExhausted("coefficient of x^" + std::to_string(e) +
                                 " requested beyond order " + std::to_string(order_));
    }
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

std::optional<int> LaurentSeries::true_low() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

LaurentSeries LaurentSeries::truncated(int order) const {
    LaurentSeries s(*this);
    s.order_ = std::min(order_, order);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s;
    s.order_ = sat_add(order_, k);
    for (const auto& [e, v] : c_) s.c_[sat_add(e, k)] = v;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(*this);
    for (auto& [e, v] : s.c_) v = -v;
    return s;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    LaurentSeries s;
    s.order_ = std::min(order_, o.order_);
    s.c_ = c_;
    for (const auto& [e, v] : o.c_) s.c_[e] += v;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    LaurentSeries s;
    s.order_ = std::min(sat_add(order_, o.low_), sat_add(o.order_, low_));
    for (const auto& [ea, va] : c_) {
        for (const auto& [eb, vb] : o.c_) {
            int e = sat_add(ea, eb);
            if (e >= s.order_) continue;
            s.c_[e] += va * vb;
        }
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator*(const Rat& k) const {
    if (k == 0) return zero(order_ == kExpInf ? kExpInf : sat_add(order_, 0));
    LaurentSeries s(*this);
    for (auto& [e, v] : s.c_) v *= k;
    return s;
}

LaurentSeries LaurentSeries::operator/(const LaurentSeries& o) const { return *this * o.inverse(); }

LaurentSeries LaurentSeries::inverse() const {
    auto tl = true_low();
    if (!tl) {
        throw DivisionByIndeterminate("inverse of a series that is zero modulo its order");
    }
    int m = *tl;
    if (exact()) {
        if (c_.size() == 1) {
            return monomial(Rat(1) / c_.begin()->second, -m);
        }
        throw PrecisionExhausted("inverse of an exact non-monomial series is infinite; truncate first");
    }
    int rel = order_ - m;  // relative precision of the unit part
    const Rat u0 = c_.begin()->second;
    std::map<int, Rat> v;
    v[0] = Rat(1) / u0;
    for (int n = 1; n < rel; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) {
            auto it = c_.find(m + k);
            if (it == c_.end()) continue;
            auto jt = v.find(n - k);
            if (jt == v.end()) continue;
            acc += it->second * jt->second;
        }
        if (acc != 0) v[n] = -acc / u0;
    }
    std::map<int, Rat> out;
    for (auto& [e, val] : v) out[e - m] = std::move(val);
    return from_coeffs(std::move(out), rel - m);
}

LaurentSeries LaurentSeries::pow(long long m) const {
    if (m == 0) return constant(1);
    if (m < 0) return inverse().pow(-m);
    LaurentSeries base = *this;
    LaurentSeries acc = constant(1);
    unsigned long long n = static_cast<unsigned long long>(m);
    while (n) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& g) const {
    auto gl = g.true_low();
    if ((gl ? *gl : g.order()) < 1) {
        throw DomainViolation("composition requires a substituent of positive valuation");
    }
    if (!gl && low_ < 0) {
        throw DivisionByIndeterminate("substituent indistinguishable from zero under negative powers");
    }
    if (low_ < 0 && *gl != 1) {
        throw DomainViolation("negative powers need a substituent of valuation exactly 1");
    }
    int out_order = std::min(order_, sat_add(g.order(), low_ - 1));
    if (c_.empty()) return zero(out_order);
    if (!gl) {
        // g == 0 within precision: h(0), defined when h has no negative part.
        return constant(coeff(0)).truncated(out_order);
    }
    const bool finite = out_order < kExpInf;
    const int keep = finite ? sat_add(out_order, std::max(0, -low_) + 2) : kExpInf;
    LaurentSeries gw = g.truncated(keep);
    LaurentSeries acc = zero(kExpInf);
    LaurentSeries p = gw.pow(low_);
    if (finite) p = p.truncated(out_order);
    int m = low_;
    for (auto it = c_.begin(); it != c_.end(); ++it) {
        while (m < it->first) {
            p = p * gw;
            if (finite) p = p.truncated(out_order);
            ++m;
        }
        acc = acc + p * it->second;
    }
    return acc.truncated(out_order);
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries s;
    s.order_ = order_ == kExpInf ? kExpInf : order_ - 1;
    for (const auto& [e, v] : c_) {
        if (e == 0) continue;
        s.c_[e - 1] = v * e;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::integral() const {
    if (-1 < order_) {
        auto it = c_.find(-1);
        if (it != c_.end() && it->second != 0) {
            throw ResidueObstruction("integral of a series with an x^-1 term");
        }
    } else {
        throw PrecisionExhausted("cannot rule out an x^-1 term within precision");
    }
    LaurentSeries s;
    s.order_ = order_ == kExpInf ? kExpInf : order_ + 1;
    for (const auto& [e, v] : c_) s.c_[e + 1] = v / (e + 1);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::exp_series() const {
    if (low_ < 1 && !c_.empty() && c_.begin()->first < 1) {
        throw DomainViolation("exp requires positive valuation");
    }
    if (order_ < 1) throw PrecisionExhausted("exp: constant term not determinable");
    if (c_.empty()) return constant(1).truncated(order_ == kExpInf ? kExpInf : order_);
    if (exact()) throw PrecisionExhausted("exp of an exact nonzero series is infinite; truncate first");
    LaurentSeries acc = constant(1).truncated(order_);
    LaurentSeries p = constant(1);
    Rat fact = 1;
    for (int k = 1; k < order_; ++k) {
        p = (p * *this).truncated(order_);
        fact *= k;
        acc = acc + p * (Rat(1) / fact);
        if (p.is_zero()) break;
    }
    return acc;
}

LaurentSeries LaurentSeries::log_series() const {
    if (order_ < 1) throw PrecisionExhausted("log: constant term not determinable");
    if (coeff(0) != 1) throw DomainViolation("log requires constant term 1");
    LaurentSeries u = *this - constant(1);
    if (!u.c_.empty() && u.c_.begin()->first < 1) {
        throw DomainViolation("log requires a series of the form 1 + (positive valuation)");
    }
    if (u.is_zero()) return zero(u.order());
    if (exact()) throw PrecisionExhausted("log of an exact series is infinite; truncate first");
    LaurentSeries acc = zero(order_);
    LaurentSeries p = constant(1);
    for (int k = 1; k < order_; ++k) {
        p = (p * u).truncated(order_);
        acc = acc + p * Rat((k % 2 == 1) ? 1 : -1, k);
        if (p.is_zero()) break;
    }
    return acc;
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : c_) {
        Rat a = v;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << rat_to_string(a);
        } else {
            if (a != 1) out << rat_to_string(a) << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    if (first) out << "0";
    if (order_ < kExpInf) out << " + O(" << var << "^" << order_ << ")";
    return out.str();
}

bool agree_mod(const LaurentSeries& a, const LaurentSeries& b, int upto) {
    int hi = std::min({upto, a.order(), b.order()});
    int lo = std::min(a.low(), b.low());
    for (int e = lo; e < hi; ++e) {
        if (a.coeff(e) != b.coeff(e)) return false;
    }
    return true;
}

GSeries::GSeries(LaurentSeries s) : s_(std::move(s)) {
    if (s_.order() < 2) throw PrecisionExhausted("G-series needs order >= 2");
    if (s_.low() < 1 || (s_.true_low() && *s_.true_low() < 1)) {
        throw DomainViolation("G-series must have zero constant term");
    }
    if (s_.coeff(1) != 1) throw DomainViolation("G-series must have unit linear coefficient");
}

GSeries GSeries::reversion(int order) const {
    if (order < 2) throw DomainViolation("reversion needs order >= 2");
    if (s_.order() < order) {
        throw PrecisionExhausted("series known to order " + std::to_string(s_.order()) +
                                 " cannot be reverted to order " + std::to_string(order));
    }
    LaurentSeries g = s_.truncated(order);
    LaurentSeries b = LaurentSeries::x().truncated(order);
    std::map<int, Rat> bc{{1, 1}};
    for (int n = 2; n < order; ++n) {
        LaurentSeries comp = g.compose(LaurentSeries::from_coeffs(bc, order));
        Rat cn = comp.coeff(n);
        if (cn != 0) bc[n] = -cn;
    }
    b = LaurentSeries::from_coeffs(bc, order);
    LaurentSeries id = LaurentSeries::x().truncated(order);
    if (!(g.compose(b) == id) || !(b.compose(g) == id)) {
        throw Error("reversion round trip failed");
    }
    return GSeries(b);
}

LaurentSeries log1p_series(int order) {
    std::map<int, Rat> c;
    for (int n = 1; n < order; ++n) c[n] = Rat((n % 2 == 1) ? 1 : -1, n);
    return LaurentSeries::from_coeffs(std::move(c), order);
}

LaurentSeries expm1_series(int order) {
    std::map<int, Rat> c;
    Rat fact = 1;
    for (int n = 1; n < order; ++n) {
        fact *= n;
        c[n] = Rat(1) / fact;
    }
    return LaurentSeries::from_coeffs(std::move(c), order);
}

LaurentSeries exp_scaled(const Rat& c, int order) {
    std::map<int, Rat> m;
    Rat term = 1;
    m[0] = 1;
    for (int n = 1; n < order; ++n) {
        term = term * c / n;
        if (term != 0) m[n] = term;
    }
    return LaurentSeries::from_coeffs(std::move(m), order);
}

}  // namespace fgva
