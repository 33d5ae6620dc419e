#pragma once

#include <map>
#include <optional>
#include <string>

#include "fgva/rational.hpp"

namespace fgva {

// Exponent/precision values saturate at +-kExpInf; kExpInf order means "exact".
inline constexpr int kExpInf = 1 << 28;

int sat_add(int a, int b);
int sat_mul(int a, int b);

class GSeries;

// Univariate Laurent series over Rat, known modulo x^order().
// Coefficients below low() are exactly zero; coefficients at exponents
// >= order() are unknown. low() is normalized to the stored support.
class LaurentSeries {
  public:
    LaurentSeries() : low_(kExpInf), order_(kExpInf) {}

    static LaurentSeries zero(int order = kExpInf);
    static LaurentSeries constant(const Rat& c);
    static LaurentSeries monomial(const Rat& c, int exp, int order = kExpInf);
    static LaurentSeries x() { return monomial(1, 1); }
    static LaurentSeries from_coeffs(std::map<int, Rat> coeffs, int order = kExpInf);

    int low() const { return low_; }
    int order() const { return order_; }
    bool exact() const { return order_ >= kExpInf; }
    // Zero modulo the series' own precision.
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^e; throws PrecisionExhausted when e >= order().
    Rat coeff(int e) const;
    const std::map<int, Rat>& coeffs() const { return c_; }

    // First exponent with a nonzero coefficient, if any within precision.
    std::optional<int> true_low() const;

    LaurentSeries truncated(int order) const;
    LaurentSeries shifted(int k) const;  // multiply by x^k

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator/(const LaurentSeries& o) const;
    LaurentSeries operator*(const Rat& c) const;

    bool operator==(const LaurentSeries& o) const {
        return low_ == o.low_ && order_ == o.order_ && c_ == o.c_;
    }

    // Multiplicative inverse. An exact non-monomial input has an infinite
    // inverse; callers must truncate first (PrecisionExhausted otherwise).
    LaurentSeries inverse() const;
    LaurentSeries pow(long long m) const;

    // h(g(x)) for g with positive valuation; unit linear coefficient is
    // required whenever h has negative exponents. Output order is the
    // provable one: min(h.order, g.order + h.low - 1).
    LaurentSeries compose(const LaurentSeries& g) const;

    LaurentSeries derivative() const;
    LaurentSeries integral() const;

    // exp(a), a with positive valuation; log(a), a with constant term 1.
    LaurentSeries exp_series() const;
    LaurentSeries log_series() const;

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();

    int low_;
    int order_;
    std::map<int, Rat> c_;
};

inline LaurentSeries operator*(const Rat& c, const LaurentSeries& s) { return s * c; }

// Do a and b agree coefficient-exactly where both are known, up to x^upto?
bool agree_mod(const LaurentSeries& a, const LaurentSeries& b, int upto);

// The group G(Q[[x]]) of series with f(0)=0, f'(0)=1 under composition.
class GSeries {
  public:
    explicit GSeries(LaurentSeries s);

    const LaurentSeries& series() const { return s_; }
    int order() const { return s_.order(); }

    GSeries compose(const GSeries& inner) const { return GSeries(s_.compose(inner.series())); }

    // Compositional inverse modulo x^order; both round trips are asserted.
    GSeries reversion(int order) const;

  private:
    LaurentSeries s_;
};

// log(1+x) and e^x - 1 to the given order.
LaurentSeries log1p_series(int order);
LaurentSeries expm1_series(int order);
// e^(c*x) to the given order.
LaurentSeries exp_scaled(const Rat& c, int order);

}  // namespace fgva
