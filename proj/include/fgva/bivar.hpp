#pragma once

#include <utility>

#include "fgva/mseries.hpp"
#include "fgva/report.hpp"

namespace fgva {

// Expansion conventions for bivariate series.
//  PP: power series in both variables (lows >= 0)
//  LP: Laurent in the first variable, series-like in the second
//      (finite lows in both; the second is >= 0 for honest C((x))[[z]] data)
//  WW: finite exponent window in both variables (finite lows and orders)
// All three share the coefficient semantics of MSeries: exact zero below the
// lows, unknown at/above the orders.
enum class Conv { PP, LP, WW };

class BiSeries {
  public:
    BiSeries(Conv conv, MRat m);

    Conv conv() const { return conv_; }
    const MRat& m() const { return m_; }
    MRat& m() { return m_; }
    const std::string& var1() const { return m_.vars()[0]; }
    const std::string& var2() const { return m_.vars()[1]; }

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;

    std::string str() const { return m_.str(); }

  private:
    Conv conv_;
    MRat m_;
};

// Bivariate literal ("1 - x*z^2 + O(x^4, z^3)"); vars must appear in `vars`
// order when given, else they are taken in first-appearance order.
BiSeries parse_biseries(std::string_view text, Conv conv,
                        std::vector<std::string> vars = {});

// The unique algebra embedding of the fraction field of C[[x1,x2]] into
// C((a))((b)) for direction (a,b), restricting to the identity on C[[x1,x2]].
// Returns num/den expanded Laurent in direction.first; precision gives the
// requested exclusive orders in (first, second).
BiSeries iota_expand(const BiSeries& num, const BiSeries& den,
                     std::pair<std::string, std::string> direction,
                     std::pair<int, int> precision);

// psi(x,z) -> psi(x, g(z)) on LP series.
BiSeries substitute_second(const BiSeries& a, const GSeries& g);

// Replace target_var^m by s^m throughout (negative m via Laurent inversion of
// s). s is an LP series whose first variable is its Laurent direction. When
// out_ords is given the substituent is truncated/retried until the output
// rectangle covers those (exclusive) orders.
BiSeries substitute_var(const BiSeries& a, const std::string& target_var, const BiSeries& s,
                        std::optional<std::vector<std::pair<std::string, int>>> out_ords = std::nullopt);

// Weighted valuation for substitution-tail bookkeeping: weight 1 on the
// Laurent variable and the least admissible weight on the series variable.
std::array<int, 3> derive_weights(const MRat& s, int laurent_var, int series_var);

// Composition h(s) of a univariate series (h.low >= 0) with a PP series of
// positive total valuation, carried to total degree < total_ord.
MRat pp_compose(const LaurentSeries& h, const MRat& s, int total_ord);

// Verifies (A|_{x1=F(x0,x2)})|_{x0=f_inv(f(x1)-f(x2))} = A on the window.
class FormalGroupLaw;
CheckReport double_substitution_roundtrip(const BiSeries& a, const FormalGroupLaw& F,
                                          const Window& window);

std::string window_to_json(const MRat& reference, const Window& w);

}  // namespace fgva
