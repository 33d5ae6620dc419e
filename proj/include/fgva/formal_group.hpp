#pragma once

#include <string>

#include "fgva/bivar.hpp"
#include "fgva/laurent.hpp"
#include "fgva/mseries.hpp"
#include "fgva/report.hpp"

namespace fgva {

// A one-dimensional commutative formal group law over Q, validated to a
// total-degree order (kExpInf for the exact polynomial builtins).
class FormalGroupLaw {
  public:
    static FormalGroupLaw additive();
    static FormalGroupLaw multiplicative();

    // Wrap PP data claimed valid to total degree <= order; fg_check is run
    // and a failing law is rejected (DomainViolation).
    static FormalGroupLaw from_series(MRat f, int order, std::string name = "custom");

    const MRat& series() const { return f_; }
    int order() const { return order_; }
    bool exact() const { return order_ >= kExpInf; }
    const std::string& name() const { return name_; }

    // F as a series in (a, b) ready for substitution x1 = F(a, b); truncated
    // so that negative powers are computable (iota_{a,b} convention).
    MRat renamed(const std::string& a, const std::string& b) const;

    bool operator==(const FormalGroupLaw& o) const;

  private:
    FormalGroupLaw(MRat f, int order, std::string name)
        : f_(std::move(f)), order_(order), name_(std::move(name)) {}

    MRat f_;     // vars ("x","y")
    int order_;  // total-degree validity
    std::string name_;
};

// Verdict on the unit laws, associativity, and commutativity to total degree
// <= order, with first-mismatch exponents. Reports, never throws.
CheckReport fg_check(const MRat& f, int order);

FormalGroupLaw fg_builtin(const std::string& name);

// F(x,y) = f_inv(f(x) + f(y)), validated to `order` (f known to order+1).
FormalGroupLaw fg_from_log(const GSeries& f, int order);

// The unique f with f(0)=0, f'(0)=1, f(F(x,y)) = f(x)+f(y); computed by
// f = int dt / (dF/dy)(t,0) and re-verified against the defining identity.
GSeries fg_log(const FormalGroupLaw& F, int order);

// F_g(x,y) = g_inv(F(g(x), g(y))), validated to `order`.
FormalGroupLaw fg_conjugate(const FormalGroupLaw& F, const GSeries& g, int order);

// Compare two scalar series on the simplex e_1+...+e_n <= total_max (points
// below the lows count as exact zeros).
WindowCompare<Rat> compare_on_simplex(const MRat& a, const MRat& b, int total_max);

}  // namespace fgva
