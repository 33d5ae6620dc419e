#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fgva/laurent.hpp"
#include "fgva/rational.hpp"

namespace fgva {

// Parsed form of the ASCII series-literal grammar:
//   series := term (("+"|"-") term)* ["+" "O(" ident "^" int ["," ident "^" int] ")"]
//   term   := [rat "*"] factor ("*" factor)* | rat
//   factor := ident ["^" int]
//   rat    := ["-"] digits ["/" digits]
// Whitespace-insensitive; parsing and printing round-trip exactly.
struct ParsedTerm {
    Rat coef;
    std::map<std::string, int> vars;  // var name -> exponent
};

struct ParsedSeries {
    std::vector<ParsedTerm> terms;
    std::map<std::string, int> orders;        // from the O(...) marker, per var
    std::vector<std::string> vars_in_order;   // first-appearance order
};

ParsedSeries parse_series_text(std::string_view text);

// Univariate assembly; rejects literals mentioning more than one variable.
// The variable name is reported through var_out (default when constant-only).
LaurentSeries parse_laurent(std::string_view text, std::string* var_out = nullptr,
                            const std::string& default_var = "x");

}  // namespace fgva
