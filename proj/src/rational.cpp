#include "fgva/rational.hpp"

#include <cctype>

namespace fgva {

Rat rat_from_string(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    skip_ws();
    auto read_digits = [&]() -> boost::multiprecision::cpp_int {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected digits in rational: '" + std::string(text) + "'");
        return boost::multiprecision::cpp_int(std::string(text.substr(start, i - start)));
    };
    boost::multiprecision::cpp_int num = read_digits();
    boost::multiprecision::cpp_int den = 1;
    skip_ws();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        den = read_digits();
        if (den == 0) throw ParseError("zero denominator in rational literal");
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters in rational: '" + std::string(text) + "'");
    Rat q(num, den);
    return neg ? Rat(-q) : q;
}

Rat rat_binomial(long long n, long long k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (long long j = 0; j < k; ++j) {
        r *= Rat(n - j, j + 1);
    }
    return r;
}

Rat rat_factorial(long long k) {
    Rat r = 1;
    for (long long j = 2; j <= k; ++j) r *= j;
    return r;
}

Rat rat_pow(const Rat& q, long long e) {
    if (e == 0) return 1;
    bool inv = e < 0;
    unsigned long long n = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    if (inv && q == 0) throw DomainViolation("0 raised to a negative power");
    Rat base = q, acc = 1;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return inv ? Rat(1) / acc : acc;
}

}  // namespace fgva
