#pragma once

#include <random>
#include <vector>

#include "fgva/laurent.hpp"

namespace fgva::testutil {

inline Rat random_rat(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    if (!allow_zero && n == 0) n = 1;
    return Rat(n, den(rng));
}

inline LaurentSeries random_laurent(std::mt19937_64& rng, int low, int order, int terms = 5) {
    std::uniform_int_distribution<int> expd(low, order - 1);
    std::map<int, Rat> c;
    for (int i = 0; i < terms; ++i) c[expd(rng)] = random_rat(rng);
    return LaurentSeries::from_coeffs(std::move(c), order);
}

inline GSeries random_gseries(std::mt19937_64& rng, int order) {
    std::map<int, Rat> c{{1, Rat(1)}};
    for (int e = 2; e < order; ++e) c[e] = random_rat(rng);
    return GSeries(LaurentSeries::from_coeffs(std::move(c), order));
}

// Dense polynomial convolution kept independent of LaurentSeries for oracles.
inline std::vector<Rat> polymul(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t upto) {
    std::vector<Rat> out(upto, Rat(0));
    for (size_t i = 0; i < a.size() && i < upto; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < upto; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace fgva::testutil
