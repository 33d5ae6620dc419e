#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fgva {

enum class Verdict { pass, fail, insufficient };

std::string verdict_name(Verdict v);

// Structured verdict with a first-mismatch witness. Fail always carries a
// witness; pass means every jointly-known window coefficient compared equal.
struct CheckReport {
    std::string check;
    std::string inputs;
    std::string window;
    Verdict verdict = Verdict::pass;
    std::optional<int> multiplier;  // the l or k that worked
    struct Witness {
        std::vector<int> exponents;
        std::string lhs, rhs;
        std::string note;
    };
    std::optional<Witness> witness;
    long long compared = 0;  // jointly-known points compared
    long long unknown = 0;   // requested points outside joint precision
    std::string detail;

    bool passed() const { return verdict == Verdict::pass; }
    std::string to_text() const;
    std::string to_json() const;  // one-line JSON object
};

}  // namespace fgva
