#include "fgva/report.hpp"

#include <json.hpp>
#include <sstream>

namespace fgva {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::insufficient: return "insufficient-precision";
    }
    return "?";
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << "[" << verdict_name(verdict) << "] " << check;
    if (!inputs.empty()) out << " (" << inputs << ")";
    if (!window.empty()) out << " window " << window;
    if (multiplier) out << " multiplier=" << *multiplier;
    if (witness) {
        out << " witness@(";
        for (size_t i = 0; i < witness->exponents.size(); ++i) {
            if (i) out << ",";
            out << witness->exponents[i];
        }
        out << ") lhs=" << witness->lhs << " rhs=" << witness->rhs;
        if (!witness->note.empty()) out << " [" << witness->note << "]";
    }
    if (compared || unknown) out << " compared=" << compared << " unknown=" << unknown;
    if (!detail.empty()) out << " -- " << detail;
    return out.str();
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["inputs"] = inputs;
    j["window"] = window;
    j["verdict"] = verdict_name(verdict);
    j["multiplier"] = multiplier ? nlohmann::json(*multiplier) : nlohmann::json(nullptr);
    if (witness) {
        nlohmann::json w;
        w["exponents"] = witness->exponents;
        w["lhs"] = witness->lhs;
        w["rhs"] = witness->rhs;
        if (!witness->note.empty()) w["note"] = witness->note;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["compared"] = compared;
    j["unknown"] = unknown;
    if (!detail.empty()) j["detail"] = detail;
    return j.dump();
}

}  // namespace fgva
