#include "fgva/literal.hpp"

#include <cctype>

namespace fgva {

namespace {

struct Lexer {
    std::string_view text;
    size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= text.size();
    }
    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in series literal");
    }
    bool at_digit() {
        skip_ws();
        return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    }
    bool at_ident() {
        skip_ws();
        return i < text.size() &&
               (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
    }
    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected digits in series literal");
        return std::string(text.substr(start, i - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        if (i == start) throw ParseError("expected identifier in series literal");
        return std::string(text.substr(start, i - start));
    }
    int integer() {
        skip_ws();
        bool neg = eat('-');
        long long v = std::stoll(digits());
        return static_cast<int>(neg ? -v : v);
    }
    Rat rational() {
        boost::multiprecision::cpp_int num(digits());
        if (eat('/')) {
            boost::multiprecision::cpp_int den(digits());
            if (den == 0) throw ParseError("zero denominator in series literal");
            return Rat(num, den);
        }
        return Rat(num);
    }
};

void note_var(ParsedSeries& out, const std::string& v) {
    for (const auto& seen : out.vars_in_order) {
        if (seen == v) return;
    }
    out.vars_in_order.push_back(v);
}

}  // namespace

ParsedSeries parse_series_text(std::string_view text) {
    ParsedSeries out;
    Lexer lx{text};
    bool neg = lx.eat('-');
    while (true) {
        ParsedTerm term;
        term.coef = 1;
        bool saw_factor = false;
        while (true) {
            if (lx.at_digit()) {
                term.coef *= lx.rational();
                saw_factor = true;
            } else if (lx.at_ident()) {
                size_t mark = lx.i;
                std::string name = lx.ident();
                if (name == "O" && lx.peek() == '(') {
                    if (saw_factor) throw ParseError("precision marker must stand alone");
                    lx.expect('(');
                    while (true) {
                        std::string v = lx.ident();
                        lx.expect('^');
                        out.orders[v] = lx.integer();
                        note_var(out, v);
                        if (!lx.eat(',')) break;
                    }
                    lx.expect(')');
                    if (!lx.done()) throw ParseError("precision marker must end the literal");
                    return out;
                }
                lx.i = mark;
                name = lx.ident();
                int e = 1;
                if (lx.eat('^')) e = lx.integer();
                term.vars[name] += e;
                note_var(out, name);
                saw_factor = true;
            } else {
                throw ParseError("expected a factor in series literal");
            }
            if (!lx.eat('*')) break;
        }
        if (!saw_factor) throw ParseError("empty term in series literal");
        if (neg) term.coef = -term.coef;
        for (auto it = term.vars.begin(); it != term.vars.end();) {
            it = it->second == 0 ? term.vars.erase(it) : std::next(it);
        }
        out.terms.push_back(std::move(term));
        if (lx.done()) return out;
        if (lx.eat('+')) {
            neg = false;
        } else if (lx.eat('-')) {
            neg = true;
        } else {
            throw ParseError("expected '+' or '-' between terms");
        }
    }
}

LaurentSeries parse_laurent(std::string_view text, std::string* var_out,
                            const std::string& default_var) {
    ParsedSeries p = parse_series_text(text);
    if (p.vars_in_order.size() > 1) {
        throw ParseError("expected a univariate series literal");
    }
    std::string var = p.vars_in_order.empty() ? default_var : p.vars_in_order.front();
    if (var_out) *var_out = var;
    int order = kExpInf;
    if (auto it = p.orders.find(var); it != p.orders.end()) order = it->second;
    std::map<int, Rat> c;
    for (const auto& t : p.terms) {
        int e = 0;
        if (!t.vars.empty()) e = t.vars.begin()->second;
        c[e] += t.coef;
    }
    return LaurentSeries::from_coeffs(std::move(c), order);
}

}  // namespace fgva
