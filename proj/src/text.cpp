#include "fpvcodes/text.hpp"

#include <cctype>

namespace fpv {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw invalid_input("bad integer: '" + s + "'");
    }
    if (pos != s.size()) throw invalid_input("bad integer: '" + s + "'");
    return v;
}

Poly parse_poly_expression(const PrimeField& field, const std::string& s) {
    std::vector<std::int64_t> coeffs;
    auto bump = [&](std::size_t exp, std::int64_t c) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        coeffs[exp] += c;
    };
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        std::int64_t coef = 1;
        const bool have_digits = j > i;
        if (have_digits) coef = parse_i64(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            std::size_t exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw invalid_input("bad polynomial: '" + s + "'");
                exp = static_cast<std::size_t>(parse_i64(s.substr(i, k - i)));
                i = k;
            }
            bump(exp, sign * coef);
        } else {
            if (!have_digits) throw invalid_input("bad polynomial: '" + s + "'");
            bump(0, sign * coef);
        }
    }
    return Poly(field, std::move(coeffs));
}

} // namespace

Poly parse_poly(const PrimeField& field, const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw invalid_input("empty polynomial");
    if (s.find('x') != std::string::npos) return parse_poly_expression(field, s);
    std::vector<std::int64_t> coeffs;
    for (const std::string& part : split_top_level(s, ',')) coeffs.push_back(parse_i64(part));
    return Poly(field, std::move(coeffs));
}

RPoly parse_rpoly(const PrimeField& field, const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw invalid_input("empty polynomial");
    std::vector<RElem> coeffs;
    for (const std::string& part : split_top_level(s, ',')) {
        coeffs.push_back(parse_relem(field, part));
    }
    return RPoly(field, coeffs);
}

Theta parse_theta(const PrimeField& field, const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s == "1-2v") return Theta(field, 1, -2);
    if (s == "-1+2v") return Theta(field, -1, 2);
    const RElem e = parse_relem(field, s);
    return Theta(field, static_cast<std::int64_t>(e.a()), static_cast<std::int64_t>(e.b()));
}

std::string format_poly(const Poly& f) { return f.to_string(); }

std::string format_rpoly(const RPoly& f) { return f.to_string(); }

} // namespace fpv
