#include "hla/rational.hpp"

#include <cctype>

#include "hla/error.hpp"

namespace hla {

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!is_int(num)) throw ParseError("invalid rational '" + std::string(s) + "'");
    if (slash != std::string_view::npos) {
        const std::string_view den = s.substr(slash + 1);
        if (!is_int(den) || den.front() == '-' || den.front() == '+')
            throw ParseError("invalid rational '" + std::string(s) + "'");
    }
    Rational r(std::string(s), 10);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += rational_str(v[i]);
    }
    s += ')';
    return s;
}

}  // namespace hla
