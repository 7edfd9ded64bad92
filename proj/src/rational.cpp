#include "chromata/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace chromata {

Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return fail();

    auto to_i64 = [&](const std::string& part) {
        if (part.empty()) fail();
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != part.size()) fail();
        return static_cast<std::int64_t>(v);
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || frac.size() > 18) fail();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational r = Rational(to_i64(whole)) + Rational(to_i64(frac), den);
        return neg ? -r : r;
    }
    return Rational(to_i64(s));
}

}  // namespace chromata
