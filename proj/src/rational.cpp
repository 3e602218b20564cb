#include "geoclique/rational.hpp"

#include "geoclique/errors.hpp"

#include <sstream>

namespace geoclique {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        require(den != 0, "rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw InvalidInput("cannot parse rational '" + s + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace geoclique
