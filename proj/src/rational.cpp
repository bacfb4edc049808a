#include "parqsym/rational.hpp"

#include <cctype>

namespace parqsym {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw InvariantError("empty rational literal");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
            throw InvariantError("bad rational literal: " + text);
    }
    mpq_class x;
    if (x.set_str(text, 10) != 0) throw InvariantError("bad rational literal: " + text);
    if (x.get_den() == 0) throw InvariantError("zero denominator: " + text);
    x.canonicalize();
    return x;
}

std::string rational_to_string(const Rational& x) {
    mpq_class canonical = x;
    canonical.canonicalize();
    return canonical.get_str();
}

}  // namespace parqsym
