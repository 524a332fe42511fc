#include "cubiclattice/rational.hpp"

#include <ostream>
#include <sstream>

namespace cubiclattice {

std::string Rational::decimal_str(int digits) const {
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled_num = numerator() * scale;
    Integer q;
    // truncate toward zero
    mpz_tdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), denominator().get_mpz_t());

    bool negative = q < 0;
    Integer mag = negative ? Integer(-q) : q;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    std::string out;
    if (negative) out += '-';
    if (digits == 0) {
        out += s;
    } else {
        out += s.substr(0, s.size() - static_cast<size_t>(digits));
        out += '.';
        out += s.substr(s.size() - static_cast<size_t>(digits));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace cubiclattice
