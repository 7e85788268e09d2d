#include "tw/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tw {

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("laurent: division by zero");
    Laurent rem = *this;
    Laurent quot;
    const auto lead = [](const Laurent& p) { return *p.c_.rbegin(); };
    auto [de, dc] = lead(divisor);
    while (!rem.is_zero()) {
        auto [re, rc] = lead(rem);
        if (rc % dc != 0) throw std::runtime_error("laurent: inexact division");
        long long q = rc / dc;
        int e = re - de;
        quot.add(q, e);
        rem = rem - divisor * monomial(q, e);
    }
    return quot;
}

std::string Laurent::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, k] = *it;
        if (first) {
            if (k < 0) out << "-";
        } else {
            out << (k < 0 ? " - " : " + ");
        }
        long long mag = k < 0 ? -k : k;
        if (mag != 1 || e == 0) out << mag;
        if (e != 0) {
            if (mag != 1) out << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

}  // namespace tw
