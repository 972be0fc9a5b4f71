#include "ncfree/rational.hpp"

#include <ostream>

#include "ncfree/errors.hpp"

namespace ncfree {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw domain_error("bad rational literal: '" + s + "'");
    }
    Rat r(q);
    mpq_clear(q);
    if (sgn(r.get_den()) == 0) throw domain_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string gauss_to_string(const GaussRat& g) {
    const bool has_re = sgn(g.re) != 0;
    const bool has_im = sgn(g.im) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out += rat_to_string(g.re);
    if (has_im) {
        if (has_re && sgn(g.im) > 0) out += "+";
        if (g.im == -1)
            out += "-";
        else if (g.im != 1)
            out += rat_to_string(g.im);
        out += "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
    return os << gauss_to_string(g);
}

} // namespace ncfree
