#include "knotconc/blanchfield.hpp"

namespace knotconc {

bool mod_p_nontrivial(const SeifertMatrix& a, long p) {
    if (!is_prime(p)) throw std::invalid_argument("mod_p_nontrivial: p must be prime");
    LaurentZp d = alexander_poly_mod(a, p);
    // units of Z_p[t^{+-1}] are the nonzero monomials; Delta(1) = +-1 rules
    // out the zero polynomial
    return d.term_count() >= 2;
}

}  // namespace knotconc
