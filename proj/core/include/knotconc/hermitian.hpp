#pragma once

#include <vector>

#include "knotconc/cyclotomic.hpp"

namespace knotconc {

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

bool is_hermitian(const CycloMatrix& m);

/// Characteristic polynomial det(lambda I - M), ascending coefficients,
/// computed by fraction-free (Bareiss) elimination over Q(zeta)[lambda].
std::vector<Cyclotomic> char_poly(const CycloMatrix& m);

/// Exact signature (positive minus negative eigenvalue count) of a hermitian
/// matrix over a cyclotomic field.  All eigenvalues are real; Descartes sign
/// variations of the characteristic polynomial count them exactly, with each
/// coefficient sign certified.  Zero eigenvalues contribute 0.
/// Throws NonHermitianInput if M is not equal to its conjugate transpose.
int hermitian_signature(const CycloMatrix& m);

}  // namespace knotconc
