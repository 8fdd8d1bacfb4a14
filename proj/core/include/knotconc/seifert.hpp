#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/unit_circle.hpp"

namespace knotconc {

/// Square integer matrix A of even size with det(A - A^T) = +-1, the Seifert
/// linking form of a knot.  Size 0 encodes the unknot.
class SeifertMatrix {
public:
    SeifertMatrix() = default;

    /// Validating constructor; throws InvalidSeifertMatrix.
    static SeifertMatrix create(std::vector<std::vector<long long>> entries,
                                std::string name = "");
    /// For matrices known valid by construction.
    static SeifertMatrix unchecked(std::vector<std::vector<long long>> entries,
                                   std::string name = "");

    long size() const { return static_cast<long>(a_.size()); }
    long long entry(long i, long j) const { return a_[i][j]; }
    const std::vector<std::vector<long long>>& entries() const { return a_; }
    const std::string& name() const { return name_; }

    SeifertMatrix mirror() const;  // -A^T
    friend SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

    bool operator==(const SeifertMatrix&) const = default;

private:
    std::vector<std::vector<long long>> a_;
    std::string name_;
};

/// det(t A - A^T), Alexander-normalized (lowest exponent 0, positive at t=1).
Laurent alexander_poly(const SeifertMatrix& a);
/// Same with coefficients reduced mod p.
LaurentZp alexander_poly_mod(const SeifertMatrix& a, long p);

/// Levine-Tristram signature: sign((1-w) A + (1-conj w) A^T), exactly.
/// Returns 0 at w = 1 where the form vanishes identically.
int levine_tristram(const SeifertMatrix& a, const UnitCirclePoint& w);

/// Arf invariant via the classical criterion: 0 iff |Delta(-1)| = +-1 mod 8.
int arf(const SeifertMatrix& a);

/// Knot determinant Delta(-1) of the normalized Alexander polynomial.
mpz_class det_at_minus_one(const SeifertMatrix& a);

// --- built-in catalog ------------------------------------------------------

/// Torus knot T(2,q) for odd q >= 3; genus (q-1)/2 bidiagonal Seifert matrix.
SeifertMatrix torus_knot_2q(long q);
/// Twist knot with n full twists (n != 0); point evaluation only for n < -1,
/// where the Alexander polynomial has unit-circle roots at irrational angles.
SeifertMatrix twist_knot(long n);
SeifertMatrix figure_eight();
SeifertMatrix unknot();

/// Names resolvable by the descriptor parser and the CLI.
std::vector<std::string> catalog_names();
std::optional<SeifertMatrix> catalog_lookup(const std::string& name);

/// Atoms whose signature step functions have exact rational-angle jumps;
/// these are the ones admitted on integral-exact paths.
std::vector<std::string> exact_catalog_names();

// --- JSON document {"name": optional, "matrix": [[...], ...]} --------------

SeifertMatrix seifert_from_json(const std::string& json_text);
std::string seifert_to_json(const SeifertMatrix& a);
SeifertMatrix seifert_load_file(const std::string& path);

}  // namespace knotconc
