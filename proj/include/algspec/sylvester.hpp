#pragma once

#include <optional>
#include <variant>

#include "algspec/spectrum.hpp"

namespace algspec {

// Bezout witness of relatively prime minimum polynomials: p h + q k = 1 and
// f = q k satisfies f(a) = e, f(b) = 0 (both certified matricially).
struct DisjointnessCertificate {
    Poly p;  // min poly of a
    Poly q;  // min poly of b
    Poly h;
    Poly k;
    Poly f;  // = q k
};

struct NotDisjoint {
    Poly gcd;  // the nontrivial common factor
};

std::variant<DisjointnessCertificate, NotDisjoint> spectral_disjointness(const Mat& a,
                                                                         const Mat& b);

// Unique solution of a x - x b = c through x = g(A, B) c where g is the
// difference quotient of the certificate polynomial; a in M(m,F), b in
// M(n,F), c and x m x n. The solution is certified and uniqueness is
// asserted through the homogeneous kernel.
Mat solve_sylvester(const Mat& a, const Mat& b, const Mat& c);

struct IdealMembershipVerdict {
    bool c_in_ideal;
    bool x_in_ideal;
    bool equivalent;  // c_in_ideal == x_in_ideal
    Mat x;            // solution over F(t)
};

// Solves over F(t) for polynomial a, b, c and reports membership of x and c
// in the evaluation ideal of S (all entries vanishing on S).
IdealMembershipVerdict sylvester_ideal_membership(const PolyMat& a, const PolyMat& b,
                                                  const PolyMat& c,
                                                  const std::vector<FieldElem>& S,
                                                  const std::string& var = "t");

// For commuting spectrally disjoint a, b: g(a, b) with (a - b) g(a, b) = e,
// the sign fixed by the certification.
Mat commuting_difference_inverse(const Mat& a, const Mat& b);

struct TraceObstruction {
    std::vector<std::pair<int, FieldElem>> traces;  // (m, tr(a^m c)), m < n
    bool all_zero;  // necessary, not sufficient, for solvability of ax - xa = c
};

TraceObstruction trace_obstruction(const Mat& a, const Mat& c);

struct CommutantDimensions {
    int solvable_dim;   // d = n^2 - commutant_dim
    int commutant_dim;  // dim ker(X -> AX - XA), always >= n
};

CommutantDimensions commutant_dimension(const Mat& a);

// Quaternion over a formally real field (Q is the supported instance).
struct Quaternion {
    FieldElem a0, a1, a2, a3;

    static Quaternion from_ints(const FieldDescriptor& d, long c0, long c1, long c2, long c3);
    bool is_zero() const;

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
    friend bool operator==(const Quaternion& x, const Quaternion& y);
};

// Left/right regular representations on the basis (1, i, j, k).
Mat quaternion_left_rep(const Quaternion& q);
Mat quaternion_right_rep(const Quaternion& q);

// z^2 - 2 a0 z + (a0^2 + a1^2 + a2^2 + a3^2), or z - a0 for real quaternions;
// certified in the regular representation.
Poly quaternion_minpoly(const Quaternion& q);

// a x - x b = c in the quaternions: solvable (for all c, uniquely) iff
// a0 != b0 or the imaginary norms differ; otherwise the 4x4 system is
// certified singular and NotSolvable is reported.
std::optional<Quaternion> quaternion_sylvester(const Quaternion& a, const Quaternion& b,
                                               const Quaternion& c);

// min_poly(a) = min_poly(L_a), checked by two independent Krylov runs.
bool minpoly_transfer_check(const Mat& a);

}  // namespace algspec
