#pragma once

#include <string>
#include <vector>

#include "algspec/pencil.hpp"

namespace algspec {

// Field grammar: "Q" | "Fp <p>" | "Q(t)" | "Fp <p>(t)".
FieldDescriptor parse_field(const std::string& s);

// Scalar grammar: rationals "-3/4", residues "3 mod 5" (or any integer
// expression, normalized into the field), rational functions
// "(t^2+1)/(2*t)". Full +-*/^() expressions are accepted.
FieldElem parse_scalar(const FieldDescriptor& d, const std::string& s);

// Polynomial grammar "z^3 - 2*z + 1/2"; the variable letter is configurable.
Poly parse_poly(const FieldDescriptor& coeff_field, const std::string& var,
                const std::string& s);

// "[[a, b], [c, d]]" or "a, b; c, d".
Mat parse_matrix(const FieldDescriptor& d, const std::string& s);

// Matrix with polynomial entries in the given ring variable.
PolyMat parse_poly_matrix(const FieldDescriptor& base, const std::string& var,
                          const std::string& s);

// "[M0, M1, ...]", the coefficient list of sum_r x^r M_r.
MatPoly parse_pencil(const FieldDescriptor& d, const std::string& s);

std::vector<FieldElem> parse_scalar_list(const FieldDescriptor& d, const std::string& s);

// Four scalars a, b, c, d (optionally bracketed); determinant validated.
Moebius parse_moebius(const FieldDescriptor& d, const std::string& s);

std::string format_scalar(const FieldElem& x);
std::string format_poly(const Poly& p, const std::string& var);
std::string format_matrix(const Mat& m);
std::string format_poly_matrix(const PolyMat& m, const std::string& var);
std::string format_pencil(const MatPoly& p);
std::string format_scalar_set(const std::vector<FieldElem>& xs);

}  // namespace algspec
