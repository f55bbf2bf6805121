#pragma once

#include <optional>
#include <vector>

#include "algspec/poly.hpp"

namespace algspec {

struct RootsResult {
    std::vector<FieldElem> roots;  // distinct, canonically sorted, all exact zeros
    bool complete;  // true iff removing the found linear factors (with
                    // multiplicity) leaves nothing of positive degree
    Poly residual;  // the monic unfactored remainder; 1 when complete
};

// All rational roots via the rational-root bound on the squarefree part.
RootsResult rational_roots(const Poly& p);

// Exhaustive evaluation over GF(q).
RootsResult prime_field_roots(const Poly& p);

// Dispatch on the coefficient field. Over rational-function fields only
// degree <= 1 splits are attempted; higher degrees report an honest
// incomplete result.
RootsResult roots_in_field(const Poly& p);

// Square root in Q(t) when one exists: all squarefree multiplicities of the
// numerator and denominator even, and the leading-coefficient ratio a square
// in Q (the latter is needed because the coefficients are rational rather
// than complex).
std::optional<FieldElem> rf_sqrt(const FieldElem& f);

}  // namespace algspec
