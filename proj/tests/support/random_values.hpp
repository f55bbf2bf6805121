#pragma once

#include <random>

#include "algspec/matrix.hpp"

// Deterministic generators for property tests; every suite seeds its own
// engine so failures reproduce.
namespace testgen {

using namespace algspec;

inline FieldElem random_scalar(std::mt19937_64& rng, const FieldDescriptor& d,
                               long span = 5) {
    switch (d.kind()) {
        case FieldKind::Rationals: {
            std::uniform_int_distribution<long> num(-span, span);
            std::uniform_int_distribution<long> den(1, span);
            return FieldElem::rational(num(rng), den(rng));
        }
        case FieldKind::PrimeField: {
            std::uniform_int_distribution<long> v(0, d.modulus() - 1);
            return FieldElem::from_int(d, v(rng));
        }
        case FieldKind::RationalFunctions: {
            fail(Errc::Unsupported, "random scalar over function fields: use random_ratfun");
        }
    }
    fail(Errc::Unsupported, "random_scalar");
}

inline Poly random_poly(std::mt19937_64& rng, const FieldDescriptor& d, int max_deg,
                        bool nonzero = false, long span = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (;;) {
        int n = deg(rng);
        std::vector<FieldElem> cs;
        for (int i = 0; i <= n; ++i) cs.push_back(random_scalar(rng, d, span));
        Poly p(d, std::move(cs));
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline FieldElem random_ratfun(std::mt19937_64& rng, const FieldDescriptor& d, int max_deg) {
    const FieldDescriptor& base = d.base();
    Poly num = random_poly(rng, base, max_deg);
    Poly den = random_poly(rng, base, max_deg, /*nonzero=*/true);
    return make_rational_function(d, num, den);
}

inline Mat random_matrix(std::mt19937_64& rng, const FieldDescriptor& d, int rows, int cols,
                         long span = 5) {
    Mat m = Mat::zeros(d, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, d, span);
    return m;
}

inline Mat random_invertible(std::mt19937_64& rng, const FieldDescriptor& d, int n,
                             long span = 5) {
    for (;;) {
        Mat m = random_matrix(rng, d, n, n, span);
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace testgen
