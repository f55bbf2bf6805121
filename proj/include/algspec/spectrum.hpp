#pragma once

#include <optional>

#include "algspec/matrix.hpp"
#include "algspec/roots.hpp"

namespace algspec {

// Spectrum of an algebraic element: the zeros of its minimum polynomial.
// `complete` is true only when the defining polynomial splits into the
// listed linear factors over the base field; otherwise `residual` carries
// the unfactored part.
struct SpectrumReport {
    Poly defining_poly;  // monic
    std::vector<FieldElem> roots;
    bool complete;
    Poly residual;

    bool contains(const FieldElem& x) const;
};

// Report built from a given monic defining polynomial.
SpectrumReport spectrum_of_poly(const Poly& defining);

SpectrumReport spectrum_of(const Mat& a);

// Inverse as an explicit polynomial in a when m(0) != 0; Absent when
// m(0) = 0 (a is singular).
std::optional<Mat> inverse_via_minpoly(const Mat& a);

enum class MapEquality { Proven, ForwardOnly };

struct SpectralMapResult {
    std::vector<FieldElem> mapped;  // {p(z) : z in spec(a)}
    SpectrumReport spec_pa;
    MapEquality equality;
};

// Polynomial spectral mapping: equality is Proven only when both spectra are
// complete (or p is constant); otherwise only the forward inclusion
// {p(z)} subset spec(p(a)) is guaranteed, and it is certified.
SpectralMapResult spectral_map(const Poly& p, const Mat& a);

// Explicit witness c = lambda^{-1} (e + b (lambda e - a b)^{-1} a) inverting
// lambda e - b a; Absent when lambda e - a b is singular. lambda = 0 is
// rejected.
std::optional<Mat> ab_ba_witness(const Mat& a, const Mat& b, const FieldElem& lambda);

// dim over F of {x in M(n,F) : (a - lambda e)^k x = 0} = n * dim ker((a - lambda e)^k).
int jordan_ideal_dim(const Mat& a, const FieldElem& lambda, int k);

enum class Sidedness { TwoSided, Neither };

// Solves ax = e and xa = e as linear systems; the two must agree for
// algebraic elements (InconsistentSidedness would indicate a bug).
Sidedness one_sided_invertibility(const Mat& a);

}  // namespace algspec
