#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algspec/field.hpp"

namespace algspec {

// Dense univariate polynomial over a field, coefficients low-to-high.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient list.
class Poly {
public:
    explicit Poly(FieldDescriptor d) : desc_(std::move(d)) {}
    Poly(FieldDescriptor d, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldDescriptor& d) { return Poly(d); }
    static Poly one(const FieldDescriptor& d);
    static Poly variable(const FieldDescriptor& d);  // the monomial x
    static Poly constant(const FieldElem& c);
    static Poly from_ints(const FieldDescriptor& d, std::initializer_list<long> coeffs);

    const FieldDescriptor& descriptor() const { return desc_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of degree i (zero when i exceeds the degree).
    FieldElem coeff(int i) const;
    const FieldElem& leading() const;  // requires nonzero
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElem& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shifted(int k) const;  // multiply by x^k
    Poly pow(int e) const;      // e >= 0

    static int cmp(const Poly& a, const Poly& b);  // canonical total order
    friend bool operator<(const Poly& a, const Poly& b) { return cmp(a, b) < 0; }

private:
    void trim();

    FieldDescriptor desc_;
    std::vector<FieldElem> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

// a = q*b + r with deg r < deg b. DivisionByZero if b = 0.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

// Exact quotient; InternalContradiction if b does not divide a.
Poly poly_exact_div(const Poly& a, const Poly& b);

Poly monic(const Poly& p);  // requires nonzero

// Monic gcd; gcd(0,0) is an error.
Poly poly_gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g;  // monic gcd
    Poly h;  // p*h + q*k = g, exactly
    Poly k;
};
XgcdResult poly_xgcd(const Poly& p, const Poly& q);

FieldElem poly_eval(const Poly& p, const FieldElem& x);

Poly derivative(const Poly& p);

// p / gcd(p, p'), normalized monic. In characteristic p > 0 the case p' = 0
// (a polynomial in x^p) has no squarefree part computable this way and is
// refused with NotSquarefreeReducible.
Poly squarefree_part(const Poly& p);

// Yun decomposition over characteristic 0: p = lc * prod_i out[i-1]^i with
// each factor monic, squarefree and pairwise coprime. Index 0 holds the
// multiplicity-1 part.
std::vector<Poly> squarefree_decomposition(const Poly& p);

// Inverse of g modulo f (deg f >= 1): u with g*u = 1 (mod f), or nullopt
// when gcd(g, f) != 1.
std::optional<Poly> invert_mod(const Poly& g, const Poly& f);

// Sparse polynomial in two commuting variables x, y.
class BiPoly {
public:
    explicit BiPoly(FieldDescriptor d) : desc_(std::move(d)) {}

    static BiPoly from_poly_in_x(const Poly& p);
    static BiPoly from_poly_in_y(const Poly& p);

    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(int i, int j, const FieldElem& c);  // accumulates, drops zeros
    FieldElem coeff(int i, int j) const;

    const std::map<std::pair<int, int>, FieldElem>& terms() const { return coeffs_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    FieldElem eval(const FieldElem& x, const FieldElem& y) const;

    // Coefficient of x^i as a polynomial in y, and the reverse.
    Poly coeff_of_x_power(int i) const;
    Poly coeff_of_y_power(int j) const;

private:
    FieldDescriptor desc_;
    std::map<std::pair<int, int>, FieldElem> coeffs_;  // (i, j) -> c, c != 0
};

// g with f(x) - f(y) = (x - y) g(x, y), built monomial-wise from
// x^n - y^n = (x - y)(x^{n-1} + x^{n-2} y + ... + y^{n-1}).
BiPoly difference_quotient(const Poly& f);

// Reduced fraction of two Polys over the base field of a rational-function
// descriptor: den monic, gcd(num, den) = 1, num = 0 represented as 0/1.
struct RatFun {
    Poly num;
    Poly den;
};

FieldElem make_rational_function(const FieldDescriptor& d, const Poly& num, const Poly& den);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace algspec
