#include "algspec/roots.hpp"

#include <algorithm>

namespace algspec {

namespace {

// Removes every found linear factor (with multiplicity) from p; the leftover
// monic part is the residual and decides the completeness flag.
RootsResult finish(const Poly& p, std::vector<FieldElem> roots) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Poly residual = p;
    const FieldDescriptor& d = p.descriptor();
    for (const FieldElem& r : roots) {
        Poly lin(d, {-r, FieldElem::one(d)});
        for (;;) {
            PolyDivMod qr = poly_divmod(residual, lin);
            if (!qr.remainder.is_zero()) break;
            residual = qr.quotient;
        }
    }
    bool complete = residual.degree() <= 0;
    residual = residual.is_zero() ? residual : monic(residual);
    return {std::move(roots), complete, std::move(residual)};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out, high;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        mpz_class q = a / d;
        if (q != d) high.push_back(q);
    }
    out.insert(out.end(), high.rbegin(), high.rend());
    return out;
}

}  // namespace

RootsResult rational_roots(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "rational_roots");
    if (p.descriptor().kind() != FieldKind::Rationals)
        fail(Errc::PreconditionViolation, "rational_roots expects a polynomial over Q");
    const FieldDescriptor& d = p.descriptor();
    if (p.degree() == 0) return finish(p, {});

    Poly s = squarefree_part(p);
    std::vector<FieldElem> roots;
    if (s.coeff(0).is_zero()) {
        roots.push_back(FieldElem::zero(d));
        s = poly_exact_div(s, Poly::variable(d));
    }
    if (s.degree() >= 1) {
        // Clear denominators to an integer polynomial.
        mpz_class den_lcm = 1;
        for (int i = 0; i <= s.degree(); ++i)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    s.coeff(i).as_rational().get_den().get_mpz_t());
        std::vector<mpz_class> ic(s.degree() + 1);
        for (int i = 0; i <= s.degree(); ++i) {
            mpq_class q = s.coeff(i).as_rational() * mpq_class(den_lcm);
            ic[i] = q.get_num();
        }
        // Candidates num/den with num | a0, den | an.
        for (const mpz_class& num : divisors(ic.front()))
            for (const mpz_class& den : divisors(ic.back()))
                for (int sign : {1, -1}) {
                    mpq_class cand(sign * num, den);
                    cand.canonicalize();
                    FieldElem r = FieldElem::rational(cand);
                    if (poly_eval(p, r).is_zero()) roots.push_back(r);
                }
    }
    return finish(p, std::move(roots));
}

RootsResult prime_field_roots(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "prime_field_roots");
    if (p.descriptor().kind() != FieldKind::PrimeField)
        fail(Errc::PreconditionViolation, "prime_field_roots expects a prime-field polynomial");
    const FieldDescriptor& d = p.descriptor();
    std::vector<FieldElem> roots;
    for (std::uint32_t v = 0; v < d.modulus(); ++v) {
        FieldElem x = FieldElem::from_int(d, long(v));
        if (poly_eval(p, x).is_zero()) roots.push_back(x);
    }
    return finish(p, std::move(roots));
}

RootsResult roots_in_field(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "roots_in_field");
    switch (p.descriptor().kind()) {
        case FieldKind::Rationals: return rational_roots(p);
        case FieldKind::PrimeField: return prime_field_roots(p);
        case FieldKind::RationalFunctions: {
            // Only linear polynomials are split over F(t); everything else is
            // reported incomplete rather than guessed at.
            std::vector<FieldElem> roots;
            if (p.degree() == 1) roots.push_back(-(p.coeff(0) / p.coeff(1)));
            return finish(p, std::move(roots));
        }
    }
    fail(Errc::Unsupported, "roots_in_field");
}

std::optional<FieldElem> rf_sqrt(const FieldElem& f) {
    const FieldDescriptor& d = f.descriptor();
    if (d.kind() != FieldKind::RationalFunctions ||
        d.base().kind() != FieldKind::Rationals)
        fail(Errc::PreconditionViolation, "rf_sqrt expects an element of Q(t)");
    if (f.is_zero()) return FieldElem::zero(d);

    const RatFun& rf = f.as_rational_function();
    const FieldDescriptor& base = d.base();

    // Leading-coefficient ratio must be a square in Q (denominator is monic).
    mpq_class lc = rf.num.leading().as_rational();
    if (lc < 0) return std::nullopt;
    mpz_class ln = lc.get_num(), ld = lc.get_den();
    if (!mpz_perfect_square_p(ln.get_mpz_t()) || !mpz_perfect_square_p(ld.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), ln.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), ld.get_mpz_t());

    auto half_power = [&](const Poly& p) -> std::optional<Poly> {
        std::vector<Poly> parts = squarefree_decomposition(p);
        Poly acc = Poly::one(base);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            int mult = static_cast<int>(i) + 1;
            if (mult % 2 == 1 && parts[i].degree() > 0) return std::nullopt;
            if (mult % 2 == 0) acc = acc * parts[i].pow(mult / 2);
        }
        return acc;
    };

    auto num_half = half_power(rf.num);
    if (!num_half) return std::nullopt;
    auto den_half = half_power(rf.den);
    if (!den_half) return std::nullopt;

    FieldElem g = make_rational_function(
        d, FieldElem::rational(mpq_class(sn, sd)) * *num_half, *den_half);
    certify(g * g == f, "rf_sqrt squares back");
    return g;
}

}  // namespace algspec
