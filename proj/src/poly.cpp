#include "algspec/poly.hpp"

#include <algorithm>

namespace algspec {

Poly::Poly(FieldDescriptor d, std::vector<FieldElem> coeffs)
    : desc_(std::move(d)), coeffs_(std::move(coeffs)) {
    for (const FieldElem& c : coeffs_)
        if (c.descriptor() != desc_) fail(Errc::FieldMismatch, "polynomial coefficient field");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::one(const FieldDescriptor& d) { return constant(FieldElem::one(d)); }

Poly Poly::variable(const FieldDescriptor& d) {
    return Poly(d, {FieldElem::zero(d), FieldElem::one(d)});
}

Poly Poly::constant(const FieldElem& c) {
    return Poly(c.descriptor(), std::vector<FieldElem>{c});
}

Poly Poly::from_ints(const FieldDescriptor& d, std::initializer_list<long> coeffs) {
    std::vector<FieldElem> cs;
    cs.reserve(coeffs.size());
    for (long v : coeffs) cs.push_back(FieldElem::from_int(d, v));
    return Poly(d, std::move(cs));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElem::zero(desc_);
    return coeffs_[i];
}

const FieldElem& Poly::leading() const {
    if (is_zero()) fail(Errc::PreconditionViolation, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    std::vector<FieldElem> cs;
    cs.reserve(coeffs_.size());
    for (const FieldElem& c : coeffs_) cs.push_back(-c);
    return Poly(desc_, std::move(cs));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "poly add");
    std::vector<FieldElem> cs;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem x = i < a.coeffs_.size() ? a.coeffs_[i] : FieldElem::zero(a.desc_);
        if (i < b.coeffs_.size()) x = x + b.coeffs_[i];
        cs.push_back(std::move(x));
    }
    return Poly(a.desc_, std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "poly mul");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.desc_);
    std::vector<FieldElem> cs(a.coeffs_.size() + b.coeffs_.size() - 1,
                              FieldElem::zero(a.desc_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.desc_, std::move(cs));
}

Poly operator*(const FieldElem& c, const Poly& a) { return Poly::constant(c) * a; }

bool operator==(const Poly& a, const Poly& b) {
    if (a.desc_ != b.desc_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<FieldElem> cs(coeffs_.size() + k, FieldElem::zero(desc_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
    return Poly(desc_, std::move(cs));
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::one(desc_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (int c = FieldElem::cmp(a.coeffs_[i], b.coeffs_[i])) return c;
    return 0;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (a.descriptor() != b.descriptor()) fail(Errc::FieldMismatch, "poly divmod");
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    const FieldDescriptor& d = a.descriptor();
    Poly q = Poly::zero(d);
    Poly r = a;
    FieldElem lead_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        FieldElem c = r.leading() * lead_inv;
        Poly t = Poly::constant(c).shifted(k);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    PolyDivMod qr = poly_divmod(a, b);
    if (!qr.remainder.is_zero()) fail(Errc::InternalContradiction, "inexact polynomial division");
    return qr.quotient;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) fail(Errc::PreconditionViolation, "monic of zero polynomial");
    if (p.is_monic()) return p;
    return p.leading().inv() * p;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        fail(Errc::PreconditionViolation, "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).remainder;
        x = y;
        y = r;
    }
    return monic(x);
}

XgcdResult poly_xgcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        fail(Errc::PreconditionViolation, "xgcd of two zero polynomials");
    const FieldDescriptor& d = p.descriptor();
    Poly r0 = p, r1 = q;
    Poly h0 = Poly::one(d), h1 = Poly::zero(d);
    Poly k0 = Poly::zero(d), k1 = Poly::one(d);
    while (!r1.is_zero()) {
        PolyDivMod qr = poly_divmod(r0, r1);
        Poly h2 = h0 - qr.quotient * h1;
        Poly k2 = k0 - qr.quotient * k1;
        r0 = r1; r1 = qr.remainder;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
    }
    FieldElem scale = r0.leading().inv();
    XgcdResult out{scale * r0, scale * h0, scale * k0};
    certify(p * out.h + q * out.k == out.g, "xgcd bezout identity");
    return out;
}

FieldElem poly_eval(const Poly& p, const FieldElem& x) {
    if (p.descriptor() != x.descriptor()) fail(Errc::FieldMismatch, "poly eval");
    FieldElem acc = FieldElem::zero(p.descriptor());
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return Poly::zero(p.descriptor());
    std::vector<FieldElem> cs;
    cs.reserve(p.degree());
    for (int i = 1; i <= p.degree(); ++i)
        cs.push_back(FieldElem::from_int(p.descriptor(), i) * p.coeff(i));
    return Poly(p.descriptor(), std::move(cs));
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "squarefree part of zero");
    if (p.degree() == 0) return Poly::one(p.descriptor());
    Poly dp = derivative(p);
    if (dp.is_zero())
        fail(Errc::NotSquarefreeReducible,
             "derivative vanishes in positive characteristic");
    return monic(poly_exact_div(p, poly_gcd(p, dp)));
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "squarefree decomposition of zero");
    if (p.descriptor().characteristic() != 0)
        fail(Errc::Unsupported, "Yun decomposition requires characteristic 0");
    std::vector<Poly> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm on the monic part.
    Poly f = monic(p);
    Poly df = derivative(f);
    Poly a = poly_gcd(f, df);
    Poly b = poly_exact_div(f, a);
    Poly c = poly_exact_div(df, a);
    Poly d = c - derivative(b);
    while (b.degree() > 0) {
        Poly g = poly_gcd(b, d);
        out.push_back(g);
        b = poly_exact_div(b, g);
        c = poly_exact_div(d, g);
        d = c - derivative(b);
    }
    return out;
}

std::optional<Poly> invert_mod(const Poly& g, const Poly& f) {
    if (f.degree() < 1) fail(Errc::PreconditionViolation, "modulus must have degree >= 1");
    if (g.descriptor() != f.descriptor()) fail(Errc::FieldMismatch, "invert_mod");
    if (g.is_zero()) return std::nullopt;
    XgcdResult x = poly_xgcd(g, f);
    if (!x.g.is_one()) return std::nullopt;
    Poly u = poly_divmod(x.h, f).remainder;
    certify(poly_divmod(g * u, f).remainder.is_one(), "invert_mod certificate");
    return u;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::from_poly_in_x(const Poly& p) {
    BiPoly g(p.descriptor());
    for (int i = 0; i <= p.degree(); ++i) g.add_term(i, 0, p.coeff(i));
    return g;
}

BiPoly BiPoly::from_poly_in_y(const Poly& p) {
    BiPoly g(p.descriptor());
    for (int i = 0; i <= p.degree(); ++i) g.add_term(0, i, p.coeff(i));
    return g;
}

void BiPoly::add_term(int i, int j, const FieldElem& c) {
    if (c.descriptor() != desc_) fail(Errc::FieldMismatch, "bipoly coefficient");
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        FieldElem s = it->second + c;
        if (s.is_zero())
            coeffs_.erase(it);
        else
            it->second = s;
    }
}

FieldElem BiPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? FieldElem::zero(desc_) : it->second;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "bipoly add");
    BiPoly out = a;
    for (const auto& [k, c] : b.coeffs_) out.add_term(k.first, k.second, c);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "bipoly sub");
    BiPoly out = a;
    for (const auto& [k, c] : b.coeffs_) out.add_term(k.first, k.second, -c);
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "bipoly mul");
    BiPoly out(a.desc_);
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.desc_ == b.desc_ && a.coeffs_ == b.coeffs_;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
    FieldElem acc = FieldElem::zero(desc_);
    for (const auto& [k, c] : coeffs_) acc = acc + c * x.pow(k.first) * y.pow(k.second);
    return acc;
}

Poly BiPoly::coeff_of_x_power(int i) const {
    std::vector<FieldElem> cs;
    for (const auto& [k, c] : coeffs_) {
        if (k.first != i) continue;
        while (static_cast<int>(cs.size()) <= k.second) cs.push_back(FieldElem::zero(desc_));
        cs[k.second] = c;
    }
    return Poly(desc_, std::move(cs));
}

Poly BiPoly::coeff_of_y_power(int j) const {
    std::vector<FieldElem> cs;
    for (const auto& [k, c] : coeffs_) {
        if (k.second != j) continue;
        while (static_cast<int>(cs.size()) <= k.first) cs.push_back(FieldElem::zero(desc_));
        cs[k.first] = c;
    }
    return Poly(desc_, std::move(cs));
}

BiPoly difference_quotient(const Poly& f) {
    BiPoly g(f.descriptor());
    for (int n = 1; n <= f.degree(); ++n) {
        FieldElem c = f.coeff(n);
        if (c.is_zero()) continue;
        for (int i = 0; i < n; ++i) g.add_term(i, n - 1 - i, c);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Rational-function payloads

FieldElem make_rational_function(const FieldDescriptor& d, const Poly& num, const Poly& den) {
    if (d.kind() != FieldKind::RationalFunctions)
        fail(Errc::PreconditionViolation, "descriptor is not a rational-function field");
    const FieldDescriptor& base = d.base();
    if (num.descriptor() != base || den.descriptor() != base)
        fail(Errc::FieldMismatch, "rational-function components over wrong base field");
    if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    Poly n = num, m = den;
    if (n.is_zero()) {
        m = Poly::one(base);
    } else {
        Poly g = poly_gcd(n, m);
        if (!g.is_one()) {
            n = poly_exact_div(n, g);
            m = poly_exact_div(m, g);
        }
        FieldElem scale = m.leading().inv();
        n = scale * n;
        m = scale * m;
    }
    auto rf = std::make_shared<const RatFun>(RatFun{std::move(n), std::move(m)});
    return make_rational_function_impl(d, std::move(rf));
}

}  // namespace algspec
