#include "algspec/field.hpp"

#include <atomic>

#include "algspec/poly.hpp"

namespace algspec {

namespace {
std::atomic<std::uint64_t> g_cert_count{0};
}

std::uint64_t certification_count() { return g_cert_count.load(); }

void certify(bool ok, const char* what) {
    g_cert_count.fetch_add(1);
    if (!ok) fail(Errc::InternalContradiction, std::string("certification failed: ") + what);
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotSquarefreeReducible: return "NotSquarefreeReducible";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroLambda: return "ZeroLambda";
        case Errc::EmptyFamily: return "EmptyFamily";
        case Errc::EmptySampleSet: return "EmptySampleSet";
        case Errc::InvalidFamily: return "InvalidFamily";
        case Errc::ProductsNotInIdeal: return "ProductsNotInIdeal";
        case Errc::NonRegular: return "NonRegular";
        case Errc::DegreeExceedsWeight: return "DegreeExceedsWeight";
        case Errc::NotFound: return "NotFound";
        case Errc::DomainTooLarge: return "DomainTooLarge";
        case Errc::NotSpectrallyDisjoint: return "NotSpectrallyDisjoint";
        case Errc::NotCommuting: return "NotCommuting";
        case Errc::NotAFactorization: return "NotAFactorization";
        case Errc::ZeroQuaternion: return "ZeroQuaternion";
        case Errc::InconsistentSidedness: return "InconsistentSidedness";
        case Errc::InternalContradiction: return "InternalContradiction";
        case Errc::ParseError: return "ParseError";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::PreconditionViolation: return "PreconditionViolation";
        case Errc::Unsupported: return "Unsupported";
    }
    return "UnknownError";
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::rationals() {
    FieldDescriptor d;
    d.kind_ = FieldKind::Rationals;
    return d;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
    if (p >= (1u << 16)) fail(Errc::InvariantViolation, "prime field modulus must be < 2^16");
    if (!is_prime_u32(p)) fail(Errc::InvariantViolation, "prime field modulus must be prime");
    FieldDescriptor d;
    d.kind_ = FieldKind::PrimeField;
    d.p_ = p;
    return d;
}

FieldDescriptor FieldDescriptor::rational_functions(const FieldDescriptor& base, std::string var) {
    if (base.kind() == FieldKind::RationalFunctions)
        fail(Errc::InvariantViolation, "rational-function base must be Q or a prime field");
    if (var.empty()) fail(Errc::InvariantViolation, "rational-function variable name required");
    FieldDescriptor d;
    d.kind_ = FieldKind::RationalFunctions;
    d.base_ = std::make_shared<const FieldDescriptor>(base);
    d.var_ = std::move(var);
    return d;
}

std::uint32_t FieldDescriptor::modulus() const {
    if (kind_ != FieldKind::PrimeField) fail(Errc::PreconditionViolation, "modulus of non-prime field");
    return p_;
}

const FieldDescriptor& FieldDescriptor::base() const {
    if (kind_ != FieldKind::RationalFunctions)
        fail(Errc::PreconditionViolation, "base of non-function field");
    return *base_;
}

const std::string& FieldDescriptor::var() const {
    if (kind_ != FieldKind::RationalFunctions)
        fail(Errc::PreconditionViolation, "variable of non-function field");
    return var_;
}

std::uint32_t FieldDescriptor::characteristic() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::PrimeField: return p_;
        case FieldKind::RationalFunctions: return base_->characteristic();
    }
    return 0;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "Fp " + std::to_string(p_);
        case FieldKind::RationalFunctions: return base_->name() + "(" + var_ + ")";
    }
    return "?";
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return a.p_ == b.p_;
        case FieldKind::RationalFunctions: return a.var_ == b.var_ && *a.base_ == *b.base_;
    }
    return false;
}

void require_same_field(const FieldElem& a, const FieldElem& b, const char* where) {
    if (a.descriptor() != b.descriptor())
        fail(Errc::FieldMismatch, std::string(where) + ": operands in different fields");
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem make_rational_function_impl(const FieldDescriptor& d, std::shared_ptr<const RatFun> rf) {
    return FieldElem(d, std::move(rf));
}

FieldElem FieldElem::zero(const FieldDescriptor& d) { return from_int(d, 0); }
FieldElem FieldElem::one(const FieldDescriptor& d) { return from_int(d, 1); }

FieldElem FieldElem::from_int(const FieldDescriptor& d, long v) {
    return from_integer(d, mpz_class(v));
}

FieldElem FieldElem::from_integer(const FieldDescriptor& d, const mpz_class& v) {
    switch (d.kind()) {
        case FieldKind::Rationals: return FieldElem(d, mpq_class(v));
        case FieldKind::PrimeField: return residue(d, v);
        case FieldKind::RationalFunctions: {
            const FieldDescriptor& base = d.base();
            return make_rational_function(d, Poly::constant(from_integer(base, v)),
                                          Poly::one(base));
        }
    }
    fail(Errc::Unsupported, "from_integer");
}

FieldElem FieldElem::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElem(FieldDescriptor::rationals(), std::move(c));
}

FieldElem FieldElem::rational(long num, long den) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    return rational(mpq_class(mpz_class(num), mpz_class(den)));
}

FieldElem FieldElem::residue(const FieldDescriptor& d, const mpz_class& v) {
    std::uint32_t p = d.modulus();
    mpz_class r = v % p;
    if (r < 0) r += p;
    return FieldElem(d, static_cast<std::uint32_t>(r.get_ui()));
}

bool FieldElem::is_zero() const {
    switch (desc_.kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
        case FieldKind::PrimeField: return std::get<std::uint32_t>(v_) == 0;
        case FieldKind::RationalFunctions:
            return std::get<std::shared_ptr<const RatFun>>(v_)->num.is_zero();
    }
    return false;
}

bool FieldElem::is_one() const { return *this == one(desc_); }

const mpq_class& FieldElem::as_rational() const {
    if (desc_.kind() != FieldKind::Rationals) fail(Errc::PreconditionViolation, "not a rational");
    return std::get<mpq_class>(v_);
}

std::uint32_t FieldElem::as_residue() const {
    if (desc_.kind() != FieldKind::PrimeField) fail(Errc::PreconditionViolation, "not a residue");
    return std::get<std::uint32_t>(v_);
}

const RatFun& FieldElem::as_rational_function() const {
    if (desc_.kind() != FieldKind::RationalFunctions)
        fail(Errc::PreconditionViolation, "not a rational function");
    return *std::get<std::shared_ptr<const RatFun>>(v_);
}

FieldElem FieldElem::operator-() const {
    switch (desc_.kind()) {
        case FieldKind::Rationals: return FieldElem(desc_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldKind::PrimeField: {
            std::uint32_t p = desc_.modulus();
            std::uint32_t a = std::get<std::uint32_t>(v_);
            return FieldElem(desc_, a == 0 ? 0u : p - a);
        }
        case FieldKind::RationalFunctions: {
            const RatFun& r = as_rational_function();
            return make_rational_function(desc_, -r.num, r.den);
        }
    }
    fail(Errc::Unsupported, "negate");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b, "add");
    switch (a.desc_.kind()) {
        case FieldKind::Rationals:
            return FieldElem(a.desc_,
                             mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
        case FieldKind::PrimeField: {
            std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(a.v_)) +
                              std::get<std::uint32_t>(b.v_);
            return FieldElem(a.desc_, static_cast<std::uint32_t>(s % a.desc_.modulus()));
        }
        case FieldKind::RationalFunctions: {
            const RatFun& x = a.as_rational_function();
            const RatFun& y = b.as_rational_function();
            return make_rational_function(a.desc_, x.num * y.den + y.num * x.den, x.den * y.den);
        }
    }
    fail(Errc::Unsupported, "add");
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b, "mul");
    switch (a.desc_.kind()) {
        case FieldKind::Rationals:
            return FieldElem(a.desc_,
                             mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
        case FieldKind::PrimeField: {
            std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(a.v_)) *
                              std::get<std::uint32_t>(b.v_);
            return FieldElem(a.desc_, static_cast<std::uint32_t>(s % a.desc_.modulus()));
        }
        case FieldKind::RationalFunctions: {
            const RatFun& x = a.as_rational_function();
            const RatFun& y = b.as_rational_function();
            return make_rational_function(a.desc_, x.num * y.num, x.den * y.den);
        }
    }
    fail(Errc::Unsupported, "mul");
}

FieldElem FieldElem::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    switch (desc_.kind()) {
        case FieldKind::Rationals:
            return FieldElem(desc_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldKind::PrimeField: {
            std::uint64_t p = desc_.modulus();
            std::uint64_t base = std::get<std::uint32_t>(v_);
            std::uint64_t e = p - 2, acc = 1 % p;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return FieldElem(desc_, static_cast<std::uint32_t>(acc));
        }
        case FieldKind::RationalFunctions: {
            const RatFun& r = as_rational_function();
            return make_rational_function(desc_, r.den, r.num);
        }
    }
    fail(Errc::Unsupported, "inv");
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b, "div");
    if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
    return a * b.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.desc_ != b.desc_) return false;
    switch (a.desc_.kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
        case FieldKind::PrimeField:
            return std::get<std::uint32_t>(a.v_) == std::get<std::uint32_t>(b.v_);
        case FieldKind::RationalFunctions: {
            const RatFun& x = a.as_rational_function();
            const RatFun& y = b.as_rational_function();
            return x.num == y.num && x.den == y.den;
        }
    }
    return false;
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem acc = one(desc_);
    FieldElem base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int FieldElem::cmp(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b, "cmp");
    switch (a.desc_.kind()) {
        case FieldKind::Rationals:
            return mpq_cmp(std::get<mpq_class>(a.v_).get_mpq_t(),
                           std::get<mpq_class>(b.v_).get_mpq_t());
        case FieldKind::PrimeField: {
            std::uint32_t x = std::get<std::uint32_t>(a.v_), y = std::get<std::uint32_t>(b.v_);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case FieldKind::RationalFunctions: {
            const RatFun& x = a.as_rational_function();
            const RatFun& y = b.as_rational_function();
            if (int c = Poly::cmp(x.num, y.num)) return c;
            return Poly::cmp(x.den, y.den);
        }
    }
    return 0;
}

}  // namespace algspec
