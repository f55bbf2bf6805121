#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "algspec/error.hpp"

namespace algspec {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

// Descriptor of one of the supported coefficient fields:
//   Q, F_p (p prime, p < 2^16), or F(t) with F one of the former two.
class FieldDescriptor {
public:
    FieldDescriptor() = default;  // the rationals

    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(std::uint32_t p);
    static FieldDescriptor rational_functions(const FieldDescriptor& base, std::string var);

    FieldKind kind() const { return kind_; }
    std::uint32_t modulus() const;
    const FieldDescriptor& base() const;
    const std::string& var() const;

    // 0 for Q and Q(t); p for F_p and F_p(t).
    std::uint32_t characteristic() const;
    std::string name() const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::uint32_t p_ = 0;
    std::shared_ptr<const FieldDescriptor> base_;
    std::string var_;
};

struct RatFun;  // reduced fraction of two Polys; defined in poly.hpp

class FieldElem;
FieldElem make_rational_function_impl(const FieldDescriptor&, std::shared_ptr<const RatFun>);

// A scalar in one of the supported fields. Immutable after construction;
// all normalization invariants (lowest terms, monic denominator, residue
// range) are restored by every operation.
class FieldElem {
public:
    static FieldElem zero(const FieldDescriptor& d);
    static FieldElem one(const FieldDescriptor& d);
    static FieldElem from_int(const FieldDescriptor& d, long v);
    static FieldElem from_integer(const FieldDescriptor& d, const mpz_class& v);
    static FieldElem rational(const mpq_class& q);
    static FieldElem rational(long num, long den);
    static FieldElem residue(const FieldDescriptor& d, const mpz_class& v);
    // Rational-function payloads are built through make_rational_function in poly.hpp.

    const FieldDescriptor& descriptor() const { return desc_; }

    bool is_zero() const;
    bool is_one() const;

    const mpq_class& as_rational() const;
    std::uint32_t as_residue() const;
    const RatFun& as_rational_function() const;

    FieldElem operator-() const;
    FieldElem inv() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

    FieldElem pow(long e) const;  // e >= 0, or e < 0 with nonzero base

    // Canonical total order within one descriptor (container/report ordering,
    // not a field order).
    static int cmp(const FieldElem& a, const FieldElem& b);
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return cmp(a, b) < 0; }

private:
    friend FieldElem make_rational_function_impl(const FieldDescriptor&,
                                                 std::shared_ptr<const RatFun>);

    FieldElem(FieldDescriptor d, std::variant<mpq_class, std::uint32_t,
                                              std::shared_ptr<const RatFun>> v)
        : desc_(std::move(d)), v_(std::move(v)) {}

    FieldDescriptor desc_;
    std::variant<mpq_class, std::uint32_t, std::shared_ptr<const RatFun>> v_;
};

void require_same_field(const FieldElem& a, const FieldElem& b, const char* where);

bool is_prime_u32(std::uint32_t n);

// Canonical text form; defined with the rest of the formatters in io.cpp.
std::ostream& operator<<(std::ostream& os, const FieldElem& x);
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& d);

}  // namespace algspec
