#include "algspec/io.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

namespace algspec {

namespace {

struct Token {
    enum Kind { Int, Ident, Punct, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(Errc::ParseError, msg + " at column " + std::to_string(tok_.pos + 1));
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Int, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        static const std::string punct = "+-*/^()[]{},;:";
        if (punct.find(c) != std::string::npos) {
            tok_ = {Token::Punct, std::string(1, c), i_};
            ++i_;
            return;
        }
        fail(Errc::ParseError,
             std::string("unexpected character '") + c + "' at column " + std::to_string(i_ + 1));
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

// Value of an expression: a quotient of polynomials over the coefficient
// field. Scalar contexts demand both parts constant; polynomial contexts
// demand a constant denominator.
struct Frac {
    Poly num;
    Poly den;
};

class ExprParser {
public:
    ExprParser(Lexer& lex, const FieldDescriptor& field, std::optional<std::string> var)
        : lex_(lex), field_(field), var_(std::move(var)) {}

    Frac parse_expr() {
        Frac acc = parse_term();
        while (is_punct("+") || is_punct("-")) {
            bool plus = lex_.next().text == "+";
            Frac rhs = parse_term();
            acc = plus ? add(acc, rhs) : add(acc, neg(rhs));
        }
        return acc;
    }

    FieldElem parse_scalar_value() {
        Frac f = parse_expr();
        if (field_.kind() == FieldKind::PrimeField && is_ident("mod")) {
            lex_.next();
            Token t = expect(Token::Int, "modulus");
            if (mpz_class(t.text) != field_.modulus())
                lex_.error("modulus does not match the declared field");
        }
        if (f.num.degree() > 0 || f.den.degree() > 0)
            lex_.error("expected a scalar");
        return f.num.coeff(0) / f.den.coeff(0);
    }

    Poly parse_poly_value() {
        Frac f = parse_expr();
        if (f.den.degree() > 0) lex_.error("polynomial denominator must be constant");
        return f.den.coeff(0).inv() * f.num;
    }

    bool is_punct(const char* p) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
    }
    bool is_ident(const char* id) const {
        return lex_.peek().kind == Token::Ident && lex_.peek().text == id;
    }

    Token expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k) lex_.error(std::string("expected ") + what);
        return lex_.next();
    }

    void expect_punct(const char* p) {
        if (!is_punct(p)) lex_.error(std::string("expected '") + p + "'");
        lex_.next();
    }

private:
    Frac make(Poly n) { return {std::move(n), Poly::one(field_)}; }

    Frac add(const Frac& a, const Frac& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    Frac mul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
    Frac neg(const Frac& a) { return {-a.num, a.den}; }
    Frac div(const Frac& a, const Frac& b) {
        if (b.num.is_zero()) lex_.error("division by zero");
        return {a.num * b.den, a.den * b.num};
    }

    Frac parse_term() {
        Frac acc = parse_factor();
        while (is_punct("*") || is_punct("/")) {
            bool times = lex_.next().text == "*";
            Frac rhs = parse_factor();
            acc = times ? mul(acc, rhs) : div(acc, rhs);
        }
        return acc;
    }

    Frac parse_factor() {
        bool negate = false;
        while (is_punct("-") || is_punct("+")) negate ^= (lex_.next().text == "-");
        Frac base = parse_primary();
        if (is_punct("^")) {
            lex_.next();
            bool eneg = false;
            while (is_punct("-")) { eneg = true; lex_.next(); }
            Token t = expect(Token::Int, "exponent");
            long e = std::stol(t.text);
            Frac powed{base.num.pow(static_cast<int>(e)), base.den.pow(static_cast<int>(e))};
            if (eneg) powed = div(make(Poly::one(field_)), powed);
            base = powed;
        }
        return negate ? neg(base) : base;
    }

    Frac parse_primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) {
            mpz_class v(lex_.next().text);
            return make(Poly::constant(FieldElem::from_integer(field_, v)));
        }
        if (t.kind == Token::Ident) {
            if (var_ && t.text == *var_) {
                lex_.next();
                return make(Poly::variable(field_));
            }
            if (field_.kind() == FieldKind::RationalFunctions && t.text == field_.var()) {
                lex_.next();
                const FieldDescriptor& base = field_.base();
                FieldElem tvar = make_rational_function(field_, Poly::variable(base),
                                                        Poly::one(base));
                return make(Poly::constant(tvar));
            }
            lex_.error("unknown identifier '" + t.text + "'");
        }
        if (t.kind == Token::Punct && t.text == "(") {
            lex_.next();
            Frac inner = parse_expr();
            expect_punct(")");
            return inner;
        }
        lex_.error("expected a number, variable or '('");
    }

    Lexer& lex_;
    const FieldDescriptor& field_;
    std::optional<std::string> var_;
};

template <class Entry, class Parse>
std::vector<std::vector<Entry>> parse_rows(Lexer& lex, ExprParser& p, Parse parse_entry) {
    std::vector<std::vector<Entry>> rows;
    if (p.is_punct("[")) {
        p.expect_punct("[");
        for (;;) {
            p.expect_punct("[");
            std::vector<Entry> row;
            row.push_back(parse_entry());
            while (p.is_punct(",")) {
                lex.next();
                row.push_back(parse_entry());
            }
            p.expect_punct("]");
            rows.push_back(std::move(row));
            if (p.is_punct(",")) {
                lex.next();
                continue;
            }
            break;
        }
        p.expect_punct("]");
    } else {
        for (;;) {
            std::vector<Entry> row;
            row.push_back(parse_entry());
            while (p.is_punct(",")) {
                lex.next();
                row.push_back(parse_entry());
            }
            rows.push_back(std::move(row));
            if (p.is_punct(";")) {
                lex.next();
                continue;
            }
            break;
        }
    }
    if (rows.empty()) fail(Errc::ParseError, "empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) fail(Errc::ParseError, "ragged matrix rows");
    return rows;
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Token::End) lex.error("trailing input");
}

}  // namespace

FieldDescriptor parse_field(const std::string& s) {
    Lexer lex(s);
    Token t = lex.next();
    if (t.kind != Token::Ident) lex.error("expected field name");
    FieldDescriptor base = FieldDescriptor::rationals();
    if (t.text == "Q") {
        // base stays Q
    } else if (t.text == "Fp" || t.text == "GF" || t.text == "F") {
        if (lex.peek().kind != Token::Int) lex.error("expected prime modulus");
        mpz_class p(lex.next().text);
        if (p >= 65536) fail(Errc::ParseError, "prime modulus must be < 2^16");
        base = FieldDescriptor::prime_field(static_cast<std::uint32_t>(p.get_ui()));
    } else {
        lex.error("unknown field '" + t.text + "'");
    }
    if (lex.peek().kind == Token::Punct && lex.peek().text == "(") {
        lex.next();
        Token v = lex.next();
        if (v.kind != Token::Ident) lex.error("expected variable name");
        Token close = lex.next();
        if (close.kind != Token::Punct || close.text != ")") lex.error("expected ')'");
        expect_end(lex);
        return FieldDescriptor::rational_functions(base, v.text);
    }
    expect_end(lex);
    return base;
}

FieldElem parse_scalar(const FieldDescriptor& d, const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, d, std::nullopt);
    FieldElem x = p.parse_scalar_value();
    expect_end(lex);
    return x;
}

Poly parse_poly(const FieldDescriptor& coeff_field, const std::string& var,
                const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, coeff_field, var);
    Poly out = p.parse_poly_value();
    expect_end(lex);
    return out;
}

Mat parse_matrix(const FieldDescriptor& d, const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, d, std::nullopt);
    auto rows = parse_rows<FieldElem>(lex, p, [&] { return p.parse_scalar_value(); });
    expect_end(lex);
    Mat m = Mat::zeros(d, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

PolyMat parse_poly_matrix(const FieldDescriptor& base, const std::string& var,
                          const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, base, var);
    auto rows = parse_rows<Poly>(lex, p, [&] { return p.parse_poly_value(); });
    expect_end(lex);
    PolyMat m =
        PolyMat::zeros(base, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

MatPoly parse_pencil(const FieldDescriptor& d, const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, d, std::nullopt);
    p.expect_punct("[");
    std::vector<Mat> coeffs;
    auto one_matrix = [&] {
        auto rows = parse_rows<FieldElem>(lex, p, [&] { return p.parse_scalar_value(); });
        Mat m = Mat::zeros(d, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        return m;
    };
    coeffs.push_back(one_matrix());
    while (p.is_punct(",")) {
        lex.next();
        coeffs.push_back(one_matrix());
    }
    p.expect_punct("]");
    expect_end(lex);
    int n = coeffs.front().rows();
    for (const Mat& c : coeffs)
        if (!c.is_square() || c.rows() != n)
            fail(Errc::ParseError, "pencil coefficients must be square matrices of one size");
    return MatPoly(d, n, std::move(coeffs));
}

std::vector<FieldElem> parse_scalar_list(const FieldDescriptor& d, const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, d, std::nullopt);
    std::vector<FieldElem> out;
    out.push_back(p.parse_scalar_value());
    while (p.is_punct(",")) {
        lex.next();
        out.push_back(p.parse_scalar_value());
    }
    expect_end(lex);
    return out;
}

Moebius parse_moebius(const FieldDescriptor& d, const std::string& s) {
    Lexer lex(s);
    ExprParser p(lex, d, std::nullopt);
    bool bracketed = p.is_punct("[");
    if (bracketed) lex.next();
    std::vector<FieldElem> v;
    v.push_back(p.parse_scalar_value());
    for (int i = 0; i < 3; ++i) {
        p.expect_punct(",");
        v.push_back(p.parse_scalar_value());
    }
    if (bracketed) p.expect_punct("]");
    expect_end(lex);
    return Moebius(v[0], v[1], v[2], v[3]);
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

bool needs_parens(const std::string& s) {
    return s.find(' ') != std::string::npos || s.find('+') != std::string::npos ||
           s.find('/') != std::string::npos;
}

std::string embed_scalar(const FieldElem& c) {
    std::string s = format_scalar(c);
    return needs_parens(s) ? "(" + s + ")" : s;
}

}  // namespace

std::string format_scalar(const FieldElem& x) {
    switch (x.descriptor().kind()) {
        case FieldKind::Rationals: return x.as_rational().get_str();
        case FieldKind::PrimeField: return std::to_string(x.as_residue());
        case FieldKind::RationalFunctions: {
            const RatFun& r = x.as_rational_function();
            const std::string& var = x.descriptor().var();
            if (r.den.is_one()) return format_poly(r.num, var);
            return "(" + format_poly(r.num, var) + ")/(" + format_poly(r.den, var) + ")";
        }
    }
    return "?";
}

std::string format_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    bool rational = p.descriptor().kind() == FieldKind::Rationals;
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        FieldElem c = p.coeff(i);
        if (c.is_zero()) continue;
        bool neg = false;
        if (rational && c.as_rational() < 0) {
            neg = true;
            c = -c;
        }
        std::string term;
        if (i == 0) {
            term = format_scalar(c);
        } else {
            std::string varpart = i == 1 ? var : var + "^" + std::to_string(i);
            term = c.is_one() ? varpart : embed_scalar(c) + "*" + varpart;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

template <class M, class Fmt>
std::string format_rows(const M& m, Fmt fmt) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += fmt(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

std::string format_matrix(const Mat& m) {
    return format_rows(m, [](const FieldElem& x) { return format_scalar(x); });
}

std::string format_poly_matrix(const PolyMat& m, const std::string& var) {
    return format_rows(m, [&](const Poly& p) { return format_poly(p, var); });
}

std::string format_pencil(const MatPoly& p) {
    if (p.is_zero()) return "[" + format_matrix(Mat::zeros(p.descriptor(), p.size(), p.size())) + "]";
    std::string out = "[";
    for (int r = 0; r <= p.degree(); ++r) {
        if (r) out += ", ";
        out += format_matrix(p.coeff(r));
    }
    return out + "]";
}

std::string format_scalar_set(const std::vector<FieldElem>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += format_scalar(xs[i]);
    }
    return out + "}";
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    return os << format_scalar(x);
}

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& d) {
    return os << d.name();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format_poly(p, "z"); }

std::ostream& operator<<(std::ostream& os, const Mat& a) { return os << format_matrix(a); }

std::ostream& operator<<(std::ostream& os, const PolyMat& a) {
    return os << format_poly_matrix(a, "x");
}

std::ostream& operator<<(std::ostream& os, const MatPoly& p) {
    return os << format_pencil(p);
}

std::ostream& operator<<(std::ostream& os, const ExtPoint& p) {
    if (p.is_infinity()) return os << "inf";
    return os << format_scalar(p.value());
}

}  // namespace algspec
