#include "algspec/cli.hpp"

#include <algorithm>
#include <sstream>

namespace algspec {

const std::vector<std::string> kCommands = {
    "spectrum",        "invert",           "specmap",        "jordan-dim",
    "resolvent-verify", "resolvent-extend", "jspectrum",      "pencil-spectrum",
    "pencil-transform", "pencil-regularize", "pencil-linearize", "pencil-factor",
    "quad-search",     "quad-check",       "sylvester",      "commutant-dim",
    "trace-check",     "quat-solve",       "rf-sqrt"};

std::string Report::machine() const {
    std::string out;
    for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
    return out;
}

std::string Report::text() const {
    std::string out;
    for (const auto& [k, v] : fields) {
        if (k == "command" || k == "field") {
            out += (k == "command" ? "algspec " + v : "  over " + v) + "\n";
        } else {
            out += "  " + k + ": " + v + "\n";
        }
    }
    return out;
}

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::InvariantViolation:
            return 2;
        case Errc::NotFound:
            return 4;
        case Errc::InternalContradiction:
        case Errc::InconsistentSidedness:
            return 70;
        default:
            return 3;
    }
}

namespace {

struct Line {
    std::string key;
    std::string name;   // optional second word before ':'
    std::string value;
    int number;
};

[[noreturn]] void doc_error(int line, const std::string& msg) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> split_document(const std::string& document) {
    std::vector<Line> out;
    std::istringstream in(document);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos)
            raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) doc_error(number, "expected 'key: value'");
        std::string head = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));
        std::size_t space = head.find_first_of(" \t");
        std::string key = space == std::string::npos ? head : strip(head.substr(0, space));
        std::string name = space == std::string::npos ? "" : strip(head.substr(space));
        out.push_back({key, name, value, number});
    }
    return out;
}

const std::map<std::string, std::vector<std::string>>& required_keys() {
    // Objects each command must carry; checked before dispatch.
    static const std::map<std::string, std::vector<std::string>> table = {
        {"spectrum", {"matrix a"}},
        {"invert", {}},  // matrix a or pmatrix a; checked separately
        {"specmap", {"matrix a", "poly p"}},
        {"jordan-dim", {"matrix a", "scalar lambda"}},
        {"resolvent-verify", {"samples"}},
        {"resolvent-extend", {"scalar alpha", "matrix r"}},
        {"jspectrum", {"pmatrix a", "points"}},
        {"pencil-spectrum", {"pencil P"}},
        {"pencil-transform", {"pencil P", "moebius g"}},
        {"pencil-regularize", {"pencil P"}},
        {"pencil-linearize", {"pencil P"}},
        {"pencil-factor", {"pencil P"}},
        {"quad-search", {"matrix u", "matrix v", "matrix w"}},
        {"quad-check",
         {"matrix u", "matrix v", "matrix w", "matrix u2", "matrix v2", "matrix w2"}},
        {"sylvester", {}},  // matrices a,b,c or pmatrices a,b,c with points
        {"commutant-dim", {"matrix a"}},
        {"trace-check", {"matrix a", "matrix c"}},
        {"quat-solve", {"quat a", "quat b", "quat c"}},
        {"rf-sqrt", {"scalar f"}},
    };
    return table;
}

void validate_request(const Request& r) {
    auto has = [&](const std::string& spec) {
        std::size_t space = spec.find(' ');
        std::string kind = spec.substr(0, space);
        std::string name = space == std::string::npos ? "" : spec.substr(space + 1);
        if (kind == "matrix") return r.matrices.count(name) > 0;
        if (kind == "pmatrix") return r.poly_matrices.count(name) > 0;
        if (kind == "pencil") return r.pencils.count(name) > 0;
        if (kind == "poly") return r.polys.count(name) > 0;
        if (kind == "scalar") return r.scalars.count(name) > 0;
        if (kind == "moebius") return r.moebius.count(name) > 0;
        if (kind == "quat") return r.quaternions.count(name) > 0;
        if (kind == "points") return !r.points.empty();
        if (kind == "samples") return !r.samples.empty();
        return false;
    };
    auto it = required_keys().find(r.command);
    if (it == required_keys().end())
        fail(Errc::ParseError, "unknown command '" + r.command + "'");
    for (const std::string& spec : it->second)
        if (!has(spec)) fail(Errc::ParseError, r.command + " needs '" + spec + ":'");
    if (r.command == "invert" && !r.matrices.count("a") && !r.poly_matrices.count("a"))
        fail(Errc::ParseError, "invert needs 'matrix a:' or 'pmatrix a:'");
    if (r.command == "sylvester") {
        bool field_mode = r.matrices.count("a") && r.matrices.count("b") && r.matrices.count("c");
        bool ideal_mode = r.poly_matrices.count("a") && r.poly_matrices.count("b") &&
                          r.poly_matrices.count("c") && !r.points.empty();
        if (!field_mode && !ideal_mode)
            fail(Errc::ParseError,
                 "sylvester needs matrices a, b, c (or pmatrices a, b, c with points)");
    }
}

}  // namespace

Request parse_input(const std::string& document, const std::string& command_override,
                    const std::string& field_override) {
    std::vector<Line> lines = split_document(document);

    std::string field_text = field_override;
    std::string command = command_override;
    std::string ring_var = "x", poly_var = "z";
    for (const Line& l : lines) {
        if (l.key == "field" && field_text.empty()) field_text = l.value;
        if (l.key == "cmd" && command.empty()) command = l.value;
        if (l.key == "var") ring_var = l.value;
        if (l.key == "pvar") poly_var = l.value;
    }
    if (field_text.empty()) fail(Errc::ParseError, "no field declared ('field:' or --field)");
    if (command.empty()) fail(Errc::ParseError, "no command ('cmd:' or command argument)");

    Request r;
    r.command = command;
    r.field = parse_field(field_text);
    r.ring_var = ring_var;
    r.poly_var = poly_var;

    const FieldDescriptor& fd = r.field;
    for (const Line& l : lines) {
        try {
            if (l.key == "field" || l.key == "cmd" || l.key == "var" || l.key == "pvar")
                continue;
            if (l.key == "matrix") {
                r.matrices.emplace(l.name, parse_matrix(fd, l.value));
            } else if (l.key == "pmatrix") {
                if (fd.kind() == FieldKind::RationalFunctions)
                    doc_error(l.number, "pmatrix needs a base field (Q or Fp)");
                r.poly_matrices.emplace(l.name, parse_poly_matrix(fd, r.ring_var, l.value));
            } else if (l.key == "pencil") {
                r.pencils.emplace(l.name, parse_pencil(fd, l.value));
            } else if (l.key == "poly") {
                r.polys.emplace(l.name, parse_poly(fd, r.poly_var, l.value));
            } else if (l.key == "scalar") {
                r.scalars.emplace(l.name, parse_scalar(fd, l.value));
            } else if (l.key == "moebius") {
                r.moebius.emplace(l.name, parse_moebius(fd, l.value));
            } else if (l.key == "quat") {
                std::vector<FieldElem> c = parse_scalar_list(fd, l.value);
                if (c.size() != 4) doc_error(l.number, "quaternion needs four components");
                r.quaternions.emplace(l.name, Quaternion{c[0], c[1], c[2], c[3]});
            } else if (l.key == "sample") {
                FieldElem pt = parse_scalar(fd, l.name);
                r.samples.emplace_back(pt, parse_matrix(fd, l.value));
            } else if (l.key == "points") {
                r.points = parse_scalar_list(fd, l.value);
            } else if (l.key == "k" || l.key == "weight" || l.key == "search-bound" ||
                       l.key == "samples") {
                r.options[l.key] = std::stol(l.value);
            } else {
                doc_error(l.number, "unknown key '" + l.key + "'");
            }
        } catch (const Error& e) {
            if (e.code() == Errc::ParseError && std::string(e.what()).find("line ") !=
                                                    std::string::npos)
                throw;
            fail(e.code() == Errc::ParseError ? Errc::ParseError : Errc::InvariantViolation,
                 "line " + std::to_string(l.number) + ": " + e.what());
        }
    }
    validate_request(r);
    return r;
}

namespace {

const Mat& matrix_arg(const Request& r, const std::string& name) {
    return r.matrices.at(name);
}

long option_or(const Request& r, const std::string& key, long dflt) {
    auto it = r.options.find(key);
    return it == r.options.end() ? dflt : it->second;
}

void add_spectrum_report(Report& rep, const std::string& prefix, const SpectrumReport& s,
                         const std::string& var) {
    rep.add(prefix + "poly", format_poly(s.defining_poly, var));
    rep.add(prefix + "roots", format_scalar_set(s.roots));
    rep.add(prefix + "complete", s.complete ? "true" : "false");
    if (!s.complete) rep.add(prefix + "residual", format_poly(s.residual, var));
}

void run_spectrum(const Request& r, Report& rep) {
    SpectrumReport s = spectrum_of(matrix_arg(r, "a"));
    rep.add("minpoly", format_poly(s.defining_poly, r.poly_var));
    rep.add("roots", format_scalar_set(s.roots));
    rep.add("complete", s.complete ? "true" : "false");
    if (!s.complete) rep.add("residual", format_poly(s.residual, r.poly_var));
    rep.add("certified", "minimum polynomial annihilates the matrix");
}

void run_invert(const Request& r, Report& rep) {
    if (auto it = r.matrices.find("a"); it != r.matrices.end()) {
        Poly m = min_poly(it->second).poly;
        rep.add("minpoly", format_poly(m, r.poly_var));
        std::optional<Mat> inv = inverse_via_minpoly(it->second);
        if (!inv) {
            rep.add("result", "absent");
            rep.add("reason", "m(0) = 0, the matrix is singular");
            rep.exit_code = 4;
            return;
        }
        rep.add("inverse", format_matrix(*inv));
        rep.add("certified", "a * inverse = inverse * a = identity");
        return;
    }
    const PolyMat& a = r.poly_matrices.at("a");
    rep.add("det", format_poly(det(a), r.ring_var));
    std::optional<PolyMat> inv = poly_ring_inverse(a);
    if (!inv) {
        rep.add("result", "absent");
        rep.add("reason", "determinant is not a nonzero constant");
        rep.exit_code = 4;
        return;
    }
    rep.add("inverse", format_poly_matrix(*inv, r.ring_var));
    rep.add("certified", "a * inverse = identity over the polynomial ring");
}

void run_specmap(const Request& r, Report& rep) {
    SpectralMapResult m = spectral_map(r.polys.at("p"), matrix_arg(r, "a"));
    rep.add("mapped", format_scalar_set(m.mapped));
    add_spectrum_report(rep, "spec-pa-", m.spec_pa, r.poly_var);
    rep.add("equality", m.equality == MapEquality::Proven ? "proven" : "forward-only");
    rep.add("certified", "forward inclusion {p(z)} within spec(p(a))");
}

void run_jordan_dim(const Request& r, Report& rep) {
    int k = static_cast<int>(option_or(r, "k", 1));
    int d = jordan_ideal_dim(matrix_arg(r, "a"), r.scalars.at("lambda"), k);
    rep.add("k", std::to_string(k));
    rep.add("dimension", std::to_string(d));
}

void run_resolvent_verify(const Request& r, Report& rep) {
    FamilyCheck c = verify_family(make_family(r.samples));
    rep.add("valid", c.valid ? "true" : "false");
    if (!c.violating) {
        rep.add("certified", "resolvent identity holds for all sampled pairs");
    } else {
        rep.add("violating-pair", format_scalar(c.violating->first) + ", " +
                                      format_scalar(c.violating->second));
        rep.exit_code = 4;
    }
}

void run_resolvent_extend(const Request& r, Report& rep) {
    MaxExtensionReport ext = extend_maximal(r.scalars.at("alpha"), matrix_arg(r, "r"));
    rep.add("anchor", format_scalar(ext.anchor()));
    rep.add("excluded-poly", format_poly(ext.excluded_poly(), "lambda"));
    add_spectrum_report(rep, "spectrum-", ext.excluded_roots(), "lambda");
    rep.add("closure", ext.formula());
    for (const FieldElem& pt : r.points) {
        std::string key = "value-at-" + format_scalar(pt);
        std::optional<Mat> v = ext.evaluate(pt);
        rep.add(key, v ? format_matrix(*v) : "outside the extended domain");
    }
    std::optional<Mat> assoc = associated_element(ext.anchor(), ext.anchor_value());
    if (assoc) {
        rep.add("associated-element", format_matrix(*assoc));
        rep.add("certified", "(lambda e - a) r~_lambda = e at fresh domain points");
    } else {
        rep.add("associated-element", "none (anchor value singular)");
    }
}

void run_jspectrum(const Request& r, Report& rep) {
    EvalQuotientSpectrum e = evaluation_quotient_spectrum(r.poly_matrices.at("a"), r.points);
    for (const auto& [s, spec] : e.per_point)
        rep.add("spectrum-at-" + format_scalar(s), format_scalar_set(spec.roots) +
                                                       (spec.complete ? "" : " (incomplete)"));
    rep.add("union", format_scalar_set(e.union_roots));
    rep.add("cardinality-bound", std::to_string(e.cardinality_bound));
    rep.add("certified", "cardinality bound n * #S holds");
}

void run_pencil_spectrum(const Request& r, Report& rep) {
    int weight = static_cast<int>(option_or(r, "weight", -1));
    PencilSpectrum s = pencil_spectrum(r.pencils.at("P"), weight);
    rep.add("regular", s.regular ? "true" : "false");
    if (!s.regular) {
        rep.add("spectrum", "all of the field (det identically zero)");
        return;
    }
    add_spectrum_report(rep, "finite-", s.finite_part.value(), r.poly_var);
    rep.add("contains-infinity", s.contains_infinity ? "true" : "false");
}

void run_pencil_transform(const Request& r, Report& rep) {
    int weight = static_cast<int>(option_or(r, "weight", -1));
    const MatPoly& p = r.pencils.at("P");
    MatPoly q = moebius_transform_pencil(r.moebius.at("g"), p, weight);
    rep.add("weight", std::to_string(weight < 0 ? p.degree() : weight));
    rep.add("transformed", format_pencil(q));
}

void run_pencil_regularize(const Request& r, Report& rep) {
    int bound = static_cast<int>(option_or(r, "search-bound", -1));
    RegularizeResult res = regularize(r.pencils.at("P"), bound);
    rep.add("x-to-zero", format_scalar(res.x));
    rep.add("y-to-infinity", format_scalar(res.y));
    rep.add("moebius", "[" + format_scalar(res.g.a) + ", " + format_scalar(res.g.b) + ", " +
                           format_scalar(res.g.c) + ", " + format_scalar(res.g.d) + "]");
    rep.add("candidates-tried", std::to_string(res.candidates_tried));
    rep.add("regularized", format_pencil(res.q));
    rep.add("certified", "constant and leading coefficients invertible");
}

void run_pencil_linearize(const Request& r, Report& rep) {
    const MatPoly& p = r.pencils.at("P");
    CompanionForm c = companion_linearize(p);
    rep.add("companion", format_matrix(c.x));
    rep.add("certified", "det P(x) equals det(x I - X)");
    const FieldDescriptor& fd = p.descriptor();
    long count = option_or(r, "samples", 3);
    std::vector<FieldElem> xs;
    std::string shown;
    for (long k = 0; static_cast<long>(xs.size()) < count; ++k) {
        long cand = k % 2 == 0 ? k / 2 : -(k / 2 + 1);
        xs.push_back(FieldElem::from_int(fd, cand));
        shown += (shown.empty() ? "" : ", ") + format_scalar(xs.back());
    }
    bool ok = linearization_identity_check(p, xs);
    rep.add("identity-check", ok ? "holds at x in {" + shown + "}" : "failed");
    if (!ok) rep.exit_code = 70;
}

void run_pencil_factor(const Request& r, Report& rep) {
    auto result = factor_pencil(r.pencils.at("P"));
    if (std::holds_alternative<CannotFactor>(result)) {
        const CannotFactor& cf = std::get<CannotFactor>(result);
        rep.add("result", "cannot-factor");
        rep.add("reason", cf.reason);
        rep.add("residual", format_poly(cf.residual, r.poly_var));
        rep.exit_code = 4;
        return;
    }
    const Factorization& f = std::get<Factorization>(result);
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        rep.add("factor-" + std::to_string(i + 1), format_matrix(f.factors[i]));
    rep.add("certified", "factors multiply back to P");
}

void run_quad_search(const Request& r, Report& rep) {
    auto found = quad_factor_search(matrix_arg(r, "u"), matrix_arg(r, "v"), matrix_arg(r, "w"));
    rep.add("count", std::to_string(found.size()));
    for (std::size_t i = 0; i < found.size(); ++i)
        rep.add("factorization-" + std::to_string(i + 1),
                format_matrix(found[i].first) + " , " + format_matrix(found[i].second));
}

void run_quad_check(const Request& r, Report& rep) {
    QuadEquivResult q =
        quad_identity_equiv(matrix_arg(r, "u"), matrix_arg(r, "v"), matrix_arg(r, "w"),
                            matrix_arg(r, "u2"), matrix_arg(r, "v2"), matrix_arg(r, "w2"));
    rep.add("equivalent", q.equivalent ? "true" : "false");
    if (!q.equivalent) {
        rep.add("witness", format_matrix(*q.witness));
        rep.exit_code = 4;
    }
}

void run_sylvester(const Request& r, Report& rep) {
    if (r.matrices.count("a")) {
        Mat x = solve_sylvester(matrix_arg(r, "a"), matrix_arg(r, "b"), matrix_arg(r, "c"));
        rep.add("solution", format_matrix(x));
        rep.add("certified", "ax - xb = c, and the homogeneous kernel is trivial");
        return;
    }
    IdealMembershipVerdict v = sylvester_ideal_membership(
        r.poly_matrices.at("a"), r.poly_matrices.at("b"), r.poly_matrices.at("c"), r.points,
        r.ring_var);
    rep.add("solution", format_matrix(v.x));
    rep.add("c-in-ideal", v.c_in_ideal ? "true" : "false");
    rep.add("x-in-ideal", v.x_in_ideal ? "true" : "false");
    rep.add("equivalent", v.equivalent ? "true" : "false");
    rep.add("certified", "ax - xb = c over the rational-function field");
}

void run_commutant_dim(const Request& r, Report& rep) {
    CommutantDimensions c = commutant_dimension(matrix_arg(r, "a"));
    rep.add("commutant-dim", std::to_string(c.commutant_dim));
    rep.add("solvable-dim", std::to_string(c.solvable_dim));
    rep.add("certified", "commutant dimension at least n");
}

void run_trace_check(const Request& r, Report& rep) {
    TraceObstruction t = trace_obstruction(matrix_arg(r, "a"), matrix_arg(r, "c"));
    for (const auto& [m, tr] : t.traces)
        rep.add("trace-a^" + std::to_string(m) + "-c", format_scalar(tr));
    rep.add("all-zero", t.all_zero ? "true" : "false");
    rep.add("note", "necessary for solvability of ax - xa = c, not sufficient");
}

void run_quat_solve(const Request& r, Report& rep) {
    const Quaternion& a = r.quaternions.at("a");
    const Quaternion& b = r.quaternions.at("b");
    rep.add("minpoly-a", format_poly(quaternion_minpoly(a), r.poly_var));
    rep.add("minpoly-b", format_poly(quaternion_minpoly(b), r.poly_var));
    std::optional<Quaternion> x = quaternion_sylvester(a, b, r.quaternions.at("c"));
    if (!x) {
        rep.add("result", "not-solvable");
        rep.add("reason", "a0 = b0 and equal imaginary norms; system certified singular");
        rep.exit_code = 4;
        return;
    }
    rep.add("solution", "[" + format_scalar(x->a0) + ", " + format_scalar(x->a1) + ", " +
                            format_scalar(x->a2) + ", " + format_scalar(x->a3) + "]");
    rep.add("certified", "ax - xb = c in the quaternion algebra");
}

void run_rf_sqrt(const Request& r, Report& rep) {
    std::optional<FieldElem> g = rf_sqrt(r.scalars.at("f"));
    if (!g) {
        rep.add("result", "absent");
        rep.add("reason", "an odd-order zero or pole, or a non-square leading ratio");
        rep.exit_code = 4;
        return;
    }
    rep.add("sqrt", format_scalar(*g));
    rep.add("certified", "square of the result equals the input");
}

}  // namespace

Report run(const Request& r) {
    Report rep;
    rep.add("command", r.command);
    rep.add("field", r.field.name());
    std::uint64_t before = certification_count();

    if (r.command == "spectrum") run_spectrum(r, rep);
    else if (r.command == "invert") run_invert(r, rep);
    else if (r.command == "specmap") run_specmap(r, rep);
    else if (r.command == "jordan-dim") run_jordan_dim(r, rep);
    else if (r.command == "resolvent-verify") run_resolvent_verify(r, rep);
    else if (r.command == "resolvent-extend") run_resolvent_extend(r, rep);
    else if (r.command == "jspectrum") run_jspectrum(r, rep);
    else if (r.command == "pencil-spectrum") run_pencil_spectrum(r, rep);
    else if (r.command == "pencil-transform") run_pencil_transform(r, rep);
    else if (r.command == "pencil-regularize") run_pencil_regularize(r, rep);
    else if (r.command == "pencil-linearize") run_pencil_linearize(r, rep);
    else if (r.command == "pencil-factor") run_pencil_factor(r, rep);
    else if (r.command == "quad-search") run_quad_search(r, rep);
    else if (r.command == "quad-check") run_quad_check(r, rep);
    else if (r.command == "sylvester") run_sylvester(r, rep);
    else if (r.command == "commutant-dim") run_commutant_dim(r, rep);
    else if (r.command == "trace-check") run_trace_check(r, rep);
    else if (r.command == "quat-solve") run_quat_solve(r, rep);
    else if (r.command == "rf-sqrt") run_rf_sqrt(r, rep);
    else fail(Errc::ParseError, "unknown command '" + r.command + "'");

    rep.add("certifications", std::to_string(certification_count() - before));
    return rep;
}

}  // namespace algspec
