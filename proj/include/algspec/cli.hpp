#pragma once

#include <map>
#include <string>
#include <vector>

#include "algspec/factorization.hpp"
#include "algspec/io.hpp"
#include "algspec/resolvent.hpp"
#include "algspec/sylvester.hpp"

namespace algspec {

// A validated command invocation: every payload object is already parsed
// into the declared field and checked against the command's signature.
struct Request {
    std::string command;
    FieldDescriptor field;
    std::string ring_var = "x";  // variable of polynomial-entry matrices
    std::string poly_var = "z";  // variable of scalar polynomials
    std::map<std::string, Mat> matrices;
    std::map<std::string, PolyMat> poly_matrices;
    std::map<std::string, MatPoly> pencils;
    std::map<std::string, Poly> polys;
    std::map<std::string, FieldElem> scalars;
    std::map<std::string, Moebius> moebius;
    std::map<std::string, Quaternion> quaternions;
    std::vector<std::pair<FieldElem, Mat>> samples;
    std::vector<FieldElem> points;
    std::map<std::string, long> options;  // k, weight, search-bound, samples
};

struct Report {
    std::vector<std::pair<std::string, std::string>> fields;  // ordered
    int exit_code = 0;

    void add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
    }
    std::string machine() const;
    std::string text() const;
};

// Parses the structured key-value document. `command_override` (from the
// command line) takes precedence over a `cmd:` line; `field_override`
// likewise over a `field:` line.
Request parse_input(const std::string& document, const std::string& command_override = "",
                    const std::string& field_override = "");

Report run(const Request& r);

// Exit code classification: 0 success, 2 parse/validation, 3 precondition
// violation, 4 mathematical non-existence, 70 internal certification failure.
int exit_code_for(Errc c);

extern const std::vector<std::string> kCommands;

}  // namespace algspec
