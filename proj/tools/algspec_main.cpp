#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "algspec/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra, pencil transforms, factorizations and Sylvester equations"};
    app.name("algspec");

    std::string command;
    std::string input = "-";
    std::string field;
    std::string format = "text";
    long search_bound = -1;
    long samples = -1;

    std::string command_list;
    for (const std::string& c : algspec::kCommands)
        command_list += (command_list.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + command_list + " (or a 'cmd:' line)");
    app.add_option("--input", input, "input document ('-' for stdin)");
    app.add_option("--field", field, "field override, e.g. Q, 'Fp 5', Q(t)");
    app.add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--search-bound", search_bound, "candidate bound for pencil-regularize");
    app.add_option("--samples", samples, "sample count option");

    CLI11_PARSE(app, argc, argv);

    try {
        algspec::Request req = algspec::parse_input(read_input(input), command, field);
        if (search_bound >= 0) req.options["search-bound"] = search_bound;
        if (samples >= 0) req.options["samples"] = samples;
        algspec::Report rep = algspec::run(req);
        std::cout << (format == "machine" ? rep.machine() : rep.text());
        return rep.exit_code;
    } catch (const algspec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return algspec::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
