// hcube: command-line front end. Reads JSON on stdin (or a file argument),
// writes JSON on stdout. Exit codes: 0 success or verdict holds, 1 verdict
// fails, 2 input error, 3 internal assertion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hcube/hcube.hpp"
#include "hcube/io.hpp"

namespace {

using hcube::io::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw hcube::InputError("cannot open input file \"" + path + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw hcube::InputError(std::string("bad JSON input: ") + e.what());
    }
}

void write_json(const json& j, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw hcube::InputError("cannot open output file \"" + output_path + "\"");
    out << j.dump() << "\n";
}

json read_json_file(const std::string& path) {
    if (path.empty()) throw hcube::InputError("missing required file path");
    return read_json(path);
}

struct Options {
    std::string input = "-";
    std::string output;
    std::string face;
    std::string smatrix;
    std::string name;
    std::string c_digits;
    bool inverse = false;
    bool fast = false;
    bool fix_first = false;
    int h = -1;
    int k = 0;
    int q = 0;
    int n = 0;
    int m = 0;
    long lambda = 0;
    unsigned long limit = 0;
};

hcube::Vertex parse_digit_vertex(const std::string& text, const hcube::SpaceParams& p) {
    if (p.q > 10) throw hcube::InputError("digit syntax supports q <= 10 only");
    if (text.size() != static_cast<std::size_t>(p.n))
        throw hcube::InputError("expected exactly n digits");
    hcube::Vertex v = hcube::zero_vertex(p);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw hcube::InputError("non-digit coordinate");
        v.digits[i] = text[i] - '0';
    }
    hcube::validate_vertex(v, p);
    return v;
}

int run_ft(const Options& opt) {
    if (opt.inverse) {
        const auto spectrum = hcube::io::spectrum_table_from_json(read_json(opt.input));
        const hcube::FunctionTable f = hcube::fourier_inverse(spectrum);
        try {
            write_json(hcube::io::function_table_to_json(f), opt.output);
        } catch (const hcube::NotRationalError&) {
            throw hcube::InputError(
                "inverse transform is not rational-valued; not representable as a function table");
        }
        return kExitHolds;
    }
    const auto f = hcube::io::function_table_from_json(read_json(opt.input));
    const hcube::SpectrumTable spectrum =
        opt.fast ? hcube::fourier_forward_fast(f) : hcube::fourier_forward(f);
    write_json(hcube::io::spectrum_table_to_json(spectrum), opt.output);
    return kExitHolds;
}

int run_project(const Options& opt) {
    const auto f = hcube::io::function_table_from_json(read_json(opt.input));
    const hcube::FunctionTable g = hcube::eigenspace_project(f, opt.h);
    try {
        write_json(hcube::io::function_table_to_json(g), opt.output);
    } catch (const hcube::NotRationalError&) {
        // rational in, rational out is a theorem; reaching this is a bug
        throw hcube::InternalError("projection of a rational table is not rational");
    }
    return kExitHolds;
}

int run_enum(const Options& opt) {
    const auto f = hcube::io::function_table_from_json(read_json(opt.input));
    const hcube::FaceSpec face = hcube::io::parse_face(opt.face, f.params);
    write_json(hcube::io::homopoly_to_json(hcube::local_weight_enumerator(f, face)), opt.output);
    return kExitHolds;
}

int run_enum_coloring(const Options& opt) {
    const auto c = hcube::io::coloring_from_json(read_json(opt.input));
    const hcube::FaceSpec face = hcube::io::parse_face(opt.face, c.params);
    json components = json::array();
    for (const hcube::HomoPoly& g : hcube::vector_enumerator(c, face))
        components.push_back(hcube::io::homopoly_to_json(g));
    write_json(json{{"components", std::move(components)}}, opt.output);
    return kExitHolds;
}

int run_verify_eigen(const Options& opt) {
    const auto f = hcube::io::function_table_from_json(read_json(opt.input));
    const bool holds = hcube::is_eigenfunction(f, opt.lambda);
    write_json(json{{"lambda", opt.lambda}, {"holds", holds}}, opt.output);
    return holds ? kExitHolds : kExitFails;
}

int run_params(const Options& opt) {
    const auto c = hcube::io::coloring_from_json(read_json(opt.input));
    write_json(hcube::io::parameter_matrix_to_json(hcube::parameter_matrix_of(c)), opt.output);
    return kExitHolds;
}

int run_verify_coloring(const Options& opt) {
    const auto c = hcube::io::coloring_from_json(read_json(opt.input));
    const auto s = hcube::io::parameter_matrix_from_json(read_json_file(opt.smatrix));
    const bool holds = hcube::verify_perfect(c, s);
    write_json(json{{"holds", holds}}, opt.output);
    return holds ? kExitHolds : kExitFails;
}

int run_theorem_eig(const Options& opt) {
    const auto f = hcube::io::function_table_from_json(read_json(opt.input));
    const hcube::FaceSpec face = hcube::io::parse_face(opt.face, f.params);
    const hcube::IdentityVerdict v =
        hcube::eigenfunction_duality_check(f, opt.h, face.free_set, face.anchor);
    write_json(hcube::io::identity_verdict_to_json(v), opt.output);
    return v.holds ? kExitHolds : kExitFails;
}

int run_theorem_col(const Options& opt) {
    const auto c = hcube::io::coloring_from_json(read_json(opt.input));
    const hcube::FaceSpec face = hcube::io::parse_face(opt.face, c.params);
    const hcube::ColoringDualityVerdict v =
        hcube::coloring_duality_check(c, face.free_set, face.anchor);
    write_json(hcube::io::coloring_verdict_to_json(v), opt.output);
    return v.holds ? kExitHolds : kExitFails;
}

int run_hpower(const Options& opt) {
    const auto s = hcube::io::parameter_matrix_from_json(read_json(opt.input));
    const hcube::SpaceParams p(opt.q, opt.n);
    write_json(hcube::io::matrix_enumerator_power_to_json(
                   hcube::matrix_enumerator_power(s, opt.k, p)),
               opt.output);
    return kExitHolds;
}

int run_fixture(const Options& opt) {
    hcube::FixtureRequest req;
    req.name = opt.name;
    req.q = opt.q;
    req.n = opt.n;
    req.m = opt.m;
    if (!opt.c_digits.empty()) {
        const hcube::SpaceParams p(opt.q, opt.n);
        req.c = parse_digit_vertex(opt.c_digits, p).digits;
    }
    write_json(hcube::io::coloring_to_json(hcube::builtin_fixture(req)), opt.output);
    return kExitHolds;
}

int run_search(const Options& opt) {
    const auto s = hcube::io::parameter_matrix_from_json(read_json_file(opt.smatrix));
    const hcube::SpaceParams p(opt.q, opt.n);
    const std::vector<hcube::Coloring> found =
        hcube::search_colorings(p, s, opt.limit, opt.fix_first);
    json colorings = json::array();
    for (const hcube::Coloring& c : found) colorings.push_back(hcube::io::coloring_to_json(c));
    write_json(json{{"count", found.size()}, {"colorings", std::move(colorings)}}, opt.output);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fourier spectra, local weight enumerators, and perfect-coloring "
                 "duality checks on the q-ary hypercube"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;
    const auto set = [&](int (*fn)(const Options&)) { return [&handler, fn]() { handler = fn; }; };

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input file (default: stdin)");
        cmd->add_option("-o,--output", opt.output, "output file (default: stdout)");
    };

    CLI::App* ft = app.add_subcommand("ft", "Fourier transform of a function table");
    ft->add_flag("--inverse", opt.inverse, "apply the inverse transform to a spectrum");
    ft->add_flag("--fast", opt.fast, "use the dimension-wise fast transform");
    add_input(ft);
    ft->callback(set(run_ft));

    CLI::App* project = app.add_subcommand("project", "project onto one eigenspace");
    project->set_help_flag("--help", "print help");  // frees -h for the option below
    project->add_option("--h", opt.h, "eigenvalue number h")->required();
    add_input(project);
    project->callback(set(run_project));

    CLI::App* enum_cmd = app.add_subcommand("enum", "local weight enumerator in a face");
    enum_cmd->add_option("--face", opt.face, "face, e.g. \"I=1,3;alpha=0120\"")->required();
    add_input(enum_cmd);
    enum_cmd->callback(set(run_enum));

    CLI::App* enum_col = app.add_subcommand("enum-coloring", "per-color enumerators in a face");
    enum_col->add_option("--face", opt.face, "face, e.g. \"I=1,3;alpha=0120\"")->required();
    add_input(enum_col);
    enum_col->callback(set(run_enum_coloring));

    CLI::App* verify_eigen = app.add_subcommand("verify-eigen", "test the eigenfunction equation");
    verify_eigen->add_option("--lambda", opt.lambda, "eigenvalue")->required();
    add_input(verify_eigen);
    verify_eigen->callback(set(run_verify_eigen));

    CLI::App* params = app.add_subcommand("params", "extract the parameter matrix of a coloring");
    add_input(params);
    params->callback(set(run_params));

    CLI::App* verify_col = app.add_subcommand("verify-coloring", "verify a coloring against S");
    verify_col->add_option("--smatrix", opt.smatrix, "parameter matrix JSON file")->required();
    add_input(verify_col);
    verify_col->callback(set(run_verify_coloring));

    CLI::App* theig = app.add_subcommand(
        "theorem-eig", "orthogonal-face duality identity for an eigenfunction");
    theig->set_help_flag("--help", "print help");
    theig->add_option("--h", opt.h, "eigenvalue number h")->required();
    theig->add_option("--face", opt.face, "face, e.g. \"I=1,3;alpha=0120\"")->required();
    add_input(theig);
    theig->callback(set(run_theorem_eig));

    CLI::App* thcol = app.add_subcommand(
        "theorem-col", "orthogonal-face duality identity for a perfect coloring");
    thcol->add_option("--face", opt.face, "face, e.g. \"I=1,3;alpha=0120\"")->required();
    add_input(thcol);
    thcol->callback(set(run_theorem_col));

    CLI::App* hpower = app.add_subcommand(
        "hpower", "matrix power (x+(q-1)y)^(h(S)-kE) of a parameter matrix");
    hpower->add_option("--k", opt.k, "face dimension exponent k")->required();
    hpower->add_option("--q", opt.q, "alphabet size")->required();
    hpower->add_option("--n", opt.n, "dimension")->required();
    add_input(hpower);
    hpower->callback(set(run_hpower));

    CLI::App* fixture = app.add_subcommand("fixture", "emit a built-in perfect coloring");
    fixture->add_option("--name", opt.name,
                        "all_one_color | coordinate | parity | linear_form | hamming_code_distance")
        ->required();
    fixture->add_option("--q", opt.q, "alphabet size");
    fixture->add_option("--n", opt.n, "dimension");
    fixture->add_option("--m", opt.m, "hamming code parameter m");
    fixture->add_option("--c", opt.c_digits, "linear form coefficients as n digits");
    fixture->add_option("-o,--output", opt.output, "output file (default: stdout)");
    fixture->callback(set(run_fixture));

    CLI::App* search = app.add_subcommand("search", "enumerate perfect colorings with a given S");
    search->add_option("--smatrix", opt.smatrix, "parameter matrix JSON file")->required();
    search->add_option("--q", opt.q, "alphabet size")->required();
    search->add_option("--n", opt.n, "dimension")->required();
    search->add_option("--limit", opt.limit, "maximum number of results (0 = all)")->required();
    search->add_flag("--fix-first", opt.fix_first, "pin vertex 0 to color 0");
    search->callback(set(run_search));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        return handler(opt);
    } catch (const hcube::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const hcube::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
