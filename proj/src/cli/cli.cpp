#include "hankelkit/cli.hpp"

#include "hankelkit/berlekamp.hpp"
#include "hankelkit/error.hpp"
#include "hankelkit/hankel.hpp"
#include "hankelkit/production.hpp"
#include "hankelkit/riordan.hpp"
#include "hankelkit/sequences.hpp"
#include "hankelkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace hk::cli {

namespace {

using nlohmann::json;

json strings(const std::vector<ExactInt>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

json strings(const std::vector<ExactRat>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

json lower_rows(const RatMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(strings(m.lower_row(i)));
    return out;
}

json full_rows(const RatMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(strings(m.row(i)));
    return out;
}

void emit(std::ostream& out, const json& doc)
{
    out << doc.dump(2) << '\n';
}

template <class Row>
void csv_line(std::ostream& out, const std::vector<Row>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << to_string(cells[i]);
    out << '\n';
}

void csv_header(std::ostream& out, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i)
        out << (i ? "," : "") << i;
    out << '\n';
}

void require_positive_r(long r)
{
    if (r < 1)
        throw Error(Errc::unsupported_parameter, "r must be at least 1, got " + std::to_string(r));
}

struct GenerateArgs {
    std::string what;
    long r = 1;
    std::size_t n = 8;
    std::string format = "csv";
};

int do_generate(const GenerateArgs& a, std::ostream& out)
{
    if (a.n < 1)
        throw std::invalid_argument("--n must be at least 1");
    if (a.what == "triangle") {
        const Triangle t = triangle(a.n, a.r);
        if (a.format == "json") {
            json rows = json::array();
            for (const auto& row : t.rows)
                rows.push_back(strings(row));
            emit(out, {{"family", "triangle"}, {"r", std::to_string(a.r)}, {"n", std::to_string(a.n)}, {"rows", rows}});
        } else {
            csv_header(out, a.n);
            for (const auto& row : t.rows)
                csv_line(out, row);
        }
        return exit_ok;
    }
    const Family f = parse_family(a.what);
    if (f != Family::pell && f != Family::interleaved)
        require_positive_r(a.r);
    const SeqVec seq = generate(f, a.r, a.n);
    if (a.format == "json") {
        emit(out, {{"family", a.what}, {"r", std::to_string(a.r)}, {"n", std::to_string(a.n)}, {"terms", strings(seq.terms)}});
    } else {
        csv_header(out, a.n);
        csv_line(out, seq.terms);
    }
    return exit_ok;
}

struct SequenceSource {
    std::string family;
    long r = 1;
    bool from_stdin = false;
};

struct HankelArgs {
    std::string sub;
    SequenceSource source;
    std::size_t count = 5;
    std::size_t size = 4;
    std::size_t rows = 4;
    std::string check = "ldl_spot";
};

std::vector<ExactInt> load_sequence(const SequenceSource& s, std::size_t needed, std::istream& in, json& input)
{
    if (s.from_stdin) {
        std::vector<ExactInt> terms;
        for (const auto& tok : split_sequence(in))
            terms.push_back(parse_int(tok));
        input = {{"source", "stdin"}, {"terms", strings(terms)}};
        return terms;
    }
    if (s.family.empty())
        throw std::invalid_argument("either --family or --stdin is required");
    const Family f = parse_family(s.family);
    if (f != Family::pell && f != Family::interleaved)
        require_positive_r(s.r);
    auto terms = generate(f, s.r, needed).terms;
    input = {{"source", "family"}, {"family", s.family}, {"r", std::to_string(s.r)}, {"terms", strings(terms)}};
    return terms;
}

DetCheck parse_check(const std::string& name)
{
    if (name == "both")
        return DetCheck::both;
    if (name == "ldl_spot")
        return DetCheck::ldl_spot;
    if (name == "ldl_only")
        return DetCheck::ldl_only;
    return DetCheck::bareiss_only;
}

int do_hankel(const HankelArgs& a, std::istream& in, std::ostream& out)
{
    json input;
    json params;
    json result;
    if (a.sub == "transform") {
        if (a.count < 1)
            throw std::invalid_argument("--count must be at least 1");
        const auto seq = load_sequence(a.source, 2 * a.count - 1, in, input);
        params = {{"count", std::to_string(a.count)}, {"check", a.check}};
        result = strings(hankel_transform(seq, a.count, parse_check(a.check)));
    } else if (a.sub == "ldl") {
        const auto seq = load_sequence(a.source, 2 * a.size - 1, in, input);
        params = {{"size", std::to_string(a.size)}};
        const LDLDecomp d = ldl(hankel_matrix(seq, a.size));
        result = {{"L", lower_rows(d.L)}, {"D", strings(d.D)}};
    } else if (a.sub == "bm") {
        const auto seq = load_sequence(a.source, 2 * a.rows, in, input);
        params = {{"rows", std::to_string(a.rows)}};
        json rows = json::array();
        for (const auto& row : bm_triangle(seq, a.rows).rows)
            rows.push_back(strings(row));
        result = {{"rows", rows}};
    } else if (a.sub == "charpoly") {
        const auto seq = load_sequence(a.source, 2 * a.size, in, input);
        params = {{"size", std::to_string(a.size)}};
        result = {{"coeffs", strings(char_poly(seq, a.size).coeffs)}};
        if (a.size > 0)
            result["companion"] = full_rows(companion_check(seq, a.size));
    } else {
        // Production matrix of the LDL factor; one extra row pins down the last row of P.
        const auto seq = load_sequence(a.source, 2 * a.size + 1, in, input);
        params = {{"size", std::to_string(a.size)}};
        const LDLDecomp d = ldl(hankel_matrix(seq, a.size + 1));
        result = {{"L", lower_rows(d.L.leading(a.size))}, {"P", full_rows(production_matrix(d.L))}};
    }
    emit(out, {{"input", input}, {"params", params}, {"result", result}});
    return exit_ok;
}

RiordanArray named_array(const std::string& name, long r, std::size_t size)
{
    if (name == "binomial")
        return RiordanArray::binomial(size + 2);
    require_positive_r(r);
    if (name == "lcentral")
        return L_central(r, size);
    if (name == "lcatalan")
        return L_catalan(r, size);
    if (name == "lcatalan-inverse")
        return L_catalan_inverse(r, size);
    return a_p(r, size);
}

struct ArrayArgs {
    std::string sub;
    std::string array = "ap";
    long r = 1;
    std::size_t size = 4;
};

int do_riordan(const ArrayArgs& a, std::ostream& out)
{
    const json params{{"r", std::to_string(a.r)}, {"size", std::to_string(a.size)}};
    RatMatrix m;
    if (a.sub == "bridge") {
        require_positive_r(a.r);
        m = stieltjes_bridge(a.r, a.size);
    } else {
        m = to_matrix(named_array(a.sub, a.r, a.size), a.size);
    }
    emit(out, {{"array", a.sub}, {"params", params}, {"rows", lower_rows(m)}});
    return exit_ok;
}

int do_production(const ArrayArgs& a, std::ostream& out)
{
    json params{{"r", std::to_string(a.r)}, {"size", std::to_string(a.size)}};
    json rows;
    if (a.sub == "pcatalan") {
        require_positive_r(a.r);
        rows = full_rows(p_catalan(a.r, a.size));
    } else if (a.sub == "grow") {
        require_positive_r(a.r);
        rows = lower_rows(matrix_from_production(p_catalan(a.r, a.size), a.size));
    } else {
        params["array"] = a.array;
        rows = full_rows(production_matrix(to_matrix(named_array(a.array, a.r, a.size + 1), a.size + 1)));
    }
    emit(out, {{"matrix", a.sub}, {"params", params}, {"rows", rows}});
    return exit_ok;
}

int do_verify(const verify::Options& o, std::ostream& out)
{
    const verify::Report report = verify::run(o);
    out << verify::to_json(report);
    return report.all_passed() ? exit_ok : exit_failure;
}

} // namespace

std::vector<std::string> split_sequence(std::istream& in)
{
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#')
            continue;
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream words(line);
        std::string w;
        while (words >> w)
            tokens.push_back(w);
    }
    return tokens;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Hankel transforms, Riordan arrays and Berlekamp-Massey triangles", "hankelkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Print a triangle or sequence");
    generate_cmd->add_option("what", gen.what, "What to generate")
        ->required()
        ->check(CLI::IsMember({"triangle", "central", "catalan", "sum", "b", "pell", "bessel", "interleaved"}));
    generate_cmd->add_option("--r", gen.r, "Parameter r");
    generate_cmd->add_option("--n", gen.n, "Number of terms or rows");
    generate_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    HankelArgs hk_args;
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform, LDL, B-M triangle, characteristic polynomial");
    hankel_cmd->add_option("sub", hk_args.sub, "Operation")
        ->required()
        ->check(CLI::IsMember({"transform", "ldl", "bm", "charpoly", "production"}));
    auto* family_opt = hankel_cmd->add_option("--family", hk_args.source.family, "Sequence family");
    hankel_cmd->add_option("--r", hk_args.source.r, "Parameter r");
    hankel_cmd->add_flag("--stdin", hk_args.source.from_stdin, "Read the sequence from standard input")
        ->excludes(family_opt);
    hankel_cmd->add_option("--count", hk_args.count, "Number of Hankel transform terms");
    hankel_cmd->add_option("--size", hk_args.size, "Matrix size or polynomial degree");
    hankel_cmd->add_option("--rows", hk_args.rows, "Number of B-M triangle rows");
    hankel_cmd->add_option("--check", hk_args.check, "Determinant cross-check")
        ->check(CLI::IsMember({"both", "ldl_spot", "ldl_only", "bareiss_only"}));

    ArrayArgs riordan_args;
    auto* riordan_cmd = app.add_subcommand("riordan", "Expand a Riordan array");
    riordan_cmd->add_option("sub", riordan_args.sub, "Array")
        ->required()
        ->check(CLI::IsMember({"lcentral", "lcatalan", "lcatalan-inverse", "ap", "binomial", "bridge"}));
    riordan_cmd->add_option("--r", riordan_args.r, "Parameter r");
    riordan_cmd->add_option("--size", riordan_args.size, "Number of rows");

    ArrayArgs prod_args;
    auto* production_cmd = app.add_subcommand("production", "Production matrices");
    production_cmd->add_option("sub", prod_args.sub, "Operation")
        ->required()
        ->check(CLI::IsMember({"pcatalan", "grow", "extract"}));
    production_cmd->add_option("--array", prod_args.array, "Array for extract")
        ->check(CLI::IsMember({"lcentral", "lcatalan", "lcatalan-inverse", "ap", "binomial"}));
    production_cmd->add_option("--r", prod_args.r, "Parameter r");
    production_cmd->add_option("--size", prod_args.size, "Matrix size");

    verify::Options vopts;
    vopts.scopes.clear();
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks and print a JSON report");
    verify_cmd->add_option("--scope", vopts.scopes, "Modules to check")
        ->delimiter(',')
        ->check(CLI::IsMember(verify::scope_names()));
    verify_cmd->add_option("--r-max", vopts.r_max, "Largest r in the grid");
    verify_cmd->add_option("--n-max", vopts.n_max, "Largest n in the grid");
    verify_cmd->add_flag("--parallel", vopts.parallel, "Run checks on several threads");

    std::vector<std::string> argv_store{"hankelkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*generate_cmd)
            return do_generate(gen, out);
        if (*hankel_cmd)
            return do_hankel(hk_args, in, out);
        if (*riordan_cmd)
            return do_riordan(riordan_args, out);
        if (*production_cmd)
            return do_production(prod_args, out);
        if (vopts.scopes.empty())
            vopts.scopes.push_back("all");
        return do_verify(vopts, out);
    } catch (const BMTriangleAborted& e) {
        json rows = json::array();
        for (const auto& row : e.partial().rows)
            rows.push_back(strings(row));
        err << "error: " << e.what() << " (index " << e.index().value_or(0) << ")\n";
        err << json{{"partial_rows", rows}}.dump() << '\n';
        return exit_singular;
    } catch (const Error& e) {
        err << "error: " << e.what();
        if (e.index())
            err << " (index " << *e.index() << ")";
        err << '\n';
        if (e.is_singularity())
            return exit_singular;
        if (e.code() == Errc::unsupported_parameter || e.code() == Errc::insufficient_terms)
            return exit_usage;
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace hk::cli
