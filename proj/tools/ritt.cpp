// Command-line front end: factor, support, associate, verify.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <ritt/associate.hpp>
#include <ritt/elaborate.hpp>
#include <ritt/parse.hpp>
#include <ritt/report.hpp>
#include <ritt/ritt.hpp>

namespace {

struct Flags {
    unsigned order = 1;
    unsigned degree_cap = ritt::FactorOptions{}.degree_cap;
    unsigned height_cap = ritt::EngineOptions{}.height_cap;
    bool json = false;
    unsigned long seed = 0;
    std::string basis = "lattice";
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ritt::BasisStrategy basis_of(const std::string& s)
{
    static const std::map<std::string, ritt::BasisStrategy> m{
        {"lattice", ritt::BasisStrategy::lattice},
        {"lattice_reversed", ritt::BasisStrategy::lattice_reversed},
        {"echelon", ritt::BasisStrategy::echelon},
        {"echelon_reversed", ritt::BasisStrategy::echelon_reversed}};
    return m.at(s);
}

ritt::ElaborateOptions elab_opts(const Flags& f)
{
    ritt::ElaborateOptions o;
    o.height_cap = f.height_cap;
    return o;
}

ritt::EngineOptions engine_opts(const Flags& f)
{
    ritt::EngineOptions o;
    o.factor.degree_cap = f.degree_cap;
    o.height_cap = f.height_cap;
    o.basis = basis_of(f.basis);
    return o;
}

// Parse, elaborate and lift to the requested ambient order.
ritt::Elaborated load(const std::string& text, const Flags& f, double* parse_ms = nullptr)
{
    const auto t0 = Clock::now();
    auto e = ritt::elaborate(ritt::parse(text), elab_opts(f));
    e.value = e.value.embed(std::lcm(e.value.order(), f.order));
    if (parse_ms)
        *parse_ms = ms_since(t0);
    return e;
}

void emit(const nlohmann::json& j, const std::string& text, bool as_json)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_factor(const std::string& text, const Flags& f)
{
    ritt::Timings t;
    const auto e = load(text, f, &t.parse_ms);
    const auto t0 = Clock::now();
    const auto fac = ritt::factor_epoly(e.value, engine_opts(f));
    t.factor_ms = ms_since(t0);
    const auto j = ritt::factorization_json(text, fac, e.vars, t);
    emit(j, ritt::factorization_text(j), f.json);
    return 0;
}

int cmd_support(const std::string& text, const Flags& f)
{
    const auto e = load(text, f);
    const auto s = ritt::support(e.value);
    nlohmann::json gens = nlohmann::json::array();
    std::string lines;
    for (const auto& g : s.generators) {
        gens.push_back(ritt::format_exponent(g, e.value.order(), e.vars));
        lines += "  " + gens.back().get<std::string>() + "\n";
    }
    const nlohmann::json j{{"input", text}, {"ambient_order", e.value.order()}, {"generators", gens},
                           {"dimension", s.dimension}};
    emit(j,
         "input: " + text + "\nambient_order: " + std::to_string(e.value.order()) + "\ngenerators:\n" + lines +
             "dimension: " + std::to_string(s.dimension) + "\n",
         f.json);
    return 0;
}

int cmd_associate(const std::string& text, const Flags& f)
{
    const auto e = load(text, f);
    const auto b = ritt::support_basis(e.value, basis_of(f.basis));
    const auto a = ritt::to_associate(e.value, b);
    const unsigned n = e.value.order();
    nlohmann::json nu = nlohmann::json::array();
    std::ostringstream os;
    os << "input: " << text << "\nambient_order: " << n << "\nbasis:\n";
    for (std::size_t i = 0; i < b.nu.size(); ++i) {
        nu.push_back(ritt::format_exponent(b.nu[i], n, e.vars));
        os << "  nu" << i + 1 << " = " << nu.back().get<std::string>() << "\n";
    }
    os << "exponent_matrix:\n";
    for (std::size_t h = 0; h < b.exponents.size(); ++h) {
        os << "  " << ritt::format_exponent(b.exponents[h], n, e.vars) << " ->";
        for (int c : b.exponent_matrix[h])
            os << " " << c;
        os << "\n";
    }
    const std::string q = ritt::format_laurent(a.q, e.vars);
    const std::string unit = ritt::format_unit(a.unit, e.vars);
    os << "Q: " << q << "\nunit: " << unit << "\n";
    const nlohmann::json j{{"input", text}, {"ambient_order", n},          {"basis", nu},
                           {"exponent_matrix", b.exponent_matrix}, {"Q", q}, {"unit", unit}};
    emit(j, os.str(), f.json);
    return 0;
}

int cmd_verify(const std::string& path, const Flags& f)
{
    std::string body;
    if (path == "-") {
        body.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw ritt::DomainError("cannot open " + path);
        body.assign(std::istreambuf_iterator<char>(in), {});
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw ritt::DomainError(std::string("malformed artifact: ") + e.what());
    }
    const auto r = ritt::verify_artifact(j, elab_opts(f));
    emit(nlohmann::json{{"ok", r.ok}, {"message", r.message}}, r.message + "\n", f.json);
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Factorization of exponential polynomials"};
    app.fallthrough();
    app.require_subcommand(1);
    Flags f;
    app.add_option("--cyclotomic-order", f.order, "Initial ambient cyclotomic order N")->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", f.degree_cap, "Degree cap for classical factorization")->check(CLI::PositiveNumber);
    app.add_option("--height-cap", f.height_cap, "Maximal exponential height")->check(CLI::PositiveNumber);
    app.add_flag("--json", f.json, "Print JSON");
    app.add_option("--seed", f.seed, "Seed for randomized suites (the engine itself is deterministic)");
    app.add_option("--basis", f.basis, "Support basis strategy")
        ->check(CLI::IsMember({"lattice", "lattice_reversed", "echelon", "echelon_reversed"}));

    std::string expr, path;
    auto* factor = app.add_subcommand("factor", "Factor an exponential polynomial");
    factor->add_option("expr", expr, "Expression")->required();
    auto* support = app.add_subcommand("support", "Support generators and dimension");
    support->add_option("expr", expr, "Expression")->required();
    auto* associate = app.add_subcommand("associate", "Support basis, exponent matrix, Q and unit");
    associate->add_option("expr", expr, "Expression")->required();
    auto* verify = app.add_subcommand("verify", "Re-check a JSON factorization artifact");
    verify->add_option("artifact", path, "Artifact file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (factor->parsed())
            return cmd_factor(expr, f);
        if (support->parsed())
            return cmd_support(expr, f);
        if (associate->parsed())
            return cmd_associate(expr, f);
        return cmd_verify(path, f);
    } catch (const ritt::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const ritt::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 1;
    } catch (const ritt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
