#ifndef RITT_REPORT_HPP
#define RITT_REPORT_HPP

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <ritt/elaborate.hpp>
#include <ritt/error.hpp>
#include <ritt/parse.hpp>
#include <ritt/ritt.hpp>

namespace ritt {

struct Timings {
    double parse_ms = 0;
    double factor_ms = 0;
};

/// Factorization as JSON; every polynomial is a re-parsable expression.
inline nlohmann::json factorization_json(const std::string& input, const Factorization& fac,
                                         const std::vector<std::string>& vars, const Timings& t = {})
{
    using nlohmann::json;
    auto entry = [&](const EPoly& g, unsigned e) { return json{{"factor", format_epoly(g, vars)}, {"multiplicity", e}}; };
    json classical = json::array();
    for (const auto& [c, e] : fac.classical)
        classical.push_back(entry(EPoly(c, fac.order), e));
    json blocks = json::array();
    for (const auto& b : fac.simple_blocks) {
        json parts = json::array();
        for (const auto& [g, e] : b.parts)
            parts.push_back(entry(g, e));
        blocks.push_back({{"support_line", format_exponent(b.support_line, fac.order, vars)},
                          {"block", format_epoly(b.block, vars)},
                          {"parts", parts}});
    }
    json nonsimple = json::array();
    for (const auto& [g, e] : fac.nonsimple)
        nonsimple.push_back(entry(g, e));
    return json{{"input", input},
                {"ambient_order", fac.order},
                {"unit", format_unit(fac.unit, vars)},
                {"classical", classical},
                {"simple_blocks", blocks},
                {"nonsimple", nonsimple},
                {"timings", {{"parse_ms", t.parse_ms}, {"factor_ms", t.factor_ms}}}};
}

/// Plain-text rendering of the same content as factorization_json.
inline std::string factorization_text(const nlohmann::json& j)
{
    std::ostringstream os;
    os << "input: " << j["input"].get<std::string>() << "\n";
    os << "ambient_order: " << j["ambient_order"].get<unsigned>() << "\n";
    os << "unit: " << j["unit"].get<std::string>() << "\n";
    auto list = [&](const char* key) {
        os << key << ": " << j[key].size() << "\n";
        for (const auto& e : j[key])
            os << "  (" << e["factor"].get<std::string>() << ")^" << e["multiplicity"].get<unsigned>() << "\n";
    };
    list("classical");
    os << "simple_blocks: " << j["simple_blocks"].size() << "\n";
    for (const auto& b : j["simple_blocks"]) {
        os << "  line " << b["support_line"].get<std::string>() << ": " << b["block"].get<std::string>() << "\n";
        for (const auto& e : b["parts"])
            os << "    part (" << e["factor"].get<std::string>() << ")^" << e["multiplicity"].get<unsigned>() << "\n";
    }
    list("nonsimple");
    os << "timings: parse " << j["timings"]["parse_ms"].get<double>() << " ms, factor "
       << j["timings"]["factor_ms"].get<double>() << " ms\n";
    return os.str();
}

struct VerifyResult {
    bool ok = false;
    std::string message;
};

/// Re-elaborate every expression of a factorization artifact and check that
/// the parts multiply back to the input.
inline VerifyResult verify_artifact(const nlohmann::json& j, const ElaborateOptions& opt = {})
{
    for (const char* key : {"input", "ambient_order", "unit", "classical", "simple_blocks", "nonsimple", "timings"})
        if (!j.contains(key))
            throw DomainError(std::string("artifact lacks the key ") + key);

    std::vector<SourceExpr> srcs;
    auto add = [&](const nlohmann::json& s) {
        srcs.push_back(parse(s.get<std::string>()));
        return srcs.size() - 1;
    };
    const std::size_t in = add(j["input"]);
    const std::size_t un = add(j["unit"]);
    std::vector<std::pair<std::size_t, unsigned>> factors;
    for (const char* key : {"classical", "nonsimple"})
        for (const auto& e : j[key])
            factors.emplace_back(add(e["factor"]), e["multiplicity"].get<unsigned>());
    struct Block {
        std::size_t block;
        std::vector<std::pair<std::size_t, unsigned>> parts;
    };
    std::vector<Block> blocks;
    for (const auto& b : j["simple_blocks"]) {
        Block blk{add(b["block"]), {}};
        for (const auto& e : b["parts"])
            blk.parts.emplace_back(add(e["factor"]), e["multiplicity"].get<unsigned>());
        blocks.push_back(std::move(blk));
    }

    std::set<std::string> names;
    for (const auto& s : srcs)
        detail::collect_variables(*s.root, names);
    const std::vector<std::string> vars(names.begin(), names.end());
    std::vector<EPoly> vals;
    for (const auto& s : srcs)
        vals.push_back(elaborate(s, vars, opt));

    EPoly prod = vals[un];
    for (const auto& [k, e] : factors)
        prod = prod * vals[k].pow(e);
    for (const auto& b : blocks) {
        EPoly parts(1);
        for (const auto& [k, e] : b.parts)
            parts = parts * vals[k].pow(e);
        if (!b.parts.empty() && parts != vals[b.block])
            return {false, "simple block differs from the product of its parts"};
        prod = prod * vals[b.block];
    }
    if (prod != vals[in])
        return {false, "product of the factors differs from the input"};
    return {true, "reconstruction verified"};
}

} // namespace ritt

#endif // RITT_REPORT_HPP
