#ifndef RITT_ELABORATE_HPP
#define RITT_ELABORATE_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <ritt/epoly.hpp>
#include <ritt/error.hpp>
#include <ritt/laurent.hpp>
#include <ritt/parse.hpp>

namespace ritt {

struct ElaborateOptions {
    unsigned height_cap = 3;
    std::size_t term_cap = 20000;
    unsigned order_cap = 1024;
};

/// An elaborated expression and the variable names behind x1..xn.
struct Elaborated {
    EPoly value;
    std::vector<std::string> vars;
};

namespace detail {

inline void collect_variables(const Node& n, std::set<std::string>& out)
{
    if (n.kind == NodeKind::variable)
        out.insert(n.name);
    for (const auto& k : n.kids)
        collect_variables(*k, out);
}

inline void check_limits(const EPoly& f, const ElaborateOptions& opt)
{
    if (f.size() > opt.term_cap)
        throw ResourceError("term count " + std::to_string(f.size()) + " exceeds the term cap " +
                            std::to_string(opt.term_cap));
    if (f.order() > opt.order_cap)
        throw ResourceError("cyclotomic order " + std::to_string(f.order()) + " exceeds the order cap " +
                            std::to_string(opt.order_cap));
}

inline EPoly eval(const Node& n, const std::vector<std::string>& vars, const ElaborateOptions& opt)
{
    EPoly r;
    switch (n.kind) {
    case NodeKind::number:
        r = EPoly(CoeffPoly(Cyclo(n.value)));
        break;
    case NodeKind::zeta:
        if (n.n > opt.order_cap)
            throw ResourceError("cyclotomic order " + std::to_string(n.n) + " exceeds the order cap " +
                                std::to_string(opt.order_cap));
        r = EPoly(CoeffPoly(Cyclo::zeta_power(static_cast<unsigned>(n.n), 1)));
        break;
    case NodeKind::variable: {
        auto it = std::find(vars.begin(), vars.end(), n.name);
        if (it == vars.end())
            throw DomainError("unknown variable " + n.name);
        r = EPoly(CoeffPoly::variable(static_cast<std::size_t>(it - vars.begin())));
        break;
    }
    case NodeKind::exp:
        r = exp(eval(*n.kids[0], vars, opt));
        if (r.height() > opt.height_cap)
            throw ResourceError("exponential height " + std::to_string(r.height()) + " exceeds the height cap " +
                                std::to_string(opt.height_cap));
        break;
    case NodeKind::group: return eval(*n.kids[0], vars, opt);
    case NodeKind::neg: return -eval(*n.kids[0], vars, opt);
    case NodeKind::add: r = eval(*n.kids[0], vars, opt) + eval(*n.kids[1], vars, opt); break;
    case NodeKind::sub: r = eval(*n.kids[0], vars, opt) - eval(*n.kids[1], vars, opt); break;
    case NodeKind::mul: r = eval(*n.kids[0], vars, opt) * eval(*n.kids[1], vars, opt); break;
    case NodeKind::pow: {
        const EPoly base = eval(*n.kids[0], vars, opt);
        r = EPoly::term(CoeffPoly(1), Exponent{}, base.order());
        for (unsigned long i = 0; i < n.n; ++i) {
            r = r * base;
            check_limits(r, opt);
        }
        break;
    }
    }
    check_limits(r, opt);
    return r;
}

} // namespace detail

/// Identifiers of the expression, sorted.
inline std::vector<std::string> variables(const SourceExpr& e)
{
    std::set<std::string> s;
    detail::collect_variables(*e.root, s);
    return {s.begin(), s.end()};
}

/// Evaluate with x_i named vars[i]; every variable of e must be listed.
inline EPoly elaborate(const SourceExpr& e, const std::vector<std::string>& vars, const ElaborateOptions& opt = {})
{
    return detail::eval(*e.root, vars, opt);
}

/// Evaluate with the variables of e in alphabetical order.
inline Elaborated elaborate(const SourceExpr& e, const ElaborateOptions& opt = {})
{
    auto vars = variables(e);
    return {elaborate(e, vars, opt), vars};
}

// Printers. Their output parses back to the same value given the same names.

namespace detail {

inline std::string var_name(const std::vector<std::string>& vars, std::size_t i)
{
    return i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
}

/// Joins signed summands: "a", "-b" -> "a - b".
inline std::string join_signed(const std::vector<std::string>& parts)
{
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].front() == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

/// c * body, where body is a nonempty product string.
inline std::string scaled(const Cyclo& c, const std::string& body)
{
    if (c == Cyclo(1))
        return body;
    if (c == Cyclo(-1))
        return "-" + body;
    if (c.is_rational())
        return c.rational_value().get_str() + "*" + body;
    if (c.nonzero_coords().size() == 1)
        return c.to_string() + "*" + body;
    return "(" + c.to_string() + ")*" + body;
}

inline std::string constant_summand(const Cyclo& c)
{
    if (c.is_rational() || c.nonzero_coords().size() == 1)
        return c.to_string();
    return "(" + c.to_string() + ")";
}

} // namespace detail

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += detail::var_name(vars, i);
        if (m[i] != 1)
            out += "^" + std::to_string(m[i]);
    }
    return out;
}

/// Summands of a coefficient polynomial, greatest monomial first.
inline std::vector<std::string> coeffpoly_summands(const CoeffPoly& p, const std::vector<std::string>& vars)
{
    std::vector<std::string> parts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (it->first.empty())
            parts.push_back(detail::constant_summand(it->second));
        else
            parts.push_back(detail::scaled(it->second, format_monomial(it->first, vars)));
    }
    return parts;
}

inline std::string format_coeffpoly(const CoeffPoly& p, const std::vector<std::string>& vars)
{
    return detail::join_signed(coeffpoly_summands(p, vars));
}

inline std::string format_exponent(const Exponent& e, unsigned order, const std::vector<std::string>& vars)
{
    std::vector<std::string> parts;
    const auto& co = e.coords();
    for (auto it = co.rbegin(); it != co.rend(); ++it) {
        const Atom& a = it->first;
        std::vector<std::string> f;
        if (a.zeta > 0)
            f.push_back("zeta(" + std::to_string(order) + ")" + (a.zeta > 1 ? "^" + std::to_string(a.zeta) : ""));
        if (!a.mono.empty())
            f.push_back(format_monomial(a.mono, vars));
        if (a.inner)
            f.push_back("E(" + format_exponent(*a.inner, order, vars) + ")");
        std::string body;
        for (const auto& s : f)
            body += (body.empty() ? "" : "*") + s;
        parts.push_back(detail::scaled(Cyclo(it->second), body));
    }
    return detail::join_signed(parts);
}

inline std::string format_epoly(const EPoly& f, const std::vector<std::string>& vars)
{
    std::vector<std::string> parts;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [alpha, a] = *it;
        if (alpha.is_zero()) {
            for (auto& s : coeffpoly_summands(a, vars))
                parts.push_back(std::move(s));
            continue;
        }
        const std::string ex = "E(" + format_exponent(alpha, f.order(), vars) + ")";
        if (a.size() == 1) {
            const auto& [m, c] = *a.terms().begin();
            parts.push_back(detail::scaled(c, m.empty() ? ex : format_monomial(m, vars) + "*" + ex));
        } else {
            parts.push_back("(" + format_coeffpoly(a, vars) + ")*" + ex);
        }
    }
    return detail::join_signed(parts);
}

inline std::string format_unit(const Unit& u, const std::vector<std::string>& vars)
{
    return format_epoly(u.to_epoly(), vars);
}

/// Q(y1..yp) with coefficients in the x variables; y names are y1..yp.
inline std::string format_laurent(const LaurentPoly& q, const std::vector<std::string>& vars)
{
    std::vector<std::string> parts;
    const auto& ts = q.poly().terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        std::string ym;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            const int k = it->first[i];
            if (k == 0)
                continue;
            ym += (ym.empty() ? "" : "*") + std::string("y") + std::to_string(i + 1);
            if (k != 1)
                ym += "^" + std::to_string(k);
        }
        const CoeffPoly& c = it->second;
        if (ym.empty()) {
            for (auto& s : coeffpoly_summands(c, vars))
                parts.push_back(std::move(s));
        } else if (c.size() == 1) {
            const auto& [m, z] = *c.terms().begin();
            parts.push_back(detail::scaled(z, m.empty() ? ym : format_monomial(m, vars) + "*" + ym));
        } else {
            parts.push_back("(" + format_coeffpoly(c, vars) + ")*" + ym);
        }
    }
    return detail::join_signed(parts);
}

} // namespace ritt

#endif // RITT_ELABORATE_HPP
