#ifndef RITT_TESTS_UTIL_HPP
#define RITT_TESTS_UTIL_HPP

#include <string>
#include <utility>
#include <vector>

#include <ritt/elaborate.hpp>
#include <ritt/laurent.hpp>
#include <ritt/parse.hpp>

namespace ritt::testing {

inline const std::vector<std::string>& xy()
{
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

/// Exponential polynomial in x, y (x is variable 0, y is variable 1).
inline EPoly ep(const std::string& s, const std::vector<std::string>& vars = xy())
{
    return elaborate(parse(s), vars);
}

/// Coefficient polynomial in x, y.
inline CoeffPoly cp(const std::string& s, const std::vector<std::string>& vars = xy())
{
    const EPoly f = ep(s, vars);
    if (f.is_zero())
        return CoeffPoly();
    if (f.size() != 1 || !f.terms().begin()->first.is_zero())
        throw DomainError("not a coefficient polynomial: " + s);
    return f.terms().begin()->second;
}

/// Laurent polynomial in y1..yp written with the names y1, y2, ...; x
/// variables may appear in coefficients. Negative exponents are written with
/// an explicit shift: lp(p, s, shift) divides by y^shift.
inline LaurentPoly lp(std::size_t p, const std::string& s, const std::vector<int>& shift = {})
{
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < p; ++i)
        vars.push_back("y" + std::to_string(i + 1));
    vars.push_back("x");
    const CoeffPoly flat = cp(s, vars);
    LaurentPoly out(p);
    for (const auto& [m, c] : flat.terms()) {
        ExponentVector e(p, 0);
        for (std::size_t i = 0; i < p; ++i)
            e[i] = monomial_at(m, i) - (i < shift.size() ? shift[i] : 0);
        Monomial xm;
        if (m.size() > p)
            xm.assign(m.begin() + static_cast<long>(p), m.end());
        trim_monomial(xm);
        out.add_term(e, CoeffPoly::term(c, xm));
    }
    return out;
}

} // namespace ritt::testing

#endif // RITT_TESTS_UTIL_HPP
