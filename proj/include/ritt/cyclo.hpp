#ifndef RITT_CYCLO_HPP
#define RITT_CYCLO_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <ritt/error.hpp>
#include <ritt/rational.hpp>
#include <ritt/upoly.hpp>

namespace ritt {

inline unsigned euler_phi(unsigned n)
{
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace detail {

using IntPoly = std::vector<long long>;

inline IntPoly compute_cyclotomic(unsigned n, const std::map<unsigned, IntPoly>& known)
{
    // x^n - 1 divided by every Phi_d with d | n, d < n. All divisions are
    // exact by monic polynomials, so integer arithmetic suffices.
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const IntPoly& den = known.at(d);
        const std::size_t dd = den.size() - 1;
        IntPoly quo(num.size() - dd, 0);
        for (std::size_t k = quo.size(); k-- > 0;) {
            long long q = num[k + dd];
            quo[k] = q;
            if (q == 0)
                continue;
            for (std::size_t j = 0; j <= dd; ++j)
                num[k + j] -= q * den[j];
        }
        num = std::move(quo);
    }
    return num;
}

} // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Memoized; safe to call from several threads.
inline const std::vector<long long>& cyclotomic_polynomial(unsigned n)
{
    static std::mutex mu;
    static std::map<unsigned, detail::IntPoly> cache;
    if (n == 0)
        throw DomainError("cyclotomic polynomial of order 0");
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0 && !cache.count(d))
            cache.emplace(d, detail::compute_cyclotomic(d, cache));
    }
    return cache.at(n);
}

/// Element of the cyclotomic field Q(zeta_N), stored as its coordinates over
/// the power basis 1, zeta, ..., zeta^(phi(N)-1). The representation is
/// always reduced modulo Phi_N, so two values of the same order are equal
/// iff their coordinate vectors are equal.
///
/// Binary operations on values of different orders work at the lcm order.
class Cyclo {
public:
    Cyclo() : order_(1), c_(1) {}
    Cyclo(int v) : order_(1), c_{Rational(v)} {}
    Cyclo(long v) : order_(1), c_{Rational(v)} {}
    Cyclo(const Rational& q) : order_(1), c_{q} {}

    /// Build from an arbitrary-length coefficient vector in zeta_n, reducing
    /// modulo Phi_n.
    static Cyclo from_power_coeffs(unsigned n, std::vector<Rational> coeffs)
    {
        Cyclo r;
        r.order_ = n;
        r.c_ = std::move(coeffs);
        r.reduce();
        return r;
    }

    /// zeta_n^k at order n.
    static Cyclo zeta_power(unsigned n, long k)
    {
        if (n == 0)
            throw DomainError("root of unity of order 0");
        long e = ((k % static_cast<long>(n)) + n) % n;
        std::vector<Rational> v(e + 1);
        v[e] = 1;
        return from_power_coeffs(n, std::move(v));
    }

    unsigned order() const noexcept { return order_; }
    const std::vector<Rational>& coords() const noexcept { return c_; }

    /// (k, c_k) for every nonzero coordinate, increasing k.
    std::vector<std::pair<unsigned, Rational>> nonzero_coords() const
    {
        std::vector<std::pair<unsigned, Rational>> out;
        for (unsigned k = 0; k < c_.size(); ++k)
            if (!ritt::is_zero(c_[k]))
                out.emplace_back(k, c_[k]);
        return out;
    }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (!ritt::is_zero(x))
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (!ritt::is_zero(c_[k]))
                return false;
        return true;
    }

    Rational rational_value() const
    {
        if (!is_rational())
            throw DomainError("cyclotomic number is not rational");
        return c_[0];
    }

    /// The same field element expressed at order m; order() must divide m.
    Cyclo embed(unsigned m) const
    {
        if (m == 0 || m % order_ != 0)
            throw DomainError("cannot embed order " + std::to_string(order_) + " into order " +
                              std::to_string(m));
        if (m == order_)
            return *this;
        const unsigned step = m / order_;
        std::vector<Rational> v((c_.size() - 1) * step + 1);
        for (std::size_t k = 0; k < c_.size(); ++k)
            v[k * step] = c_[k];
        return from_power_coeffs(m, std::move(v));
    }

    /// Galois conjugate zeta -> zeta^k, gcd(k, order) = 1.
    Cyclo conjugate(unsigned k) const
    {
        if (std::gcd(k, order_) != 1)
            throw DomainError("conjugation exponent not coprime to the order");
        if (order_ <= 2)
            return *this;
        std::vector<Rational> v(order_);
        for (std::size_t j = 0; j < c_.size(); ++j)
            v[(j * k) % order_] += c_[j];
        return from_power_coeffs(order_, std::move(v));
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b)
    {
        if (a.order_ != b.order_) {
            const unsigned m = std::lcm(a.order_, b.order_);
            return a.embed(m) + b.embed(m);
        }
        Cyclo r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k)
            r.c_[k] += b.c_[k];
        return r;
    }

    friend Cyclo operator-(const Cyclo& a)
    {
        Cyclo r = a;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b)
    {
        if (a.order_ == 1 || b.order_ == 1) {
            const Cyclo& s = a.order_ == 1 ? a : b;
            const Cyclo& v = a.order_ == 1 ? b : a;
            Cyclo r = v;
            for (auto& x : r.c_)
                x *= s.c_[0];
            return r;
        }
        if (a.order_ != b.order_) {
            const unsigned m = std::lcm(a.order_, b.order_);
            return a.embed(m) * b.embed(m);
        }
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ritt::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!ritt::is_zero(b.c_[j]))
                    v[i + j] += a.c_[i] * b.c_[j];
        }
        return from_power_coeffs(a.order_, std::move(v));
    }

    Cyclo inverse() const
    {
        if (is_zero())
            throw DomainError("division by zero in cyclotomic field");
        if (order_ <= 2)
            return Cyclo(Rational(1) / c_[0]);
        const auto& phi = cyclotomic_polynomial(order_);
        std::vector<Rational> pv;
        for (long long c : phi)
            pv.emplace_back(static_cast<long>(c));
        auto [g, s, t] = xgcd(UPoly<Rational>(c_), UPoly<Rational>(std::move(pv)));
        // Phi_N is irreducible, so g = 1 and s*a = 1 mod Phi_N.
        return from_power_coeffs(order_, s.coeffs());
    }

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b)
    {
        if (b.order_ == 1) {
            if (ritt::is_zero(b.c_[0]))
                throw DomainError("division by zero in cyclotomic field");
            Cyclo r = a;
            for (auto& x : r.c_)
                x /= b.c_[0];
            return r;
        }
        return a * b.inverse();
    }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        Cyclo base = *this, acc(1);
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            e >>= 1;
            if (e > 0)
                base = base * base;
        }
        return acc;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b)
    {
        if (a.order_ == b.order_)
            return a.c_ == b.c_;
        const unsigned m = std::lcm(a.order_, b.order_);
        return a.embed(m).c_ == b.embed(m).c_;
    }

    /// Deterministic total order (not a field order): compares coordinates at
    /// the common order, highest power first.
    friend int compare(const Cyclo& a, const Cyclo& b)
    {
        if (a.order_ != b.order_) {
            const unsigned m = std::lcm(a.order_, b.order_);
            return compare(a.embed(m), b.embed(m));
        }
        for (std::size_t k = a.c_.size(); k-- > 0;) {
            int s = cmp(a.c_[k], b.c_[k]);
            if (s != 0)
                return s < 0 ? -1 : 1;
        }
        return 0;
    }

    /// Parse-compatible rendering, e.g. "3/2", "zeta(8)^3", "1+2*zeta(3)".
    std::string to_string() const
    {
        if (is_rational())
            return c_[0].get_str();
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& q = c_[k];
            if (ritt::is_zero(q))
                continue;
            std::string mag;
            Rational aq = abs(q);
            if (k == 0) {
                mag = aq.get_str();
            } else {
                std::string z = "zeta(" + std::to_string(order_) + ")";
                if (k > 1)
                    z += "^" + std::to_string(k);
                mag = aq == 1 ? z : aq.get_str() + "*" + z;
            }
            if (out.empty())
                out = sgn(q) < 0 ? "-" + mag : mag;
            else
                out += (sgn(q) < 0 ? "-" : "+") + mag;
        }
        return out;
    }

private:
    void reduce()
    {
        const auto& phi = cyclotomic_polynomial(order_);
        const std::size_t d = phi.size() - 1;
        for (std::size_t i = c_.size(); i-- > d;) {
            if (ritt::is_zero(c_[i]))
                continue;
            const Rational q = c_[i];
            for (std::size_t j = 0; j < d; ++j)
                if (phi[j] != 0)
                    c_[i - d + j] -= q * static_cast<long>(phi[j]);
        }
        c_.resize(d);
    }

    unsigned order_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& a) { return a.is_zero(); }

/// The primitive n-th root of unity zeta_n = exp(2 pi i / n), at order n.
inline Cyclo primitive_root(unsigned n) { return Cyclo::zeta_power(n, 1); }

inline Cyclo cyclo_embed(const Cyclo& a, unsigned m) { return a.embed(m); }

enum class CycloOp { add, mul, div };

inline Cyclo cyclo_arith(const Cyclo& a, const Cyclo& b, CycloOp op)
{
    switch (op) {
    case CycloOp::add:
        return a + b;
    case CycloOp::mul:
        return a * b;
    case CycloOp::div:
        return a / b;
    }
    return {};
}

} // namespace ritt

#endif // RITT_CYCLO_HPP
