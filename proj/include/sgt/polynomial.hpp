#ifndef SGT_POLYNOMIAL_HPP
#define SGT_POLYNOMIAL_HPP

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sgt/error.hpp"

namespace sgt {

using wide_int = __int128;

namespace detail {

inline wide_int checked_mul(wide_int a, wide_int b) {
    wide_int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "128-bit overflow in exact integer arithmetic");
    return r;
}

inline wide_int checked_add(wide_int a, wide_int b) {
    wide_int r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "128-bit overflow in exact integer arithmetic");
    return r;
}

inline std::int64_t narrow(wide_int v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorKind::Overflow, "coefficient does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline wide_int abs_wide(wide_int v) { return v < 0 ? -v : v; }

inline wide_int gcd_wide(wide_int a, wide_int b) {
    a = abs_wide(a);
    b = abs_wide(b);
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// Integer-coefficient univariate polynomial, constant term first. Trailing
/// zero coefficients are trimmed so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// x - root
    static IntPolynomial linear(std::int64_t root) { return IntPolynomial{-root, 1}; }

    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

    std::int64_t evaluate(std::int64_t x) const {
        wide_int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = detail::checked_add(detail::checked_mul(acc, x), *it);
        return detail::narrow(acc);
    }

    long double evaluate(long double x) const {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + static_cast<long double>(*it);
        return acc;
    }

    double operator()(double x) const { return static_cast<double>(evaluate(static_cast<long double>(x))); }

    IntPolynomial derivative() const {
        std::vector<std::int64_t> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(detail::narrow(detail::checked_mul(c_[k], static_cast<wide_int>(k))));
        return IntPolynomial(std::move(d));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<wide_int> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                acc[i + j] = detail::checked_add(acc[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
        std::vector<std::int64_t> out;
        out.reserve(acc.size());
        for (auto v : acc)
            out.push_back(detail::narrow(v));
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human-readable form, highest degree first: "x^3 - 7x^2 - 11x + 23".
    std::string to_string(char var = 'x') const {
        if (c_.empty())
            return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            auto a = c_[static_cast<std::size_t>(k)];
            if (a == 0)
                continue;
            bool neg = a < 0;
            std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (mag != 1 || k == 0)
                out += std::to_string(mag);
            if (k >= 1)
                out += var;
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

namespace detail {

using WidePoly = std::vector<wide_int>;

inline void trim(WidePoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline WidePoly primitive(WidePoly p) {
    trim(p);
    if (p.empty())
        return p;
    wide_int g = 0;
    for (auto v : p)
        g = gcd_wide(g, v);
    for (auto& v : p)
        v /= g;
    if (p.back() < 0)
        for (auto& v : p)
            v = -v;
    return p;
}

/// Pseudo-remainder of a by b, reduced to its primitive part.
inline WidePoly primitive_prem(WidePoly a, const WidePoly& b) {
    trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        auto shift = a.size() - b.size();
        wide_int la = a.back(), lb = b.back();
        for (auto& v : a)
            v = checked_mul(v, lb);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = checked_add(a[i + shift], -checked_mul(la, b[i]));
        trim(a);
        a = primitive(std::move(a));
    }
    return a;
}

/// Exact quotient a / b over the integers; nullopt if b does not divide a.
inline std::optional<WidePoly> exact_divide(WidePoly a, const WidePoly& b) {
    trim(a);
    if (a.size() < b.size())
        return a.empty() ? std::optional<WidePoly>(WidePoly{}) : std::nullopt;
    WidePoly q(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        auto shift = a.size() - b.size();
        if (a.back() % b.back() != 0)
            return std::nullopt;
        wide_int f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = checked_add(a[i + shift], -checked_mul(f, b[i]));
        trim(a);
    }
    if (!a.empty())
        return std::nullopt;
    return q;
}

} // namespace detail

/// p / gcd(p, p'), the polynomial with the same roots as p but all simple.
/// Falls back to p itself if intermediate coefficients overflow 128 bits.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() < 2)
        return p;
    try {
        detail::WidePoly a(p.coefficients().begin(), p.coefficients().end());
        auto dp = p.derivative().coefficients();
        detail::WidePoly b(dp.begin(), dp.end());
        a = detail::primitive(a);
        b = detail::primitive(b);
        while (!b.empty()) {
            auto r = detail::primitive_prem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.size() <= 1)
            return p;
        detail::WidePoly num(p.coefficients().begin(), p.coefficients().end());
        auto q = detail::exact_divide(detail::primitive(num), a);
        if (!q)
            return p;
        std::vector<std::int64_t> out;
        for (auto v : *q)
            out.push_back(detail::narrow(v));
        return IntPolynomial(std::move(out));
    } catch (const Error&) {
        return p;
    }
}

} // namespace sgt

#endif // SGT_POLYNOMIAL_HPP
