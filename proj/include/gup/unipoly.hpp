#ifndef GUP_UNIPOLY_HPP
#define GUP_UNIPOLY_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gup/rational.hpp"

namespace gup {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree. Canonical form: the last stored coefficient is
/// nonzero, or the list is empty (the zero polynomial). The degree of
/// the zero polynomial is "minus infinity", surfaced as std::nullopt.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational value) {
        return UniPoly(std::vector<Rational>{std::move(value)});
    }

    static UniPoly monomial(Rational coefficient, int degree) {
        if (degree < 0) throw std::domain_error("UniPoly: negative degree");
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(coefficient);
        return UniPoly(std::move(c));
    }

    static UniPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    const Rational& coeff(int k) const {
        static const Rational zero;
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return UniPoly(std::move(prod));
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(UniPoly p, const Rational& s) {
        if (s.is_zero()) return UniPoly();
        for (auto& c : p.c_) c *= s;
        return p;
    }
    friend UniPoly operator*(const Rational& s, UniPoly p) { return std::move(p) * s; }
    UniPoly& operator*=(const Rational& s) { return *this = *this * s; }

    /// i-fold derivative; the zero polynomial once i exceeds the degree.
    UniPoly derivative(int times = 1) const {
        if (times < 0) throw std::domain_error("UniPoly: negative derivative order");
        UniPoly d = *this;
        for (int t = 0; t < times && !d.is_zero(); ++t) {
            std::vector<Rational> next;
            if (d.c_.size() > 1) {
                next.reserve(d.c_.size() - 1);
                for (std::size_t k = 1; k < d.c_.size(); ++k) {
                    next.push_back(d.c_[k] * Rational(static_cast<long>(k)));
                }
            }
            d = UniPoly(std::move(next));
        }
        return d;
    }

    /// p(-x): negates coefficients of odd degree.
    UniPoly reflected() const {
        UniPoly r = *this;
        for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
        return r;
    }

    /// p^e by repeated multiplication.
    UniPoly pow(int e) const {
        if (e < 0) throw std::domain_error("UniPoly: negative exponent");
        UniPoly r = constant(1);
        for (int t = 0; t < e; ++t) r *= *this;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t k = c_.size(); k-- > 0;) {
            acc = acc * x + c_[k];
        }
        return acc;
    }

    bool operator==(const UniPoly& o) const = default;

    /// Bracketed ascending coefficient list, e.g. "[6, 0, -6]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k > 0) s += ", ";
            s += c_[k].str();
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace gup

#endif
