#ifndef GUP_RATIONAL_HPP
#define GUP_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gup {

/// Exact rational scalar backed by arbitrary-precision integers.
/// Canonical form (denominator > 0, gcd(|num|, den) = 1) is maintained
/// by every operation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    /// Parses "p/q" or a bare integer, optional sign on either part.
    /// Throws std::invalid_argument on malformed text and
    /// std::domain_error on a zero denominator.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        return Rational(std::move(num), std::move(den));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// True when the value is an integer representable as int.
    bool fits_int() const { return is_integer() && v_.get_num().fits_sint_p(); }
    int to_int() const {
        if (!fits_int()) throw std::domain_error("Rational: not a small integer");
        return static_cast<int>(v_.get_num().get_si());
    }

    /// Serializes as "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    static mpz_class parse_integer(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty number");
        const bool negative = s[0] == '-';
        std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("Rational: sign without digits");
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw std::invalid_argument("Rational: invalid digit in \"" + std::string(s) + "\"");
            }
        }
        mpz_class magnitude(std::string(s.substr(start)), 10);
        return negative ? mpz_class(-magnitude) : magnitude;
    }

    mpq_class v_;
};

}  // namespace gup

#endif
