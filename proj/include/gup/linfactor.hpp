#ifndef GUP_LINFACTOR_HPP
#define GUP_LINFACTOR_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "gup/rational.hpp"

namespace gup {

/// Signals evaluation of a ratio at a genuine (non-removable) singularity.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A ratio of products of linear factors p*alpha + q times a rational scale.
/// Factors are normalized to monic form (alpha + root) with the leading
/// coefficient folded into the scale, and numerator/denominator factors with
/// equal roots cancel on insertion. Removable singularities therefore
/// disappear before evaluation; whatever denominator factors remain are
/// genuine poles.
class LinFactorRatio {
public:
    LinFactorRatio() : scalar_(1) {}
    explicit LinFactorRatio(Rational scalar) : scalar_(std::move(scalar)) {}

    /// Multiplies by the factor (p*alpha + q).
    LinFactorRatio& num_factor(const Rational& p, const Rational& q) {
        insert(p, q, /*numerator=*/true);
        return *this;
    }

    /// Divides by the factor (p*alpha + q).
    LinFactorRatio& den_factor(const Rational& p, const Rational& q) {
        insert(p, q, /*numerator=*/false);
        return *this;
    }

    /// Multiplies by (p*alpha + q)(p*alpha + q + 1) ... (p*alpha + q + k - 1).
    LinFactorRatio& num_pochhammer(const Rational& p, Rational q, int k) {
        for (int t = 0; t < k; ++t, q += 1) insert(p, q, true);
        return *this;
    }

    LinFactorRatio& den_pochhammer(const Rational& p, Rational q, int k) {
        for (int t = 0; t < k; ++t, q += 1) insert(p, q, false);
        return *this;
    }

    LinFactorRatio& scale(const Rational& s) {
        scalar_ *= s;
        return *this;
    }

    /// Evaluates at a rational alpha. Throws pole_error if any remaining
    /// denominator factor vanishes there.
    Rational eval_at(const Rational& alpha) const {
        Rational den = 1;
        for (const auto& [root, mult] : den_roots_) {
            Rational f = alpha + root;
            if (f.is_zero()) {
                throw pole_error("LinFactorRatio: pole at alpha = " + alpha.str());
            }
            for (int t = 0; t < mult; ++t) den *= f;
        }
        Rational num = scalar_;
        for (const auto& [root, mult] : num_roots_) {
            Rational f = alpha + root;
            for (int t = 0; t < mult; ++t) num *= f;
        }
        return num / den;
    }

    const Rational& scalar() const { return scalar_; }
    int num_factor_count() const { return count(num_roots_); }
    int den_factor_count() const { return count(den_roots_); }

private:
    using RootMultiset = std::map<Rational, int>;

    static int count(const RootMultiset& roots) {
        int n = 0;
        for (const auto& [root, mult] : roots) n += mult;
        return n;
    }

    void insert(const Rational& p, const Rational& q, bool numerator) {
        if (p.is_zero()) {
            // Constant factor: folds into the scale.
            if (numerator) {
                scalar_ *= q;
            } else {
                if (q.is_zero()) throw pole_error("LinFactorRatio: identically zero denominator factor");
                scalar_ /= q;
            }
            return;
        }
        if (numerator) {
            scalar_ *= p;
        } else {
            scalar_ /= p;
        }
        Rational root = q / p;
        RootMultiset& mine = numerator ? num_roots_ : den_roots_;
        RootMultiset& other = numerator ? den_roots_ : num_roots_;
        auto hit = other.find(root);
        if (hit != other.end()) {
            if (--hit->second == 0) other.erase(hit);
        } else {
            ++mine[root];
        }
    }

    Rational scalar_;
    RootMultiset num_roots_;
    RootMultiset den_roots_;
};

}  // namespace gup

#endif
