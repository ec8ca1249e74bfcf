#ifndef GUP_REPORT_HPP
#define GUP_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gup/unipoly.hpp"

namespace gup {

/// One failed identity check: where it happened and the nonzero residual.
struct VerifyFailure {
    std::string where;
    UniPoly residual;
};

/// Pass/fail tally of an identity sweep. Failures keep their residual
/// polynomials so counterexamples are actionable.
struct VerifyReport {
    std::string suite;
    std::size_t checked = 0;
    std::vector<VerifyFailure> failures;

    VerifyReport() = default;
    explicit VerifyReport(std::string name) : suite(std::move(name)) {}

    bool passed() const { return failures.empty(); }

    /// Records one residual-style check; zero residual means pass.
    void check(std::string where, const UniPoly& residual) {
        ++checked;
        if (!residual.is_zero()) {
            failures.push_back({std::move(where), residual});
        }
    }

    /// Records a check of two polynomials for exact equality.
    void check_equal(std::string where, const UniPoly& got, const UniPoly& want) {
        check(std::move(where), got - want);
    }

    /// Boolean-style check; failures carry the constant residual 1.
    void require(std::string where, bool ok) {
        ++checked;
        if (!ok) {
            failures.push_back({std::move(where), UniPoly::constant(1)});
        }
    }

    const VerifyFailure* first_failure() const {
        return failures.empty() ? nullptr : &failures.front();
    }

    void merge(VerifyReport other) {
        checked += other.checked;
        for (auto& f : other.failures) failures.push_back(std::move(f));
    }
};

}  // namespace gup

#endif
