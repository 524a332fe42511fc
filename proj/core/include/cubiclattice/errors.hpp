#ifndef CUBICLATTICE_ERRORS_HPP
#define CUBICLATTICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubiclattice {

// The closed-form count is only valid for 1 <= k <= a.
class TheoremDomainError : public std::domain_error {
public:
    explicit TheoremDomainError(const std::string& what) : std::domain_error(what) {}
};

// The piecewise floor tables and summation identities require a >= 34 and k <= a.
class LemmaDomainError : public std::domain_error {
public:
    explicit LemmaDomainError(const std::string& what) : std::domain_error(what) {}
};

// Enumeration would exceed the configured candidate-point budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Interval refinement ran past its iteration cap. Termination is guaranteed
// for nonzero (hence irrational) elements, so hitting the cap means a logic
// bug, not bad input.
class RefinementCapError : public std::logic_error {
public:
    explicit RefinementCapError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cubiclattice

#endif // CUBICLATTICE_ERRORS_HPP
