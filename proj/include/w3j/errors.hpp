#pragma once

#include <stdexcept>
#include <string>

namespace w3j {

// Base class for all domain-level failures raised by this library.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct IncommensurableRadicands : domain_error {
    explicit IncommensurableRadicands(const std::string& w = "incommensurable radicands")
        : domain_error(w) {}
};

struct NotPhysical : domain_error {
    explicit NotPhysical(const std::string& w = "symbol is not physical") : domain_error(w) {}
};

struct NotOrderZeroShape : domain_error {
    explicit NotOrderZeroShape(const std::string& w = "not an order-0 shape") : domain_error(w) {}
};

struct NonTerminating : domain_error {
    explicit NonTerminating(const std::string& w = "series does not terminate") : domain_error(w) {}
};

struct DenominatorPole : domain_error {
    explicit DenominatorPole(const std::string& w = "denominator Pochhammer vanishes")
        : domain_error(w) {}
};

struct OutOfPhysicalDomain : domain_error {
    explicit OutOfPhysicalDomain(const std::string& w = "Gamma prefactor at a non-positive integer")
        : domain_error(w) {}
};

struct InconsistentLabeling : domain_error {
    explicit InconsistentLabeling(const std::string& w = "invalid Whipple labeling")
        : domain_error(w) {}
};

struct PerfectSquare : domain_error {
    explicit PerfectSquare(const std::string& w = "D is a perfect square") : domain_error(w) {}
};

struct NotAZero : domain_error {
    explicit NotAZero(const std::string& w = "zero condition vx = uy fails") : domain_error(w) {}
};

struct FactorizationFailed : domain_error {
    explicit FactorizationFailed(const std::string& w = "no Brudno-Louck factorization found")
        : domain_error(w) {}
};

struct NoUnitEntry : domain_error {
    explicit NoUnitEntry(const std::string& w = "square has no entry equal to 1") : domain_error(w) {}
};

struct OutOfDomain : domain_error {
    explicit OutOfDomain(const std::string& w = "argument out of domain") : domain_error(w) {}
};

}  // namespace w3j
