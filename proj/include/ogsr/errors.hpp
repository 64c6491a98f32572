#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogsr {

// Base class for every library error. Subclasses exist so call sites and
// tests can catch a specific failure without string matching.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different ring instances.
class MixedRings final : public Error {
public:
    explicit MixedRings(const std::string& what) : Error(what) {}
};

// Element text did not match the instance grammar.
class ParseError final : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Instance description is malformed (bad parameters, unknown name,
// non-prime modulus base, dependent cone generators, ...).
class InvalidSpec final : public Error {
public:
    explicit InvalidSpec(const std::string& what) : Error(what) {}
};

// Fixed-arity carrier received the wrong number of components.
class WrongArity final : public Error {
public:
    explicit WrongArity(const std::string& what) : Error(what) {}
};

// Operation is not defined for this carrier or order kind.
class UnsupportedRing final : public Error {
public:
    explicit UnsupportedRing(const std::string& what) : Error(what) {}
};

// Polynomial degree crossed the instance growth guard.
class GrowthExceeded final : public Error {
public:
    explicit GrowthExceeded(const std::string& what) : Error(what) {}
};

// A sequence that must be weakly increasing is not; carries the index.
class NotIncreasing final : public Error {
public:
    NotIncreasing(const std::string& what, std::size_t index)
        : Error(what), index(index) {}
    std::size_t index;
};

// A convexity triple does not satisfy x <= y <= z.
class MalformedTriple final : public Error {
public:
    MalformedTriple(const std::string& what, std::size_t index)
        : Error(what), index(index) {}
    std::size_t index;
};

// A required membership precondition fails (for example the anchor point
// of a split is not inside the given open set).
class NotMember final : public Error {
public:
    explicit NotMember(const std::string& what) : Error(what) {}
};

// Generic guarded-precondition failure; the message names the precondition.
class PreconditionFailed final : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

// Witness search asked about an element that is not strictly positive.
class NotPositive final : public Error {
public:
    explicit NotPositive(const std::string& what) : Error(what) {}
};

// No continuity modulus exists (seminorm value above one and not
// invertible in the target).
class NoModulus final : public Error {
public:
    explicit NoModulus(const std::string& what) : Error(what) {}
};

// Separating-ball construction hit two points at seminorm distance zero.
class NotDefinite final : public Error {
public:
    explicit NotDefinite(const std::string& what) : Error(what) {}
};

// A series invariant (monotone partial sums, witness bound) broke during
// iteration. Evidence against the order hypotheses; carries the step.
class InvariantViolation final : public Error {
public:
    InvariantViolation(const std::string& what, std::size_t index)
        : Error(what), index(index) {}
    std::size_t index;
};

// Left and right series both terminated exactly but with different sums.
class DirectionalMismatch final : public Error {
public:
    explicit DirectionalMismatch(const std::string& what) : Error(what) {}
};

// Partial-sum prefix fails the Cauchy test against a window; evidence
// against completeness at this budget. Carries the failing window index.
class NotCauchy final : public Error {
public:
    NotCauchy(const std::string& what, std::size_t window_index)
        : Error(what), window_index(window_index) {}
    std::size_t window_index;
};

// Scenario id is not registered.
class UnknownScenario final : public Error {
public:
    explicit UnknownScenario(const std::string& what) : Error(what) {}
};

} // namespace ogsr
