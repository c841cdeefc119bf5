#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

// Structural misuse of a container: self loops, unknown vertices, absent
// edges, duplicate set-graph vertices and the like.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A precondition of an operation was violated by the caller, e.g. asking a
// representation to disconnect a pair that is not an edge.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A potential model was used outside its domain, e.g. a zero potential on a
// separator while all clique potentials are positive.
class ModelMisuse : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Cross-representation verification failed: backends disagreed on the
// legality of a proposal or exported different graphs.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chordal
