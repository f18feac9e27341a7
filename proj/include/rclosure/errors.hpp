#pragma once

#include <stdexcept>
#include <string>

namespace rclosure {

// Base class for every error the library raises on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subset or sequence was presented to an operation expecting a different arity.
struct arity_error : error { using error::error; };

// Points that must be pairwise distinct were not.
struct distinctness_error : error { using error::error; };

// A point lies outside an operation's domain (e.g. a seed element, or a hub
// that is not a member of the searched set).
struct domain_error : error { using error::error; };

// A bounded enumeration scan ran out of budget before finding a member.
struct cap_error : error { using error::error; };

// An encoding trace is structurally malformed.
struct trace_error : error { using error::error; };

// A trace replay produced an impossible state for the given coloring,
// meaning the trace was not produced by encode under that coloring.
struct inconsistency_error : error { using error::error; };

// An argument violates a documented parameter constraint.
struct parameter_error : error { using error::error; };

// A sequence failed the monotone-coloring property required by the caller.
struct monotonicity_error : error { using error::error; };

// A point cluster is too small for the requested construction.
struct insufficiency_error : error { using error::error; };

// A value object violates its stated invariants.
struct precondition_error : error { using error::error; };

} // namespace rclosure
