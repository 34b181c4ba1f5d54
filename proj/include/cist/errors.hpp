#ifndef CIST_ERRORS_HPP
#define CIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cist {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by parse_edge_list on malformed input.
struct ParseError : Error {
    enum class Kind { SelfLoop, DuplicateEdge, Syntax };
    Kind kind;
    ParseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct InvalidVertex : Error {
    explicit InvalidVertex(const std::string& msg) : Error(msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};

struct NotACistPartition : Error {
    explicit NotACistPartition(const std::string& msg) : Error(msg) {}
};

struct NotASpanningTree : Error {
    explicit NotASpanningTree(const std::string& msg) : Error(msg) {}
};

// construct() rejects inputs that miss one of its three preconditions;
// `conjunct` names the failing one ("connected", "n >= 7", "mu2 >= n").
struct PreconditionFailed : Error {
    std::string conjunct;
    explicit PreconditionFailed(const std::string& which)
        : Error("precondition failed: " + which), conjunct(which) {}
};

// A fact the construction relies on did not hold at runtime.  Reaching this
// on an input that passed the preconditions is an implementation bug, never
// an input error; the CLI maps it to exit code 3.
struct InternalInvariantViolation : Error {
    std::string claim;
    InternalInvariantViolation(const std::string& claim_, const std::string& detail)
        : Error("internal invariant violated [" + claim_ + "]: " + detail), claim(claim_) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

// choose_xy on a complete graph: there is no distance-2 pair to choose.
struct NotApplicable : Error {
    explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

namespace detail {

inline void internal_check(bool cond, const char* claim, const std::string& detail) {
    if (!cond) throw InternalInvariantViolation(claim, detail);
}

}  // namespace detail

}  // namespace cist

#endif
