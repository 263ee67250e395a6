#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lass {

/// Outcome of a structural or mathematical check.
///
/// `site` locates the first violation (a degree, an index triple, a (p, q)
/// cell...); its meaning is fixed by the check that produced it.
struct Verdict {
    bool ok = true;
    std::string detail;
    std::vector<long> site;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string detail, std::vector<long> site = {}) {
        return {false, std::move(detail), std::move(site)};
    }
    explicit operator bool() const { return ok; }
};

/// Input that violates a structural requirement (shape mismatch, d∘d != 0, ...).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that is well-formed but fails a mathematical precondition
/// (bracket not closed on a subspace, subspace not an ideal, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold failed; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lass
