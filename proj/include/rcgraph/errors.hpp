#ifndef RCGRAPH_ERRORS_HPP
#define RCGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcgraph {

// Raised when the inputs fall outside the cases the insertion algorithm
// supports (v not an r-shuffle, or neither the semi-shuffle nor the hook
// case applies). Distinct from invalid_argument so callers can map it to a
// dedicated exit code.
class unsupported_case_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant breaks. Reaching this indicates a bug in
// the library, not bad input.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void invariant(bool cond, const std::string& msg)
{
    if (!cond)
        throw invariant_error(msg);
}

}  // namespace detail

// Extra cross-checks (independent recomputation of quantities along a second
// route). They roughly double the cost of the checked operations, so they are
// compiled in only for non-NDEBUG builds.
#ifndef NDEBUG
#define RCGRAPH_EXTRA_CHECKS 1
#else
#define RCGRAPH_EXTRA_CHECKS 0
#endif

}  // namespace rcgraph

#endif
