#ifndef KNOTPOLY_TESTS_SKEIN_ORACLE_HPP
#define KNOTPOLY_TESTS_SKEIN_ORACLE_HPP

#include "knotpoly/braid.hpp"

namespace knotpoly {

// Alexander polynomial of the closure of beta, computed WITHOUT the braiding
// machinery: the value is ground out of the crossing-resolution recursion
//
//     value(L+) - value(L-) = (t^(-1/2) - t^(1/2)) * value(L0)
//
// anchored at value(unknot) = 1 and value(split link) = 0, together with the
// moves that do not change the closure (cyclic rotation, free cancellation,
// removing a strand whose only crossing is a curl, the braid relations).
// This characterizes the polynomial uniquely, so it serves as an independent
// reference for the closure-based computation in the main library.
//
// The context must contain a square-root-capable variable "t".  Throws
// std::runtime_error if the resolution strategy fails to make progress
// (does not happen for words of the scale used in the tests).
MultiLaurent skein_alexander(const BraidWord& beta, CtxPtr ctx);

// Convenience overload evaluating in a fresh {t (sqrt)} context.
MultiLaurent skein_alexander(const BraidWord& beta);

} // namespace knotpoly

#endif
