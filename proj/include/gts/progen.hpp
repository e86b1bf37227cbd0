#pragma once

#include <cstdint>

#include "gts/ast.hpp"

namespace gts {

// Random closed, surface-typechecking program. Generation is directed by the
// typing rules: each node is built against a goal type and yields a term
// whose type is consistent with it, mixing ★ and static annotations with
// probability 1/2 per annotation node. All eight expression forms occur.
// Deterministic in (seed, size_budget); size ≤ budget (node count).
SurfaceExprPtr gen_program(std::uint64_t seed, int size_budget);

}  // namespace gts
