#pragma once

// Tight families: no rainbow cycle of the relevant class, one cycle short of
// the threshold.

#include <string>

#include "rainbow/core.hpp"

namespace rainbow {

struct GlueSpec {
  Family left;
  Family right;
  Vertex left_vertex = 1;
  Vertex right_vertex = 1;
};

// Identifies right_vertex with left_vertex; the other right vertices take
// the ids n_left+1, n_left+2, ... in ascending order, and right colors come
// after the left ones.
Family glue(const GlueSpec& spec);

// floor(6(n-1)/5) even cycles on [n] without a rainbow even cycle. The base
// cases n = 4..8 come from the embedded data file; larger n glue the n-5
// family to the 6-vertex block. Throws kUnsupportedN for n < 4.
Family tight_even_family(int n);

// The transcribed base family for n in 4..8.
Family base_tight_family(int n);

enum class CoincidentKind { Odd, Any };

// Odd: 2(ceil(n/2)-1) copies of a cycle on 2 ceil(n/2)-1 vertices.
// Any: n-1 copies of the Hamiltonian cycle 1..n. Throws kUnsupportedN for n < 3.
Family coincident_tight_family(CoincidentKind kind, int n);

}  // namespace rainbow
