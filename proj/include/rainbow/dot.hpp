#pragma once

#include <string>

#include "rainbow/core.hpp"
#include "rainbow/frankenstein.hpp"

namespace rainbow {

// Undirected DOT multigraph; each family cycle gets its own edge color.
std::string family_to_dot(const Family& fam);

// One cluster per part. A vertex shared by several parts is drawn in the
// first cluster that mentions it.
std::string partition_to_dot(const FrankensteinGraph& fg);

}  // namespace rainbow
