#pragma once

#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// One word per vertex over the alphabet {0,1,*}, all of one length. A
// coordinate contributes to the distance between two words exactly when one
// word has 0 and the other 1 there; * never contributes.
using Addressing = std::vector<std::string>;

// |{i : {a[i], b[i]} = {0,1}}|; throws InvalidArgument on unequal lengths
int address_distance(const std::string& a, const std::string& b);

// true iff every pair's word distance equals the graph distance; throws
// InvalidArgument on a wrong word count, ragged lengths, or stray symbols
bool verify_addressing(const Graph& g, const Addressing& addr);

// One 0/1 coordinate per edge: a(v)[i] = 1 iff edge i lies on the root-to-v
// path. Tree distance is the size of the symmetric difference of two root
// paths, so the result always verifies; length n-1, no * used. Throws
// InvalidArgument for non-trees.
Addressing tree_addressing(const Graph& tree);

struct AddressingResult {
  int length = 0;      // minimum word length admitting a valid addressing
  Addressing witness;  // one valid addressing of that length
};

// Exhaustive backtracking over {0,1,*}^r per vertex, r rising from the
// inertia lower bound max(n+, n-) of the distance matrix to n-1 (always
// sufficient). Column symmetries are factored out soundly: each column's
// first non-* entry is forced to 0 (0/1 flips) and columns are kept
// lexicographically nondecreasing (column order). r_max < n-1 caps the
// search and throws NotSupported when no addressing fits under the cap;
// orders above 6 are rejected.
AddressingResult minimal_addressing_search(const Graph& g, int r_max = -1);

}  // namespace distspec
