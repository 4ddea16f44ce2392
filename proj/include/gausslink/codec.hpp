#pragma once

// Text form of Gauss diagrams and the pretzel-link generator.
//
// Gauss code grammar: components are separated by '/', each component is a
// whitespace-separated list of tokens O<label><sign> or U<label><sign>.
// Every label occurs exactly twice, once as O (the over passage, arrow tail)
// and once as U (the under passage, arrow head); both occurrences carry the
// same sign.  parse_gauss_code renumbers arrows in order of first appearance,
// so parse(emit(G)) == G for every diagram G.

#include <string>
#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

gauss_diagram parse_gauss_code(const std::string& text);
std::string emit_gauss_code(const gauss_diagram& g);

// Gauss code of the standard pretzel diagram P(a_1, ..., a_k): k vertical
// twist columns, a_i > 0 giving twists whose NE-SW strand is on top.  Throws
// not_a_knot when the diagram closes up into more than one component, which
// happens exactly when neither (all a_i odd, k odd) nor (exactly one a_i
// even) holds.
gauss_diagram pretzel_diagram(const std::vector<int>& twists);

// Double twist knot D(m, k): plat closure of the 4-strand braid word
// sigma_2^m sigma_1^k, the two-bridge knot of fraction m + 1/k.  Throws
// not_a_knot when the closure has two components (m, k both odd).
gauss_diagram double_twist_diagram(int m, int k);

}  // namespace gausslink
