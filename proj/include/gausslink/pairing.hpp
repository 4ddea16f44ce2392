#pragma once

// Pairing of arrow patterns with Gauss diagrams.
//
// <A, G> sums, over all embeddings of A into G, the product of the signs of
// the matched arrows.  An embedding sends arrows of A to distinct arrows of
// G preserving (a) the carrier: endpoints on string s land on component s (a
// loop pattern pairs only with one-component diagrams), (b) tail/head roles,
// and (c) the based order of endpoints along every component.  Base points
// cut each circle open, so order is linear, not cyclic.

#include "gausslink/diagram.hpp"

namespace gausslink {

// Backtracking matcher.
long long pair_count(const arrow_pattern& a, const gauss_diagram& g);

// Reference evaluator: enumerates every injective arrow assignment and
// filters.  Exponentially slower; exists to cross-check pair_count.
long long pair_oracle(const arrow_pattern& a, const gauss_diagram& g);

// Linear extension of pair_count over a polynomial's terms.
long long pair_poly(const arrow_polynomial& poly, const gauss_diagram& g);

}  // namespace gausslink
