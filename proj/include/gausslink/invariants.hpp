#pragma once

// Finite-type invariants evaluated by pairing generated pattern polynomials
// with Gauss diagrams.
//
// conway_c2n computes the order-2n Conway coefficient of a knot diagram.
// milnor_mu computes the length-n Milnor number mu(i1 ... i_{n-1}; j) of a
// link diagram, which is an integer invariant only modulo the gcd of
// lower-order numbers; the result therefore carries the raw pairing value,
// that modulus, and the reduced representative.

#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

// Cached generator outputs (built once per order).
const arrow_polynomial& cached_conway_poly(int n, int cap_chords = 8);
const arrow_polynomial& cached_milnor_poly(int n, int cap_n = 6);

// Sum of signs of arrows pointing from component i to component j.  For a
// realizable diagram this is the linking number lk(i, j) = lk(j, i).
long long linking_number(const gauss_diagram& g, int i, int j);

// Order-2n Conway coefficient of a one-component diagram; n = 0 gives 1.
long long conway_c2n(const gauss_diagram& g, int n, int cap_chords = 8);

struct milnor_result {
  long long raw = 0;      // pairing value for this diagram and basing
  long long modulus = 0;  // gcd of lower-order numbers (0 when none)
  long long reduced = 0;  // bracket_reduce(raw, modulus), the invariant
};

// mu(lead; last): lead lists n-1 distinct components, last is the repeated
// one.  Component indices are 0-based.
milnor_result milnor_mu(const gauss_diagram& g, const std::vector<int>& lead, int last,
                        int cap_n = 6);

// Indeterminacy modulus for the index sequence (lead..., last): gcd of the
// reduced Milnor numbers of all proper order-preserving subsequences of
// length >= 2, each read as (prefix; final element).  Length 2 gives 0.
long long milnor_delta(const gauss_diagram& g, const std::vector<int>& seq, int cap_n = 6);

// Canonical magnitude of v modulo d: |v| when d = 0, otherwise the distance
// from v to the nearest multiple of d.
long long bracket_reduce(long long v, long long d);

}  // namespace gausslink
