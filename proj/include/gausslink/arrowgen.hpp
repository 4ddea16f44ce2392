#pragma once

// Generators for the two arrow-polynomial families used by the invariant
// engine.
//
// build_C(n) produces the degree-2n pattern polynomial whose pairing with a
// knot diagram computes the order-2n coefficient of the Conway polynomial.
// Terms come from chord diagrams with 2n chords whose doubled curve is
// connected; doubling each chord and traversing from the base point orients
// every chord in the direction of its first passage.
//
// build_Z(n) produces the n-string tree polynomial whose pairing with an
// n-component link diagram computes the first-nonvanishing length-n Milnor
// number with the last index repeated once.  Terms are generated by stacking
// elementary one-arrow trees onto smaller patterns; coefficients are read off
// the finished pattern, so the construction is order-independent.

#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

// m chords on one circle: 2m endpoint positions, partner[i] an involution
// with no fixed point.
struct chord_diagram {
  std::vector<int> partner;
  int chords() const { return static_cast<int>(partner.size()) / 2; }
  friend bool operator==(const chord_diagram&, const chord_diagram&) = default;
};

// All (2m-1)!! chord diagrams with m chords, in a deterministic order.
std::vector<chord_diagram> enumerate_chord_diagrams(int m, int cap_chords = 8);

// Number of circles after doubling every chord: orbits of i -> partner[i]+1
// on endpoint positions (one circle when there are no chords).
int doubled_components(const chord_diagram& cd);

// Orientation of each chord along the doubled curve: starting at the base
// point, the first passage across a chord runs tail -> head.  Requires the
// doubled curve to be connected.
arrow_pattern ascending_arrows(const chord_diagram& cd);

// Degree-2n Conway pattern polynomial on a loop carrier.  All coefficients
// are +1; the family is symmetric under reversing every arrow.
arrow_polynomial build_C(int n, int cap_chords = 8);

// The two one-arrow trees used by the stacking product: e hangs the new
// string on the left of its target, ebar on the right.
enum class elementary_tree { e, ebar };

// Stacking product P x_s t: inserts one new string adjacent to string s
// (0-based) carrying the tail of one new arrow whose head lands on string s.
// Stacking onto the trunk (s = 0) puts the new head above everything on the
// trunk; otherwise the head lands just above the lowest endpoint of string s.
// ebar cannot target the trunk.
arrow_pattern stack(const arrow_pattern& p, int s, elementary_tree t);

// Tree pattern polynomial on n strings, string 0 the trunk.  Coefficient of
// a term is (-1)^q with q the number of arrows pointing right-to-left
// between non-trunk strings.
arrow_polynomial build_Z(int n, int cap_n = 6);

// Applies perm to the carrier strings of every term.
arrow_polynomial permute_polynomial(const arrow_polynomial& poly, const std::vector<int>& perm);

}  // namespace gausslink
