#pragma once

// Core combinatorial types for Gauss diagrams and arrow patterns.
//
// A Gauss diagram is an ordered collection of based, oriented components
// (circles), with signed arrows connecting pairs of endpoint slots.  Each
// arrow points from its over-strand occurrence (tail, the "O" token) to its
// under-strand occurrence (head, the "U" token).  An arrow pattern is the
// unsigned analogue used as a pairing template; its carrier is either a
// single based loop or an ordered list of based strings, one per component.
//
// All endpoint sequences are linear orders starting at the component's base
// point.  Nothing here checks planar realizability; these are combinatorial
// objects only.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gausslink {

enum class errc {
  syntax_error,
  dangling_arrow,
  role_error,
  sign_mismatch,
  component_range,
  offset_range,
  bad_permutation,
  cap_exceeded,
  not_one_component,
  bad_string,
  not_a_knot,
  index_range,
  duplicate_index,
  component_mismatch,
  degenerate_geometry,
  non_generic_direction,
  unknown_name,
  bad_params,
  resolution_too_low,
  non_positive,
  no_applicable_bounds,
  bad_input,
  io_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

enum class role : std::uint8_t { tail, head };  // tail = over (O), head = under (U)

struct endpoint {
  int arrow = -1;
  role r = role::tail;
  friend bool operator==(const endpoint&, const endpoint&) = default;
};

/* location of one arrow endpoint: component (or string) index and position */
struct slot {
  int comp = -1;
  int pos = -1;
  friend bool operator==(const slot&, const slot&) = default;
};

class gauss_diagram {
 public:
  gauss_diagram() : seqs_(1) {}  // empty unknot diagram, one component

  // Validates and constructs.  seqs[c] lists endpoints along component c from
  // its base point; signs[a] is +1 or -1 for arrow a.  Arrow ids must be
  // exactly 0..signs.size()-1, each with one tail and one head occurrence.
  static gauss_diagram from_sequences(std::vector<std::vector<endpoint>> seqs,
                                      std::vector<int> signs);

  int components() const { return static_cast<int>(seqs_.size()); }
  int arrow_count() const { return static_cast<int>(signs_.size()); }
  int sign(int arrow) const { return signs_[static_cast<size_t>(arrow)]; }
  slot tail(int arrow) const { return tails_[static_cast<size_t>(arrow)]; }
  slot head(int arrow) const { return heads_[static_cast<size_t>(arrow)]; }
  const std::vector<endpoint>& sequence(int comp) const {
    return seqs_[static_cast<size_t>(comp)];
  }

  // Stable identifier, invariant under arrow-id renaming.
  std::string canonical_key() const;

  // New diagram in which old component c becomes component perm[c].
  gauss_diagram permute_components(const std::vector<int>& perm) const;

  // Moves the base point of component comp forward by offset positions.
  gauss_diagram rebase(int comp, int offset) const;

  // Keeps only the components listed (in the given order, which defines the
  // new component numbering) together with all arrows among them.
  gauss_diagram restrict_to(const std::vector<int>& comps) const;

  // Flips the sign of every arrow.
  gauss_diagram negate_signs() const;

  friend bool operator==(const gauss_diagram&, const gauss_diagram&) = default;

 private:
  std::vector<std::vector<endpoint>> seqs_;
  std::vector<int> signs_;
  std::vector<slot> tails_;
  std::vector<slot> heads_;
};

class arrow_pattern {
 public:
  arrow_pattern() : loop_(true), seqs_(1) {}

  // carrier: loop (single based circle) when loop = true, else an ordered
  // list of based strings, string s matching diagram component s.
  static arrow_pattern from_sequences(bool loop, std::vector<std::vector<endpoint>> seqs);

  bool is_loop() const { return loop_; }
  int strings() const { return static_cast<int>(seqs_.size()); }
  int arrow_count() const { return static_cast<int>(tails_.size()); }
  slot tail(int arrow) const { return tails_[static_cast<size_t>(arrow)]; }
  slot head(int arrow) const { return heads_[static_cast<size_t>(arrow)]; }
  const std::vector<endpoint>& sequence(int s) const { return seqs_[static_cast<size_t>(s)]; }

  std::string canonical_key() const;

  // New pattern in which old string s becomes string perm[s].  Loops admit
  // only the identity.
  arrow_pattern permute_strings(const std::vector<int>& perm) const;

  friend bool operator==(const arrow_pattern&, const arrow_pattern&) = default;

 private:
  bool loop_ = true;
  std::vector<std::vector<endpoint>> seqs_;
  std::vector<slot> tails_;
  std::vector<slot> heads_;
};

// Inverse of arrow_pattern::canonical_key.
arrow_pattern pattern_from_key(const std::string& key);

// Integer linear combination of patterns, keyed by canonical key.
class arrow_polynomial {
 public:
  struct term {
    arrow_pattern pattern;
    long long coeff = 0;
    friend bool operator==(const term&, const term&) = default;
  };

  void add(const arrow_pattern& p, long long c);
  const term* find(const std::string& key) const;
  size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // "<coeff> <key>" per line, keys sorted.
  std::string dump() const;
  static arrow_polynomial parse(const std::string& text);

  friend bool operator==(const arrow_polynomial&, const arrow_polynomial&) = default;

 private:
  std::vector<std::pair<std::string, term>> terms_;  // sorted by key
};

// checked permutation helper shared by diagram/pattern transforms
void check_permutation(const std::vector<int>& perm, int n);

}  // namespace gausslink
