/*
  affine.hpp — word problem for the affine Artin group of the n-cycle.

  The group embeds into the type B group of rank n: the generators
  s_1 .. s_{n-1} map to themselves and s_n maps to delta s_{n-1} delta^-1
  with delta = t s_1 ... s_{n-1}.  The image is the kernel of the
  homomorphism sending t to 1 and every s_i to 0, so equality of images
  under the type B engine decides equality in the affine group.

  A second, independent route models type B words as braids on n+1 strands
  around a pole strand (t -> sigma_1^2, s_i -> sigma_{i+1}) and decides
  equality with the type A engine.  It serves as a cross-check only.
*/

#ifndef CIRCUIT_AFFINE_HPP
#define CIRCUIT_AFFINE_HPP

#include "circuit/garside.hpp"
#include "circuit/word.hpp"

namespace circuit {

struct AffineWord {
  AffineWord(int n, Word word);  // word over Alphabet::affine(n), n >= 3

  int n;
  Word word;

  static AffineWord parse(int n, std::string_view text);
};

// Rereads a twist word letter for letter (T_i -> s_i) as an affine word.
AffineWord affine_from_twist(const Word& twist_word);

// delta = t s_1 ... s_{n-1} over the type B alphabet of rank n.
Word delta_b_word(int n);

// Homomorphic image in type B, freely reduced.
Word to_b_word(const AffineWord& w);

// Signed count of t letters of a type B word.
long long t_degree(const Word& b_word);

bool affine_equal(const AffineWord& lhs, const AffineWord& rhs);

// Pole-strand model: compare images in the braid group on n+1 strands.
Word b_to_strand_word(int n, const Word& b_word);
bool strand_oracle_equal(int n, const Word& lhs, const Word& rhs);

}  // namespace circuit

#endif
