/*
  garside.hpp — word problem for the Artin groups of types A, B, D.

  One engine, parameterized by the permutation model of the underlying
  finite Coxeter group, computes the left-greedy normal form

      Delta^p  x_1 x_2 ... x_m

  where the factors x_i are simple elements (lifts of Coxeter elements
  under the weak order), no factor is trivial or Delta, and every adjacent
  pair is left-weighted.  Two words are equal in the Artin group exactly
  when their normal forms agree componentwise.

  Generator conventions (validated at construction against the diagram,
  not assumed):
    type A on n strands:  s_i  = transposition (i, i+1)
    type B of rank n:     t    = sign change at position 1,
                          s_i  = transposition (i, i+1)
    type D of rank n:     s_1  = (1,2) -> (-2,-1)   (fork generator)
                          s_j  = transposition (j-1, j) for j >= 2
*/

#ifndef CIRCUIT_GARSIDE_HPP
#define CIRCUIT_GARSIDE_HPP

#include <vector>

#include "circuit/signed_perm.hpp"
#include "circuit/word.hpp"

namespace circuit {

enum class CoxType { A, B, D };

struct NormalForm {
  int inf = 0;                      // p, the power of Delta
  std::vector<SignedPerm> factors;  // left-weighted simple elements

  bool is_identity() const { return inf == 0 && factors.empty(); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  bool operator==(const NormalForm& o) const { return inf == o.inf && factors == o.factors; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

class GarsideEngine {
 public:
  // n is the strand count for type A, the rank for types B and D.
  GarsideEngine(CoxType type, int n);

  CoxType type() const { return type_; }
  int rank() const { return rank_; }  // number of generators
  int degree() const { return degree_; }  // size of the permutation model
  const Alphabet& alphabet() const { return alphabet_; }

  const SignedPerm& delta() const { return delta_; }
  int delta_length() const { return delta_length_; }

  // A reduced word for Delta (the generator sequence of the greedy ascent).
  Word delta_word() const;

  int length(const SignedPerm& w) const;  // Coxeter length, inversion count
  bool is_right_descent(const SignedPerm& w, int gen) const;
  bool is_left_descent(const SignedPerm& w, int gen) const;

  SignedPerm gen_perm(int gen) const;
  SignedPerm right_mul_gen(const SignedPerm& w, int gen) const;  // w * s
  SignedPerm left_mul_gen(int gen, const SignedPerm& w) const;   // s * w

  // Conjugation by Delta; permutes the simple elements and preserves length.
  SignedPerm tau(const SignedPerm& x) const;

  NormalForm normal_form(const Word& w) const;
  bool equal(const Word& lhs, const Word& rhs) const;

 private:
  void check_alphabet(const Word& w) const;
  void validate_conventions() const;

  CoxType type_;
  int rank_;
  int degree_;
  Alphabet alphabet_;
  std::vector<SignedPerm> gens_;
  SignedPerm delta_;
  int delta_length_;
  std::vector<Letter> delta_letters_;
};

// Shared per-(type, n) engines; built once, read-only afterwards.
const GarsideEngine& engine_for(CoxType type, int n);

}  // namespace circuit

#endif
