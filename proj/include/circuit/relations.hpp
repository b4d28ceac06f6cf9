/*
  relations.hpp — the named relations between Dehn twists about a circuit,
  and the certificates built around them.

  The standard cycle relation for a circuit of n curves is

      T_n ... T_1 T_n ... T_3  =  T_{n-1} ... T_1 T_n ... T_2,

  its reverse is the same relation with the indices relabelled i -> n+1-i.
  The quotient of the affine circuit group by the standard relation is the
  type D group; dn_substitution realizes that quotient map on twist words.
*/

#ifndef CIRCUIT_RELATIONS_HPP
#define CIRCUIT_RELATIONS_HPP

#include <array>

#include "circuit/orientation.hpp"
#include "circuit/word.hpp"

namespace circuit {

// ccw gives the standard cycle relation, cw the reverse one; n >= 3.
Relation cycle_relation(int n, Orientation o);

// The commutation form g T_1 = T_1 g with g = T_n ... T_2 T_3^-1 ... T_n^-1.
Relation commutation_form(int n);

// Relabels T_i -> T_{n+1-i}; conjugates the standard relation into the
// reverse one.
Word mirror_twist_word(const Word& w);
Relation mirror_twist_relation(const Relation& r);

// T_1 -> (s_n ... s_3) s_1 (s_n ... s_3)^-1, T_i -> s_i for i >= 2,
// into the type D alphabet of rank n.
Substitution dn_substitution(int n);

// Full-twist identity (sigma_1 ... sigma_{n-1})^n = Delta^2 in the braid
// group on n strands; the Garside avatar of the even chain relation.
bool chain_full_twist_check(int n);  // 3 <= n <= 8

// (T_{n-1} ... T_1)^{2n} = 1, the closed odd-chain relation.
Relation closed_chain_relation(int n);  // odd n >= 3

// (T_{n-1} ... T_3)^{n-2} = T_1 T_beta with T_beta = f T_1 f^-1 spelled out,
// f = T_n ... T_3 T_3 ... T_n.  Inhomogeneous for n >= 6.
Relation two_disc_chain_relation(int n);  // n >= 4

struct InhomogeneityReport {
  long long total_lhs = 0;
  long long total_rhs = 0;
  bool inhomogeneous = false;
};

InhomogeneityReport inhomogeneity_report(const Relation& r);

struct SL2Matrix {
  std::array<std::array<long long, 2>, 2> m;

  static SL2Matrix identity();
  long long det() const;
  SL2Matrix operator*(const SL2Matrix& o) const;
  bool operator==(const SL2Matrix& o) const { return m == o.m; }
};

// With T_1 = [[1,1],[0,1]] and T_2 = [[1,0],[-1,1]]: the braid relation
// holds, (T_1 T_2)^6 = 1, and no smaller positive power is trivial.
bool sl2z_check();

}  // namespace circuit

#endif
