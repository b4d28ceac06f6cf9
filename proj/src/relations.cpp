#include "circuit/relations.hpp"

#include <stdexcept>

#include "circuit/garside.hpp"

namespace circuit {

namespace {

// T_hi T_{hi-1} ... T_lo as a twist word (empty when hi < lo).
Word descending_run(const Alphabet& a, int hi, int lo) {
  std::vector<Letter> ls;
  for (int i = hi; i >= lo; --i) ls.push_back({i - 1, 1});
  return Word(a, std::move(ls));
}

// T_lo T_{lo+1} ... T_hi.
Word ascending_run(const Alphabet& a, int lo, int hi) {
  std::vector<Letter> ls;
  for (int i = lo; i <= hi; ++i) ls.push_back({i - 1, 1});
  return Word(a, std::move(ls));
}

void require_circuit_size(int n) {
  if (n < 3) throw std::invalid_argument("circuit relations need n >= 3");
}

}  // namespace

Relation cycle_relation(int n, Orientation o) {
  require_circuit_size(n);
  Alphabet a = Alphabet::twist(n);
  if (o == Orientation::ccw) {
    Word lhs = descending_run(a, n, 1) * descending_run(a, n, 3);
    Word rhs = descending_run(a, n - 1, 1) * descending_run(a, n, 2);
    return Relation(std::move(lhs), std::move(rhs));
  }
  Word lhs = ascending_run(a, 1, n) * ascending_run(a, 1, n - 2);
  Word rhs = ascending_run(a, 2, n) * ascending_run(a, 1, n - 1);
  return Relation(std::move(lhs), std::move(rhs));
}

Relation commutation_form(int n) {
  require_circuit_size(n);
  Alphabet a = Alphabet::twist(n);
  Word g = reduce(descending_run(a, n, 2) * descending_run(a, n, 3).inverse());
  Word t1(a, {{0, 1}});
  return Relation(g * t1, t1 * g);
}

Word mirror_twist_word(const Word& w) {
  if (w.alphabet().kind() != AlphabetKind::twist)
    throw std::invalid_argument("mirror relabelling expects a twist word");
  int n = w.alphabet().param();
  std::vector<Letter> ls;
  for (const Letter& l : w.letters()) ls.push_back({n - 1 - l.gen, l.sign});
  return Word(w.alphabet(), std::move(ls));
}

Relation mirror_twist_relation(const Relation& r) {
  return Relation(mirror_twist_word(r.lhs), mirror_twist_word(r.rhs));
}

Substitution dn_substitution(int n) {
  require_circuit_size(n);
  Alphabet twist = Alphabet::twist(n);
  Alphabet d = Alphabet::type_d(n);
  Substitution map(twist, d);
  Word tail = descending_run(d, n, 3);  // s_n ... s_3
  Word s1(d, {{0, 1}});
  map.set(0, reduce(tail * s1 * tail.inverse()));
  for (int i = 2; i <= n; ++i) map.set(i - 1, Word(d, {{i - 1, 1}}));
  return map;
}

bool chain_full_twist_check(int n) {
  if (n < 3 || n > 8) throw std::invalid_argument("full-twist check covers 3 <= n <= 8");
  const GarsideEngine& braid = engine_for(CoxType::A, n);
  Word twist = ascending_run(braid.alphabet(), 1, n - 1).pow(n);
  NormalForm nf = braid.normal_form(twist);
  return nf.inf == 2 && nf.factors.empty();
}

Relation closed_chain_relation(int n) {
  require_circuit_size(n);
  if (n % 2 == 0) throw std::invalid_argument("closed chain relation needs odd n");
  Alphabet a = Alphabet::twist(n);
  return Relation(descending_run(a, n - 1, 1).pow(2 * n), Word(a));
}

Relation two_disc_chain_relation(int n) {
  if (n < 4) throw std::invalid_argument("two-disc chain relation needs n >= 4");
  Alphabet a = Alphabet::twist(n);
  Word lhs = descending_run(a, n - 1, 3).pow(n - 2);
  Word f = descending_run(a, n, 3) * ascending_run(a, 3, n);
  Word t1(a, {{0, 1}});
  Word rhs = t1 * f * t1 * f.inverse();
  return Relation(std::move(lhs), std::move(rhs));
}

InhomogeneityReport inhomogeneity_report(const Relation& r) {
  InhomogeneityReport rep;
  rep.total_lhs = exponent_vector(r.lhs).total;
  rep.total_rhs = exponent_vector(r.rhs).total;
  rep.inhomogeneous = rep.total_lhs != rep.total_rhs;
  return rep;
}

SL2Matrix SL2Matrix::identity() { return SL2Matrix{{{{1, 0}, {0, 1}}}}; }

long long SL2Matrix::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
  SL2Matrix r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m[static_cast<size_t>(i)][0] * o.m[0][static_cast<size_t>(j)] +
          m[static_cast<size_t>(i)][1] * o.m[1][static_cast<size_t>(j)];
  return r;
}

bool sl2z_check() {
  SL2Matrix t1{{{{1, 1}, {0, 1}}}};
  SL2Matrix t2{{{{1, 0}, {-1, 1}}}};
  if (t1.det() != 1 || t2.det() != 1) return false;
  if (!(t1 * t2 * t1 == t2 * t1 * t2)) return false;
  SL2Matrix acc = SL2Matrix::identity();
  for (int k = 1; k <= 6; ++k) {
    acc = acc * (t1 * t2);
    bool trivial = acc == SL2Matrix::identity();
    if (k < 6 && trivial) return false;  // order must be exactly six
    if (k == 6 && !trivial) return false;
  }
  return true;
}

}  // namespace circuit
