#include "circuit/affine.hpp"

#include <stdexcept>

namespace circuit {

AffineWord::AffineWord(int n_, Word word_) : n(n_), word(std::move(word_)) {
  if (n < 3) throw std::invalid_argument("affine word needs n >= 3");
  if (word.alphabet() != Alphabet::affine(n))
    throw std::invalid_argument("affine word alphabet has the wrong rank");
}

AffineWord AffineWord::parse(int n, std::string_view text) {
  return AffineWord(n, Word::parse(Alphabet::affine(n), text));
}

AffineWord affine_from_twist(const Word& twist_word) {
  if (twist_word.alphabet().kind() != AlphabetKind::twist)
    throw std::invalid_argument("expected a twist word");
  int n = twist_word.alphabet().param();
  return AffineWord(n, Word(Alphabet::affine(n), twist_word.letters()));
}

Word delta_b_word(int n) {
  Alphabet b = Alphabet::type_b(n);
  std::vector<Letter> ls;
  for (int g = 0; g < b.size(); ++g) ls.push_back({g, 1});  // t, s1, ..., s_{n-1}
  return Word(b, std::move(ls));
}

Word to_b_word(const AffineWord& w) {
  Alphabet b = Alphabet::type_b(w.n);
  Substitution map(Alphabet::affine(w.n), b);
  for (int g = 0; g + 1 < w.n; ++g)
    map.set(g, Word(b, {{g + 1, 1}}));  // s_i -> s_i (generator g+1 of B skips t)
  Word delta = delta_b_word(w.n);
  Word last(b, {{w.n - 1, 1}});  // s_{n-1}
  map.set(w.n - 1, reduce(delta * last * delta.inverse()));
  return substitute(w.word, map);
}

long long t_degree(const Word& b_word) {
  if (b_word.alphabet().kind() != AlphabetKind::type_b)
    throw std::invalid_argument("t_degree expects a type B word");
  long long d = 0;
  for (const Letter& l : b_word.letters())
    if (l.gen == 0) d += l.sign;
  return d;
}

bool affine_equal(const AffineWord& lhs, const AffineWord& rhs) {
  if (lhs.n != rhs.n) throw std::invalid_argument("affine rank mismatch");
  return engine_for(CoxType::B, lhs.n).equal(to_b_word(lhs), to_b_word(rhs));
}

Word b_to_strand_word(int n, const Word& b_word) {
  if (n < 2) throw std::invalid_argument("strand model needs n >= 2");
  if (b_word.alphabet() != Alphabet::type_b(n))
    throw std::invalid_argument("strand model expects a type B word of matching rank");
  Alphabet a = Alphabet::type_a(n + 1);
  Substitution map(Alphabet::type_b(n), a);
  map.set(0, Word(a, {{0, 1}, {0, 1}}));  // t -> sigma_1^2 around the pole
  for (int g = 1; g < n; ++g) map.set(g, Word(a, {{g, 1}}));  // s_i -> sigma_{i+1}
  return substitute(b_word, map);
}

bool strand_oracle_equal(int n, const Word& lhs, const Word& rhs) {
  const GarsideEngine& braid = engine_for(CoxType::A, n + 1);
  return braid.equal(b_to_strand_word(n, lhs), b_to_strand_word(n, rhs));
}

}  // namespace circuit
