/*
  word.hpp — free-group word arithmetic over a named alphabet.

  Words are immutable values; every operation returns a new word.  A word
  produced by reduce() carries no adjacent pair g g^-1; the empty word is
  the identity.
*/

#ifndef CIRCUIT_WORD_HPP
#define CIRCUIT_WORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circuit/alphabet.hpp"

namespace circuit {

struct Letter {
  int gen;   // index into the alphabet
  int sign;  // +1 or -1

  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

class Word {
 public:
  explicit Word(Alphabet alphabet);
  Word(Alphabet alphabet, std::vector<Letter> letters);

  // Parses whitespace-separated tokens: a generator symbol, optionally
  // suffixed by ^-1 ("T3 T2^-1 s1 t^-1").  Unknown tokens are rejected.
  static Word parse(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int exponent) const;
  Word operator*(const Word& rhs) const;  // concatenation, not reduced

  bool operator==(const Word& o) const;
  bool operator!=(const Word& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Unique freely reduced representative; idempotent and length-nonincreasing.
Word reduce(const Word& w);

// A word of minimal length in the free-group conjugacy class of w.
Word cyclic_reduce(const Word& w);

struct ExponentVector {
  std::vector<long long> per_gen;  // indexed by generator
  long long total = 0;
};

ExponentVector exponent_vector(const Word& w);

struct Relation {
  Relation(Word lhs, Word rhs);  // same alphabet required

  Word lhs;
  Word rhs;

  Word relator() const;  // reduce(lhs * rhs^-1)
};

// Total exponent sums of the two sides agree.
bool is_homogeneous(const Relation& r);

// A partial map generator -> word over a common target alphabet.
class Substitution {
 public:
  Substitution(Alphabet from, Alphabet to);

  const Alphabet& from() const { return from_; }
  const Alphabet& to() const { return to_; }

  void set(int gen, Word image);
  void set(std::string_view symbol, Word image);
  bool has(int gen) const;
  const Word& image(int gen) const;  // throws naming the symbol if missing

 private:
  Alphabet from_;
  Alphabet to_;
  std::vector<std::optional<Word>> images_;
};

// Homomorphic image of w, freely reduced.  Every generator occurring in w
// must have an image.
Word substitute(const Word& w, const Substitution& map);

}  // namespace circuit

#endif
