/*
  alphabet.hpp — named generator alphabets for the word machinery.

  An alphabet is a fixed, ordered list of generator symbols.  Words are
  sequences of signed indices into one alphabet; mixing alphabets is a
  construction-time error, never a silent coercion.
*/

#ifndef CIRCUIT_ALPHABET_HPP
#define CIRCUIT_ALPHABET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circuit {

enum class AlphabetKind {
  twist,   // T1..Tn        (Dehn twist generators of a circuit)
  type_a,  // s1..s_{n-1}   (braid group on n strands)
  type_b,  // t, s1..s_{n-1}
  type_d,  // s1..sn        (s1, s2 fork generators, s3..sn the tail)
  affine,  // s1..sn        (n-cycle diagram)
  custom,
};

class Alphabet {
 public:
  static Alphabet twist(int n);
  static Alphabet type_a(int strands);
  static Alphabet type_b(int n);
  static Alphabet type_d(int n);
  static Alphabet affine(int n);
  static Alphabet custom(std::vector<std::string> symbols);

  AlphabetKind kind() const { return kind_; }

  // The defining parameter (strand count for type_a, rank otherwise).
  int param() const { return param_; }

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int gen) const;
  std::optional<int> find(std::string_view token) const;

  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  Alphabet(AlphabetKind kind, int param, std::vector<std::string> symbols);

  AlphabetKind kind_;
  int param_;
  std::vector<std::string> symbols_;
};

}  // namespace circuit

#endif
