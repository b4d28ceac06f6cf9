#include "circuit/alphabet.hpp"

#include <stdexcept>

namespace circuit {

namespace {

std::vector<std::string> indexed(const char* stem, int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

Alphabet::Alphabet(AlphabetKind kind, int param, std::vector<std::string> symbols)
    : kind_(kind), param_(param), symbols_(std::move(symbols)) {}

Alphabet Alphabet::twist(int n) {
  if (n < 1) throw std::invalid_argument("twist alphabet needs n >= 1");
  return Alphabet(AlphabetKind::twist, n, indexed("T", 1, n));
}

Alphabet Alphabet::type_a(int strands) {
  if (strands < 2) throw std::invalid_argument("type A alphabet needs >= 2 strands");
  return Alphabet(AlphabetKind::type_a, strands, indexed("s", 1, strands - 1));
}

Alphabet Alphabet::type_b(int n) {
  if (n < 2) throw std::invalid_argument("type B alphabet needs rank >= 2");
  std::vector<std::string> symbols{"t"};
  for (auto& s : indexed("s", 1, n - 1)) symbols.push_back(std::move(s));
  return Alphabet(AlphabetKind::type_b, n, std::move(symbols));
}

Alphabet Alphabet::type_d(int n) {
  if (n < 3) throw std::invalid_argument("type D alphabet needs rank >= 3");
  return Alphabet(AlphabetKind::type_d, n, indexed("s", 1, n));
}

Alphabet Alphabet::affine(int n) {
  if (n < 3) throw std::invalid_argument("affine alphabet needs n >= 3");
  return Alphabet(AlphabetKind::affine, n, indexed("s", 1, n));
}

Alphabet Alphabet::custom(std::vector<std::string> symbols) {
  if (symbols.empty()) throw std::invalid_argument("custom alphabet needs at least one symbol");
  for (size_t i = 0; i < symbols.size(); ++i)
    for (size_t j = i + 1; j < symbols.size(); ++j)
      if (symbols[i] == symbols[j])
        throw std::invalid_argument("duplicate symbol in alphabet: " + symbols[i]);
  return Alphabet(AlphabetKind::custom, static_cast<int>(symbols.size()), std::move(symbols));
}

const std::string& Alphabet::symbol(int gen) const {
  if (gen < 0 || gen >= size()) throw std::out_of_range("generator index out of range");
  return symbols_[static_cast<size_t>(gen)];
}

std::optional<int> Alphabet::find(std::string_view token) const {
  for (int g = 0; g < size(); ++g)
    if (symbols_[static_cast<size_t>(g)] == token) return g;
  return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (kind_ != other.kind_ || param_ != other.param_) return false;
  if (kind_ == AlphabetKind::custom) return symbols_ == other.symbols_;
  return true;
}

}  // namespace circuit
