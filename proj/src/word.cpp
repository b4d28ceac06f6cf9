#include "circuit/word.hpp"

#include <sstream>
#include <stdexcept>

namespace circuit {

namespace {

void check_letters(const Alphabet& a, const std::vector<Letter>& letters) {
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= a.size())
      throw std::invalid_argument("letter refers to no generator of the alphabet");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

void check_same_alphabet(const Alphabet& a, const Alphabet& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": alphabets differ");
}

}  // namespace

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  check_letters(alphabet_, letters_);
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int sign = 1;
    std::string_view sym = token;
    if (auto pos = token.rfind("^-1"); pos != std::string::npos && pos + 3 == token.size()) {
      sign = -1;
      sym = std::string_view(token).substr(0, pos);
    }
    auto gen = alphabet.find(sym);
    if (!gen) throw std::invalid_argument("unknown generator token: " + token);
    letters.push_back({*gen, sign});
  }
  return Word(alphabet, std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return Word(alphabet_, std::move(out));
}

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  int reps = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<size_t>(reps));
  for (int i = 0; i < reps; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  check_same_alphabet(alphabet_, rhs.alphabet_, "concatenation");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(out));
}

bool Word::operator==(const Word& o) const {
  return alphabet_ == o.alphabet_ && letters_ == o.letters_;
}

std::string Word::str() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += alphabet_.symbol(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(w.alphabet(), std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::vector<Letter> ls = r.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return Word(w.alphabet(), std::vector<Letter>(ls.begin() + static_cast<long>(lo),
                                                ls.begin() + static_cast<long>(hi)));
}

ExponentVector exponent_vector(const Word& w) {
  ExponentVector v;
  v.per_gen.assign(static_cast<size_t>(w.alphabet().size()), 0);
  for (const Letter& l : w.letters()) {
    v.per_gen[static_cast<size_t>(l.gen)] += l.sign;
    v.total += l.sign;
  }
  return v;
}

Relation::Relation(Word lhs_, Word rhs_) : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  check_same_alphabet(lhs.alphabet(), rhs.alphabet(), "relation");
}

Word Relation::relator() const { return reduce(lhs * rhs.inverse()); }

bool is_homogeneous(const Relation& r) {
  return exponent_vector(r.lhs).total == exponent_vector(r.rhs).total;
}

Substitution::Substitution(Alphabet from, Alphabet to)
    : from_(std::move(from)), to_(std::move(to)) {
  images_.resize(static_cast<size_t>(from_.size()));
}

void Substitution::set(int gen, Word image) {
  if (gen < 0 || gen >= from_.size()) throw std::out_of_range("no such generator");
  check_same_alphabet(image.alphabet(), to_, "substitution image");
  images_[static_cast<size_t>(gen)] = std::move(image);
}

void Substitution::set(std::string_view symbol, Word image) {
  auto gen = from_.find(symbol);
  if (!gen) throw std::invalid_argument("no such generator: " + std::string(symbol));
  set(*gen, std::move(image));
}

bool Substitution::has(int gen) const {
  return gen >= 0 && gen < from_.size() && images_[static_cast<size_t>(gen)].has_value();
}

const Word& Substitution::image(int gen) const {
  if (!has(gen))
    throw std::invalid_argument("substitution has no image for generator " +
                                from_.symbol(gen));
  return *images_[static_cast<size_t>(gen)];
}

Word substitute(const Word& w, const Substitution& map) {
  check_same_alphabet(w.alphabet(), map.from(), "substitution source");
  Word out(map.to());
  for (const Letter& l : w.letters()) {
    const Word& img = map.image(l.gen);
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return reduce(out);
}

}  // namespace circuit
