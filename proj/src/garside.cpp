#include "circuit/garside.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "circuit/diagram.hpp"

namespace circuit {

namespace {

Alphabet alphabet_for(CoxType type, int n) {
  switch (type) {
    case CoxType::A: return Alphabet::type_a(n);
    case CoxType::B: return Alphabet::type_b(n);
    case CoxType::D: return Alphabet::type_d(n);
  }
  throw std::logic_error("unreachable");
}

int expected_delta_length(CoxType type, int n) {
  switch (type) {
    case CoxType::A: return n * (n - 1) / 2;  // n strands, rank n-1
    case CoxType::B: return n * n;
    case CoxType::D: return n * (n - 1);
  }
  throw std::logic_error("unreachable");
}

ArtinDiagram diagram_for(CoxType type, int n) {
  switch (type) {
    case CoxType::A: return build_diagram(DiagramKind::A(n - 1));
    case CoxType::B: return build_diagram(DiagramKind::B(n));
    case CoxType::D: return build_diagram(DiagramKind::D(n));
  }
  throw std::logic_error("unreachable");
}

int order_of(const SignedPerm& p) {
  SignedPerm acc = p;
  for (int k = 1; k <= 64; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, p);
  }
  throw std::logic_error("generator product order exceeds bound");
}

}  // namespace

GarsideEngine::GarsideEngine(CoxType type, int n)
    : type_(type),
      rank_(0),
      degree_(n),
      alphabet_(alphabet_for(type, n)),
      delta_(n),
      delta_length_(0) {
  if (type == CoxType::A && n < 2) throw std::invalid_argument("type A needs >= 2 strands");
  if (type == CoxType::B && n < 2) throw std::invalid_argument("type B needs rank >= 2");
  if (type == CoxType::D && n < 3) throw std::invalid_argument("type D needs rank >= 3");
  rank_ = alphabet_.size();

  for (int g = 0; g < rank_; ++g) {
    std::vector<int> img;
    for (int i = 1; i <= n; ++i) img.push_back(i);
    switch (type) {
      case CoxType::A:
        std::swap(img[static_cast<size_t>(g)], img[static_cast<size_t>(g + 1)]);
        break;
      case CoxType::B:
        if (g == 0)
          img[0] = -1;
        else
          std::swap(img[static_cast<size_t>(g - 1)], img[static_cast<size_t>(g)]);
        break;
      case CoxType::D:
        if (g == 0) {
          img[0] = -2;
          img[1] = -1;
        } else {
          std::swap(img[static_cast<size_t>(g - 1)], img[static_cast<size_t>(g)]);
        }
        break;
    }
    gens_.push_back(SignedPerm::from_images(std::move(img)));
  }

  // Longest element by greedy ascent: keep appending any length-increasing
  // generator.  A wrong generator convention fails the length check below.
  SignedPerm w(n);
  for (;;) {
    int up = -1;
    for (int g = 0; g < rank_; ++g) {
      if (!is_right_descent(w, g)) {
        up = g;
        break;
      }
    }
    if (up < 0) break;
    w = compose(w, gens_[static_cast<size_t>(up)]);
    delta_letters_.push_back({up, 1});
  }
  delta_ = w;
  delta_length_ = length(delta_);
  if (delta_length_ != expected_delta_length(type, n))
    throw std::logic_error("longest element has wrong length; generator model is off");

  validate_conventions();
}

Word GarsideEngine::delta_word() const { return Word(alphabet_, delta_letters_); }

void GarsideEngine::validate_conventions() const {
  ArtinDiagram diagram = diagram_for(type_, degree_);
  if (diagram.vertices() != alphabet_)
    throw std::logic_error("engine alphabet disagrees with its diagram");
  for (int u = 0; u < rank_; ++u) {
    for (int v = u + 1; v < rank_; ++v) {
      int got = order_of(compose(gens_[static_cast<size_t>(u)], gens_[static_cast<size_t>(v)]));
      if (got != diagram.weight(u, v))
        throw std::logic_error("product order of " + alphabet_.symbol(u) + ", " +
                               alphabet_.symbol(v) + " does not match the diagram weight");
    }
  }
}

int GarsideEngine::length(const SignedPerm& w) const {
  int n = w.size();
  int inv = 0, neg = 0, nsp = 0;
  for (int i = 1; i <= n; ++i) {
    if (w.image(i) < 0) ++neg;
    for (int j = i + 1; j <= n; ++j) {
      if (w.image(i) > w.image(j)) ++inv;
      if (w.image(i) + w.image(j) < 0) ++nsp;
    }
  }
  switch (type_) {
    case CoxType::A: return inv;
    case CoxType::B: return inv + neg + nsp;
    case CoxType::D: return inv + nsp;
  }
  throw std::logic_error("unreachable");
}

bool GarsideEngine::is_right_descent(const SignedPerm& w, int gen) const {
  switch (type_) {
    case CoxType::A:
      return w.image(gen + 1) > w.image(gen + 2);
    case CoxType::B:
      if (gen == 0) return w.image(1) < 0;
      return w.image(gen) > w.image(gen + 1);
    case CoxType::D:
      if (gen == 0) return w.image(1) + w.image(2) < 0;
      return w.image(gen) > w.image(gen + 1);
  }
  throw std::logic_error("unreachable");
}

bool GarsideEngine::is_left_descent(const SignedPerm& w, int gen) const {
  return is_right_descent(w.inverse(), gen);
}

SignedPerm GarsideEngine::gen_perm(int gen) const {
  return gens_.at(static_cast<size_t>(gen));
}

SignedPerm GarsideEngine::right_mul_gen(const SignedPerm& w, int gen) const {
  return compose(w, gens_[static_cast<size_t>(gen)]);
}

SignedPerm GarsideEngine::left_mul_gen(int gen, const SignedPerm& w) const {
  return compose(gens_[static_cast<size_t>(gen)], w);
}

SignedPerm GarsideEngine::tau(const SignedPerm& x) const {
  // delta is an involution in the Coxeter group for types A, B, D.
  return compose(delta_, compose(x, delta_));
}

void GarsideEngine::check_alphabet(const Word& w) const {
  if (w.alphabet() != alphabet_)
    throw std::invalid_argument("word alphabet does not match the engine");
}

NormalForm GarsideEngine::normal_form(const Word& word) const {
  check_alphabet(word);

  int p = 0;
  std::vector<SignedPerm> fs;
  fs.reserve(static_cast<size_t>(word.size()));

  const Word reduced = reduce(word);
  for (const Letter& l : reduced.letters()) {
    if (l.sign > 0) {
      fs.push_back(gens_[static_cast<size_t>(l.gen)]);
    } else {
      // s^-1 = Delta^-1 (Delta s^-1); commuting Delta^-1 to the front
      // conjugates every factor already collected.
      p -= 1;
      for (SignedPerm& f : fs) f = tau(f);
      fs.push_back(compose(delta_, gens_[static_cast<size_t>(l.gen)]));
    }
  }

  // Left-weighting passes: slide length leftward until every adjacent pair
  // (a, b) satisfies StartSet(b) subset of FinishSet(a).  The transfer count
  // is quadratically bounded; exceeding the budget is an internal error.
  long budget = static_cast<long>(fs.size() + 1) * static_cast<long>(fs.size() + 1) *
                    static_cast<long>(delta_length_ + 1) +
                64;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      SignedPerm& a = fs[i];
      SignedPerm& b = fs[i + 1];
      if (a == delta_ || b.is_identity()) continue;
      SignedPerm b_inv = b.inverse();
      for (int g = 0; g < rank_;) {
        if (is_right_descent(b_inv, g) && !is_right_descent(a, g)) {
          a = right_mul_gen(a, g);
          b = left_mul_gen(g, b);
          b_inv = b.inverse();
          changed = true;
          if (--budget < 0)
            throw std::logic_error("garside normalization exceeded its transfer budget");
          g = 0;  // descent sets shifted; rescan
        } else {
          ++g;
        }
      }
    }
    // Drop trivial factors and absorb full factors into the Delta power.
    size_t out = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].is_identity()) {
        changed = true;
      } else if (fs[i] == delta_) {
        for (size_t j = 0; j < out; ++j) fs[j] = tau(fs[j]);
        p += 1;
        changed = true;
      } else {
        fs[out++] = fs[i];
      }
    }
    fs.erase(fs.begin() + static_cast<long>(out), fs.end());
  }

  return NormalForm{p, std::move(fs)};
}

bool GarsideEngine::equal(const Word& lhs, const Word& rhs) const {
  return normal_form(lhs) == normal_form(rhs);
}

const GarsideEngine& engine_for(CoxType type, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<GarsideEngine>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(type), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GarsideEngine>(type, n)).first;
  return *it->second;
}

}  // namespace circuit
