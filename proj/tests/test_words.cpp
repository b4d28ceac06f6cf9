#include <doctest.h>

#include <stdexcept>

#include <random>

#include "circuit/word.hpp"

using namespace circuit;

namespace {

Word random_word(std::mt19937_64& rng, const Alphabet& a, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(0, a.size() - 1);
  std::bernoulli_distribution sign_d(0.5);
  std::vector<Letter> ls;
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) ls.push_back({gen_d(rng), sign_d(rng) ? 1 : -1});
  return Word(a, std::move(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  Alphabet aff = Alphabet::affine(3);
  CHECK(reduce(Word::parse(aff, "s1 s1^-1 s2")) == Word::parse(aff, "s2"));
  CHECK(reduce(Word(aff)).empty());

  Alphabet tw = Alphabet::twist(3);
  CHECK(reduce(Word::parse(tw, "T3 T2 T2^-1 T3^-1 T1")) == Word::parse(tw, "T1"));
}

TEST_CASE("cyclic reduction") {
  Alphabet aff = Alphabet::affine(3);
  CHECK(cyclic_reduce(Word::parse(aff, "s1 s2 s1^-1")) == Word::parse(aff, "s2"));
  CHECK(cyclic_reduce(Word::parse(aff, "s1 s2")) == Word::parse(aff, "s1 s2"));
}

TEST_CASE("cyclic reduction agrees with the rotation oracle") {
  // Oracle: the minimal length of a free-group conjugate equals the minimal
  // reduced length over all cyclic rotations of the reduced word.
  auto oracle_min_length = [](const Word& w) {
    Word r = reduce(w);
    int best = r.size();
    std::vector<Letter> ls = r.letters();
    for (int k = 0; k < r.size(); ++k) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      Word rot = reduce(Word(w.alphabet(), ls));
      best = std::min(best, rot.size());
    }
    return best;
  };

  Alphabet tw = Alphabet::twist(3);
  Word relator = Word::parse(tw, "T3 T2 T1 T3 T2^-1 T3^-1 T1^-1 T2^-1");
  CHECK(relator.size() == 8);
  CHECK(oracle_min_length(relator) == 8);  // no cyclic cancellation
  CHECK(cyclic_reduce(relator).size() == 8);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, tw, 12);
    Word c = cyclic_reduce(w);
    CHECK(c.size() == oracle_min_length(w));
    CHECK(reduce(c) == c);
    if (c.size() >= 2) {
      const Letter& first = c.letters().front();
      const Letter& last = c.letters().back();
      CHECK_FALSE((first.gen == last.gen && first.sign == -last.sign));
    }
  }
}

TEST_CASE("exponent vectors") {
  Alphabet tw = Alphabet::twist(3);
  Word relator = Word::parse(tw, "T3 T2 T1 T3 T2^-1 T3^-1 T1^-1 T2^-1");
  ExponentVector v = exponent_vector(relator);
  CHECK(v.per_gen == std::vector<long long>{0, -1, 1});
  CHECK(v.total == 0);

  Alphabet tw2 = Alphabet::twist(2);
  Word twelve = Word::parse(tw2, "T1 T2").pow(6);
  ExponentVector v2 = exponent_vector(twelve);
  CHECK(v2.per_gen == std::vector<long long>{6, 6});
  CHECK(v2.total == 12);

  Alphabet b = Alphabet::type_b(3);
  ExponentVector v3 = exponent_vector(Word::parse(b, "t s1 s2"));
  CHECK(v3.per_gen == std::vector<long long>{1, 1, 1});
  CHECK(v3.total == 3);
}

TEST_CASE("homogeneity of relations") {
  Alphabet aff = Alphabet::affine(3);
  CHECK(is_homogeneous(Relation(Word::parse(aff, "s1 s2 s1"), Word::parse(aff, "s2 s1 s2"))));

  Alphabet tw = Alphabet::twist(2);
  CHECK_FALSE(is_homogeneous(Relation(Word::parse(tw, "T1 T2").pow(6), Word(tw))));

  Alphabet tw4 = Alphabet::twist(4);
  Relation cyc(Word::parse(tw4, "T4 T3 T2 T1 T4 T3"), Word::parse(tw4, "T3 T2 T1 T4 T3 T2"));
  CHECK(cyc.lhs.size() == 6);
  CHECK(cyc.rhs.size() == 6);
  CHECK(is_homogeneous(cyc));
}

TEST_CASE("substitution") {
  Alphabet aff = Alphabet::affine(3);
  Alphabet b = Alphabet::type_b(3);

  SUBCASE("delta-conjugate image of s3") {
    Substitution map(aff, b);
    map.set("s1", Word::parse(b, "s1"));
    map.set("s2", Word::parse(b, "s2"));
    Word delta = Word::parse(b, "t s1 s2");
    map.set("s3", delta * Word::parse(b, "s2") * delta.inverse());
    Word image = substitute(Word::parse(aff, "s3"), map);
    CHECK(image == Word::parse(b, "t s1 s2 s1^-1 t^-1"));
    CHECK(image.size() == 5);
  }

  SUBCASE("identity map leaves words alone") {
    Substitution id(aff, aff);
    for (int g = 0; g < aff.size(); ++g) id.set(g, Word(aff, {{g, 1}}));
    Word w = Word::parse(aff, "s1 s3^-1 s2 s2");
    CHECK(substitute(w, id) == w);
  }

  SUBCASE("quotient map on a descending run") {
    Alphabet tw = Alphabet::twist(3);
    Alphabet d = Alphabet::type_d(3);
    Substitution map(tw, d);
    map.set("T1", Word::parse(d, "s3 s1 s3^-1"));
    map.set("T2", Word::parse(d, "s2"));
    map.set("T3", Word::parse(d, "s3"));
    CHECK(substitute(Word::parse(tw, "T3 T2 T1"), map) ==
          Word::parse(d, "s3 s2 s3 s1 s3^-1"));
  }

  SUBCASE("missing image is rejected with the symbol") {
    Substitution map(aff, b);
    map.set("s1", Word::parse(b, "s1"));
    CHECK_THROWS_WITH_AS(substitute(Word::parse(aff, "s1 s2"), map),
                         doctest::Contains("s2"), std::invalid_argument);
  }
}

TEST_CASE("word-level properties") {
  std::mt19937_64 rng(11);
  Alphabet a = Alphabet::type_b(4);

  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, a, 16);
    Word r = reduce(w);

    CHECK(reduce(r) == r);                      // idempotent
    CHECK(r.size() <= w.size());                // length-nonincreasing
    CHECK(reduce(w * w.inverse()).empty());     // inverse cancels

    ExponentVector ev_w = exponent_vector(w);
    ExponentVector ev_r = exponent_vector(r);
    CHECK(ev_w.per_gen == ev_r.per_gen);
    CHECK(ev_w.total == ev_r.total);

    if (!w.empty()) {
      std::vector<Letter> rotated = w.letters();
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      CHECK(exponent_vector(Word(a, rotated)).total == ev_w.total);
    }
  }
}

TEST_CASE("substitution distributes over concatenation") {
  std::mt19937_64 rng(13);
  Alphabet aff = Alphabet::affine(3);
  Alphabet b = Alphabet::type_b(3);
  Substitution map(aff, b);
  map.set("s1", Word::parse(b, "s1"));
  map.set("s2", Word::parse(b, "s2"));
  Word delta = Word::parse(b, "t s1 s2");
  map.set("s3", delta * Word::parse(b, "s2") * delta.inverse());

  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, aff, 8);
    Word v = random_word(rng, aff, 8);
    CHECK(substitute(u * v, map) == reduce(substitute(u, map) * substitute(v, map)));
    CHECK(substitute(u.inverse(), map) == substitute(u, map).inverse());
  }
}

TEST_CASE("alphabet discipline") {
  Alphabet a3 = Alphabet::affine(3);
  Alphabet a4 = Alphabet::affine(4);
  CHECK_THROWS_AS(Word::parse(a3, "s1") * Word::parse(a4, "s1"), std::invalid_argument);
  CHECK_THROWS_AS(Relation(Word::parse(a3, "s1"), Word::parse(a4, "s1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(a3, "T1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(a3, "s9"), std::invalid_argument);
  CHECK_THROWS_AS(Word(a3, {{5, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Word(a3, {{0, 2}}), std::invalid_argument);

  CHECK(Word::parse(a3, "s1 s2^-1").str() == "s1 s2^-1");
}
