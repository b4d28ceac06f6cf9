/*
  signed_perm.hpp — signed permutations of {±1, ..., ±n}.

  A signed permutation w is a bijection with w(-x) = -w(x); it is stored by
  the images of 1..n.  Plain permutations are the special case with all
  images positive.  These are the elements of the Coxeter groups of types
  A, B and D in their standard permutation models.
*/

#ifndef CIRCUIT_SIGNED_PERM_HPP
#define CIRCUIT_SIGNED_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace circuit {

class SignedPerm {
 public:
  explicit SignedPerm(int n);  // identity
  static SignedPerm from_images(std::vector<int> images);  // images of 1..n

  int size() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[static_cast<size_t>(i - 1)]; }  // i in 1..n
  int apply(int x) const;  // x in ±1..±n

  bool is_identity() const;
  int negative_count() const;

  SignedPerm inverse() const;

  bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
  bool operator!=(const SignedPerm& o) const { return img_ != o.img_; }
  bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

  std::vector<int> one_line() const;
  std::string str() const;  // "[2, -1, 3]"

 private:
  std::vector<int8_t> img_;
};

// Group product u * v = "apply v first, then u".
SignedPerm compose(const SignedPerm& u, const SignedPerm& v);

}  // namespace circuit

#endif
