#include "circuit/signed_perm.hpp"

#include <cstdlib>
#include <stdexcept>

namespace circuit {

SignedPerm::SignedPerm(int n) {
  if (n < 1) throw std::invalid_argument("signed permutation needs n >= 1");
  img_.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img_[static_cast<size_t>(i - 1)] = static_cast<int8_t>(i);
}

SignedPerm SignedPerm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  SignedPerm w(n);
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<size_t>(i)];
    int a = std::abs(v);
    if (a < 1 || a > n || hit[static_cast<size_t>(a - 1)])
      throw std::invalid_argument("not a signed permutation");
    hit[static_cast<size_t>(a - 1)] = true;
    w.img_[static_cast<size_t>(i)] = static_cast<int8_t>(v);
  }
  return w;
}

int SignedPerm::apply(int x) const {
  if (x == 0 || std::abs(x) > size()) throw std::out_of_range("signed permutation argument");
  int v = img_[static_cast<size_t>(std::abs(x) - 1)];
  return x > 0 ? v : -v;
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

int SignedPerm::negative_count() const {
  int c = 0;
  for (int8_t v : img_)
    if (v < 0) ++c;
  return c;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w(size());
  for (int i = 1; i <= size(); ++i) {
    int v = image(i);
    if (v > 0)
      w.img_[static_cast<size_t>(v - 1)] = static_cast<int8_t>(i);
    else
      w.img_[static_cast<size_t>(-v - 1)] = static_cast<int8_t>(-i);
  }
  return w;
}

std::vector<int> SignedPerm::one_line() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int8_t v : img_) out.push_back(v);
  return out;
}

std::string SignedPerm::str() const {
  std::string out = "[";
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(image(i));
  }
  return out + "]";
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> images;
  images.reserve(static_cast<size_t>(u.size()));
  for (int i = 1; i <= v.size(); ++i) images.push_back(u.apply(v.image(i)));
  return SignedPerm::from_images(std::move(images));
}

}  // namespace circuit
