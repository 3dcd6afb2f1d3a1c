#pragma once

#include <compare>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

// Permutation of the strands 1..n, stored by images. Indexes the braid part of
// the Sigma_n normal form: T_w for w in S_n.
class Permutation {
 public:
  explicit Permutation(int n) : img_(n) {
    for (int p = 1; p <= n; ++p) img_[p - 1] = p;
  }

  static Permutation identity(int n) { return Permutation(n); }

  static Permutation from_images(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int p = 1; p <= n(); ++p)
      if (img_[p - 1] != p) return false;
    return true;
  }

  int preimage(int v) const {
    for (int p = 1; p <= n(); ++p)
      if (img_[p - 1] == v) return p;
    throw IndexOutOfRange("preimage: value out of range");
  }

  // Coxeter length = number of inversions.
  int length() const {
    int l = 0;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (img_[a] > img_[b]) ++l;
    return l;
  }

  // l(w s_i) < l(w), 1 <= i <= n-1.
  bool descent(int i) const { return img_[i - 1] > img_[i]; }

  // Right multiplication w * s_i: swaps the images at positions i, i+1.
  Permutation times_s(int i) const {
    if (i < 1 || i >= n()) throw IndexOutOfRange("times_s: letter index out of range");
    Permutation out = *this;
    std::swap(out.img_[i - 1], out.img_[i]);
    return out;
  }

  // Largest p with w(p) != p; 0 for the identity.
  int top_moved() const {
    for (int p = n(); p >= 1; --p)
      if (img_[p - 1] != p) return p;
    return 0;
  }

  // Some reduced word: w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const {
    std::vector<int> letters;
    Permutation cur = *this;
    while (!cur.is_identity()) {
      int i = 1;
      while (!cur.descent(i)) ++i;
      letters.push_back(i);
      cur = cur.times_s(i);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
  }

  Permutation extended(int n2) const {
    if (n2 < n()) throw ShrinkNotAllowed("extended: target strand count too small");
    Permutation out(n2);
    for (int p = 0; p < n(); ++p) out.img_[p] = img_[p];
    return out;
  }

  Permutation restricted(int n2) const {
    if (n2 > n()) throw IndexOutOfRange("restricted: target larger than source");
    if (top_moved() > n2)
      throw ShrinkNotAllowed("restricted: permutation moves a dropped strand");
    Permutation out(n2);
    for (int p = 0; p < n2; ++p) out.img_[p] = img_[p];
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

inline Permutation Permutation::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw Error("from_images: not a permutation");
    seen[v - 1] = 1;
  }
  Permutation out(n);
  out.img_ = std::move(images);
  return out;
}

}  // namespace skein
