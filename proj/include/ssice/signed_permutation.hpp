#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ssice {

// Element of the hyperoctahedral group B_n: i -> images[i-1], images in
// {-n..-1, 1..n} with |images| a bijection. sigma(-i) = -sigma(i).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return images_; }

  // (this o other)(i) = this(other(i))
  SignedPermutation compose(const SignedPermutation& other) const;
  // Right action of the generator s_k, 1 <= k <= n.
  SignedPermutation times_generator(int k) const;
  SignedPermutation inverse() const;
  bool all_positive() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

SignedPermutation parse_signed_permutation(std::string_view text);
std::string to_string(const SignedPermutation& s);

std::vector<SignedPermutation> all_signed_permutations(int n);
std::vector<SignedPermutation> all_permutations(int n);

}  // namespace ssice
