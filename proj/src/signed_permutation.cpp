#include "ssice/signed_permutation.hpp"

#include "ssice/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ssice {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> hit(n + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || hit[a]) throw UsageError("not a signed permutation: " + to_string(*this));
    hit[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation(std::move(img));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > n()) throw UsageError("index out of range");
  return i > 0 ? images_[i - 1] : -images_[-i - 1];
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.n() != n()) throw UsageError("size mismatch in composition");
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) img[i - 1] = (*this)(other(i));
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::times_generator(int k) const {
  if (k < 1 || k > n()) throw UsageError("generator index out of range");
  auto img = images_;
  if (k < n())
    std::swap(img[k - 1], img[k]);
  else
    img[k - 1] = -img[k - 1];
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) {
    const int v = images_[i - 1];
    img[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(img));
}

bool SignedPermutation::all_positive() const {
  return std::all_of(images_.begin(), images_.end(), [](int v) { return v > 0; });
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  std::vector<int> img;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    char* end = nullptr;
    long v = std::strtol(cur.c_str(), &end, 10);
    if (*end != '\0') throw UsageError("bad permutation entry '" + cur + "'");
    img.push_back(static_cast<int>(v));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  return SignedPermutation(std::move(img));
}

std::string to_string(const SignedPermutation& s) {
  std::string out;
  for (std::size_t i = 0; i < s.images().size(); ++i) out += (i ? "," : "") + std::to_string(s.images()[i]);
  return out;
}

std::vector<SignedPermutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<SignedPermutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n))
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      auto img = p.images();
      for (int i = 0; i < n; ++i)
        if (signs & (1u << i)) img[i] = -img[i];
      out.emplace_back(std::move(img));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ssice
