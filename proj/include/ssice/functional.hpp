#pragma once

#include "ssice/lattice.hpp"

#include <functional>
#include <vector>

namespace ssice {

// Result of checking lhs == rhs; both sides are kept for counterexample output.
struct Comparison {
  Rational lhs, rhs;
  bool holds() const { return lhs == rhs; }
  explicit operator bool() const { return holds(); }
};

enum class NormalizerKind { D1, D2 };

NormalizerKind normalizer_for(Model m);  // D1 reflecting, D2 absorbing
Rational normalizer(NormalizerKind kind, int L, const ParamPoint& p);

// Generator indices are 1-based: s_k swaps z_k, z_{k+1} for k < n; s_n sends
// z_n to 1/z_n'.
ParamPoint act(int k, const ParamPoint& p);
// Word (g_1, ..., g_m) acts as g_1 ... g_m, rightmost generator first.
ParamPoint act(const std::vector<int>& word, const ParamPoint& p);

struct RecursionCoefficients {
  Rational A, B, C, D;
};
// A, B need 1 <= i <= n-1 (left zero otherwise); C, D use z_n.
RecursionCoefficients recursion_coefficients(const ParamPoint& p, int i);

struct UPoint {
  std::vector<Rational> u;
  Rational v;
};
UPoint to_u(const ParamPoint& p);    // u_i = (1 - q z_i)/(1 - z_i), v = q
ParamPoint from_u(const UPoint& u);  // z_i = (1 - u_i)/(q - u_i), q = v
UPoint act_u(int i, const UPoint& u);

using UFunction = std::function<Rational(const std::vector<Rational>&)>;
enum class DLKind { L, Lhat };
Rational dl_apply(DLKind kind, int i, const UPoint& point, const UFunction& f);

Comparison check_permutation_invariance(const LatticeSpec& spec, int i);
Comparison check_interchange(const LatticeSpec& spec);
Comparison check_weyl_invariance(const LatticeSpec& spec, const std::vector<int>& word);

Rational closed_form_opposite(const LatticeSpec& spec);
bool closed_form_hypothesis(const LatticeSpec& spec);  // signed and sigma(i) = -tau(i)

Comparison check_recursion_si(const LatticeSpec& spec, int i);
Comparison check_recursion_sn(const LatticeSpec& spec);

// q-power normalization of the signed partition function in u-variables.
Rational z_tilde(const LatticeSpec& spec);
Comparison check_dl_recursion(const LatticeSpec& spec, int i);

}  // namespace ssice
