#include "ssice/functional.hpp"

#include "ssice/errors.hpp"

namespace ssice {

NormalizerKind normalizer_for(Model m) {
  switch (m) {
    case Model::UncoloredReflecting:
      return NormalizerKind::D1;
    case Model::UncoloredAbsorbing:
      return NormalizerKind::D2;
    default:
      throw UsageError("normalizers are defined for the uncolored models");
  }
}

Rational normalizer(NormalizerKind kind, int L, const ParamPoint& p) {
  Rational out = 1;
  const Rational& q = p.q();
  for (std::size_t i = 0; i < p.n(); ++i) {
    out *= pow(p.z(i), L);
    if (kind == NormalizerKind::D1) {
      const Rational zp = p.zprime(i);
      if (is_zero(zp)) throw SingularityError("D1 needs z_i' != 0");
      out *= 1 - (q + 1) * p.z(i) + q * p.z(i) / zp;
    }
  }
  return out;
}

ParamPoint act(int k, const ParamPoint& p) {
  const int n = static_cast<int>(p.n());
  if (k < 1 || k > n) throw UsageError("generator index out of range");
  if (k < n) return p.swapped(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k));
  const Rational zp = p.zprime(static_cast<std::size_t>(n - 1));
  if (is_zero(zp)) throw SingularityError("s_n needs z_n' != 0");
  return p.with_z(static_cast<std::size_t>(n - 1), 1 / zp);
}

ParamPoint act(const std::vector<int>& word, const ParamPoint& p) {
  ParamPoint out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
  return out;
}

RecursionCoefficients recursion_coefficients(const ParamPoint& p, int i) {
  const Rational& q = p.q();
  const int n = static_cast<int>(p.n());
  RecursionCoefficients c;
  if (i >= 1 && i < n) {
    const Rational &zi = p.z(static_cast<std::size_t>(i - 1)), &zi1 = p.z(static_cast<std::size_t>(i));
    if (zi == zi1) throw SingularityError("A, B need z_i != z_{i+1}");
    c.A = (1 - zi1) * (1 - q * zi) / (zi1 - zi);
    c.B = (1 - (q + 1) * zi + q * zi * zi1) / (zi1 - zi);
  }
  const Rational& zn = p.z(static_cast<std::size_t>(n - 1));
  const Rational znp = p.zprime(static_cast<std::size_t>(n - 1));
  const Rational den = q * (1 - zn * znp);
  if (is_zero(den)) throw SingularityError("C, D need z_n z_n' != 1");
  c.C = (q - znp) * (zn - 1) / den;
  c.D = (q * zn + znp - (q + 1) * zn * znp) / den;
  return c;
}

UPoint to_u(const ParamPoint& p) {
  UPoint out{{}, p.q()};
  for (const auto& z : p.zs()) {
    if (z == 1) throw SingularityError("u undefined at z = 1");
    out.u.push_back((1 - p.q() * z) / (1 - z));
  }
  return out;
}

ParamPoint from_u(const UPoint& u) {
  std::vector<Rational> z;
  for (const auto& ui : u.u) {
    if (ui == u.v) throw SingularityError("z undefined at u = q");
    z.push_back((1 - ui) / (u.v - ui));
  }
  return {std::move(z), u.v};
}

UPoint act_u(int i, const UPoint& p) {
  const int n = static_cast<int>(p.u.size());
  if (i < 1 || i > n) throw UsageError("generator index out of range");
  UPoint out = p;
  if (i < n) {
    std::swap(out.u[static_cast<std::size_t>(i - 1)], out.u[static_cast<std::size_t>(i)]);
  } else {
    auto& un = out.u[static_cast<std::size_t>(n - 1)];
    if (is_zero(un)) throw SingularityError("s_n needs u_n != 0");
    un = 1 / un;
  }
  return out;
}

Rational dl_apply(DLKind kind, int i, const UPoint& p, const UFunction& f) {
  const int n = static_cast<int>(p.u.size());
  if (i < 1 || i > n) throw UsageError("operator index out of range");
  const Rational& un = p.u[static_cast<std::size_t>(n - 1)];
  const Rational ua = i < n ? Rational(p.u[static_cast<std::size_t>(i - 1)] / p.u[static_cast<std::size_t>(i)])
                            : Rational(un * un);
  if (ua == 1) throw SingularityError("u^alpha_i = 1");
  const Rational& v = p.v;
  const Rational fu = f(p.u);
  Rational out = (1 - v) / (ua - 1) * fu + (v * ua - 1) / (ua - 1) * f(act_u(i, p).u);
  if (kind == DLKind::Lhat) out -= (v - 1) * fu;
  return out;
}

namespace {

void require_uncolored(const LatticeSpec& spec) {
  if (is_colored(spec.model)) throw UsageError("this functional equation is stated for the uncolored models");
}

}  // namespace

Comparison check_permutation_invariance(const LatticeSpec& spec, int i) {
  require_uncolored(spec);
  if (i < 1 || i >= spec.n) throw UsageError("permutation invariance needs 1 <= i <= n-1");
  return {partition_function(spec), partition_function(spec.with_point(act(i, spec.point)))};
}

Comparison check_interchange(const LatticeSpec& spec) {
  require_uncolored(spec);
  const auto& p = spec.point;
  const Rational& q = p.q();
  const std::size_t k = static_cast<std::size_t>(spec.n - 1);
  const Rational &zn = p.z(k);
  const Rational znp = p.zprime(k);
  Rational factor = pow(1 / (zn * znp), spec.L);
  if (spec.model == Model::UncoloredReflecting) {
    const Rational den = 1 - (q + 1) * zn + q * zn / znp;
    if (is_zero(den)) throw SingularityError("interchange factor denominator vanishes");
    factor *= (1 - (q + 1) / znp + q * zn / znp) / den;
  }
  return {partition_function(spec.with_point(act(spec.n, p))), factor * partition_function(spec)};
}

Comparison check_weyl_invariance(const LatticeSpec& spec, const std::vector<int>& word) {
  const NormalizerKind kind = normalizer_for(spec.model);
  const ParamPoint g = act(word, spec.point);
  return {partition_function(spec.with_point(g)) / normalizer(kind, spec.L, g),
          partition_function(spec) / normalizer(kind, spec.L, spec.point)};
}

bool closed_form_hypothesis(const LatticeSpec& spec) {
  if (spec.model != Model::ColoredSigned) return false;
  for (int i = 1; i <= spec.n; ++i)
    if (spec.sigma(i) != -spec.tau(i)) return false;
  return true;
}

Rational closed_form_opposite(const LatticeSpec& spec) {
  if (!closed_form_hypothesis(spec)) throw UsageError("closed form needs the signed model with sigma(i) = -tau(i)");
  const auto& p = spec.point;
  const Rational& q = p.q();
  const int n = spec.n, L = spec.L;
  Rational out = 1;
  long e = 0;
  for (int i = 1; i <= n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - 1);
    const Rational zp = p.zprime(k);
    const int lam = spec.lambda.parts[k];
    out *= pow(p.z(k), L) * pow(Rational(zp / q), lam + n - i);
    out *= spec.sigma(i) < 0 ? Rational(1 - zp / q) : Rational(1 - zp);
    if (spec.sigma(i) > 0) e += L - n + i + lam;
    for (int j = i + 1; j <= n; ++j) e += (-spec.sigma(j) < spec.sigma(i)) + (spec.sigma(j) < spec.sigma(i));
  }
  return out * pow(q, e);
}

Comparison check_recursion_si(const LatticeSpec& spec, int i) {
  if (!is_colored(spec.model)) throw UsageError("the s_i recursion is stated for the colored models");
  if (i < 1 || i >= spec.n) throw UsageError("the s_i recursion needs 1 <= i <= n-1");
  if (!(spec.sigma(i + 1) > spec.sigma(i))) throw UsageError("the s_i recursion needs sigma(i+1) > sigma(i)");
  const auto c = recursion_coefficients(spec.point, i);
  Rational lhs = partition_function(spec.with_sigma(spec.sigma.times_generator(i)));
  if (spec.model == Model::ColoredSigned)
    lhs *= pow(spec.point.q(), static_cast<long>(spec.sigma(i + 1) > 0) - static_cast<long>(spec.sigma(i) > 0));
  const Rational rhs =
      -c.A * partition_function(spec) + c.B * partition_function(spec.with_point(act(i, spec.point)));
  return {lhs, rhs};
}

Comparison check_recursion_sn(const LatticeSpec& spec) {
  if (spec.model != Model::ColoredSigned) throw UsageError("the s_n recursion is stated for the signed model");
  const int n = spec.n, L = spec.L;
  if (!(spec.sigma(n) > 0)) throw UsageError("the s_n recursion needs sigma(n) > 0");
  const auto& p = spec.point;
  const std::size_t k = static_cast<std::size_t>(n - 1);
  const auto c = recursion_coefficients(p, n);
  const Rational lhs = pow(Rational(p.q() / p.z(k)), L) * partition_function(spec.with_sigma(spec.sigma.times_generator(n)));
  const Rational rhs = c.C * pow(p.z(k), -L) * partition_function(spec) -
                       c.D * pow(p.zprime(k), L) * partition_function(spec.with_point(act(n, p)));
  return {lhs, rhs};
}

Rational z_tilde(const LatticeSpec& spec) {
  if (spec.model != Model::ColoredSigned) throw UsageError("Z-tilde is defined for the signed model");
  long e = 0;
  Rational zl = 1;
  for (int i = 1; i <= spec.n; ++i) {
    if (spec.sigma(i) > 0) e += spec.n - i;
    if (spec.sigma(i) < 0) e += spec.L + 1;
    zl *= pow(spec.point.z(static_cast<std::size_t>(i - 1)), spec.L);
  }
  return partition_function(spec) * pow(spec.point.q(), e) / zl;
}

Comparison check_dl_recursion(const LatticeSpec& spec, int i) {
  if (spec.model != Model::ColoredSigned) throw UsageError("the operator recursion is stated for the signed model");
  const int n = spec.n;
  if (i < 1 || i > n) throw UsageError("operator index out of range");
  if (i < n && !(spec.sigma(i + 1) > spec.sigma(i)))
    throw UsageError("the operator recursion needs sigma(i+1) > sigma(i)");
  if (i == n && !(spec.sigma(n) > 0)) throw UsageError("the operator recursion needs sigma(n) > 0");
  const UPoint u = to_u(spec.point);
  const UFunction f = [&](const std::vector<Rational>& us) { return z_tilde(spec.with_point(from_u({us, u.v}))); };
  const Rational lhs = z_tilde(spec.with_sigma(spec.sigma.times_generator(i)));
  const Rational rhs = i < n ? dl_apply(DLKind::Lhat, i, u, f) : Rational(-dl_apply(DLKind::L, i, u, f));
  return {lhs, rhs};
}

}  // namespace ssice
