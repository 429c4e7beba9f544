#include "ssice/dynamics.hpp"

#include "ssice/counter_rng.hpp"
#include "ssice/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace ssice {

Outcome outcome_of(const LatticeSpec& spec) {
  Outcome o{false, spec.lambda, {}};
  if (is_colored(spec.model))
    for (int i = 1; i <= spec.lambda.length(); ++i) o.colors.push_back(spec.tau(i));
  return o;
}

Outcome outcome_from_bottom(const Configuration& s, Model model) {
  std::vector<int> cols;
  std::vector<int> colors;
  for (int c = s.L(); c >= 1; --c)
    if (s.v(0, c) != kPlus) {
      cols.push_back(c);
      colors.push_back(s.v(0, c));
    }
  Outcome o;
  const int np = static_cast<int>(cols.size());
  for (int i = 1; i <= np; ++i) o.lambda.parts.push_back(cols[static_cast<std::size_t>(i - 1)] - np - 1 + i);
  if (is_colored(model)) o.colors = std::move(colors);
  return o;
}

std::string to_string(const Outcome& o) {
  if (o.escaped) return "escape";
  std::string s = "lambda=(" + to_string(o.lambda) + ")";
  if (!o.colors.empty()) {
    s += " tau=(";
    for (std::size_t i = 0; i < o.colors.size(); ++i) s += (i ? "," : "") + std::to_string(o.colors[i]);
    s += ")";
  }
  return s;
}

namespace {

std::uint64_t scaled_threshold(const Rational& cumulative) {
  mpz_class t = cumulative.get_num();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 64);
  t /= cumulative.get_den();
  if (mpz_sizeinbase(t.get_mpz_t(), 2) > 64) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(mpz_get_ui(t.get_mpz_t()));
}

}  // namespace

Sampler::Sampler(const LatticeSpec& spec) : spec_(spec), alphabet_(model_alphabet(spec.model, spec.n)) {
  if (!in_stochastic_regime(spec.point)) throw UsageError("sampling needs a point in the stochastic regime");
  left_gamma_ = boundary_assignment(spec).left_gamma;
  RowWeights w(spec);
  const std::size_t a = alphabet_.size();
  for (int r = 1; r <= 2 * spec.n; ++r) {
    const bool gamma = r % 2 == 0;
    std::vector<std::vector<Choice>> row(a * a);
    for (std::size_t i0 = 0; i0 < a; ++i0)
      for (std::size_t i1 = 0; i1 < a; ++i1) {
        const Label in0 = alphabet_[i0], in1 = alphabet_[i1];
        auto& choices = row[i0 * a + i1];
        Rational cum = 0;
        for (Label o0 : alphabet_)
          for (Label o1 : alphabet_) {
            const Edges e = gamma ? Edges{in0, in1, o0, o1} : Edges{o0, in1, in0, o1};
            const Rational& p = w.vertex(r, e);
            if (is_zero(p)) continue;
            if (sgn(p) < 0) throw UsageError("negative transition probability");
            cum += p;
            choices.push_back({o0, o1, p, scaled_threshold(cum)});
          }
        if (cum != 1) throw UsageError("row " + std::to_string(r) + " is not stochastic");
      }
    laws_.push_back(std::move(row));
  }
  for (Label top : alphabet_) {
    Label bottom = kPlus;
    int found = 0;
    for (Label b : alphabet_)
      if (w.cap(top, b) == 1) {
        bottom = b;
        ++found;
      }
    if (found != 1) throw UsageError("cap table is not a deterministic map");
    cap_map_.push_back(bottom);
  }
}

std::size_t Sampler::index(Label l) const {
  return static_cast<std::size_t>(std::lower_bound(alphabet_.begin(), alphabet_.end(), l) - alphabet_.begin());
}

const std::vector<Sampler::Choice>& Sampler::law(int row, Label in0, Label in1) const {
  return laws_[static_cast<std::size_t>(row - 1)][index(in0) * alphabet_.size() + index(in1)];
}

SampleResult Sampler::sample(std::uint64_t seed, std::uint64_t idx, bool track) const {
  const int n = spec_.n, L = spec_.L;
  SampleResult out{Configuration(n, L), {}, std::nullopt};
  auto& s = out.config;
  Rational prob = 1;
  for (int i = 1; i <= n; ++i) s.h(2 * i, L) = left_gamma_[static_cast<std::size_t>(i - 1)];
  auto draw = [&](int r, int c, Label in0, Label in1) -> const Choice& {
    const auto& choices = law(r, in0, in1);
    CounterRng rng(seed, {idx, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)});
    const std::uint64_t u = rng.next();
    for (const auto& ch : choices)
      if (u < ch.threshold) return ch;
    return choices.back();
  };
  for (int r = 2 * n; r >= 1; --r) {
    if (r % 2 == 0) {
      for (int c = L; c >= 1; --c) {
        const Choice& ch = draw(r, c, s.h(r, c), s.v(r, c));
        s.h(r, c - 1) = ch.out0;
        s.v(r - 1, c) = ch.out1;
        if (track) prob *= ch.p;
      }
      s.h(r - 1, 0) = cap_map_[index(s.h(r, 0))];
    } else {
      for (int c = 1; c <= L; ++c) {
        const Choice& ch = draw(r, c, s.h(r, c - 1), s.v(r, c));
        s.h(r, c) = ch.out0;
        s.v(r - 1, c) = ch.out1;
        if (track) prob *= ch.p;
      }
      if (s.h(r, L) != kPlus) {
        out.outcome = Outcome::escape();
        if (track) out.probability = prob;
        return out;
      }
    }
  }
  out.outcome = outcome_from_bottom(s, spec_.model);
  if (track) out.probability = prob;
  return out;
}

std::map<Outcome, Rational> Sampler::exhaustive_distribution() const {
  const int n = spec_.n, L = spec_.L;
  std::map<Outcome, Rational> dist;
  Configuration s(n, L);
  for (int i = 1; i <= n; ++i) s.h(2 * i, L) = left_gamma_[static_cast<std::size_t>(i - 1)];

  // Steps run in sampling order: Gamma row r column c, cap, Delta row r column c.
  std::function<void(int, int, const Rational&)> step = [&](int r, int c, const Rational& acc) {
    if (r == 0) {
      dist[outcome_from_bottom(s, spec_.model)] += acc;
      return;
    }
    if (r % 2 == 0) {
      if (c == 0) {
        s.h(r - 1, 0) = cap_map_[index(s.h(r, 0))];
        return step(r - 1, 1, acc);
      }
      for (const auto& ch : law(r, s.h(r, c), s.v(r, c))) {
        s.h(r, c - 1) = ch.out0;
        s.v(r - 1, c) = ch.out1;
        step(r, c - 1, acc * ch.p);
      }
      return;
    }
    if (c > L) {
      if (s.h(r, L) != kPlus) {
        dist[Outcome::escape()] += acc;
        return;
      }
      return step(r - 1, L, acc);
    }
    for (const auto& ch : law(r, s.h(r, c - 1), s.v(r, c))) {
      s.h(r, c) = ch.out0;
      s.v(r - 1, c) = ch.out1;
      step(r, c + 1, acc * ch.p);
    }
  };
  step(2 * n, L, Rational(1));
  return dist;
}

SampleResult sample_configuration(const SamplerConfig& config, std::uint64_t index, bool track_probability) {
  return Sampler(config.spec).sample(config.seed, index, track_probability);
}

Trajectory trajectory_from_configuration(const Configuration& s) {
  Trajectory t;
  const int rows = 2 * s.n();
  for (int time = 0; time <= rows; ++time) {
    std::vector<std::pair<int, Label>> occupied;
    for (int c = s.L(); c >= 1; --c)
      if (s.v(rows - time, c) != kPlus) occupied.push_back({c, s.v(rows - time, c)});
    t.positions.push_back(std::move(occupied));
  }
  return t;
}

SampleSummary& SampleSummary::merge(const SampleSummary& other) {
  for (const auto& [o, k] : other.histogram) histogram[o] += k;
  escape_count += other.escape_count;
  num_samples += other.num_samples;
  return *this;
}

SampleSummary summarize(const SamplerConfig& config, unsigned jobs) {
  const Sampler sampler(config.spec);
  jobs = std::max(1u, jobs);
  std::vector<SampleSummary> parts(jobs);
  auto work = [&](unsigned j) {
    auto& part = parts[j];
    for (std::uint64_t i = j; i < config.num_samples; i += jobs) {
      const auto r = sampler.sample(config.seed, i);
      if (r.outcome.escaped)
        ++part.escape_count;
      else
        ++part.histogram[r.outcome];
      ++part.num_samples;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  }
  SampleSummary total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::map<Outcome, Rational> exact_outcome_probabilities(const LatticeSpec& spec) {
  std::map<Outcome, Rational> out;
  for (const auto& s : all_outcome_specs(spec)) {
    Rational z = partition_function(s);
    if (!is_zero(z)) out[outcome_of(s)] = z;
  }
  return out;
}

bool StatisticsReport::pass(double z_limit) const {
  if (!(max_z < z_limit)) return false;
  return degrees_of_freedom == 0 ? chi_square < 1e-9 : chi_square < chi_square_quantile;
}

StatisticsReport compare_empirical_to_exact(const SampleSummary& summary, const std::map<Outcome, Rational>& exact,
                                            double level) {
  const double N = static_cast<double>(summary.num_samples);
  if (summary.num_samples == 0) throw UsageError("no samples to compare");
  Rational escape_p = 1;
  for (const auto& [o, p] : exact) escape_p -= p;
  for (const auto& [o, k] : summary.histogram)
    if (k > 0 && (!exact.count(o) || is_zero(exact.at(o))))
      throw SoundnessError("sampled outcome " + to_string(o) + " has exact probability 0");
  if (summary.escape_count > 0 && sgn(escape_p) <= 0) throw SoundnessError("sampled an escape of probability 0");

  StatisticsReport rep;
  auto add = [&](const Outcome& o, std::uint64_t k, const Rational& p) {
    const double pd = p.get_d();
    const double phat = static_cast<double>(k) / N;
    double z;
    if (pd <= 0 || pd >= 1)
      z = phat == pd ? 0 : std::numeric_limits<double>::infinity();
    else
      z = std::abs(phat - pd) / std::sqrt(pd * (1 - pd) / N);
    rep.outcomes.push_back({o, k, p, phat, z});
    rep.max_z = std::max(rep.max_z, z);
  };
  for (const auto& [o, p] : exact) {
    auto it = summary.histogram.find(o);
    add(o, it == summary.histogram.end() ? 0 : it->second, p);
  }
  if (sgn(escape_p) > 0) add(Outcome::escape(), summary.escape_count, escape_p);

  int buckets = 0;
  double pooled_o = 0, pooled_e = 0;
  for (const auto& st : rep.outcomes) {
    const double e = N * st.exact.get_d();
    const double o = static_cast<double>(st.count);
    if (e >= 5) {
      rep.chi_square += (o - e) * (o - e) / e;
      ++buckets;
    } else {
      pooled_o += o;
      pooled_e += e;
    }
  }
  if (pooled_e > 0) {
    rep.chi_square += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++buckets;
  }
  rep.degrees_of_freedom = std::max(0, buckets - 1);
  if (rep.degrees_of_freedom > 0)
    rep.chi_square_quantile =
        boost::math::quantile(boost::math::chi_squared(static_cast<double>(rep.degrees_of_freedom)), level);
  return rep;
}

}  // namespace ssice
