#include "cfbayes/sampler.hpp"

#include <cmath>
#include <numeric>

#include "cfbayes/error.hpp"

namespace cfbayes {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Dirichlet: return "dirichlet";
    case Family::Product: return "product";
    case Family::NaiveBayes: return "naive-bayes";
    case Family::XorNoise: return "xor-noise";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (auto f : {Family::Dirichlet, Family::Product, Family::NaiveBayes, Family::XorNoise}) {
    if (to_string(f) == text) return f;
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(text) + "'");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::exponential() { return -std::log1p(-uniform()); }

namespace {

constexpr double kMarginalLo = 0.05;
constexpr double kMarginalHi = 0.95;
constexpr double kMaxXorNoise = 0.2;

std::vector<std::string> attribute_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

bool bit_of(std::size_t state, std::size_t attr, std::size_t k) {
  return (state >> (k - 1 - attr)) & 1u;
}

std::vector<double> dirichlet(std::size_t k, Rng& rng) {
  std::vector<double> p(std::size_t{1} << k);
  for (auto& x : p) x = rng.exponential();
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= sum;
  return p;
}

std::vector<double> product(std::size_t k, Rng& rng) {
  std::vector<double> marg(k);
  for (auto& m : marg) m = rng.uniform(kMarginalLo, kMarginalHi);
  std::vector<double> p(std::size_t{1} << k, 1.0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t a = 0; a < k; ++a) p[s] *= bit_of(s, a, k) ? marg[a] : 1.0 - marg[a];
  }
  return p;
}

std::vector<double> naive_bayes(std::size_t k, Rng& rng) {
  const double ph = rng.uniform(kMarginalLo, kMarginalHi);
  std::vector<double> given_true(k, 0.0), given_false(k, 0.0);
  for (std::size_t a = 1; a < k; ++a) {
    given_true[a] = rng.uniform(kMarginalLo, kMarginalHi);
    given_false[a] = rng.uniform(kMarginalLo, kMarginalHi);
  }
  std::vector<double> p(std::size_t{1} << k);
  for (std::size_t s = 0; s < p.size(); ++s) {
    const bool h = bit_of(s, 0, k);
    double v = h ? ph : 1.0 - ph;
    const auto& cond = h ? given_true : given_false;
    for (std::size_t a = 1; a < k; ++a) v *= bit_of(s, a, k) ? cond[a] : 1.0 - cond[a];
    p[s] = v;
  }
  return p;
}

std::vector<double> xor_noise(std::size_t k, Rng& rng) {
  if (k < 3) {
    throw Error(ErrorKind::InvalidArgument, "xor-noise needs at least 3 attributes");
  }
  const double eps = rng.uniform(0.0, kMaxXorNoise);
  std::vector<double> marg(k, 0.0);
  for (std::size_t a = 3; a < k; ++a) marg[a] = rng.uniform(kMarginalLo, kMarginalHi);
  std::vector<double> p(std::size_t{1} << k);
  for (std::size_t s = 0; s < p.size(); ++s) {
    const bool h = bit_of(s, 0, k);
    const bool x = bit_of(s, 1, k) != bit_of(s, 2, k);
    double v = 0.25 * (h == x ? 1.0 - eps : eps);
    for (std::size_t a = 3; a < k; ++a) v *= bit_of(s, a, k) ? marg[a] : 1.0 - marg[a];
    p[s] = v;
  }
  return p;
}

}  // namespace

JointDistribution sample_distribution(Family family, std::size_t k, std::uint64_t seed) {
  if (k > kMaxAttributes) {
    throw Error(ErrorKind::SpaceTooLarge, std::to_string(k) + " attributes, at most " +
                                              std::to_string(kMaxAttributes) + " supported");
  }
  if (k < kMinAttributes) throw Error(ErrorKind::InvalidSpace, "need at least 2 attributes");
  Rng rng(seed);
  std::vector<double> p;
  switch (family) {
    case Family::Dirichlet: p = dirichlet(k, rng); break;
    case Family::Product: p = product(k, rng); break;
    case Family::NaiveBayes: p = naive_bayes(k, rng); break;
    case Family::XorNoise: p = xor_noise(k, rng); break;
  }
  return JointDistribution::validate(attribute_names(k), std::move(p));
}

}  // namespace cfbayes
