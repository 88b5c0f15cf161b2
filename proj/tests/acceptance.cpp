// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "msulab/chi_squared.hpp"
#include "msulab/experiment.hpp"
#include "msulab/generators.hpp"
#include "msulab/info_measures.hpp"
#include "msulab/presets.hpp"
#include "msulab/sample_size.hpp"
#include "oracle.hpp"

using namespace msulab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

void table_vectors() {
  const std::vector<std::string> a{"bsp", "bsq", "btp", "btq", "asp", "asq", "atp", "atq"};
  auto b = a;
  b[0][0] = 'a';
  auto c = a;
  c[0][0] = 'c';
  const auto t0 = Clock::now();
  const double ma = msu(oracle::to_sample(oracle::encode(a)), {0, 1, 2}).value;
  const double mb = msu(oracle::to_sample(oracle::encode(b)), {0, 1, 2}).value;
  const double mc = msu(oracle::to_sample(oracle::encode(c)), {0, 1, 2}).value;
  const double ms = seconds_since(t0) * 1e3;
  const bool ok = ma == 0.0 && std::abs(mb - 0.1038) <= 0.005 && std::abs(mc - 0.1787) <= 0.005 &&
                  ms < 1.0;
  report(1, ok, fmt("MSU a=%.6f b=%.6f c=%.6f in %.3f ms", ma, mb, mc, ms));
}

void chi2_machinery() {
  const double crit = chi2_critical(0.05, 7);
  const std::vector<long long> observed{14, 14, 14, 15, 15, 0, 14, 14};
  const double stat = chi2_statistic(observed);
  const bool ok = std::abs(crit - 14.06714) <= 1e-3 && stat == 14.40;
  report(2, ok, fmt("critical(0.05,7)=%.6f, chi2{14,14,14,15,15,0,14,14}=%.6f", crit, stat));
}

void m_star() {
  const auto t0 = Clock::now();
  const long long m8 = min_representative_m(8, 0.05);
  const long long ks[] = {12, 15, 18};
  const double expected[] = {216, 330, 468};
  bool ok = m8 >= 97 && m8 <= 103;
  std::string detail = "k=8 -> " + std::to_string(m8);
  for (int i = 0; i < 3; ++i) {
    const long long m = min_representative_m(ks[i], 0.05);
    const double rel = std::abs(static_cast<double>(m) - expected[i]) / expected[i];
    ok = ok && rel <= 0.05;
    detail += ", k=" + std::to_string(ks[i]) + " -> " + std::to_string(m);
  }
  const double s = seconds_since(t0);
  ok = ok && s < 1.0;
  report(3, ok, detail + fmt(" (%.3f s)", s));
}

void msu_su_identity() {
  std::mt19937_64 gen(4);
  double worst_identity = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t cards[] = {1 + static_cast<std::uint32_t>(gen() % 8),
                                   1 + static_cast<std::uint32_t>(gen() % 8)};
    const auto cols = oracle::random_columns(gen, 2, 1 + gen() % 200, {cards[0], cards[1]});
    const auto s = oracle::to_sample(cols);
    worst_identity = std::max(
        worst_identity, std::abs(msu(s, {0, 1}).value - symmetrical_uncertainty(s, 0, 1).value));
  }
  double worst_oracle = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + gen() % 3;
    std::vector<std::uint32_t> cards(n, 2);
    std::uint32_t support = 1;
    for (auto& c : cards) {
      c = 1 + static_cast<std::uint32_t>(gen() % 4);
      if (support * c > 64) c = 1;
      support *= c;
    }
    const auto cols = oracle::random_columns(gen, n, 1 + gen() % 300, cards);
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    worst_oracle = std::max(worst_oracle,
                            std::abs(msu(oracle::to_sample(cols), all).value - oracle::msu(cols)));
  }
  report(4, worst_identity < 1e-12 && worst_oracle < 1e-12,
         fmt("max |msu-su| = %.3g over 1000, max |msu-oracle| = %.3g over 200", worst_identity,
             worst_oracle));
}

void xor_stabilization() {
  auto config = preset("fig-b2");
  config.replicates = 200;
  const auto t0 = Clock::now();
  const auto curve = run_experiment(config);
  const double s = seconds_since(t0);
  const auto values = curve.sweep_values();
  const auto means = curve.means("msu_xor");
  const double theta = xor_population_msu(0.05);
  double at80 = NAN, worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 80) at80 = means[i];
    if (values[i] >= 80 && i + 1 < values.size())
      worst = std::max(worst, std::abs(means[i + 1] - means[i]) / std::abs(means[i]));
  }
  const bool ok = std::abs(at80 - theta) <= 0.05 && worst < 0.02 && s < 120.0;
  report(5, ok,
         fmt("mean MSU(m=80)=%.4f vs %.4f, max step change for m>=80 = %.2f%% (%.1f s)", at80,
             theta, 100.0 * worst, s));
}

void bias_control() {
  const auto t0 = Clock::now();
  auto f1 = preset("fig-f1");
  auto f2 = preset("fig-f2");
  for (auto* c : {&f1, &f2}) {
    c->replicates = 200;
    c->sweep.values = {2, 10, 20, 40};
  }
  const auto fixed = run_experiment(f1).means("msu_noninformative");
  const auto computed = run_experiment(f2).means("msu_noninformative");
  const double s = seconds_since(t0);
  const double growth = fixed.back() - fixed.front();
  double worst = 0.0;
  for (auto v : computed) worst = std::isnan(v) ? INFINITY : std::max(worst, v);
  const bool ok = growth >= 0.05 && worst < 0.05 && s < 600.0;
  report(6, ok,
         fmt("fixed: card40 - card2 = %.4f; computed: max mean MSU = %.4f (%.1f s)", growth,
             worst, s));
}

void invariant_suite() {
  const auto rep = invariants::run(7, 10000);
  report(7, rep.violations == 0,
         std::to_string(rep.cases) + " cases, " + std::to_string(rep.violations) + " violations" +
             (rep.first.empty() ? "" : " (" + rep.first + ")"));
}

void generator_statistics() {
  const std::size_t m = 100000;
  SeededRng rng(kDefaultSeed, 8);
  auto class_rng = rng.fork(0), attr_rng = rng.fork(1);
  const Column cls = gen_class(2, m, class_rng);
  const Column attr = gen_kononenko(cls, 4, 1.0, attr_rng);
  double n_class[2] = {0, 0}, n_first[2] = {0, 0};
  for (std::size_t r = 0; r < m; ++r) {
    n_class[cls.codes[r]] += 1;
    if (attr.codes[r] < 2) n_first[cls.codes[r]] += 1;
  }
  double worst = 0.0;
  for (std::uint32_t c = 0; c < 2; ++c)
    worst = std::max(worst, std::abs(n_first[c] / n_class[c] -
                                     kononenko_first_half_prob(c + 1, 1.0, 2)));

  auto xor_rng = rng.fork(2);
  const auto t = gen_xor_pair(m, 0.05, xor_rng);
  double agree = 0.0;
  for (std::size_t r = 0; r < m; ++r) agree += (t.f1.codes[r] ^ t.f2.codes[r]) == t.cls.codes[r];
  agree /= static_cast<double>(m);
  report(8, worst <= 0.01 && std::abs(agree - 0.95) <= 0.01,
         fmt("Kononenko max |freq - formula| = %.4f, XOR agreement = %.4f", worst, agree));
}

}  // namespace

int main() {
  table_vectors();
  chi2_machinery();
  m_star();
  msu_su_identity();
  xor_stabilization();
  bias_control();
  invariant_suite();
  generator_statistics();
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
