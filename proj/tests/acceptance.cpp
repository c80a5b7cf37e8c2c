// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every criterion is exact (no tolerances).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "ks7/ks7.hpp"

using namespace ks7;

namespace {

const std::vector<std::int64_t> kGridL = {-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6};
const IntRange kGridK{-60, 60};
constexpr Family kFamilies[] = {Family::Xi, Family::XiPrime};
constexpr std::uint64_t kSeed = 20240229;

int failed = 0;

void report(int id, const std::string& title, const VerifyReport& r, double secs, const std::string& extra = "") {
  const bool ok = r.passed() && extra.empty();
  if (!ok) ++failed;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << "  (" << r.total_tested()
            << " cases, " << r.total_failures() << " failures, " << secs << " s)" << extra << "\n";
  if (!r.passed()) {
    for (const auto& c : r.checks()) {
      if (c.passed()) continue;
      std::cout << "       " << c.name << ": " << c.failures.size() << " failures, first: "
                << to_json(c.failures.front()).dump() << "\n";
    }
  }
}

template <class F>
std::pair<VerifyReport, double> timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r = f();
  return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

}  // namespace

int main() {
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) {
        for (Relation rel : kInvariantRelations) r.merge(crosscheck_oracles(kGridL, kGridK, f, rel));
      }
      return r;
    });
    const std::uint64_t expected = 12ull * 121 * 121 * 2 * 3;
    std::string extra;
    if (r.total_tested() != expected) extra = "  [expected " + std::to_string(expected) + " comparisons]";
    if (secs >= 60.0) extra += "  [over the 60 s budget]";
    report(1, "congruence oracle == invariant oracle (l in +-1..6, k,k' in [-60,60], DIFFEO/HOMEO/PL)", r, secs, extra);
  }
  {
    auto [r, secs] = timed([] { return dual_path_check(1000, kSeed, 1'000'000, 10'000); });
    report(2, "qz(S_eval(coboundary)) == closed form, 1000 random (k,l), both families", r, secs,
           r.total_tested() == 2000 ? "" : "  [expected 2000 evaluations]");
  }
  {
    auto [r, secs] = timed([] { return corollary_identity({-9, -7, -5, -3, -1, 1, 3, 5, 7, 9}, {-20, 20}); });
    report(3, "l * (s2(M'(k+6,l)) - s2(M'(k,l))) = 1/2 for odd l in [-9,9], k in [-20,20]", r, secs);
  }
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) r.merge(refinement_check(kGridL, kGridK, f));
      return r;
    });
    report(4, "DIFFEO => PL => HOMOTOPY and HOMEO == PL on the full grid", r, secs);
  }
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) r.merge(class_count_check(kGridL, f));
      return r;
    });
    report(5, "6 homotopy classes; |l| (M) / 2|l| (M') PL classes per homotopy class", r, secs);
  }
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) {
        r.merge(smoothing_check(kGridL, kGridK, f));
        r.merge(periodicity_check({-3, -2, -1, 1, 2, 3}, f));
      }
      return r;
    });
    report(6, "smoothings <= 28, exotic action of order 28 fixes PL key, DIFFEO period 168|l| (|l| <= 3)", r, secs);
  }
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) r.merge(l_zero_check({-30, 30}, f));
      return r;
    });
    report(7, "l = 0: DIFFEO/HOMEO/PL iff k = k', HOMOTOPY iff k = k' mod 6, k,k' in [-30,30]", r, secs);
  }
  {
    auto [r, secs] = timed([] {
      VerifyReport r;
      for (Family f : kFamilies) {
        for (Relation rel : kAllRelations) r.merge(axioms_check(kGridL, kGridK, f, rel, 10'000, kSeed));
      }
      return r;
    });
    report(8, "reflexive, symmetric, transitive on 10^4 random triples per (l, family, relation)", r, secs);
  }

  std::cout << (failed == 0 ? "acceptance: all criteria passed\n" : "acceptance: FAILED\n");
  return failed == 0 ? 0 : 1;
}
