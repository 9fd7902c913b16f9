// Acceptance gate: one line per criterion, PASS/FAIL, with measured time
// against a pinned budget. Exit status 0 only if every criterion passes.
//
// The battery (criteria 1-13) is executed twice from scratch; criterion 14
// compares the two CSV reports byte for byte.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <supercodim/bounds.hpp>
#include <supercodim/codim.hpp>
#include <supercodim/partition.hpp>
#include <supercodim/poly.hpp>
#include <supercodim/report.hpp>
#include <supercodim/superalgebra.hpp>
#include <supercodim/witness.hpp>

#include "syt_oracle.hpp"

using namespace supercodim;

namespace {

struct Criterion {
  int index;
  std::string label;
  double budget_s;
  bool pass = false;
  double elapsed_s = 0.0;
  std::string detail;
};

class Battery {
 public:
  std::vector<Criterion> lines;
  std::vector<ReportRow> rows;

  void run() {
    run_criterion(1, "axioms exhaustive on b(2)", 1.0, [&] { return c01(); });
    run_criterion(2, "alternating word g = 8^t h, t=1..4", 10.0,
                  [&] { return c02(); });
    run_criterion(3, "symmetrized g' = (t!)^3 8^t h, t=1..3 full expansion",
                  30.0, [&] { return c03(); });
    run_criterion(4, "odd-pair word w = 8^(k+1) h, k=0..2", 60.0,
                  [&] { return c04(); });
    run_criterion(5, "u x1..xi scales by +-2^i, i=1..5", 60.0,
                  [&] { return c05(); });
    run_criterion(6, "odd generators a,b,c solve ad=e bd=f cd=h", 5.0,
                  [&] { return c06(); });
    run_criterion(7, "full vs reduced spanning agree for k+l <= 5", 600.0,
                  [&] { return c07(); });
    run_criterion(8, "alternation ceilings: 4 even / 5 odd force identities",
                  60.0, [&] { return c08(); });
    run_criterion(9, "hook degrees vs tableaux, squares vs n!, Phi exactness",
                  60.0, [&] { return c09(); });
    run_criterion(10, "degree sandwich sweep n in {100,101,110,120}, <=6 parts",
                  300.0, [&] { return c10(); });
    run_criterion(11, "rectangle and hook estimates for 1 <= t,k <= 6", 10.0,
                  [&] { return c11(); });
    run_criterion(12, "Q[sqrt3] binomial identity q<=60; C(n,i)<=nC(n,i+1) n<=200",
                  60.0, [&] { return c12(); });
    run_criterion(13, "codimension lower bounds execute and hold at desk scale",
                  300.0, [&] { return c13(); });
  }

  std::string csv() const { return to_csv(rows); }

 private:
  WitnessLab lab_;

  template <typename F>
  void run_criterion(int idx, const std::string& label, double budget, F body) {
    Criterion c{idx, label, budget};
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.pass = body();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_s = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    if (c.elapsed_s >= c.budget_s) {
      c.pass = false;
      if (c.detail.empty()) c.detail = "time budget exceeded";
    }
    if (c.detail.empty() && !details_.empty()) c.detail = details_;
    details_.clear();
    lines.push_back(c);
  }

  std::string details_;

  bool c01() {
    auto report = verify_axioms(lab_.algebra());
    ReportRow row;
    row.check = "axioms";
    row.params = "algebra=b2 dim=7";
    row.lhs = ExactValue::of(std::string(
        "pairs=" + std::to_string(report.pairs_checked) +
        " triples=" + std::to_string(report.triples_checked)));
    row.verdict = report.pass ? "pass" : "fail";
    rows.push_back(row);
    details_ = report.pass ? "49 pairs, 343 triples" : report.to_string();
    return report.pass && report.pairs_checked == 49 &&
           report.triples_checked == 343;
  }

  bool c02() {
    bool ok = true;
    for (int t = 1; t <= 4; ++t) {
      auto g = lab_.build_g(t);
      SuperElement got = g.evaluate(lab_.phi_g(t));
      SuperElement want = BigRat(int_pow(BigInt(8),
                                         static_cast<unsigned long>(t))) *
                          lab_.algebra().basis_element("h");
      ReportRow row;
      row.check = "eq1";
      row.params = "t=" + std::to_string(t) +
                   " terms=" + std::to_string(g.term_count());
      row.lhs = ExactValue::of(got.to_string());
      row.rhs = ExactValue::of(want.to_string());
      row.verdict = got == want ? "pass" : "fail";
      rows.push_back(row);
      ok = ok && got == want;
    }
    details_ = "values 8h 64h 512h 4096h";
    return ok;
  }

  bool c03() {
    bool ok = true;
    std::string seen;
    for (int t = 1; t <= 3; ++t) {
      auto rep = lab_.check_eq3a(t);  // full expansion + shortcut cross-check
      rows.push_back(row_of(rep));
      ok = ok && rep.pass;
      seen += (t > 1 ? " " : "") + rep.computed;
    }
    details_ = seen;  // 8*h 512*h 110592*h
    return ok;
  }

  bool c04() {
    bool ok = true;
    std::string seen;
    for (int k = 0; k <= 2; ++k) {
      auto rep = lab_.check_eq6(k);
      rows.push_back(row_of(rep));
      ok = ok && rep.pass;
      seen += (k > 0 ? " " : "") + rep.computed;
    }
    details_ = seen;
    return ok;
  }

  bool c05() {
    bool ok = true;
    std::string signs;
    for (int i = 1; i <= 5; ++i) {
      auto rep = lab_.check_lemma4(1, 1, i);
      rows.push_back(row_of(rep));
      ok = ok && rep.pass;
      bool plus = !rep.notes.empty() &&
                  rep.notes[0].find(": +") != std::string::npos;
      signs += plus ? '+' : '-';
    }
    details_ = "signs " + signs + " (expected +-+-+)";
    return ok && signs == "+-+-+";
  }

  bool c06() {
    const auto& L = lab_.algebra();
    auto d = L.basis_element("d");
    bool brackets = bracket(lab_.gen_a(), d) == L.basis_element("e") &&
                    bracket(lab_.gen_b(), d) == L.basis_element("f") &&
                    bracket(lab_.gen_c(), d) == L.basis_element("h");
    // frozen independent solution of the 3x3 system
    bool coords = lab_.gen_a() == L.basis_element("s1") &&
                  lab_.gen_b() == BigRat(-1) * L.basis_element("s2") &&
                  lab_.gen_c() == BigRat(-1) * L.basis_element("s3");
    ReportRow row;
    row.check = "solve-abc";
    row.params = "algebra=b2";
    row.lhs = ExactValue::of(std::string(
        lab_.gen_a().to_string() + " | " + lab_.gen_b().to_string() + " | " +
        lab_.gen_c().to_string()));
    row.rhs = ExactValue::of(std::string("s1 | -s2 | -s3"));
    row.verdict = brackets && coords ? "pass" : "fail";
    rows.push_back(row);
    details_ = "a=" + lab_.gen_a().to_string() +
               " b=" + lab_.gen_b().to_string() +
               " c=" + lab_.gen_c().to_string();
    return brackets && coords;
  }

  bool c07() {
    CodimEngine engine(build_b2());
    bool ok = true;
    int pairs = 0;
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) {
        int l = n - k;
        auto full = engine.codim(k, l, SpanningStrategy::full);
        auto reduced = engine.codim(k, l, SpanningStrategy::reduced);
        ReportRow row;
        row.check = "codim-strategies";
        row.params = "k=" + std::to_string(k) + " l=" + std::to_string(l);
        row.lhs = ExactValue::of(BigInt(static_cast<long>(full)));
        row.rhs = ExactValue::of(BigInt(static_cast<long>(reduced)));
        row.verdict = full == reduced ? "pass" : "fail";
        rows.push_back(row);
        ok = ok && full == reduced;
        ++pairs;
      }
    details_ = std::to_string(pairs) + " (k,l) pairs compared";
    return ok;
  }

  Mono random_tree(std::mt19937& rng, std::vector<std::int32_t> leaves) {
    std::shuffle(leaves.begin(), leaves.end(), rng);
    std::function<Mono(int, int)> build = [&](int lo, int hi) -> Mono {
      if (hi - lo == 1) return mono::leaf(leaves[lo]);
      int split = lo + 1 +
                  static_cast<int>(rng() % static_cast<unsigned>(hi - lo - 1));
      return mono::node(build(lo, split), build(split, hi));
    };
    return build(0, static_cast<int>(leaves.size()));
  }

  bool c08() {
    CodimEngine engine(build_b2());
    std::mt19937 rng(20260814);
    bool ok = true;
    for (int instance = 0; instance < 40; ++instance) {
      bool even_case = instance < 20;
      int core = even_case ? 4 : 5;
      // spectator variables only on the 4-even core: the 5-odd core already
      // enumerates 4^5 assignments per instance
      int extras = even_case ? static_cast<int>(rng() % 3) : 0;
      Context ctx;
      std::vector<int> core_ids;
      for (int i = 0; i < core; ++i) {
        core_ids.push_back(i);
        ctx.push_back({std::string(even_case ? "x" : "y") + std::to_string(i),
                       even_case ? Parity::even : Parity::odd});
      }
      for (int i = 0; i < extras; ++i)
        ctx.push_back({"v" + std::to_string(i),
                       rng() % 2 ? Parity::even : Parity::odd});
      std::vector<std::int32_t> leaves(ctx.size());
      for (std::size_t i = 0; i < leaves.size(); ++i)
        leaves[i] = static_cast<std::int32_t>(i);
      auto poly = BracketPoly::monomial(ctx, random_tree(rng, leaves))
                      .alternate(core_ids);
      auto verdict = engine.is_graded_identity(poly);
      ReportRow row;
      row.check = even_case ? "alt4-even-identity" : "alt5-odd-identity";
      row.params = "instance=" + std::to_string(instance) +
                   " vars=" + std::to_string(ctx.size());
      row.lhs = ExactValue::of(
          std::string(verdict.is_identity ? "identity" : "non-identity"));
      row.verdict = verdict.is_identity ? "pass" : "fail";
      if (!verdict.is_identity)
        row.notes.push_back("witness value " + verdict.witness_value);
      rows.push_back(row);
      ok = ok && verdict.is_identity;
    }
    details_ = "20 random 4-even + 20 random 5-odd instances";
    return ok;
  }

  bool c09() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      BigInt sum = 0;
      bool hooks_ok = true;
      for_each_partition(n, 0, [&](const Partition& mu) {
        BigInt d = mu.hook_degree();
        sum += d * d;
        hooks_ok = hooks_ok && d == syt_oracle::count(mu.parts());
      });
      bool match = sum == factorial(static_cast<unsigned long>(n));
      ReportRow row;
      row.check = "hook-square-sum";
      row.params = "n=" + std::to_string(n);
      row.lhs = ExactValue::of(sum);
      row.rhs = ExactValue::of(factorial(static_cast<unsigned long>(n)));
      row.verdict = match && hooks_ok ? "pass" : "fail";
      rows.push_back(row);
      ok = ok && match && hooks_ok;
    }
    for (int n = 1; n <= 30; ++n) {
      bool phi_ok = true;
      long long checked = 0;
      for_each_partition(n, 0, [&](const Partition& mu) {
        BigInt prod = 1;
        for (int p : mu.parts())
          prod *= int_pow(BigInt(p), static_cast<unsigned long>(p));
        phi_ok = phi_ok &&
                 mu.phi_pow_n() * BigRat(prod) ==
                     BigRat(int_pow(BigInt(n), static_cast<unsigned long>(n)));
        ++checked;
      });
      ReportRow row;
      row.check = "phi-exactness";
      row.params = "n=" + std::to_string(n) +
                   " partitions=" + std::to_string(checked);
      row.verdict = phi_ok ? "pass" : "fail";
      rows.push_back(row);
      ok = ok && phi_ok;
    }
    details_ = "tableaux n<=8, squares n<=8, Phi n<=30";
    return ok;
  }

  bool c10() {
    bool executed = true;
    long long checked = 0, violations = 0;
    for (int n : {100, 101, 110, 120}) {
      auto sweep = lemma1_sweep(n, 6);
      checked += sweep.checked;
      violations += static_cast<long long>(sweep.failures.size());
      ReportRow row;
      row.check = "lemma1-sweep";
      row.params = "n=" + std::to_string(n) + " max-parts=6 checked=" +
                   std::to_string(sweep.checked);
      row.lhs = ExactValue::of(BigInt(
          static_cast<long>(sweep.failures.size())));
      row.rhs = ExactValue::of(BigInt(0));
      row.verdict = sweep.failures.empty() ? "pass" : "fail";
      rows.push_back(row);
      for (const auto& f : sweep.failures) rows.push_back(f);
    }
    details_ = std::to_string(checked) + " partitions checked, " +
               std::to_string(violations) + " violations" +
               (violations ? " (reported as findings)" : "");
    return executed;  // counterexamples are findings, not gate failures
  }

  bool c11() {
    bool ok = true;
    for (int t = 1; t <= 6; ++t) {
      auto row = eq4_check(t);
      rows.push_back(row);
      ok = ok && !row.failed();
    }
    for (int k = 1; k <= 6; ++k) {
      auto row = eq7_check(k);
      rows.push_back(row);
      ok = ok && !row.failed();
    }
    return ok;
  }

  bool c12() {
    bool ok = true;
    for (int q = 0; q <= 60; ++q) {
      auto row = binomial_identity_check(q);
      if (row.failed()) {
        rows.push_back(row);
        ok = false;
      }
    }
    {
      ReportRow row;
      row.check = "binom-identity-range";
      row.params = "q=0..60";
      row.verdict = ok ? "pass" : "fail";
      rows.push_back(row);
    }
    bool step_ok = true;
    for (int n = 1; n <= 200; ++n) {
      auto row = binom_step_check(n);
      if (row.failed()) {
        rows.push_back(row);
        step_ok = false;
      }
    }
    {
      ReportRow row;
      row.check = "binom-step-range";
      row.params = "n=1..200";
      row.verdict = step_ok ? "pass" : "fail";
      rows.push_back(row);
    }
    return ok && step_ok;
  }

  bool c13() {
    bool ok = true;
    CodimEngine engine(build_b2());
    for (long n = 1; n <= 5; ++n) {
      BigInt cn = engine.total_codim(static_cast<int>(n));
      auto row = codim_lower_bound_check(n, &cn);
      rows.push_back(row);
      ok = ok && !row.failed();
    }
    // Lemma 2 points with m + r <= 12: (t,k) = (1,1) and (2,1); both bounds
    // are < 1 and certified by a nonzero evaluation of u in P_(m+1, r+6)
    for (auto [t, k] : {std::pair{1, 1}, std::pair{2, 1}}) {
      auto row = lemma2_check(t, k);
      rows.push_back(row);
      ok = ok && !row.failed() && lemma2_bound(t, k) < BigRat(1);

      auto u = lab_.build_u(t, k);
      SuperElement vu = u.evaluate(lab_.phi_u(t, k));
      ReportRow cert;
      cert.check = "lemma2-certificate";
      cert.params = "t=" + std::to_string(t) + " k=" + std::to_string(k) +
                    " terms=" + std::to_string(u.term_count());
      cert.lhs = ExactValue::of(vu.to_string());
      cert.rhs = ExactValue::of(std::string("nonzero"));
      cert.verdict = !vu.is_zero() ? "pass" : "fail";
      cert.notes.push_back(
          "nonzero value of u certifies c_(3t+1,6k+6) >= 1 > bound");
      rows.push_back(cert);
      ok = ok && !vu.is_zero();
    }
    details_ = "n=1..5 vs lemma3/5 (out-of-hypothesis flagged); lemma2 (1,1),(2,1) certified";
    return ok;
  }

  static ReportRow row_of(const WitnessReport& w) {
    ReportRow row;
    row.check = w.check;
    row.params = w.params;
    row.lhs = ExactValue::of(w.computed);
    row.rhs = ExactValue::of(w.expected);
    row.verdict = w.pass ? "pass" : "fail";
    row.notes = w.notes;
    return row;
  }
};

}  // namespace

int main() {
  Battery first;
  first.run();

  auto t0 = std::chrono::steady_clock::now();
  Battery second;
  second.run();
  double rerun_s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0).count();

  Criterion c14{14, "criteria 1-13 rerun gives a bit-identical csv report",
                1200.0};
  c14.elapsed_s = rerun_s;
  c14.pass = first.csv() == second.csv() && rerun_s < c14.budget_s;
  c14.detail = std::to_string(first.csv().size()) + " csv bytes compared";

  auto all = first.lines;
  all.push_back(c14);

  bool gate = true;
  for (const auto& c : all) {
    gate = gate && c.pass;
    std::printf("[%2d/14] %s  %-58s  %7.2fs / %6.0fs%s%s\n", c.index,
                c.pass ? "PASS" : "FAIL", c.label.c_str(), c.elapsed_s,
                c.budget_s, c.detail.empty() ? "" : "  -- ",
                c.detail.c_str());
  }
  std::printf("acceptance: %s\n", gate ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return gate ? 0 : 1;
}
