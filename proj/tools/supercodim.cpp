// supercodim: exact graded codimensions, identity checks, witness
// polynomial verifications and asymptotic bound checks for the Lie
// superalgebra b(2), all over exact rational / Q[sqrt 3] arithmetic.
//
// Exit status: 0 if every executed check passed, 1 if some check failed,
// 2 on usage or input errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <supercodim/bounds.hpp>
#include <supercodim/codim.hpp>
#include <supercodim/partition.hpp>
#include <supercodim/poly.hpp>
#include <supercodim/report.hpp>
#include <supercodim/superalgebra.hpp>
#include <supercodim/witness.hpp>

namespace sc = supercodim;

namespace {

sc::StructureSuperalgebra resolve_algebra(const std::string& spec) {
  if (spec == "b2") return sc::build_b2();
  if (spec == "sl2") return sc::build_sl2();
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra table '" + path + "'");
    return sc::read_table(in);
  }
  throw std::runtime_error("unknown algebra '" + spec +
                           "' (expected b2, sl2 or file:PATH)");
}

std::string cache_path(const std::string& flag_value) {
  if (const char* env = std::getenv("SUPERCODIM_CACHE"); env && *env)
    return env;
  if (!flag_value.empty()) return flag_value;
  return "supercodim.cache";
}

std::vector<sc::CodimRecord> load_cache_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  return sc::load_cache(in);
}

sc::ReportRow row_of(const sc::WitnessReport& w) {
  sc::ReportRow row;
  row.check = w.check;
  row.params = w.params;
  row.lhs = sc::ExactValue::of(w.computed);
  row.rhs = sc::ExactValue::of(w.expected);
  row.verdict = w.pass ? "pass" : "fail";
  row.notes = w.notes;
  return row;
}

struct CodimArgs {
  std::string algebra = "b2";
  int k = -1, l = -1, total = -1;
  std::string strategy = "full";
};

void run_codim(const CodimArgs& args, int ceiling, const std::string& cache_file,
               std::vector<sc::ReportRow>& rows) {
  auto alg = resolve_algebra(args.algebra);
  sc::CodimEngine engine(alg, ceiling);

  std::vector<sc::CodimRecord> foreign;
  for (const auto& rec : load_cache_file(cache_file)) {
    if (rec.algebra_id == alg.id())
      engine.import_record(rec);
    else
      foreign.push_back(rec);
  }

  auto emit = [&](int k, int l, sc::SpanningStrategy s) {
    std::int64_t value = engine.codim(k, l, s);
    sc::ReportRow row;
    row.check = "codim";
    row.params = "algebra=" + alg.id() + " k=" + std::to_string(k) +
                 " l=" + std::to_string(l) +
                 " strategy=" + std::string(sc::strategy_name(s));
    row.lhs = sc::ExactValue::of(sc::BigInt(static_cast<long>(value)));
    row.verdict = "value";
    rows.push_back(row);
  };

  if (args.total >= 1) {
    for (int k = 0; k <= args.total; ++k)
      emit(k, args.total - k, sc::SpanningStrategy::full);
    sc::ReportRow row;
    row.check = "codim-total";
    row.params = "algebra=" + alg.id() + " n=" + std::to_string(args.total);
    row.lhs = sc::ExactValue::of(engine.total_codim(args.total));
    row.verdict = "value";
    row.notes.push_back("sum of C(n,k) c_(k,n-k) over k");
    rows.push_back(row);
  } else {
    if (args.k < 0 || args.l < 0)
      throw std::runtime_error("codim needs --k and --l, or --total");
    if (args.strategy == "full" || args.strategy == "both")
      emit(args.k, args.l, sc::SpanningStrategy::full);
    if (args.strategy == "reduced" || args.strategy == "both")
      emit(args.k, args.l, sc::SpanningStrategy::reduced);
  }

  auto merged = engine.records();
  merged.insert(merged.end(), foreign.begin(), foreign.end());
  std::sort(merged.begin(), merged.end(),
            [](const sc::CodimRecord& a, const sc::CodimRecord& b) {
              return std::tie(a.algebra_id, a.k, a.l) <
                     std::tie(b.algebra_id, b.k, b.l);
            });
  std::ofstream out(cache_file, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write cache file '" + cache_file + "'");
  sc::save_cache(merged, out);
}

struct BoundsArgs {
  long n = -1;
  int t = -1, k = -1, q = -1, max_parts = 0, digits = 6;
  std::string mu;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact graded codimension and identity laboratory for the Lie "
      "superalgebra b(2)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string cache_flag;
  int ceiling = 7;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--cache", cache_flag,
                 "codimension cache file (SUPERCODIM_CACHE overrides; default "
                 "supercodim.cache)");
  app.add_option("--ceiling", ceiling, "largest total degree k+l for codim")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<sc::ReportRow> rows;

  // ---- axioms -----------------------------------------------------------
  auto* cmd_axioms = app.add_subcommand("axioms", "verify the superalgebra laws");
  std::string ax_algebra = "b2";
  cmd_axioms->add_option("--algebra", ax_algebra, "b2, sl2 or file:PATH")
      ->capture_default_str();
  cmd_axioms->callback([&] {
    auto alg = resolve_algebra(ax_algebra);
    auto report = sc::verify_axioms(alg);
    sc::ReportRow row;
    row.check = "axioms";
    row.params = "algebra=" + alg.id() + " dim=" + std::to_string(alg.dim());
    row.lhs = sc::ExactValue::of(std::string(
        "pairs=" + std::to_string(report.pairs_checked) +
        " triples=" + std::to_string(report.triples_checked)));
    row.verdict = report.pass ? "pass" : "fail";
    row.notes.push_back(report.to_string());
    rows.push_back(row);
  });

  // ---- codim ------------------------------------------------------------
  auto* cmd_codim =
      app.add_subcommand("codim", "exact graded codimension c_(k,l) or c_n");
  CodimArgs codim_args;
  cmd_codim->add_option("--algebra", codim_args.algebra, "b2, sl2 or file:PATH")
      ->capture_default_str();
  cmd_codim->add_option("--k", codim_args.k, "number of even variables");
  cmd_codim->add_option("--l", codim_args.l, "number of odd variables");
  cmd_codim->add_option("--total", codim_args.total,
                        "total codimension c_n = sum C(n,k) c_(k,n-k)");
  cmd_codim->add_option("--strategy", codim_args.strategy, "spanning set")
      ->check(CLI::IsMember({"full", "reduced", "both"}))
      ->capture_default_str();
  cmd_codim->callback([&] {
    run_codim(codim_args, ceiling, cache_path(cache_flag), rows);
  });

  // ---- witness ----------------------------------------------------------
  auto* cmd_witness =
      app.add_subcommand("witness", "evaluate the non-identity witnesses");
  cmd_witness->require_subcommand(1);
  int w_t = 1, w_k = 1, w_i = 1;
  auto add_wsub = [&](const std::string& name, const std::string& desc,
                      auto body) {
    auto* sub = cmd_witness->add_subcommand(name, desc);
    sub->callback([&rows, body] { rows.push_back(row_of(body())); });
    return sub;
  };
  {
    static sc::WitnessLab* lab = nullptr;
    auto lab_ref = [&]() -> sc::WitnessLab& {
      if (!lab) lab = new sc::WitnessLab();
      return *lab;
    };
    add_wsub("eq1", "alternating even word g, value 8^t h",
             [&, lab_ref] { return lab_ref().check_eq1(w_t); })
        ->add_option("--t", w_t, "number of alternating triples")
        ->required();
    add_wsub("eq3a", "symmetrized word g', value (t!)^3 8^t h",
             [&, lab_ref] { return lab_ref().check_eq3a(w_t); })
        ->add_option("--t", w_t, "number of alternating triples")
        ->required();
    add_wsub("eq6", "odd-pair word w, value 8^(k+1) h",
             [&, lab_ref] { return lab_ref().check_eq6(w_k); })
        ->add_option("--k", w_k, "number of four-element alternating sets")
        ->required();
    add_wsub("wprime", "symmetrized word w', value (3k)!(k!)^3 8^(k+1) h",
             [&, lab_ref] { return lab_ref().check_wprime(w_k); })
        ->add_option("--k", w_k, "number of four-element alternating sets")
        ->required();
    auto* l4 = add_wsub("lemma4", "u' = u x1...xi scales phi(u) by +-2^i",
                        [&, lab_ref] { return lab_ref().check_lemma4(w_t, w_k, w_i); });
    l4->add_option("--t", w_t, "g' parameter")->required();
    l4->add_option("--k", w_k, "w' parameter")->required();
    l4->add_option("--i", w_i, "number of appended even variables")->required();
  }

  // ---- bounds -----------------------------------------------------------
  auto* cmd_bounds =
      app.add_subcommand("bounds", "exact asymptotic bound checks");
  cmd_bounds->require_subcommand(1);
  BoundsArgs ba;

  auto* b_lemma1 = cmd_bounds->add_subcommand(
      "lemma1", "character degree sandwich Phi^n/n^(d^2+d) <= d_mu <= n Phi^n");
  b_lemma1->add_option("--mu", ba.mu, "partition, e.g. 3,1,1,1");
  b_lemma1->add_option("--n", ba.n, "sweep every partition of n");
  b_lemma1->add_option("--max-parts", ba.max_parts,
                       "limit the sweep to at most this many parts");
  b_lemma1->callback([&] {
    if (!ba.mu.empty()) {
      rows.push_back(sc::lemma1_check(sc::Partition::parse(ba.mu)));
      return;
    }
    if (ba.n < 1)
      throw std::runtime_error("lemma1 needs --mu or --n");
    auto sweep = sc::lemma1_sweep(static_cast<int>(ba.n), ba.max_parts);
    sc::ReportRow row;
    row.check = "lemma1-sweep";
    row.params = "n=" + std::to_string(ba.n) +
                 " max-parts=" + std::to_string(ba.max_parts) +
                 " checked=" + std::to_string(sweep.checked);
    row.lhs = sc::ExactValue::of(sc::BigInt(
        static_cast<long>(sweep.failures.size())));
    row.rhs = sc::ExactValue::of(sc::BigInt(0));
    row.verdict = sweep.failures.empty() ? "pass" : "fail";
    row.notes.push_back("lhs = number of violating partitions");
    rows.push_back(row);
    for (const auto& f : sweep.failures) rows.push_back(f);
  });

  auto* b_eq4 = cmd_bounds->add_subcommand("eq4", "3^m <= d_(t,t,t) m^12");
  b_eq4->add_option("--t", ba.t)->required();
  b_eq4->callback([&] { rows.push_back(sc::eq4_check(ba.t)); });

  auto* b_eq7 =
      cmd_bounds->add_subcommand("eq7", "(2 sqrt 3)^r <= d_(3k,k,k,k) r^20");
  b_eq7->add_option("--k", ba.k)->required();
  b_eq7->callback([&] { rows.push_back(sc::eq7_check(ba.k)); });

  auto* b_lemma2 = cmd_bounds->add_subcommand(
      "lemma2", "c_(3t+1, 6k+6) >= 3^(3t) (2 sqrt 3)^(6k) / (3t+6k)^32");
  b_lemma2->add_option("--t", ba.t)->required();
  b_lemma2->add_option("--k", ba.k)->required();
  b_lemma2->callback([&] { rows.push_back(sc::lemma2_check(ba.t, ba.k)); });

  auto* b_lemma3 = cmd_bounds->add_subcommand(
      "lemma3", "c_n >= (3+2 sqrt 3)^n/(3^18 n^38) when n-7 is divisible by 6");
  b_lemma3->add_option("--n", ba.n)->required();
  b_lemma3->callback([&] {
    if (sc::residue_mod6(ba.n) != 0)
      throw std::runtime_error(
          "lemma3 needs n - 7 divisible by 6 (got residue " +
          std::to_string(sc::residue_mod6(ba.n)) + "); use bounds lemma5");
    rows.push_back(sc::codim_lower_bound_check(ba.n));
  });

  auto* b_lemma5 = cmd_bounds->add_subcommand(
      "lemma5", "c_n >= (3+2 sqrt 3)^n/(3^18 n^43) for the other residues");
  b_lemma5->add_option("--n", ba.n)->required();
  b_lemma5->callback([&] {
    if (sc::residue_mod6(ba.n) == 0)
      throw std::runtime_error(
          "n - 7 is divisible by 6; use bounds lemma3 for the sharper bound");
    rows.push_back(sc::codim_lower_bound_check(ba.n));
  });

  auto* b_binid = cmd_bounds->add_subcommand(
      "binom-identity", "sum C(q,i) 3^i (2 sqrt 3)^(q-i) = (3+2 sqrt 3)^q");
  b_binid->add_option("--q", ba.q)->required();
  b_binid->callback([&] { rows.push_back(sc::binomial_identity_check(ba.q)); });

  auto* b_binstep =
      cmd_bounds->add_subcommand("binom-step", "C(n,i) <= n C(n,i+1)");
  b_binstep->add_option("--n", ba.n)->required();
  b_binstep->callback(
      [&] { rows.push_back(sc::binom_step_check(static_cast<int>(ba.n))); });

  auto* b_phi = cmd_bounds->add_subcommand(
      "phi", "growth function Phi(mu), exact n-th power and decimal digits");
  b_phi->add_option("--mu", ba.mu)->required();
  b_phi->add_option("--digits", ba.digits)->capture_default_str();
  b_phi->callback([&] {
    auto mu = sc::Partition::parse(ba.mu);
    sc::ReportRow row;
    row.check = "phi";
    row.params = "mu=" + mu.to_string() + " n=" + std::to_string(mu.n());
    row.lhs = sc::ExactValue::of(mu.phi_pow_n());
    row.verdict = "value";
    row.notes.push_back("lhs is the exact n-th power Phi(mu)^n");
    row.notes.push_back("Phi(mu) = " + mu.phi_decimal(ba.digits) +
                        " (truncated)");
    rows.push_back(row);
  });

  auto* b_hook = cmd_bounds->add_subcommand(
      "hook", "character degree d_mu by the hook length formula");
  b_hook->add_option("--mu", ba.mu)->required();
  b_hook->callback([&] {
    auto mu = sc::Partition::parse(ba.mu);
    sc::ReportRow row;
    row.check = "hook";
    row.params = "mu=" + mu.to_string() + " n=" + std::to_string(mu.n());
    row.lhs = sc::ExactValue::of(mu.hook_degree());
    row.verdict = "value";
    rows.push_back(row);
  });

  // ---- poly-check ---------------------------------------------------------
  auto* cmd_poly = app.add_subcommand(
      "poly-check", "test whether a polynomial file is a graded identity");
  std::string poly_file, poly_algebra = "b2";
  cmd_poly->add_option("--file", poly_file, "polynomial description")
      ->required();
  cmd_poly->add_option("--algebra", poly_algebra, "b2, sl2 or file:PATH")
      ->capture_default_str();
  cmd_poly->callback([&] {
    std::ifstream in(poly_file);
    if (!in)
      throw std::runtime_error("cannot open polynomial file '" + poly_file + "'");
    auto poly = sc::parse_poly(in);
    auto alg = resolve_algebra(poly_algebra);
    sc::CodimEngine engine(alg, std::max(ceiling, poly.num_vars()));
    auto verdict = engine.is_graded_identity(poly);
    sc::ReportRow row;
    row.check = "poly-check";
    row.params = "file=" + std::filesystem::path(poly_file).filename().string() +
                 " algebra=" + alg.id() +
                 " vars=" + std::to_string(poly.num_vars()) +
                 " terms=" + std::to_string(poly.term_count());
    row.lhs = sc::ExactValue::of(
        std::string(verdict.is_identity ? "identity" : "non-identity"));
    row.verdict = "pass";
    if (!verdict.is_identity) {
      std::string assign;
      for (std::size_t i = 0; i < verdict.witness.size(); ++i)
        assign += (i ? " " : "") + verdict.witness[i];
      row.notes.push_back("nonzero at (" + assign + ") -> " +
                          verdict.witness_value);
    } else {
      row.notes.push_back("zero on every graded basis assignment");
    }
    rows.push_back(row);
  });

  // ---- cache ----------------------------------------------------------------
  auto* cmd_cache = app.add_subcommand("cache", "inspect or clear the cache");
  cmd_cache->require_subcommand(1);
  auto* cache_inspect = cmd_cache->add_subcommand("inspect", "list records");
  cache_inspect->callback([&] {
    auto path = cache_path(cache_flag);
    auto recs = load_cache_file(path);
    std::sort(recs.begin(), recs.end(),
              [](const sc::CodimRecord& a, const sc::CodimRecord& b) {
                return std::tie(a.algebra_id, a.k, a.l) <
                       std::tie(b.algebra_id, b.k, b.l);
              });
    for (const auto& r : recs) {
      sc::ReportRow row;
      row.check = "cache-record";
      row.params = "algebra=" + r.algebra_id + " k=" + std::to_string(r.k) +
                   " l=" + std::to_string(r.l);
      row.lhs = sc::ExactValue::of(sc::BigInt(static_cast<long>(r.value)));
      row.verdict = "value";
      row.notes.push_back("matrix " + std::to_string(r.n_rows) + "x" +
                          std::to_string(r.n_cols) + " computed " + r.timestamp);
      rows.push_back(row);
    }
    sc::ReportRow row;
    row.check = "cache-inspect";
    row.params = "records=" + std::to_string(recs.size());
    row.lhs = sc::ExactValue::of(std::string(path));
    row.verdict = "value";
    rows.push_back(row);
  });
  auto* cache_clear = cmd_cache->add_subcommand("clear", "delete the cache file");
  cache_clear->callback([&] {
    auto path = cache_path(cache_flag);
    auto n = load_cache_file(path).size();
    std::filesystem::remove(path);
    sc::ReportRow row;
    row.check = "cache-clear";
    row.params = "records=" + std::to_string(n);
    row.lhs = sc::ExactValue::of(std::string(path));
    row.verdict = "pass";
    rows.push_back(row);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const sc::ResourceCeilingError& e) {
    std::cerr << "ceiling exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "csv")
    std::cout << sc::to_csv(rows);
  else if (format == "json")
    std::cout << sc::to_json(rows);
  else
    std::cout << sc::to_text(rows);

  return sc::all_pass(rows) ? 0 : 1;
}
