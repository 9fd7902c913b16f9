#pragma once

// Graded codimension engine.
//
// The multilinear (k,l) component is spanned by left-normed permutation
// words in k even and l odd variables. Its codimension in the given
// superalgebra equals the rank of the evaluation matrix whose rows are the
// spanning words and whose columns are (basis tuple, output coordinate)
// pairs, over all parity-respecting tuples of basis elements.
//
// Row order (lexicographic permutations), column order (tuple-major, then
// coordinate) and the elimination pivot rule are all fixed, so runs are
// reproducible bit for bit.

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"
#include "sparse_matrix.hpp"
#include "superalgebra.hpp"

namespace supercodim {

enum class SpanningStrategy { full, reduced };

inline std::string strategy_name(SpanningStrategy s) {
  return s == SpanningStrategy::full ? "full" : "reduced";
}

struct CodimRecord {
  std::string algebra_id;
  int k = 0, l = 0;
  std::int64_t value = 0;
  std::int64_t n_rows = 0, n_cols = 0;
  std::string timestamp;  // ISO 8601, UTC
};

inline std::string iso8601_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Context multilinear_context(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1)
    throw std::invalid_argument("need k,l >= 0 with k+l >= 1");
  Context ctx;
  for (int i = 1; i <= k; ++i)
    ctx.push_back({"x" + std::to_string(i), Parity::even});
  for (int i = 1; i <= l; ++i)
    ctx.push_back({"y" + std::to_string(i), Parity::odd});
  return ctx;
}

// full: all (k+l)! left-normed permutation words, lexicographic.
// reduced: the (k+l-1)! words starting with the first variable, which
// span the same space modulo graded identities.
inline std::vector<Mono> spanning_monomials(int k, int l,
                                            SpanningStrategy strategy) {
  const int n = k + l;
  if (n < 1) throw std::invalid_argument("need k+l >= 1");
  std::vector<std::int32_t> perm;
  for (int i = (strategy == SpanningStrategy::reduced ? 1 : 0); i < n; ++i)
    perm.push_back(i);
  std::vector<Mono> out;
  if (perm.empty()) return {mono::leaf(0)};  // reduced, single variable
  do {
    std::vector<std::int32_t> word;
    if (strategy == SpanningStrategy::reduced) word.push_back(0);
    word.insert(word.end(), perm.begin(), perm.end());
    out.push_back(mono::left_comb_vars(word));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

class CodimEngine {
 public:
  explicit CodimEngine(StructureSuperalgebra alg, int max_degree = 7)
      : alg_(std::move(alg)), max_degree_(max_degree) {
    if (max_degree_ < 1)
      throw std::invalid_argument("degree ceiling must be at least 1");
  }

  CodimEngine(const CodimEngine&) = delete;
  CodimEngine& operator=(const CodimEngine&) = delete;

  const StructureSuperalgebra& algebra() const { return alg_; }
  int max_degree() const { return max_degree_; }

  std::vector<int> basis_of_parity(Parity p) const {
    std::vector<int> out;
    for (int i = 0; i < alg_.dim(); ++i)
      if (alg_.parity(i) == p) out.push_back(i);
    return out;
  }

  SparseMat evaluation_matrix(
      int k, int l, SpanningStrategy strategy = SpanningStrategy::full) const {
    check_ceiling(k, l);
    const auto monos = spanning_monomials(k, l, strategy);
    const auto even = basis_of_parity(Parity::even);
    const auto odd = basis_of_parity(Parity::odd);
    const int n = k + l, dim = alg_.dim();

    std::vector<std::vector<int>> options(n);
    for (int i = 0; i < n; ++i) options[i] = (i < k) ? even : odd;
    std::int64_t tuples = 1;
    for (const auto& o : options) tuples *= static_cast<std::int64_t>(o.size());
    SparseMat mat(static_cast<std::int64_t>(monos.size()), tuples * dim);

    // Right-multiplication tables: for basis j, (i, k, c) with c the
    // coefficient of basis k in (e_i, e_j).
    std::vector<std::vector<std::tuple<int, int, BigRat>>> rmul(dim);
    bool integral = true;
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i)
        for (int t = 0; t < dim; ++t) {
          const BigRat& c = alg_.structure_constant(i, j, t);
          if (c.is_zero()) continue;
          rmul[j].emplace_back(i, t, c);
          if (!c.is_integer()) integral = false;
        }

    for (std::size_t r = 0; r < monos.size(); ++r) {
      std::vector<int> word;
      for (auto entry : monos[r])
        if (entry >= 0) word.push_back(entry);

      std::vector<std::size_t> sel(n, 0);
      for (std::int64_t t = 0; t < tuples; ++t) {
        if (integral) {
          std::vector<std::int64_t> val(dim, 0), next(dim);
          val[options[word[0]][sel[word[0]]]] = 1;
          for (int step = 1; step < n; ++step) {
            const int j = options[word[step]][sel[word[step]]];
            std::fill(next.begin(), next.end(), 0);
            for (const auto& [i, kk, c] : rmul[j])
              if (val[i] != 0)
                next[kk] += val[i] * c.numerator().get_si();
            val.swap(next);
          }
          for (int coord = 0; coord < dim; ++coord)
            if (val[coord] != 0)
              mat.set(static_cast<std::int64_t>(r), t * dim + coord,
                      BigRat(static_cast<long>(val[coord])));
        } else {
          std::vector<BigRat> val(dim, BigRat(0)), next(dim, BigRat(0));
          val[options[word[0]][sel[word[0]]]] = BigRat(1);
          for (int step = 1; step < n; ++step) {
            const int j = options[word[step]][sel[word[step]]];
            for (auto& v : next) v = BigRat(0);
            for (const auto& [i, kk, c] : rmul[j])
              if (!val[i].is_zero()) next[kk] += val[i] * c;
            val.swap(next);
          }
          for (int coord = 0; coord < dim; ++coord)
            if (!val[coord].is_zero())
              mat.set(static_cast<std::int64_t>(r), t * dim + coord,
                      val[coord]);
        }
        // advance the tuple odometer, last variable fastest
        int d = n - 1;
        while (d >= 0 && ++sel[d] == options[d].size()) sel[d--] = 0;
      }
    }
    return mat;
  }

  std::int64_t codim(int k, int l,
                     SpanningStrategy strategy = SpanningStrategy::full) {
    check_ceiling(k, l);
    auto key = std::make_tuple(k, l, static_cast<int>(strategy));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.value;
    SparseMat mat = evaluation_matrix(k, l, strategy);
    CodimRecord rec{alg_.id(), k,          l, mat.rank(), mat.rows(),
                    mat.cols(), iso8601_now()};
    cache_.emplace(key, rec);
    return rec.value;
  }

  BigInt total_codim(int n) {
    if (n < 1) throw std::invalid_argument("total codimension needs n >= 1");
    BigInt total = 0;
    for (int k = 0; k <= n; ++k)
      total += binomial(static_cast<unsigned long>(n),
                        static_cast<unsigned long>(k)) *
               BigInt(static_cast<long>(codim(k, n - k)));
    return total;
  }

  // Records computed (or imported) under the full strategy, sorted by (k,l).
  std::vector<CodimRecord> records() const {
    std::vector<CodimRecord> out;
    for (const auto& [key, rec] : cache_)
      if (std::get<2>(key) == static_cast<int>(SpanningStrategy::full))
        out.push_back(rec);
    return out;
  }

  void import_record(const CodimRecord& rec) {
    if (rec.algebra_id != alg_.id())
      throw std::runtime_error("cache record is for algebra '" +
                               rec.algebra_id + "', engine has '" + alg_.id() +
                               "'");
    validate_record(rec);
    cache_[{rec.k, rec.l, static_cast<int>(SpanningStrategy::full)}] = rec;
  }

  struct IdentityVerdict {
    bool is_identity = true;
    std::vector<std::string> witness;
    std::string witness_value;
  };

  // Multilinear graded identity test: evaluate on every parity-respecting
  // tuple of basis elements; the first nonzero value (tuple-lex order) is
  // returned as a witness.
  IdentityVerdict is_graded_identity(const BracketPoly& p) const {
    const int n = p.num_vars();
    std::vector<std::vector<int>> options(n);
    for (int i = 0; i < n; ++i) options[i] = basis_of_parity(p.var_parity(i));
    std::vector<std::size_t> sel(n, 0);
    while (true) {
      std::vector<SuperElement> assign;
      assign.reserve(n);
      for (int i = 0; i < n; ++i)
        assign.push_back(alg_.basis_element(options[i][sel[i]]));
      SuperElement v = p.evaluate(assign);
      if (!v.is_zero()) {
        IdentityVerdict verdict;
        verdict.is_identity = false;
        for (int i = 0; i < n; ++i)
          verdict.witness.push_back(alg_.name(options[i][sel[i]]));
        verdict.witness_value = v.to_string();
        return verdict;
      }
      int d = n - 1;
      while (d >= 0 && ++sel[d] == options[d].size()) sel[d--] = 0;
      if (d < 0) return {};
    }
  }

 private:
  void check_ceiling(int k, int l) const {
    if (k < 0 || l < 0 || k + l < 1)
      throw std::invalid_argument("need k,l >= 0 with k+l >= 1");
    if (k + l > max_degree_)
      throw ResourceCeilingError(
          "total degree " + std::to_string(k + l) +
          " exceeds the configured ceiling " + std::to_string(max_degree_) +
          "; raise it explicitly to proceed");
  }

  void validate_record(const CodimRecord& rec) const {
    if (rec.k < 0 || rec.l < 0 || rec.k + rec.l < 1)
      throw std::runtime_error("cache record has invalid degrees");
    const int n = rec.k + rec.l;
    if (n <= 20 &&
        rec.n_rows != factorial(static_cast<unsigned long>(n)))
      throw std::runtime_error("cache record row count is not (k+l)!");
    std::int64_t even = 0, odd = 0;
    for (int i = 0; i < alg_.dim(); ++i)
      (alg_.parity(i) == Parity::even ? even : odd)++;
    BigInt cols = BigInt(alg_.dim()) * int_pow(BigInt(even), rec.k) *
                  int_pow(BigInt(odd), rec.l);
    if (cols != BigInt(static_cast<long>(rec.n_cols)))
      throw std::runtime_error(
          "cache record column count does not match the algebra");
    if (rec.value < 0 || BigInt(static_cast<long>(rec.value)) >
                             factorial(static_cast<unsigned long>(n)))
      throw std::runtime_error("cache record value exceeds (k+l)!");
    if (rec.value > std::min(rec.n_rows, rec.n_cols))
      throw std::runtime_error("cache record value exceeds matrix rank bound");
    if (rec.timestamp.empty())
      throw std::runtime_error("cache record is missing a timestamp");
  }

  StructureSuperalgebra alg_;
  int max_degree_;
  std::map<std::tuple<int, int, int>, CodimRecord> cache_;
};

// ---------------------------------------------------------------------------
// Cache file: one record per line,
//   algebra_id k l value n_rows n_cols iso8601_timestamp
// Blank lines and '#' comments are allowed.

inline void save_cache(const std::vector<CodimRecord>& recs,
                       std::ostream& os) {
  for (const auto& r : recs)
    os << r.algebra_id << " " << r.k << " " << r.l << " " << r.value << " "
       << r.n_rows << " " << r.n_cols << " " << r.timestamp << "\n";
}

inline std::vector<CodimRecord> load_cache(std::istream& is) {
  auto fail = [](int line, const std::string& msg) -> void {
    throw std::runtime_error("cache line " + std::to_string(line) + ": " +
                             msg);
  };
  std::vector<CodimRecord> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    CodimRecord r;
    if (!(ls >> r.algebra_id)) continue;  // blank
    if (r.algebra_id[0] == '#') continue;
    if (!(ls >> r.k >> r.l >> r.value >> r.n_rows >> r.n_cols >> r.timestamp))
      fail(lineno, "expected 'algebra_id k l value n_rows n_cols timestamp'");
    std::string extra;
    if (ls >> extra) fail(lineno, "trailing tokens");
    if (r.k < 0 || r.l < 0 || r.k + r.l < 1) fail(lineno, "invalid degrees");
    if (r.value < 0) fail(lineno, "negative codimension");
    if (r.n_rows < 1 || r.n_cols < 1) fail(lineno, "invalid matrix shape");
    if (r.value > std::min(r.n_rows, r.n_cols))
      fail(lineno, "value exceeds min(n_rows, n_cols)");
    const int n = r.k + r.l;
    if (n <= 20 && BigInt(static_cast<long>(r.value)) >
                       factorial(static_cast<unsigned long>(n)))
      fail(lineno, "value exceeds (k+l)!");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace supercodim
