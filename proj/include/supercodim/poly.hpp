#pragma once

// Free multilinear graded bracket polynomials.
//
// A monomial is a full binary bracket tree over declared variables, stored
// as its preorder serialization: entries >= 0 are leaves (variable ids),
// -1 marks an internal node. Terms live in an ordered map keyed by that
// serialization, so polynomial identity is structural and deterministic.
//
// Every polynomial here is multilinear in the strict sense: each term uses
// every declared variable exactly once. add_term enforces this.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "superalgebra.hpp"

namespace supercodim {

struct ResourceCeilingError : std::runtime_error {
  explicit ResourceCeilingError(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct VarDecl {
  std::string name;
  Parity parity;
};

inline bool operator==(const VarDecl& a, const VarDecl& b) {
  return a.name == b.name && a.parity == b.parity;
}

using Context = std::vector<VarDecl>;
using Mono = std::vector<std::int32_t>;

namespace mono {

inline Mono leaf(std::int32_t var) { return {var}; }

inline Mono node(const Mono& l, const Mono& r) {
  Mono m;
  m.reserve(1 + l.size() + r.size());
  m.push_back(-1);
  m.insert(m.end(), l.begin(), l.end());
  m.insert(m.end(), r.begin(), r.end());
  return m;
}

// ((...(u1, u2), u3), ..., un) -- the left-normed product of the units.
inline Mono left_comb(const std::vector<Mono>& units) {
  if (units.empty()) throw std::invalid_argument("empty product");
  Mono m = units[0];
  for (std::size_t i = 1; i < units.size(); ++i) m = node(m, units[i]);
  return m;
}

inline Mono left_comb_vars(const std::vector<std::int32_t>& vars) {
  std::vector<Mono> units;
  units.reserve(vars.size());
  for (auto v : vars) units.push_back(leaf(v));
  return left_comb(units);
}

// One past the end of the subtree starting at pos.
inline std::size_t subtree_end(const Mono& m, std::size_t pos) {
  std::size_t need = 1, i = pos;
  while (need > 0) {
    if (i >= m.size()) throw std::invalid_argument("truncated monomial");
    if (m[i] == -1)
      ++need;  // consumes one slot, opens two
    else
      --need;
    ++i;
  }
  return i;
}

inline bool is_valid(const Mono& m) {
  if (m.empty()) return false;
  for (auto v : m)
    if (v < -1) return false;
  try {
    return subtree_end(m, 0) == m.size();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace mono

class BracketPoly {
 public:
  explicit BracketPoly(Context vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i].name == vars_[j].name)
          throw std::invalid_argument("duplicate variable name '" +
                                      vars_[i].name + "'");
  }

  const Context& context() const { return vars_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::map<Mono, BigRat>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < num_vars(); ++i)
      if (vars_[i].name == name) return i;
    throw std::invalid_argument("no variable named '" + name + "'");
  }

  Parity var_parity(int id) const { return vars_.at(id).parity; }

  void add_term(const Mono& m, const BigRat& coeff) {
    validate_mono(m);
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static BracketPoly monomial(Context vars, const Mono& m,
                              const BigRat& coeff = BigRat(1)) {
    BracketPoly p(std::move(vars));
    p.add_term(m, coeff);
    return p;
  }

  BracketPoly operator-() const {
    BracketPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend BracketPoly operator+(const BracketPoly& p, const BracketPoly& q) {
    if (p.vars_ != q.vars_)
      throw std::invalid_argument("polynomials over different contexts");
    BracketPoly out = p;
    for (const auto& [m, c] : q.terms_) out.add_term(m, c);
    return out;
  }
  friend BracketPoly operator-(const BracketPoly& p, const BracketPoly& q) {
    return p + (-q);
  }
  friend BracketPoly operator*(const BigRat& s, const BracketPoly& p) {
    BracketPoly out(p.vars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }

  friend bool operator==(const BracketPoly& p, const BracketPoly& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }

  // Sum over all permutations of the given variables, signed by the
  // permutation for alternate(). The variables must share one parity.
  BracketPoly alternate(const std::vector<int>& ids) const {
    return permutation_sum(ids, /*signed_sum=*/true);
  }
  BracketPoly symmetrize(const std::vector<int>& ids) const {
    return permutation_sum(ids, /*signed_sum=*/false);
  }
  BracketPoly alternate_names(const std::vector<std::string>& names) const {
    return alternate(resolve(names));
  }
  BracketPoly symmetrize_names(const std::vector<std::string>& names) const {
    return symmetrize(resolve(names));
  }

  // Substitution of a whole polynomial for one variable. The resulting
  // context drops `var` and appends the entire context of `sub`; name
  // clashes are rejected.
  BracketPoly substitute(int var, const BracketPoly& sub) const {
    if (var < 0 || var >= num_vars())
      throw std::invalid_argument("substitute: no such variable");
    Parity total = Parity::even;
    for (const auto& v : sub.vars_) total = total + v.parity;
    if (total != vars_[var].parity)
      throw std::invalid_argument(
          "substitute: replacement has total parity different from '" +
          vars_[var].name + "'");
    Context ctx;
    for (int i = 0; i < num_vars(); ++i)
      if (i != var) ctx.push_back(vars_[i]);
    const int base = static_cast<int>(ctx.size());
    for (const auto& v : sub.vars_) ctx.push_back(v);

    auto remap = [&](std::int32_t id) -> std::int32_t {
      return id < var ? id : id - 1;
    };
    BracketPoly out{ctx};
    for (const auto& [tm, tc] : terms_) {
      for (const auto& [sm, sc] : sub.terms_) {
        Mono m;
        m.reserve(tm.size() + sm.size() - 1);
        for (auto entry : tm) {
          if (entry == var) {
            for (auto s : sm)
              m.push_back(s == -1 ? -1 : static_cast<std::int32_t>(s + base));
          } else if (entry == -1) {
            m.push_back(-1);
          } else {
            m.push_back(remap(entry));
          }
        }
        out.add_term(m, tc * sc);
      }
    }
    return out;
  }

  // Right-multiplication by fresh variables: each term t becomes
  // (...((t, v1), v2)..., vn) in the extended context.
  BracketPoly append_vars(const std::vector<VarDecl>& extra) const {
    Context ctx = vars_;
    const int base = num_vars();
    for (const auto& v : extra) ctx.push_back(v);
    BracketPoly out{ctx};
    for (const auto& [m, c] : terms_) {
      std::vector<Mono> units = {m};
      for (std::size_t i = 0; i < extra.size(); ++i)
        units.push_back(mono::leaf(base + static_cast<std::int32_t>(i)));
      out.add_term(mono::left_comb(units), c);
    }
    return out;
  }

  SuperElement evaluate(const std::vector<SuperElement>& assignment) const {
    if (assignment.size() != vars_.size())
      throw std::invalid_argument("assignment length mismatch");
    if (assignment.empty())
      throw std::invalid_argument("cannot evaluate with an empty assignment");
    const StructureSuperalgebra* alg = assignment[0].algebra();
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i].algebra() != alg)
        throw std::invalid_argument("assignment mixes algebras");
      auto p = assignment[i].parity();
      if (!p.has_value())
        throw std::invalid_argument("assignment to '" + vars_[i].name +
                                    "' is not parity-homogeneous");
      if (!assignment[i].is_zero() && *p != vars_[i].parity)
        throw std::invalid_argument("assignment to '" + vars_[i].name +
                                    "' has the wrong parity");
    }
    SuperElement acc = alg->zero();
    for (const auto& [m, c] : terms_) {
      std::size_t pos = 0;
      acc = acc + c * eval_subtree(m, pos, assignment);
    }
    return acc;
  }

  // Rewrites every term into a combination of left-normed monomials using
  //   (X,(Y,Z)) -> ((X,Y),Z) - (-1)^{|Y||Z|} ((X,Z),Y),
  // applied at the outermost-leftmost site until none remains.
  BracketPoly to_left_normed() const {
    BracketPoly out(vars_);
    std::vector<std::pair<Mono, BigRat>> work(terms_.begin(), terms_.end());
    while (!work.empty()) {
      auto [m, c] = std::move(work.back());
      work.pop_back();
      auto site = rewrite_site(m);
      if (!site.has_value()) {
        out.add_term(m, c);
        continue;
      }
      const std::size_t pos = *site;
      const std::size_t xs = pos + 1, xe = mono::subtree_end(m, xs);
      const std::size_t ys = xe + 1, ye = mono::subtree_end(m, ys);
      const std::size_t zs = ye, ze = mono::subtree_end(m, zs);
      Mono head(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pos));
      Mono tail(m.begin() + static_cast<std::ptrdiff_t>(ze), m.end());
      auto assemble = [&](std::size_t a0, std::size_t a1, std::size_t b0,
                          std::size_t b1) {
        Mono t = head;
        t.push_back(-1);
        t.push_back(-1);
        t.insert(t.end(), m.begin() + static_cast<std::ptrdiff_t>(xs),
                 m.begin() + static_cast<std::ptrdiff_t>(xe));
        t.insert(t.end(), m.begin() + static_cast<std::ptrdiff_t>(a0),
                 m.begin() + static_cast<std::ptrdiff_t>(a1));
        t.insert(t.end(), m.begin() + static_cast<std::ptrdiff_t>(b0),
                 m.begin() + static_cast<std::ptrdiff_t>(b1));
        t.insert(t.end(), tail.begin(), tail.end());
        return t;
      };
      work.emplace_back(assemble(ys, ye, zs, ze), c);
      bool both_odd = span_parity(m, ys, ye) == Parity::odd &&
                      span_parity(m, zs, ze) == Parity::odd;
      work.emplace_back(assemble(zs, ze, ys, ye),
                        both_odd ? c : -c);
    }
    return out;
  }

  bool is_left_normed() const {
    for (const auto& [m, c] : terms_)
      if (rewrite_site(m).has_value()) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      bool neg = c.sign() < 0;
      BigRat mag = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != BigRat(1)) out += mag.to_string() + "*";
      std::size_t pos = 0;
      out += mono_string(m, pos);
    }
    return out;
  }

  std::string mono_to_string(const Mono& m) const {
    std::size_t pos = 0;
    return mono_string(m, pos);
  }

 private:
  std::vector<int> resolve(const std::vector<std::string>& names) const {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto& n : names) ids.push_back(index_of(n));
    return ids;
  }

  void validate_mono(const Mono& m) const {
    if (!mono::is_valid(m)) throw std::invalid_argument("malformed monomial");
    std::vector<int> count(vars_.size(), 0);
    for (auto v : m) {
      if (v == -1) continue;
      if (v < 0 || v >= static_cast<std::int32_t>(vars_.size()))
        throw std::invalid_argument("monomial uses an undeclared variable");
      ++count[static_cast<std::size_t>(v)];
    }
    for (std::size_t i = 0; i < count.size(); ++i)
      if (count[i] != 1)
        throw std::invalid_argument(
            "monomial is not multilinear: variable '" + vars_[i].name +
            "' occurs " + std::to_string(count[i]) + " times");
  }

  BracketPoly permutation_sum(const std::vector<int>& ids,
                              bool signed_sum) const {
    if (ids.empty())
      throw std::invalid_argument("empty variable set for operator");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] < 0 || ids[i] >= num_vars())
        throw std::invalid_argument("operator set has an unknown variable");
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (ids[i] == ids[j])
          throw std::invalid_argument("operator set repeats a variable");
      if (vars_[ids[i]].parity != vars_[ids[0]].parity)
        throw std::invalid_argument(
            "operator set mixes parities: '" + vars_[ids[0]].name +
            "' and '" + vars_[ids[i]].name + "'");
    }
    const std::size_t s = ids.size();
    std::vector<std::size_t> perm(s);
    for (std::size_t i = 0; i < s; ++i) perm[i] = i;
    BracketPoly out(vars_);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
          if (perm[i] > perm[j]) ++inversions;
      BigRat sign((signed_sum && inversions % 2) ? -1 : 1);
      // relabel: variable ids[i] becomes ids[perm[i]]
      for (const auto& [m, c] : terms_) {
        Mono t = m;
        for (auto& entry : t) {
          if (entry == -1) continue;
          for (std::size_t i = 0; i < s; ++i)
            if (entry == ids[i]) {
              entry = ids[perm[i]];
              break;
            }
        }
        out.add_term(t, sign * c);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  SuperElement eval_subtree(const Mono& m, std::size_t& pos,
                            const std::vector<SuperElement>& a) const {
    const std::int32_t entry = m[pos++];
    if (entry >= 0) return a[static_cast<std::size_t>(entry)];
    SuperElement l = eval_subtree(m, pos, a);
    SuperElement r = eval_subtree(m, pos, a);
    return bracket(l, r);
  }

  std::optional<std::size_t> rewrite_site(const Mono& m) const {
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
      if (m[pos] != -1) continue;
      std::size_t right = mono::subtree_end(m, pos + 1);
      if (m[right] == -1) return pos;
    }
    return std::nullopt;
  }

  Parity span_parity(const Mono& m, std::size_t from, std::size_t to) const {
    Parity p = Parity::even;
    for (std::size_t i = from; i < to; ++i)
      if (m[i] >= 0) p = p + vars_[static_cast<std::size_t>(m[i])].parity;
    return p;
  }

  // Prints with left spines flattened: ((x1 x2) x3) renders as (x1 x2 x3).
  std::string mono_string(const Mono& m, std::size_t& pos) const {
    const std::int32_t entry = m[pos];
    if (entry >= 0) {
      ++pos;
      return vars_[static_cast<std::size_t>(entry)].name;
    }
    std::vector<std::string> units;
    collect_spine(m, pos, units);
    std::string out = "(";
    for (std::size_t i = 0; i < units.size(); ++i)
      out += (i ? " " : "") + units[i];
    return out + ")";
  }

  void collect_spine(const Mono& m, std::size_t& pos,
                     std::vector<std::string>& units) const {
    if (m[pos] >= 0) {
      units.push_back(mono_string(m, pos));
      return;
    }
    ++pos;  // consume the node marker
    collect_spine(m, pos, units);   // left child joins the spine
    units.push_back(mono_string(m, pos));  // right child is one unit
  }

  Context vars_;
  std::map<Mono, BigRat> terms_;
};

// ---------------------------------------------------------------------------
// Text format for polynomial files:
//   vars x1:even x2:even y1:odd
//   1 (x1 x2 y1)
//   -1/2 (x1 (x2 y1))
// '(u1 u2 ... un)' is the left-normed product ((u1,u2),...,un); a bare name
// is a degree-one monomial. '#' starts a comment line.

inline BracketPoly parse_poly(std::istream& is) {
  auto fail = [](int line, const std::string& msg) -> void {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
  };

  std::optional<BracketPoly> poly;
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    // Tokenize, treating parens as standalone tokens.
    std::string spaced;
    for (char ch : raw) {
      if (ch == '(' || ch == ')') {
        spaced += ' ';
        spaced += ch;
        spaced += ' ';
      } else {
        spaced += ch;
      }
    }
    std::istringstream ls(spaced);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (tok[0] == "vars") {
      if (poly.has_value()) fail(lineno, "duplicate vars line");
      Context ctx;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto colon = tok[i].find(':');
        if (colon == std::string::npos)
          fail(lineno, "expected name:parity, got '" + tok[i] + "'");
        std::string name = tok[i].substr(0, colon);
        std::string par = tok[i].substr(colon + 1);
        if (par != "even" && par != "odd")
          fail(lineno, "parity must be 'even' or 'odd', got '" + par + "'");
        ctx.push_back({name, par == "even" ? Parity::even : Parity::odd});
      }
      if (ctx.empty()) fail(lineno, "vars line declares no variables");
      try {
        poly.emplace(ctx);
      } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());
      }
      continue;
    }

    if (!poly.has_value()) fail(lineno, "term before vars line");
    BigRat coeff(0);
    try {
      coeff = BigRat::parse(tok[0]);
    } catch (const std::exception&) {
      fail(lineno, "expected a rational coefficient, got '" + tok[0] + "'");
    }

    std::size_t pos = 1;
    std::function<Mono()> parse_tree = [&]() -> Mono {
      if (pos >= tok.size()) fail(lineno, "unexpected end of term");
      if (tok[pos] == "(") {
        ++pos;
        std::vector<Mono> units;
        while (pos < tok.size() && tok[pos] != ")")
          units.push_back(parse_tree());
        if (pos >= tok.size()) fail(lineno, "missing ')'");
        ++pos;
        if (units.size() < 2)
          fail(lineno, "a product needs at least two factors");
        return mono::left_comb(units);
      }
      if (tok[pos] == ")") fail(lineno, "unexpected ')'");
      int id = -1;
      try {
        id = poly->index_of(tok[pos]);
      } catch (const std::invalid_argument&) {
        fail(lineno, "unknown variable '" + tok[pos] + "'");
      }
      ++pos;
      return mono::leaf(id);
    };

    Mono tree = parse_tree();
    if (pos != tok.size()) fail(lineno, "trailing tokens after term");
    try {
      poly->add_term(tree, coeff);
    } catch (const std::invalid_argument& e) {
      fail(lineno, e.what());
    }
  }
  if (!poly.has_value()) throw std::runtime_error("no vars line found");
  return *poly;
}

}  // namespace supercodim
