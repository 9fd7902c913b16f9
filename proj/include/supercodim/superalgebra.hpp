#pragma once

// Finite-dimensional graded superalgebras presented by structure constants,
// plus the two built-in algebras used throughout: the seven-dimensional
// superalgebra b2 (even part sl2 acting on a four-dimensional odd part)
// and plain sl2.
//
// The super bracket of basis elements is a stored table; verify_axioms
// replays grading, super-anticommutativity and the super Jacobi identity
// over all basis pairs/triples in exact arithmetic.

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace supercodim {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

class StructureSuperalgebra;

class SuperElement {
 public:
  SuperElement(const StructureSuperalgebra* alg, std::vector<BigRat> coords)
      : alg_(alg), coords_(std::move(coords)) {}

  const StructureSuperalgebra* algebra() const { return alg_; }
  const std::vector<BigRat>& coords() const { return coords_; }
  const BigRat& coord(int i) const { return coords_.at(i); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  // Parity of a homogeneous element; nullopt if the element mixes parities.
  // Zero is homogeneous of either parity and reports even by convention.
  std::optional<Parity> parity() const;

  SuperElement operator-() const {
    std::vector<BigRat> c(coords_);
    for (auto& v : c) v = -v;
    return SuperElement(alg_, std::move(c));
  }

  friend SuperElement operator+(const SuperElement& x, const SuperElement& y) {
    if (x.alg_ != y.alg_)
      throw std::invalid_argument("elements of different algebras");
    std::vector<BigRat> c(x.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coords_[i];
    return SuperElement(x.alg_, std::move(c));
  }
  friend SuperElement operator-(const SuperElement& x, const SuperElement& y) {
    return x + (-y);
  }
  friend SuperElement operator*(const BigRat& s, const SuperElement& x) {
    std::vector<BigRat> c(x.coords_);
    for (auto& v : c) v *= s;
    return SuperElement(x.alg_, std::move(c));
  }

  friend bool operator==(const SuperElement& x, const SuperElement& y) {
    return x.alg_ == y.alg_ && x.coords_ == y.coords_;
  }
  friend bool operator!=(const SuperElement& x, const SuperElement& y) {
    return !(x == y);
  }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const SuperElement& x) {
    return os << x.to_string();
  }

 private:
  const StructureSuperalgebra* alg_;
  std::vector<BigRat> coords_;
};

class StructureSuperalgebra {
 public:
  StructureSuperalgebra(std::string id, std::vector<std::string> names,
                        std::vector<Parity> parities)
      : id_(std::move(id)),
        names_(std::move(names)),
        parities_(std::move(parities)) {
    if (names_.size() != parities_.size())
      throw std::invalid_argument("names/parities size mismatch");
    const std::size_t d = names_.size();
    sc_.assign(d * d * d, BigRat(0));
  }

  const std::string& id() const { return id_; }
  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  Parity parity(int i) const { return parities_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Parity>& parities() const { return parities_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("no basis element named '" + name + "'");
  }

  void set_structure_constant(int i, int j, int k, BigRat v) {
    sc_.at(pos(i, j, k)) = std::move(v);
  }
  const BigRat& structure_constant(int i, int j, int k) const {
    return sc_.at(pos(i, j, k));
  }

  SuperElement zero() const {
    return SuperElement(this, std::vector<BigRat>(dim(), BigRat(0)));
  }
  SuperElement basis_element(int i) const {
    std::vector<BigRat> c(dim(), BigRat(0));
    c.at(i) = BigRat(1);
    return SuperElement(this, std::move(c));
  }
  SuperElement element(std::vector<BigRat> coords) const {
    if (static_cast<int>(coords.size()) != dim())
      throw std::invalid_argument("coordinate vector has wrong length");
    return SuperElement(this, std::move(coords));
  }
  SuperElement basis_element(const std::string& name) const {
    return basis_element(index_of(name));
  }

 private:
  std::size_t pos(int i, int j, int k) const {
    const std::size_t d = names_.size();
    return (static_cast<std::size_t>(i) * d + j) * d + k;
  }

  std::string id_;
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<BigRat> sc_;  // sc[i][j][k]: coefficient of basis k in (e_i, e_j)
};

inline std::optional<Parity> SuperElement::parity() const {
  bool even = false, odd = false;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (coords_[i].is_zero()) continue;
    (alg_->parity(i) == Parity::even ? even : odd) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? Parity::odd : Parity::even;
}

inline std::string SuperElement::to_string() const {
  std::string out;
  for (int i = 0; i < alg_->dim(); ++i) {
    const BigRat& c = coords_[i];
    if (c.is_zero()) continue;
    if (!out.empty() && c.sign() > 0) out += "+";
    if (c == BigRat(-1))
      out += "-";
    else if (c != BigRat(1))
      out += c.to_string() + "*";
    out += alg_->name(i);
  }
  return out.empty() ? "0" : out;
}

inline SuperElement bracket(const SuperElement& x, const SuperElement& y) {
  const StructureSuperalgebra* alg = x.algebra();
  if (alg != y.algebra())
    throw std::invalid_argument("bracket of elements of different algebras");
  std::vector<BigRat> out(alg->dim(), BigRat(0));
  for (int i = 0; i < alg->dim(); ++i) {
    if (x.coord(i).is_zero()) continue;
    for (int j = 0; j < alg->dim(); ++j) {
      if (y.coord(j).is_zero()) continue;
      BigRat cij = x.coord(i) * y.coord(j);
      for (int k = 0; k < alg->dim(); ++k) {
        const BigRat& s = alg->structure_constant(i, j, k);
        if (!s.is_zero()) out[k] += cij * s;
      }
    }
  }
  return SuperElement(alg, std::move(out));
}

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomViolation {
  std::string axiom;                   // which law failed, as implemented
  std::vector<std::string> elements;   // basis names involved
  std::string lhs, rhs;                // both sides, exactly
};

struct AxiomReport {
  bool pass = true;
  int pairs_checked = 0;
  int triples_checked = 0;
  std::optional<AxiomViolation> violation;

  std::string to_string() const {
    std::ostringstream os;
    if (pass) {
      os << "axioms hold: grading, super-anticommutativity ("
         << pairs_checked << " basis pairs), super Jacobi ("
         << triples_checked << " basis triples)";
    } else {
      os << "axiom violated: " << violation->axiom << " at (";
      for (std::size_t i = 0; i < violation->elements.size(); ++i)
        os << (i ? "," : "") << violation->elements[i];
      os << "): lhs = " << violation->lhs << ", rhs = " << violation->rhs;
    }
    return os.str();
  }
};

// Checks, over every basis pair and triple:
//   grading                  parity((x,y)) = parity(x) + parity(y)
//   super-anticommutativity  (x,y) + (-1)^{|x||y|} (y,x) = 0
//   super Jacobi             (x,(y,z)) = ((x,y),z) + (-1)^{|x||y|} (y,(x,z))
inline AxiomReport verify_axioms(const StructureSuperalgebra& alg) {
  AxiomReport rep;
  const int d = alg.dim();
  auto sign = [&](int i, int j) {
    return (alg.parity(i) == Parity::odd && alg.parity(j) == Parity::odd)
               ? BigRat(-1)
               : BigRat(1);
  };
  std::vector<SuperElement> e;
  for (int i = 0; i < d; ++i) e.push_back(alg.basis_element(i));

  for (int i = 0; i < d && rep.pass; ++i) {
    for (int j = 0; j < d && rep.pass; ++j) {
      ++rep.pairs_checked;
      SuperElement br = bracket(e[i], e[j]);
      Parity want = alg.parity(i) + alg.parity(j);
      for (int k = 0; k < d; ++k) {
        if (!br.coord(k).is_zero() && alg.parity(k) != want) {
          rep.pass = false;
          rep.violation = {"grading: parity((x,y)) = parity(x)+parity(y)",
                           {alg.name(i), alg.name(j)},
                           br.to_string(),
                           want == Parity::even ? "an even element"
                                                : "an odd element"};
          break;
        }
      }
      if (!rep.pass) break;
      SuperElement anti = br + sign(i, j) * bracket(e[j], e[i]);
      if (!anti.is_zero()) {
        rep.pass = false;
        rep.violation = {"super-anticommutativity: (x,y) + (-1)^{|x||y|}(y,x) = 0",
                         {alg.name(i), alg.name(j)},
                         anti.to_string(), "0"};
      }
    }
  }
  for (int i = 0; i < d && rep.pass; ++i) {
    for (int j = 0; j < d && rep.pass; ++j) {
      for (int k = 0; k < d && rep.pass; ++k) {
        ++rep.triples_checked;
        SuperElement lhs = bracket(e[i], bracket(e[j], e[k]));
        SuperElement rhs = bracket(bracket(e[i], e[j]), e[k]) +
                           sign(i, j) * bracket(e[j], bracket(e[i], e[k]));
        if (lhs != rhs) {
          rep.pass = false;
          rep.violation = {
              "super Jacobi: (x,(y,z)) = ((x,y),z) + (-1)^{|x||y|}(y,(x,z))",
              {alg.name(i), alg.name(j), alg.name(k)},
              lhs.to_string(),
              rhs.to_string()};
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in algebras

namespace detail {

// 4x4 rational matrices, used only while deriving the b2 table.
using Mat4 = std::array<std::array<BigRat, 4>, 4>;

inline Mat4 mat4() {
  Mat4 m;
  for (auto& row : m)
    for (auto& v : row) v = BigRat(0);
  return m;
}

inline Mat4 mul(const Mat4& x, const Mat4& y) {
  Mat4 r = mat4();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (x[i][k].is_zero()) continue;
      for (int j = 0; j < 4; ++j)
        if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

inline Mat4 super_bracket(const Mat4& x, const Mat4& y, Parity px, Parity py) {
  Mat4 xy = mul(x, y), yx = mul(y, x);
  BigRat s = (px == Parity::odd && py == Parity::odd) ? BigRat(1) : BigRat(-1);
  Mat4 r = mat4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = xy[i][j] + s * yx[i][j];
  return r;
}

}  // namespace detail

// b2: matrices ((A, B), (C, -A^t)) in M4 with A in gl2, B symmetric,
// C antisymmetric. Basis: e f h spanning the even part (a copy of sl2),
// s1 s2 s3 the symmetric blocks, d the antisymmetric one. The table is
// derived here from the matrix model, then the model is discarded.
inline StructureSuperalgebra build_b2() {
  using detail::Mat4;
  auto E = detail::mat4();
  E[0][1] = BigRat(1);
  E[3][2] = BigRat(-1);
  auto F = detail::mat4();
  F[1][0] = BigRat(1);
  F[2][3] = BigRat(-1);
  auto H = detail::mat4();
  H[0][0] = BigRat(1);
  H[1][1] = BigRat(-1);
  H[2][2] = BigRat(-1);
  H[3][3] = BigRat(1);
  auto S1 = detail::mat4();
  S1[0][2] = BigRat(1);
  auto S2 = detail::mat4();
  S2[1][3] = BigRat(1);
  auto S3 = detail::mat4();
  S3[0][3] = BigRat(1);
  S3[1][2] = BigRat(1);
  auto D = detail::mat4();
  D[2][1] = BigRat(1);
  D[3][0] = BigRat(-1);

  const std::vector<Mat4> basis = {E, F, H, S1, S2, S3, D};
  const std::vector<Parity> par = {Parity::even, Parity::even, Parity::even,
                                   Parity::odd,  Parity::odd,  Parity::odd,
                                   Parity::odd};

  // Coordinates of a matrix in the model, with full reconstruction check.
  auto coordinatize = [&](const Mat4& m) {
    std::vector<BigRat> c(7, BigRat(0));
    c[0] = m[0][1];
    c[1] = m[1][0];
    c[2] = m[0][0];
    c[3] = m[0][2];
    c[4] = m[1][3];
    c[5] = m[0][3];
    c[6] = m[2][1];
    Mat4 back = detail::mat4();
    for (int t = 0; t < 7; ++t)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) back[i][j] += c[t] * basis[t][i][j];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (back[i][j] != m[i][j])
          throw std::logic_error("matrix does not lie in the b2 model");
    return c;
  };

  StructureSuperalgebra alg("b2", {"e", "f", "h", "s1", "s2", "s3", "d"}, par);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      auto c = coordinatize(
          detail::super_bracket(basis[i], basis[j], par[i], par[j]));
      for (int k = 0; k < 7; ++k)
        if (!c[k].is_zero()) alg.set_structure_constant(i, j, k, c[k]);
    }
  return alg;
}

inline StructureSuperalgebra build_sl2() {
  StructureSuperalgebra alg(
      "sl2", {"e", "f", "h"},
      {Parity::even, Parity::even, Parity::even});
  auto set = [&](int i, int j, int k, long v) {
    alg.set_structure_constant(i, j, k, BigRat(v));
  };
  set(0, 1, 2, 1);   // (e,f) = h
  set(1, 0, 2, -1);
  set(2, 0, 0, 2);   // (h,e) = 2e
  set(0, 2, 0, -2);
  set(2, 1, 1, -2);  // (h,f) = -2f
  set(1, 2, 1, 2);
  return alg;
}

// In b2, the odd elements a, b, c with (a,d)=e, (b,d)=f, (c,d)=h, solved
// from the structure constants as an exact 3x3 linear system over s1,s2,s3.
struct OddGenerators {
  SuperElement a, b, c;
};

inline OddGenerators solve_abc(const StructureSuperalgebra& b2) {
  const int s1 = b2.index_of("s1"), d = b2.index_of("d");
  // column i: coordinates of (s_{1+i}, d) over the even basis e,f,h
  std::array<std::array<BigRat, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m[k][i] = b2.structure_constant(s1 + i, d, k);

  auto solve = [&](std::array<BigRat, 3> rhs) {
    auto a = m;
    for (int col = 0, row = 0; col < 3; ++col, ++row) {
      int piv = row;
      while (piv < 3 && a[piv][col].is_zero()) ++piv;
      if (piv == 3) throw std::logic_error("singular system for a,b,c");
      std::swap(a[piv], a[row]);
      std::swap(rhs[piv], rhs[row]);
      for (int r = 0; r < 3; ++r) {
        if (r == row || a[r][col].is_zero()) continue;
        BigRat f = a[r][col] / a[row][col];
        for (int c2 = 0; c2 < 3; ++c2) a[r][c2] -= f * a[row][c2];
        rhs[r] -= f * rhs[row];
      }
    }
    std::vector<BigRat> coords(7, BigRat(0));
    for (int i = 0; i < 3; ++i) coords[s1 + i] = rhs[i] / a[i][i];
    return b2.element(coords);
  };

  auto unit = [&](int k) {
    std::array<BigRat, 3> r{BigRat(0), BigRat(0), BigRat(0)};
    r[k] = BigRat(1);
    return r;
  };
  return {solve(unit(0)), solve(unit(1)), solve(unit(2))};
}

// ---------------------------------------------------------------------------
// Structure-constant table text format:
//   id <name>
//   names <n0> <n1> ...
//   parities <0|1> ...
//   i j k value        (one nonzero constant per line, 0-based indices)
// Blank lines and lines starting with '#' are ignored.

inline void write_table(const StructureSuperalgebra& alg, std::ostream& os) {
  os << "id " << alg.id() << "\n";
  os << "names";
  for (int i = 0; i < alg.dim(); ++i) os << " " << alg.name(i);
  os << "\nparities";
  for (int i = 0; i < alg.dim(); ++i)
    os << " " << static_cast<int>(alg.parity(i));
  os << "\n";
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) {
        const BigRat& v = alg.structure_constant(i, j, k);
        if (!v.is_zero())
          os << i << " " << j << " " << k << " " << v.to_string() << "\n";
      }
}

inline StructureSuperalgebra read_table(std::istream& is) {
  auto fail = [](int line, const std::string& msg) -> void {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
  };
  std::string id;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<std::array<std::string, 4>> entries;
  std::vector<int> entry_lines;

  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "id") {
      if (!(ls >> id)) fail(lineno, "missing algebra id");
    } else if (head == "names") {
      std::string n;
      while (ls >> n) names.push_back(n);
      if (names.empty()) fail(lineno, "empty names list");
    } else if (head == "parities") {
      int p;
      while (ls >> p) {
        if (p != 0 && p != 1) fail(lineno, "parity must be 0 or 1");
        parities.push_back(static_cast<Parity>(p));
      }
    } else {
      std::array<std::string, 4> e;
      e[0] = head;
      if (!(ls >> e[1] >> e[2] >> e[3]))
        fail(lineno, "expected 'i j k value'");
      std::string extra;
      if (ls >> extra) fail(lineno, "trailing tokens after 'i j k value'");
      entries.push_back(e);
      entry_lines.push_back(lineno);
    }
  }
  if (id.empty()) throw std::runtime_error("missing 'id' header line");
  if (names.empty()) throw std::runtime_error("missing 'names' header line");
  if (names.size() != parities.size())
    throw std::runtime_error("names/parities length mismatch");

  StructureSuperalgebra alg(id, names, parities);
  for (std::size_t t = 0; t < entries.size(); ++t) {
    int line = entry_lines[t];
    int idx[3];
    for (int p = 0; p < 3; ++p) {
      try {
        std::size_t used = 0;
        idx[p] = std::stoi(entries[t][p], &used);
        if (used != entries[t][p].size()) throw std::invalid_argument("");
      } catch (...) {
        fail(line, "bad index '" + entries[t][p] + "'");
      }
      if (idx[p] < 0 || idx[p] >= alg.dim())
        fail(line, "index out of range: " + entries[t][p]);
    }
    try {
      alg.set_structure_constant(idx[0], idx[1], idx[2],
                                 BigRat::parse(entries[t][3]));
    } catch (const std::invalid_argument&) {
      fail(line, "bad rational '" + entries[t][3] + "'");
    }
  }
  return alg;
}

}  // namespace supercodim
