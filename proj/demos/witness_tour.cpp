// A guided tour: build the superalgebra b(2), check its laws, evaluate the
// witness polynomials that certify non-identities, compute a few exact
// graded codimensions and print the matching lower-bound values.

#include <iostream>

#include <supercodim/bounds.hpp>
#include <supercodim/codim.hpp>
#include <supercodim/poly.hpp>
#include <supercodim/superalgebra.hpp>
#include <supercodim/witness.hpp>

using namespace supercodim;

int main() {
  std::cout << "== the superalgebra ==\n";
  auto b2 = build_b2();
  std::cout << "b(2): dim " << b2.dim() << ", basis";
  for (int i = 0; i < b2.dim(); ++i)
    std::cout << " " << b2.name(i)
              << (b2.parity(i) == Parity::odd ? "(odd)" : "(even)");
  std::cout << "\n" << verify_axioms(b2).to_string() << "\n\n";

  std::cout << "== odd generators ==\n";
  WitnessLab lab;
  std::cout << "a = " << lab.gen_a().to_string()
            << ", b = " << lab.gen_b().to_string()
            << ", c = " << lab.gen_c().to_string()
            << "   (so that ad=e, bd=f, cd=h)\n\n";

  std::cout << "== witness polynomials ==\n";
  auto show = [](const WitnessReport& r) {
    std::cout << r.check << " [" << r.params << "]: computed " << r.computed
              << ", expected " << r.expected << " -> "
              << (r.pass ? "pass" : "FAIL") << "\n";
  };
  show(lab.check_eq1(2));
  show(lab.check_eq3a(2));
  show(lab.check_eq6(1));
  show(lab.check_wprime(1));
  show(lab.check_lemma4(1, 1, 3));

  std::cout << "\nthe word g for t=1 in full:\n  "
            << lab.build_g(1).to_string() << "\n\n";

  std::cout << "== exact graded codimensions ==\n";
  CodimEngine engine(b2);
  for (int n = 1; n <= 4; ++n) {
    std::cout << "c_" << n << " = " << engine.total_codim(n).get_str() << " (";
    for (int k = 0; k <= n; ++k)
      std::cout << (k ? " " : "") << "c(" << k << "," << n - k
                << ")=" << engine.codim(k, n - k);
    std::cout << ")\n";
  }

  std::cout << "\n== lower bound flavor ==\n";
  std::cout << "lemma2 bound at t=k=1: " << lemma2_bound(1, 1).to_string()
            << "\n";
  std::cout << "lemma3 bound at n=13:  " << lemma3_bound(13).to_string()
            << "\n";
  std::cout << "growth base 3+2sqrt3 ~ 6.464101...\n";
  return 0;
}
