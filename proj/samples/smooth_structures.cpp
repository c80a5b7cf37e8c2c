// Lists, for each PL type of M(k,l) with l fixed, how many of the 28
// smoothings are realized by some M(k',l) and what their invariants are.
//
//   smooth_structures [l] [M|M']

#include <iostream>
#include <string>

#include "ks7/ks7.hpp"

int main(int argc, char** argv) {
  using namespace ks7;
  try {
    const Integer l = argc > 1 ? detail::parse_integer(argv[1]) : Integer(1);
    const Family family = argc > 2 ? parse_family(argv[2]) : Family::Xi;

    const ClassTable pl = enumerate_classes(l, family, Relation::PL);
    const ClassTable diffeo = enumerate_classes(l, family, Relation::Diffeo);
    for (const auto& pc : pl.classes) {
      const BundleParams p{pc.representative, l, family};
      std::cout << to_spec(p) << ": " << count_smooth_structures(p) << " smooth types\n";
      for (const auto& dc : diffeo.classes) {
        const BundleParams q{dc.representative, l, family};
        if (!equivalent(p, q, Relation::PL)) continue;
        const KSInvariants inv = s_closed_form(q);
        std::cout << "    " << to_spec(q) << "  s1=" << inv.s1 << "  s2=" << inv.s2 << "  s3=" << inv.s3 << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
