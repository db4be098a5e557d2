// Classifies a few small rings and prints the certificate of one element.

#include <iostream>

#include "ringlab/ringlab.hpp"

int main() {
  using namespace ringlab;

  for (const char* expr : {"Z6", "Z9", "Z15", "T(2,Z2)", "T(2,Z3)", "M(2,Z2)"}) {
    const RingPtr r = eval_ring_expr(expr);
    const PropertyReport report = classify_ring(r);
    std::cout << expr << ": weakly J-quasipolar " << std::boolalpha
              << report.verdict("weakly_j_quasipolar") << ", J-quasipolar "
              << report.verdict("j_quasipolar") << "\n";
  }

  const RingPtr t2 = eval_ring_expr("T(2,Z4)");
  const Element a = parse_element("[[1,1],[0,2]]", *t2);
  if (auto cert = weakly_jqp_element(a))
    std::cout << a.str() << (cert->sign > 0 ? " + " : " - ") << cert->idempotent.str() << " = "
              << cert->witness.str() << " lies in J\n";

  const FastPathVerdict fast = t2_fast_classify(*t2, a.index());
  std::cout << "closed form: " << fast.case_tag << " -> " << std::boolalpha << *fast.verdict
            << "\n";
}
