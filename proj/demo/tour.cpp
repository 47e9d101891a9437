// A short tour: rectangles, duals, posets, and the character formula.

#include <iostream>

#include "spehlab/spehlab.hpp"

int main() {
  using namespace spehlab;

  // Rectangles and their duals swap sides.
  const Multisegment r23 = rect(2, 3);
  std::cout << "rect(2,3)            = " << format(r23) << "\n";
  std::cout << "dual of rect(2,3)    = " << format(mwa_dual(r23)) << "\n";
  std::cout << "rect(3,2)            = " << format(rect(3, 2)) << "\n\n";

  // The poset of all multisegments supported on {-1, 0, 1}.
  const PointMultiset pts = parse_points("-1,0,1");
  std::cout << "multisegments on {-1,0,1}:\n";
  for (const Multisegment& m : enumerate_with_support(pts))
    std::cout << "  " << format(m) << "  (m=" << m.maxlength() << ", t=" << m.thickness()
              << ")\n";
  std::cout << "\n";

  // The character formula and its leading term.
  const RingElement f = char_F(2, 2);
  std::cout << "F(2,2)               = " << format(f) << "\n";
  const auto [mono, coeff] = dominant_monomial(f);
  std::cout << "dominant monomial    = " << format(mono) << " (coefficient " << coeff << ")\n";
  std::cout << "degree               = " << degree(f) << "\n\n";

  // The condensation identity at (2,2).
  const VerificationReport rep = dodgson_check(2, 2);
  std::cout << "dodgson at (2,2)     = " << to_string(rep.status) << "\n";
  return rep.passed() ? 0 : 1;
}
