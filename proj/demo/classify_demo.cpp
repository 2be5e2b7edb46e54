// Emits a normal form, hides it behind a random change of basis from the
// group, and recovers the label from the disguised matrix.
#include <iostream>

#include "gorth/gorth.hpp"

int main() {
  using namespace gorth;

  Classification label = parse_label("S:single[s=3,eps=-,a2=4] + T:even[k=0,+] + T:pair[k=1]");
  Triple normal = assemble(label, Rat(2));
  Triple disguised = conjugate(normal, random_group_element(normal, 2024));

  std::cout << "xi after conjugation:\n" << disguised.xi << "\n\n";
  std::cout << "special height: " << special_height(disguised) << "\n";
  std::cout << "classification: " << canonical_string(classify(disguised)) << "\n";
  std::cout << "same orbit as the normal form: " << std::boolalpha << equivalent(normal, disguised) << "\n";
}
