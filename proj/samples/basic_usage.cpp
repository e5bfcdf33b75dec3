// Library walk-through: build a field, pick a non-square a, construct a
// permutation with only 1- and 3-cycles, and check it by walking the
// projective line.

#include <redei/redei.hpp>
#include <redei/structure.hpp>

#include <iostream>

using namespace redei;

int main() {
  // F_125 with the deterministic default modulus.
  const FieldSpec fs = FieldSpec::make(5, 3);
  std::cout << "field: q = " << fs.q() << ", modulus = " << format_element(fs.modulus()) << "\n";

  // A non-square a gives chi(a) = -1, so the permutation group order is q + 1.
  Element a = fs.from_index(1);
  while (fs.quadratic_character(a) != -1) a = fs.from_index(fs.index_of(a) + 1);
  std::cout << "a = " << format_element(a) << " (chi = -1)\n";

  // All exponents whose Redei permutation has only 1- and 3-cycles, grouped
  // by d = gcd(n-1, q+1).
  const TableReport table = build_table(fs.q(), -1, 3);
  std::cout << "permutations with only 1- and 3-cycles: " << table.total_M << "\n";
  for (const ConstructionRow& row : table.rows) {
    std::cout << "  d = " << row.d << ": n in {";
    for (std::size_t i = 0; i < row.n_values.size(); ++i)
      std::cout << (i ? ", " : "") << row.n_values[i];
    std::cout << "}, " << row.fixed_points << " fixed points, " << row.j_cycles
              << " three-cycles\n";
  }

  // Verify one of them the hard way: walk every point of P^1(F_125).
  const RedeiSpec rs = make_redei(fs, a, table.rows.front().n_values.front());
  const CycleStructure walked = empirical_cycles(rs);
  const CycleStructure predicted = theoretical_cycles(rs);
  std::cout << "walked == predicted: " << (walked == predicted ? "yes" : "no") << "\n";
  return walked == predicted ? 0 : 1;
}
