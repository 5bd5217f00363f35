#include "collatz/core_maps.hpp"

namespace collatz {

std::string_view to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::Odd: return "odd";
    case ResidueClass::BranchEven: return "branch_even";
    case ResidueClass::EvenMod2Of6: return "even_mod2_of6";
    case ResidueClass::EvenMod0Of6: return "even_mod0_of6";
    case ResidueClass::FourSpecial: return "four_special";
  }
  return "unknown";
}

Value forward_step(Value n) { return detail::forward_step(n); }
Successors inverse_successors(Value n) { return detail::inverse_successors(n); }
bool is_branch_value(Value n) { return detail::is_branch_value(n); }
ResidueClass residue_class(Value n) { return detail::residue_class(n); }
Decomposition decompose(Value n) { return detail::decompose(n); }
Value compose(Value odd_part, std::uint64_t depth) { return detail::compose(odd_part, depth); }
Value branch_parent(Value y) { return detail::branch_parent(y); }
Trajectory trajectory(Value n, std::uint64_t step_cap) { return detail::trajectory(n, step_cap); }

}  // namespace collatz
