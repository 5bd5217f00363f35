#pragma once

// The forward map n -> n/2 | 3n+1, its inverse successor relation, residue
// classification and the odd * 2^d decomposition.
//
// Every operation exists for the default checked 128-bit Value and, under
// collatz::big, for arbitrary-precision BigValue. Both are instantiated from
// the same templates in collatz::detail.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/errors.hpp"
#include "collatz/value.hpp"

namespace collatz {

inline constexpr std::uint64_t kDefaultStepCap = 100'000;

enum class ResidueClass {
  Odd,          // n = 1 (mod 2)
  BranchEven,   // n > 4, n = 4 (mod 6)
  EvenMod2Of6,  // n = 2 (mod 6)
  EvenMod0Of6,  // n = 0 (mod 6)
  FourSpecial,  // n = 4: congruent to 4 mod 6 but not a branch value
};

std::string_view to_string(ResidueClass c);

template <class T>
struct BasicDecomposition {
  T odd_part;
  std::uint64_t depth;

  friend bool operator==(const BasicDecomposition&, const BasicDecomposition&) = default;
};

// Inverse successors of a vertex: the doubling child always exists, the
// branch child (n-1)/3 only for branch values.
template <class T>
struct BasicSuccessors {
  T doubling;
  std::optional<T> branch;

  std::size_t size() const { return branch ? 2 : 1; }
  bool contains(const T& v) const { return doubling == v || (branch && *branch == v); }
  std::vector<T> to_vector() const {
    std::vector<T> out{doubling};
    if (branch) out.push_back(*branch);
    return out;
  }
};

// Orbit of `start` under the forward map, stopped at the first arrival at 1.
template <class T>
struct BasicTrajectory {
  T start;
  std::uint64_t steps = 0;
  T peak;
  std::vector<bool> parity_word;  // true where the odd branch 3n+1 was taken

  // Re-expands the orbit start, ..., 1 from the parity word.
  std::vector<T> orbit() const {
    std::vector<T> out{start};
    out.reserve(parity_word.size() + 1);
    T x = start;
    for (bool odd : parity_word) {
      x = odd ? T(3 * x + 1) : T(x / 2);
      out.push_back(x);
    }
    return out;
  }
};

using Decomposition = BasicDecomposition<Value>;
using Successors = BasicSuccessors<Value>;
using Trajectory = BasicTrajectory<Value>;

namespace detail {

template <class T>
struct Arith;

template <>
struct Arith<Value> {
  static Value mul(Value a, Value b, const char* what) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string("overflow in ") + what);
    return r;
  }
  static Value add(Value a, Value b, const char* what) {
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string("overflow in ") + what);
    return r;
  }
  static Value shl(Value v, std::uint64_t d, const char* what) {
    if (d == 0) return v;
    if (d >= 128 || (v >> (128 - d)) != 0) throw OverflowError(std::string("overflow in ") + what);
    return v << d;
  }
  static std::uint64_t ctz(Value v) {
    const auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return static_cast<std::uint64_t>(__builtin_ctzll(lo));
    return 64 + static_cast<std::uint64_t>(__builtin_ctzll(static_cast<std::uint64_t>(v >> 64)));
  }
  static std::string str(Value v) { return to_string(v); }
};

template <>
struct Arith<BigValue> {
  static BigValue mul(const BigValue& a, const BigValue& b, const char*) { return a * b; }
  static BigValue add(const BigValue& a, const BigValue& b, const char*) { return a + b; }
  static BigValue shl(const BigValue& v, std::uint64_t d, const char*) {
    return v << static_cast<unsigned>(d);
  }
  static std::uint64_t ctz(const BigValue& v) { return boost::multiprecision::lsb(v); }
  static std::string str(const BigValue& v) { return v.str(); }
};

template <class T>
void require_positive(const T& n, const char* op) {
  if (n < 1) throw std::domain_error(std::string(op) + ": argument must be >= 1");
}

template <class T>
bool is_odd(const T& n) {
  return (n & 1) != 0;
}

template <class T>
bool is_branch_value(const T& n) {
  require_positive(n, "is_branch_value");
  return n > 4 && n % 6 == 4;
}

template <class T>
T forward_step(const T& n) {
  require_positive(n, "forward_step");
  if (!is_odd(n)) return T(n / 2);
  return Arith<T>::add(Arith<T>::mul(T(3), n, "3n+1"), T(1), "3n+1");
}

template <class T>
BasicSuccessors<T> inverse_successors(const T& n) {
  require_positive(n, "inverse_successors");
  BasicSuccessors<T> out{Arith<T>::mul(T(2), n, "2n"), std::nullopt};
  if (is_branch_value(n)) out.branch = T((n - 1) / 3);
  return out;
}

template <class T>
ResidueClass residue_class(const T& n) {
  require_positive(n, "residue_class");
  if (is_odd(n)) return ResidueClass::Odd;
  const int r = static_cast<int>(T(n % 6));
  if (r == 4) return n == 4 ? ResidueClass::FourSpecial : ResidueClass::BranchEven;
  return r == 2 ? ResidueClass::EvenMod2Of6 : ResidueClass::EvenMod0Of6;
}

template <class T>
BasicDecomposition<T> decompose(const T& n) {
  require_positive(n, "decompose");
  const std::uint64_t d = Arith<T>::ctz(n);
  return {T(n >> static_cast<unsigned>(d)), d};
}

template <class T>
T compose(const T& odd_part, std::uint64_t depth) {
  require_positive(odd_part, "compose");
  if (!is_odd(odd_part)) throw std::domain_error("compose: odd part must be odd");
  return Arith<T>::shl(odd_part, depth, "o*2^d");
}

template <class T>
T branch_parent(const T& y) {
  if (!is_branch_value(y)) {
    throw std::domain_error("branch_parent: " + Arith<T>::str(y) + " is not a branch value");
  }
  return T((y - 1) / 3);
}

template <class T>
BasicTrajectory<T> trajectory(const T& n, std::uint64_t step_cap) {
  require_positive(n, "trajectory");
  if (step_cap < 1) throw std::domain_error("trajectory: step cap must be >= 1");
  BasicTrajectory<T> rec{n, 0, n, {}};
  T x = n;
  while (x != 1) {
    if (rec.steps == step_cap) throw NonConvergenceError(Arith<T>::str(n), step_cap);
    const bool odd = is_odd(x);
    x = forward_step(x);
    rec.parity_word.push_back(odd);
    ++rec.steps;
    if (x > rec.peak) rec.peak = x;
  }
  return rec;
}

}  // namespace detail

Value forward_step(Value n);
Successors inverse_successors(Value n);
bool is_branch_value(Value n);
ResidueClass residue_class(Value n);
Decomposition decompose(Value n);
Value compose(Value odd_part, std::uint64_t depth);
Value branch_parent(Value y);
Trajectory trajectory(Value n, std::uint64_t step_cap = kDefaultStepCap);

namespace big {

using Decomposition = BasicDecomposition<BigValue>;
using Successors = BasicSuccessors<BigValue>;
using Trajectory = BasicTrajectory<BigValue>;

inline BigValue forward_step(const BigValue& n) { return detail::forward_step(n); }
inline Successors inverse_successors(const BigValue& n) { return detail::inverse_successors(n); }
inline bool is_branch_value(const BigValue& n) { return detail::is_branch_value(n); }
inline ResidueClass residue_class(const BigValue& n) { return detail::residue_class(n); }
inline Decomposition decompose(const BigValue& n) { return detail::decompose(n); }
inline BigValue compose(const BigValue& o, std::uint64_t d) { return detail::compose(o, d); }
inline BigValue branch_parent(const BigValue& y) { return detail::branch_parent(y); }
inline Trajectory trajectory(const BigValue& n, std::uint64_t step_cap = kDefaultStepCap) {
  return detail::trajectory(n, step_cap);
}

}  // namespace big

}  // namespace collatz
