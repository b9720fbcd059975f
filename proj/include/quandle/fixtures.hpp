#pragma once

// Built-in fixture data and a small catalog of named instances.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/constructors.hpp"
#include "quandle/io.hpp"
#include "quandle/rack.hpp"

namespace quandle {

// SmallQuandle(12,4) from the RIG list, in the cycle notation it is usually
// printed in. Identical to data/smallquandle-12-4.perm.
inline constexpr std::string_view smallquandle_12_4_perm = R"PERM(# SmallQuandle(12,4): left translations phi_1..phi_12
perm 12
(1)(5,9)(2,4,3)(6,12,7,10,8,11)
(2)(6,10)(1,3,4)(5,11,8,9,7,12)
(3)(7,11)(1,4,2)(5,12,6,9,8,10)
(4)(8,12)(1,2,3)(5,10,7,9,6,11)
(5)(1,9)(6,8,7)(2,12,3,10,4,11)
(6)(2,10)(5,7,8)(1,11,4,9,3,12)
(7)(3,11)(5,8,6)(1,12,2,9,4,10)
(8)(4,12)(5,6,7)(1,10,3,9,2,11)
(9)(1,5)(10,12,11)(2,8,3,6,4,7)
(10)(2,6)(9,11,12)(1,7,4,5,3,8)
(11)(3,7)(9,12,10)(1,8,2,5,4,6)
(12)(4,8)(9,10,11)(1,6,3,5,2,7)
)PERM";

inline RackTable smallquandle_12_4() { return parse_rack(smallquandle_12_4_perm).rack; }

// Resolves "fixture:<name>" input paths.
inline std::optional<std::string_view> builtin_fixture(std::string_view name) {
  if (name == "smallquandle-12-4") return smallquandle_12_4_perm;
  return std::nullopt;
}

struct NamedRack {
  std::string name;
  RackTable rack;
};

// Hand-picked instances covering connected and non-connected, faithful and
// non-faithful, quandles and non-quandle racks.
inline std::vector<NamedRack> standard_catalog() {
  std::vector<NamedRack> cat;
  auto add = [&](std::string name, RackTable r) { cat.push_back({std::move(name), std::move(r)}); };
  add("smallquandle-12-4", smallquandle_12_4());
  for (std::size_t n : {1, 2, 3}) add("trivial-" + std::to_string(n), trivial_quandle(n));
  for (std::size_t n : {3, 4, 5, 6, 7, 9}) add("dihedral-" + std::to_string(n), dihedral_quandle(n));
  for (std::size_t n : {2, 3, 4, 6}) add("cyclic-rack-" + std::to_string(n), cyclic_rack(n));
  add("affine-z5-a2", affine_quandle(AffineSpec::cyclic(5, 2)).rack);
  add("affine-z5-a4", affine_quandle(AffineSpec::cyclic(5, 4)).rack);
  add("affine-z7-a3", affine_quandle(AffineSpec::cyclic(7, 3)).rack);
  add("affine-z7-a2", affine_quandle(AffineSpec::cyclic(7, 2)).rack);
  add("affine-z8-a3", affine_quandle(AffineSpec::cyclic(8, 3)).rack);
  add("affine-z9-a2", affine_quandle(AffineSpec::cyclic(9, 2)).rack);
  add("affine-z2xz2-swap", affine_quandle(AffineSpec::from_generator_images({2, 2}, {{0, 1}, {1, 0}})).rack);
  add("affine-z2xz2-order3", affine_quandle(AffineSpec::from_generator_images({2, 2}, {{0, 1}, {1, 1}})).rack);
  add("affine-z3xz3-neg", affine_quandle(AffineSpec::from_generator_images({3, 3}, {{2, 0}, {0, 2}})).rack);
  add("affine-z3xz3-rot", affine_quandle(AffineSpec::from_generator_images({3, 3}, {{0, 1}, {2, 0}})).rack);
  auto s3 = PermutationGroup::symmetric(3);
  auto s4 = PermutationGroup::symmetric(4);
  auto a4 = PermutationGroup::alternating(4);
  auto s5 = PermutationGroup::symmetric(5);
  add("class-s3-2", conjugacy_class_quandle(s3, Permutation::from_cycles(3, {{0, 1}})).rack);
  add("class-s3-3", conjugacy_class_quandle(s3, Permutation::from_cycles(3, {{0, 1, 2}})).rack);
  add("class-s4-2", conjugacy_class_quandle(s4, Permutation::from_cycles(4, {{0, 1}})).rack);
  add("class-s4-22", conjugacy_class_quandle(s4, Permutation::from_cycles(4, {{0, 1}, {2, 3}})).rack);
  add("class-s4-3", conjugacy_class_quandle(s4, Permutation::from_cycles(4, {{0, 1, 2}})).rack);
  add("class-s4-4", conjugacy_class_quandle(s4, Permutation::from_cycles(4, {{0, 1, 2, 3}})).rack);
  add("class-a4-3", conjugacy_class_quandle(a4, Permutation::from_cycles(4, {{0, 1, 2}})).rack);
  add("class-s5-2", conjugacy_class_quandle(s5, Permutation::from_cycles(5, {{0, 1}})).rack);
  add("class-s5-32", conjugacy_class_quandle(s5, Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}})).rack);
  {
    auto elems = s3.elements();
    auto t = Permutation::from_cycles(3, {{0, 1}});
    add("homog-s3-t", homogeneous_quandle(HomogeneousSpec::from_function(
                          elems, {t}, [&](const Permutation& g) { return conjugate(t, g); })));
  }
  return cat;
}

}  // namespace quandle
