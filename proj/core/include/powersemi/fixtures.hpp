// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Built-in semigroups used by tests, the CLI and the verification suite.
// Permutations and partial maps compose left to right: x * y means "first
// x, then y".

#ifndef POWERSEMI_FIXTURES_HPP_
#define POWERSEMI_FIXTURES_HPP_

#include <string>
#include <vector>

#include "powersemi/algebra.hpp"
#include "powersemi/semigroup.hpp"

namespace powersemi::fixtures {

  FiniteSemigroup trivial();
  FiniteSemigroup cyclic(std::size_t n);
  // (), (12), (13), (23), (123), (132)
  FiniteSemigroup symmetric3();
  FiniteSemigroup dihedral4();
  // 1, -1, i, -i, j, -j, k, -k
  FiniteSemigroup quaternion();
  FiniteSemigroup left_zero(std::size_t n);
  // {0, ..., n-1} under min.
  FiniteSemigroup chain(std::size_t n);
  // Partial injections of {1, 2}; label [ab] lists the images of 1 and 2,
  // '-' for undefined.
  FiniteSemigroup symmetric_inverse_monoid2();
  // Z2 above S3 in a 2-chain, linked by 1 -> (12).
  FiniteSemigroup z2_over_s3();
  // Same shape with the trivial link.
  FiniteSemigroup z2_over_s3_trivial_link();

  //! Names accepted by named().
  std::vector<std::string> names();

  //! A built-in algebra by name; b21 and r2 carry their addition and
  //! involution.  Throws InputError for unknown names.
  TableAlgebra named(std::string const& name);

}  // namespace powersemi::fixtures

#endif  // POWERSEMI_FIXTURES_HPP_
