// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Decides whether a finite inverse semigroup S meets the hypotheses under
// which the power semiring (P(S); +, *) and the power involution semigroup
// (P(S); *, ^-1) are known to be nonfinitely based, and builds a
// re-checkable witness for whichever case applies:
//
//   case 1  S is not Clifford: an inverse subsemigroup T maps onto B_2 and
//           the map lifts to P(T) -> P(B_2);
//   case 2  S is Clifford with a non-Dedekind subgroup G: a family B of
//           subsets of G maps onto B_2^1;
//   case 3  S is Clifford, all subgroups Dedekind, one nonabelian: a
//           quaternion subgroup.
//
// Reports never claim that an algebra is finitely based.

#ifndef POWERSEMI_WITNESS_HPP_
#define POWERSEMI_WITNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powersemi/group.hpp"
#include "powersemi/logic.hpp"
#include "powersemi/power.hpp"
#include "powersemi/semigroup.hpp"

namespace powersemi {

  struct WitnessOptions {
    EmptySet      mode        = EmptySet::included;
    std::size_t   max_carrier = PowerAlgebra::default_cap;
    // Largest |T| for which the lift P(T) -> P(B_2) is checked on all pairs.
    std::size_t   exhaustive_base = 10;
    // Largest |B| for which the case 2 family is checked on all pairs.
    std::size_t   exhaustive_family = 4096;
    std::size_t   samples           = 100000;
    std::uint64_t seed              = 0;
  };

  //! One line of the verification log.
  struct Verification {
    std::string what;
    bool        passed;
    std::string detail;
    bool        sampled = false;
    std::size_t checks  = 0;
  };

  struct Case1Witness {
    Elem         element;  // lowest-index element of S in no subgroup
    Subsemigroup T;        // inverse subsemigroup generated by it
    Elem         generator_image;
    // tau[t] is the element of B_2 that element t of T maps to.
    std::vector<Elem>         tau;
    std::vector<Verification> checks;
  };

  struct Case2Witness {
    Elem        idempotent;  // identity of G in S
    FiniteGroup G;           // maximal subgroup; to_parent() points into S
    Subgroup    H;           // non-normal, indices of G
    Elem        g;           // conjugator, index of G
    SubsetCode  E, Hset, left_coset, right_coset, conjugate;
    // J: subsets of G larger than H, in code order.
    std::vector<SubsetCode> J;
    // E, H, g^-1 H, Hg, g^-1 H g followed by J.
    std::vector<SubsetCode> B;
    // classmap[k] is the element of brandt_monoid_b21() B[k] maps to.
    std::vector<Elem>         classmap;
    std::vector<Verification> checks;
  };

  struct Case3Witness {
    Elem              idempotent;
    FiniteGroup       G;
    Subgroup          Q;  // indices of G
    std::vector<Elem> isomorphism;  // quaternion() index -> element of S
    std::vector<Verification> checks;
  };

  enum class TheoremCase { none, case1, case2, case3 };

  struct TheoremVerdict {
    bool        applies = false;
    TheoremCase which   = TheoremCase::none;
    std::string reason;
  };

  //! "theorem applies (nonfinitely based)" or
  //! "theorem hypotheses not met (no conclusion)".
  [[nodiscard]] std::string phrase(TheoremVerdict const& v);
  [[nodiscard]] std::string to_string(TheoremCase c);

  struct SubgroupRow {
    Elem        idempotent;
    std::size_t order;
    bool        abelian;
    bool        solvable;
    bool        dedekind;
  };

  struct VerdictReport {
    std::string                      name;
    std::size_t                      size = 0;
    EmptySet                         mode = EmptySet::included;
    bool                             is_inverse = false;
    std::optional<NotInverseWitness> not_inverse;
    bool                             is_clifford = false;
    std::optional<Elem>              non_group_element;
    std::vector<SubgroupRow>         subgroups;
    TheoremVerdict                   theorem_1_1;
    TheoremVerdict                   theorem_1_2;
    std::optional<Case1Witness>      case1;
    std::optional<Case2Witness>      case2;
    std::optional<Case3Witness>      case3;
    std::vector<Verification>        log;

    //! Every logged verification passed.
    [[nodiscard]] bool verified() const;
  };

  //! Throws CarrierTooLarge when a witness needs a power algebra beyond the
  //! cap, and Inconsistency when a witness that must exist is not found.
  [[nodiscard]] VerdictReport theorem_verdict(FiniteSemigroup const& S,
                                              WitnessOptions const& opts = {});

  //! Precondition: S is inverse and not Clifford.  Throws NoSurjectionFound.
  [[nodiscard]] Case1Witness case1_witness(FiniteSemigroup const& S,
                                           InversionMap const&    inv,
                                           WitnessOptions const&  opts = {});

  //! Precondition: S is Clifford.  `idempotent` picks the maximal subgroup;
  //! default is the first non-Dedekind one.  Throws NoNonDedekindSubgroup.
  [[nodiscard]] Case2Witness case2_witness(FiniteSemigroup const&  S,
                                           std::optional<Elem>     idempotent,
                                           WitnessOptions const&   opts = {});

  //! Precondition: S is Clifford with a nonabelian maximal subgroup, all
  //! Dedekind.  Throws InputError when the first nonabelian maximal
  //! subgroup is not Dedekind, QuaternionNotFound when it has no quaternion
  //! subgroup.
  [[nodiscard]] Case3Witness case3_witness(FiniteSemigroup const& S);

  struct BlockGroupReport {
    bool                      passed;
    std::size_t               subsets;
    std::optional<int>        failed_law;
    std::optional<Assignment> counterexample;
  };

  //! Runs both block-group laws on (P(S); *).  S Clifford, |S| <= 10.
  [[nodiscard]] BlockGroupReport
  verify_prop_block_group(FiniteSemigroup const& S,
                          WitnessOptions const&  opts = {});

  struct SolvabilityRow {
    std::string idempotent;  // the idempotent subset, formatted
    std::size_t order;
    bool        solvable;
  };

  struct SolvabilityReport {
    bool                        passed;
    std::size_t                 subsets;
    std::vector<SolvabilityRow> rows;
  };

  //! Solvability of the maximal subgroup of (P(S); *) at every idempotent
  //! subset.  S Clifford with solvable subgroups, |S| <= 10.
  [[nodiscard]] SolvabilityReport
  verify_prop_solvable_subgroups(FiniteSemigroup const& S,
                                 WitnessOptions const&  opts = {});

  struct SigmaReport {
    HomResult add;
    HomResult mul;
    HomResult star;
    bool      surjective;

    [[nodiscard]] bool passed() const {
      return add.ok && mul.ok && star.ok && surjective;
    }
  };

  //! sigma: P(B_2) -> R_2 against each operation separately.
  [[nodiscard]] SigmaReport verify_corollary_sigma(EmptySet mode
                                                   = EmptySet::included);

}  // namespace powersemi

#endif  // POWERSEMI_WITNESS_HPP_
