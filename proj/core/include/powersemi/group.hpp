// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Groups that live inside finite semigroups: maximal subgroups at
// idempotents, subgroup lattices by closure, derived series, normality and
// the searches for non-normal subgroups and quaternion subgroups.

#ifndef POWERSEMI_GROUP_HPP_
#define POWERSEMI_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "powersemi/semigroup.hpp"

namespace powersemi {

  //! A group given by its table.  `to_parent` embeds the group into the
  //! semigroup it was extracted from (the identity map when built directly).
  class FiniteGroup {
   public:
    // Throws NotAGroup.
    explicit FiniteGroup(FiniteSemigroup table);
    FiniteGroup(FiniteSemigroup table, std::vector<Elem> to_parent);

    [[nodiscard]] std::size_t size() const noexcept {
      return table_.size();
    }
    [[nodiscard]] Elem identity() const noexcept {
      return identity_;
    }
    [[nodiscard]] Elem inverse(Elem g) const {
      return inverses_[g];
    }
    [[nodiscard]] Elem product(Elem a, Elem b) const noexcept {
      return table_.product(a, b);
    }
    [[nodiscard]] FiniteSemigroup const& semigroup() const noexcept {
      return table_;
    }
    [[nodiscard]] std::vector<Elem> const& to_parent() const noexcept {
      return to_parent_;
    }

   private:
    FiniteSemigroup   table_;
    Elem              identity_;
    std::vector<Elem> inverses_;
    std::vector<Elem> to_parent_;
  };

  //! A subgroup of a FiniteGroup, stored as its sorted member list.
  //!
  //! Subgroups compare by (size, member list); this is the canonical order
  //! used for all witness selection.
  class Subgroup {
   public:
    Subgroup(std::size_t group_size, std::vector<Elem> members);

    [[nodiscard]] std::size_t size() const noexcept {
      return members_.size();
    }
    [[nodiscard]] bool contains(Elem g) const {
      return in_[g];
    }
    [[nodiscard]] std::vector<Elem> const& members() const noexcept {
      return members_;
    }

    bool operator==(Subgroup const& that) const {
      return members_ == that.members_;
    }
    std::strong_ordering operator<=>(Subgroup const& that) const;

   private:
    std::vector<Elem> members_;
    std::vector<bool> in_;
  };

  [[nodiscard]] Subgroup subgroup_closure(FiniteGroup const&    G,
                                          std::span<Elem const> gens);

  [[nodiscard]] Subgroup trivial_subgroup(FiniteGroup const& G);
  [[nodiscard]] Subgroup whole_group(FiniteGroup const& G);

  // Throws NotASubgroup.
  [[nodiscard]] Subgroup make_subgroup(FiniteGroup const&    G,
                                       std::span<Elem const> members);

  //! H as a group in its own right; `to_parent` points into G's parent.
  [[nodiscard]] FiniteGroup as_group(FiniteGroup const& G, Subgroup const& H);

  //! The group of units of the local monoid eSe.  Throws NotIdempotent.
  [[nodiscard]] FiniteGroup maximal_subgroup_at(FiniteSemigroup const& S,
                                                Elem                   e);

  //! All subgroups in canonical order.
  [[nodiscard]] std::vector<Subgroup> enumerate_subgroups(FiniteGroup const& G);

  [[nodiscard]] bool is_abelian(FiniteGroup const& G);

  //! Subgroup generated by the commutators of elements of H.
  [[nodiscard]] Subgroup derived_subgroup(FiniteGroup const& G,
                                          Subgroup const&    H);
  [[nodiscard]] Subgroup derived_subgroup(FiniteGroup const& G);

  //! G = G^(0) > G^(1) > ... > G^(k), strictly descending; G^(k) is the
  //! term at which the series stabilises.
  [[nodiscard]] std::vector<Subgroup> derived_series(FiniteGroup const& G);

  [[nodiscard]] bool is_solvable(FiniteGroup const& G);

  // Throws NotASubgroup if H does not fit G.
  [[nodiscard]] bool is_normal(FiniteGroup const& G, Subgroup const& H);
  [[nodiscard]] bool is_dedekind(FiniteGroup const& G);

  //! g^-1 H g as a member list.
  [[nodiscard]] std::vector<Elem>
  conjugate(FiniteGroup const& G, Subgroup const& H, Elem g);

  struct NonNormalWitness {
    Subgroup subgroup;
    Elem     conjugator;
  };

  //! First (H, g) with g^-1 H g != H, subgroups in canonical order and
  //! conjugators by index.
  [[nodiscard]] std::optional<NonNormalWitness>
  find_non_normal_witness(FiniteGroup const& G);

  struct QuaternionWitness {
    Subgroup subgroup;
    // isomorphism[q] is the element of G matching element q of the
    // built-in quaternion group.
    std::vector<Elem> isomorphism;
  };

  [[nodiscard]] std::optional<QuaternionWitness>
  find_quaternion_subgroup(FiniteGroup const& G);

}  // namespace powersemi

#endif  // POWERSEMI_GROUP_HPP_
