// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Finite semigroups given by their Cayley tables, together with the
// structural recognisers (inverse, Clifford) and the small constructions
// (closures, Rees quotients, adjoined zero and identity, strong semilattices
// of groups) that the rest of the library is built on.

#ifndef POWERSEMI_SEMIGROUP_HPP_
#define POWERSEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powersemi/error.hpp"

namespace powersemi {

  //! A semigroup on the carrier {0, ..., n - 1} with named elements.
  //!
  //! The table is row-major: `product(i, j)` is the index of the product of
  //! element `i` and element `j`.  Construction validates the shape, the
  //! range of every entry, the distinctness of the labels and (unless the
  //! caller vouches for it) all n^3 associativity triples.
  class FiniteSemigroup {
   public:
    enum class Check { eager, trusted };

    FiniteSemigroup(std::string                          name,
                    std::vector<std::string>             labels,
                    std::vector<std::vector<Elem>> const& table,
                    Check                                check = Check::eager);

    FiniteSemigroup(std::string              name,
                    std::vector<std::string> labels,
                    std::vector<Elem>        flat_table,
                    Check                    check = Check::eager);

    [[nodiscard]] std::size_t size() const noexcept {
      return labels_.size();
    }

    [[nodiscard]] Elem product(Elem i, Elem j) const noexcept {
      return table_[i * labels_.size() + j];
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }

    void set_name(std::string name) {
      name_ = std::move(name);
    }

    [[nodiscard]] std::string const& label(Elem i) const {
      return labels_.at(i);
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    [[nodiscard]] std::vector<Elem> const& flat_table() const noexcept {
      return table_;
    }

    [[nodiscard]] std::vector<std::vector<Elem>> table() const;

    [[nodiscard]] std::optional<Elem> index_of(std::string const& label) const;

    // Same carrier size and same table; labels and names are ignored.
    [[nodiscard]] bool same_table(FiniteSemigroup const& that) const noexcept {
      return table_ == that.table_;
    }

   private:
    void validate(Check check) const;

    std::string              name_;
    std::vector<std::string> labels_;
    std::vector<Elem>        table_;
  };

  //! An induced subsemigroup together with its embedding into the parent.
  struct Subsemigroup {
    FiniteSemigroup   semigroup;
    std::vector<Elem> to_parent;
  };

  //! `inv[s]` is the unique inverse of `s`.
  struct InversionMap {
    std::vector<Elem> inv;

    [[nodiscard]] Elem operator()(Elem s) const {
      return inv[s];
    }
  };

  //! An element with no inverse or more than one.
  struct NotInverseWitness {
    Elem        element;
    std::size_t inverse_count;
  };

  [[nodiscard]] std::variant<InversionMap, NotInverseWitness>
  inversion_map(FiniteSemigroup const& S);

  // Throws NotInverse instead of returning the witness.
  [[nodiscard]] InversionMap require_inverse(FiniteSemigroup const& S);

  [[nodiscard]] std::vector<Elem> idempotents(FiniteSemigroup const& S);

  [[nodiscard]] bool is_idempotent(FiniteSemigroup const& S, Elem e) noexcept;

  //! Index and period of the monogenic subsemigroup generated by `s`: the
  //! powers s, s^2, ... run through `index` distinct values before entering
  //! a cycle of length `period`.
  struct PowerProfile {
    std::size_t index;
    std::size_t period;

    auto operator<=>(PowerProfile const&) const = default;
  };

  [[nodiscard]] PowerProfile power_profile(FiniteSemigroup const& S, Elem s);

  //! True iff s^(n+1) = s for some n >= 1.
  [[nodiscard]] bool element_in_subgroup(FiniteSemigroup const& S, Elem s);

  //! The unique idempotent among the powers of `s`.
  [[nodiscard]] Elem idempotent_power(FiniteSemigroup const& S, Elem s);

  struct CliffordCheck {
    bool                clifford;
    std::optional<Elem> witness;  // lowest-index non-group element

    explicit operator bool() const noexcept {
      return clifford;
    }
  };

  // Throws NotInverse when S is not an inverse semigroup.
  [[nodiscard]] CliffordCheck is_clifford(FiniteSemigroup const& S);

  //! A Clifford semigroup as a semilattice Y of groups G_alpha.
  struct CliffordDecomposition {
    // Carrier of the semilattice is the idempotents of S, in index order.
    FiniteSemigroup semilattice;
    // idempotents[alpha] is the idempotent of S behind semilattice point
    // alpha.
    std::vector<Elem> idempotents;
    // phi[s] is the semilattice point of s.
    std::vector<Elem> phi;
    // groups[alpha] is the fibre of alpha, sorted.
    std::vector<std::vector<Elem>> groups;
  };

  // Throws NotClifford (or NotInverse).
  [[nodiscard]] CliffordDecomposition
  clifford_decomposition(FiniteSemigroup const& S);

  //! The subsemigroup induced on `elements`; throws ShapeError if the set is
  //! not closed under the product.
  [[nodiscard]] Subsemigroup subsemigroup(FiniteSemigroup const& S,
                                          std::span<Elem const>  elements);

  //! The smallest subsemigroup containing `generators`.
  [[nodiscard]] std::vector<Elem> semigroup_closure(FiniteSemigroup const& S,
                                                    std::span<Elem const> gens);

  //! The smallest subset containing `gens` closed under product and
  //! inversion.
  [[nodiscard]] Subsemigroup
  generated_inverse_subsemigroup(FiniteSemigroup const& S,
                                 InversionMap const&    inv,
                                 std::span<Elem const>  gens);

  //! Collapses the ideal `ideal` to a single zero, listed last.
  [[nodiscard]] FiniteSemigroup rees_quotient(FiniteSemigroup const& S,
                                              std::span<Elem const>  ideal);

  [[nodiscard]] FiniteSemigroup adjoin_zero(FiniteSemigroup const& S);
  [[nodiscard]] FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  //! Two-sided identity of S, if any.
  [[nodiscard]] std::optional<Elem> identity_element(FiniteSemigroup const& S);

  //! A linking homomorphism from the group at `from` to the group at `to`,
  //! where `to` lies below `from` in the semilattice.
  struct SemilatticeLink {
    Elem              from;
    Elem              to;
    std::vector<Elem> map;
  };

  //! Strong semilattice of groups.  `groups[alpha]` is the group sitting at
  //! point alpha of `semilattice`; `links` must give a homomorphism for every
  //! pair alpha > beta, compatible with composition.  Identity links on the
  //! diagonal are implicit.  Element (alpha, g) is stored at offset
  //! sum_{beta < alpha} |G_beta| + g.
  [[nodiscard]] FiniteSemigroup
  strong_semilattice(FiniteSemigroup const&              semilattice,
                     std::vector<FiniteSemigroup> const& groups,
                     std::vector<SemilatticeLink> const& links,
                     std::string                         name = "");

  [[nodiscard]] FiniteSemigroup direct_product(FiniteSemigroup const& A,
                                               FiniteSemigroup const& B);

  //! Returns `f` with f[a] in B for every a in A, product-preserving and
  //! bijective, or nothing if A and B are not isomorphic.
  [[nodiscard]] std::optional<std::vector<Elem>>
  find_isomorphism(FiniteSemigroup const& A, FiniteSemigroup const& B);

  [[nodiscard]] bool is_isomorphism(FiniteSemigroup const&  A,
                                    FiniteSemigroup const&  B,
                                    std::span<Elem const> f);

}  // namespace powersemi

#endif  // POWERSEMI_SEMIGROUP_HPP_
