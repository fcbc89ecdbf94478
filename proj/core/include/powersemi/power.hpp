// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Power algebras over a finite semigroup S: subsets of S as bit vectors,
// multiplied element-wise, added by union and (when S is inverse) inverted
// element-wise.  Also the fixed algebras R_n (Boolean matrices), B_2 and
// B_2^1 and the map from P(B_2) onto R_2.

#ifndef POWERSEMI_POWER_HPP_
#define POWERSEMI_POWER_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powersemi/algebra.hpp"
#include "powersemi/semigroup.hpp"

namespace powersemi {

  //! A subset of a carrier of at most 32 elements; bit i <=> element i.
  class SubsetCode {
   public:
    constexpr SubsetCode() noexcept = default;
    constexpr explicit SubsetCode(std::uint32_t bits) noexcept : bits_(bits) {}

    static constexpr SubsetCode singleton(Elem e) noexcept {
      return SubsetCode(std::uint32_t{1} << e);
    }
    static SubsetCode of(std::span<Elem const> members);

    [[nodiscard]] constexpr std::uint32_t bits() const noexcept {
      return bits_;
    }
    [[nodiscard]] constexpr bool contains(Elem e) const noexcept {
      return (bits_ >> e) & 1U;
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    [[nodiscard]] std::vector<Elem> members() const;

    constexpr SubsetCode operator|(SubsetCode that) const noexcept {
      return SubsetCode(bits_ | that.bits_);
    }

    constexpr auto operator<=>(SubsetCode const&) const = default;

   private:
    std::uint32_t bits_ = 0;
  };

  //! How the empty subset takes part in a power algebra.
  enum class EmptySet {
    excluded,  // P(S) \ {emptyset}
    included,  // the full powerset
    constant   // the full powerset with emptyset as a named constant
  };

  class PowerAlgebra;

  //! P(S) as an Algebra; element index k corresponds to the k-th code in
  //! the enumeration of the parent power algebra.  Does not own the parent.
  class PowerView final : public Algebra {
   public:
    PowerView(PowerAlgebra const& parent, Signature sig);

    [[nodiscard]] std::size_t size() const noexcept override;
    [[nodiscard]] Signature   signature() const noexcept override {
      return sig_;
    }
    [[nodiscard]] Elem        mul(Elem a, Elem b) const override;
    [[nodiscard]] Elem        add(Elem a, Elem b) const override;
    [[nodiscard]] Elem        star(Elem a) const override;
    [[nodiscard]] std::string label(Elem a) const override;
    [[nodiscard]] std::optional<Elem> constant() const override;

   private:
    PowerAlgebra const& parent_;
    Signature           sig_;
  };

  //! The power semigroup / semiring / involution semigroup of S.
  //!
  //! Products are computed on demand from per-element byte lookup tables,
  //! never as a full 2^n x 2^n table.
  class PowerAlgebra {
   public:
    static constexpr std::size_t default_cap = 16;
    static constexpr std::size_t export_cap  = 8;

    // Throws CarrierTooLarge when |S| > cap (cap itself at most 16).
    explicit PowerAlgebra(FiniteSemigroup base,
                          EmptySet        mode = EmptySet::included,
                          std::size_t     cap  = default_cap);

    [[nodiscard]] FiniteSemigroup const& base() const noexcept {
      return base_;
    }
    [[nodiscard]] EmptySet mode() const noexcept {
      return mode_;
    }
    [[nodiscard]] bool includes_empty() const noexcept {
      return mode_ != EmptySet::excluded;
    }
    [[nodiscard]] std::size_t width() const noexcept {
      return base_.size();
    }
    //! Number of codes in the algebra.
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool        is_inverse() const noexcept {
      return inversion_.has_value();
    }
    [[nodiscard]] std::optional<InversionMap> const& inversion() const noexcept {
      return inversion_;
    }

    [[nodiscard]] SubsetCode product(SubsetCode A, SubsetCode B) const noexcept;
    [[nodiscard]] SubsetCode unite(SubsetCode A, SubsetCode B) const noexcept {
      return A | B;
    }
    // Throws SignatureMismatch when the base is not inverse.
    [[nodiscard]] SubsetCode inverse(SubsetCode A) const;

    //! Enumeration of codes: index k <-> code k (or k + 1 without the empty
    //! set).  Both throw ShapeError on codes outside the algebra.
    [[nodiscard]] Elem       index(SubsetCode A) const;
    [[nodiscard]] SubsetCode code(Elem index) const;

    //! "{a,b}" with labels in base order; "{}" for the empty set.
    [[nodiscard]] std::string format(SubsetCode A) const;

    //! Operations available on this power algebra.
    [[nodiscard]] Signature signature() const noexcept {
      return {true, true, is_inverse()};
    }

    [[nodiscard]] PowerView view(Signature sig) const {
      return PowerView(*this, sig);
    }
    [[nodiscard]] PowerView semigroup_view() const {
      return view(Signature::semigroup());
    }
    [[nodiscard]] PowerView semiring_view() const {
      return view(Signature::semiring());
    }
    // Throws SignatureMismatch when the base is not inverse.
    [[nodiscard]] PowerView involution_view() const;

    //! The multiplicative reduct as a table; throws CarrierTooLarge when
    //! |S| > cap.
    [[nodiscard]] FiniteSemigroup power_semigroup(std::size_t cap = 10) const;

    //! All operations as tables; throws CarrierTooLarge when |S| > cap.
    [[nodiscard]] TableAlgebra to_table_algebra(
        std::size_t cap = export_cap) const;

   private:
    FiniteSemigroup             base_;
    EmptySet                    mode_;
    std::optional<InversionMap> inversion_;
    // left_[a][c][byte]: image of the c-th byte of B under left
    // multiplication by a
    std::vector<std::array<std::array<std::uint32_t, 256>, 2>> left_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Boolean matrices
  ////////////////////////////////////////////////////////////////////////

  //! n x n Boolean matrices are coded by the bits i * n + j.
  [[nodiscard]] std::uint32_t bool_matrix_product(std::uint32_t a,
                                                  std::uint32_t b,
                                                  std::size_t   n);
  [[nodiscard]] std::uint32_t bool_matrix_transpose(std::uint32_t a,
                                                    std::size_t   n);
  //! Rows separated by '/', e.g. "01/00".
  [[nodiscard]] std::string bool_matrix_label(std::uint32_t a, std::size_t n);

  //! R_n with entry-wise max as addition, the Boolean product and transpose;
  //! element index = matrix code.  n <= 3.
  [[nodiscard]] TableAlgebra boolean_matrix_semiring(std::size_t n);

  struct BrandtB2 {
    FiniteSemigroup semigroup;
    InversionMap    inversion;
    // matrix[x] is the R_2 code of element x
    std::vector<std::uint32_t> matrix;
  };

  //! The five matrices 00/00, 01/00, 00/10, 10/00, 00/01 in this order.
  [[nodiscard]] BrandtB2 brandt_b2();

  //! B_2 with the identity matrix appended (index 5); Hadamard product as
  //! addition and transpose as involution.
  [[nodiscard]] TableAlgebra brandt_monoid_b21();

  //! R_2 code of each element of brandt_monoid_b21().
  [[nodiscard]] std::vector<std::uint32_t> b21_matrices();

  //! sigma(A) = entry-wise max of the matrices in A, sigma(emptyset) = 0;
  //! returned as f[index(A)] = R_2 index.  Throws WrongBase unless P is the
  //! full power algebra of brandt_b2().
  [[nodiscard]] std::vector<Elem> sigma_map(PowerAlgebra const& P);

}  // namespace powersemi

#endif  // POWERSEMI_POWER_HPP_
