// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Finite algebras with a multiplication and optionally an addition, an
// involution and a distinguished constant.  Everything that the equational
// layer evaluates terms in goes through the Algebra interface, so table
// algebras and on-demand power algebras are interchangeable there.

#ifndef POWERSEMI_ALGEBRA_HPP_
#define POWERSEMI_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powersemi/error.hpp"
#include "powersemi/semigroup.hpp"

namespace powersemi {

  //! A set of operation symbols.
  struct Signature {
    bool add = false;
    bool mul = true;
    bool star = false;

    static constexpr Signature semigroup() {
      return {false, true, false};
    }
    static constexpr Signature semiring() {
      return {true, true, false};
    }
    static constexpr Signature involution() {
      return {false, true, true};
    }
    static constexpr Signature all() {
      return {true, true, true};
    }

    [[nodiscard]] constexpr bool contains(Signature that) const noexcept {
      return (add || !that.add) && (mul || !that.mul) && (star || !that.star);
    }

    [[nodiscard]] constexpr Signature
    intersect(Signature that) const noexcept {
      return {add && that.add, mul && that.mul, star && that.star};
    }

    constexpr bool operator==(Signature const&) const = default;
  };

  [[nodiscard]] std::string to_string(Signature sig);

  class Algebra {
   public:
    virtual ~Algebra() = default;

    [[nodiscard]] virtual std::size_t size() const noexcept    = 0;
    [[nodiscard]] virtual Signature   signature() const noexcept = 0;
    [[nodiscard]] virtual Elem        mul(Elem a, Elem b) const = 0;
    [[nodiscard]] virtual Elem        add(Elem a, Elem b) const;
    [[nodiscard]] virtual Elem        star(Elem a) const;
    [[nodiscard]] virtual std::string label(Elem a) const = 0;

    // Distinguished nullary operation, if the algebra carries one.
    [[nodiscard]] virtual std::optional<Elem> constant() const {
      return std::nullopt;
    }
  };

  //! An algebra given by full operation tables.
  //!
  //! The constructor checks the laws of whatever signature is present:
  //! the addition must be a semilattice operation over which the
  //! multiplication distributes on both sides, and the star must be an
  //! involution.  Associativity of the multiplication comes from
  //! FiniteSemigroup.
  class TableAlgebra final : public Algebra {
   public:
    explicit TableAlgebra(FiniteSemigroup                  mul,
                          std::optional<std::vector<Elem>> add  = std::nullopt,
                          std::optional<std::vector<Elem>> star = std::nullopt,
                          std::optional<Elem> constant          = std::nullopt);

    [[nodiscard]] std::size_t size() const noexcept override {
      return mul_.size();
    }
    [[nodiscard]] Signature signature() const noexcept override {
      return {add_.has_value(), true, star_.has_value()};
    }
    [[nodiscard]] Elem mul(Elem a, Elem b) const override {
      return mul_.product(a, b);
    }
    [[nodiscard]] Elem        add(Elem a, Elem b) const override;
    [[nodiscard]] Elem        star(Elem a) const override;
    [[nodiscard]] std::string label(Elem a) const override {
      return mul_.label(a);
    }
    [[nodiscard]] std::optional<Elem> constant() const override {
      return constant_;
    }

    [[nodiscard]] FiniteSemigroup const& semigroup() const noexcept {
      return mul_;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return mul_.name();
    }
    // Row-major n x n.
    [[nodiscard]] std::optional<std::vector<Elem>> const&
    add_table() const noexcept {
      return add_;
    }
    [[nodiscard]] std::optional<std::vector<Elem>> const&
    star_map() const noexcept {
      return star_;
    }

    // Copy with the operations outside `sig` (and optionally the constant)
    // dropped.
    [[nodiscard]] TableAlgebra reduct(Signature sig,
                                      bool      keep_constant = true) const;

    [[nodiscard]] TableAlgebra with_constant(std::optional<Elem> c) const;

   private:
    FiniteSemigroup                  mul_;
    std::optional<std::vector<Elem>> add_;
    std::optional<std::vector<Elem>> star_;
    std::optional<Elem>              constant_;
  };

  [[nodiscard]] TableAlgebra as_algebra(FiniteSemigroup S);

  //! Hides the operations of `base` that are outside `sig`.  Does not own
  //! `base`.
  class RestrictedView final : public Algebra {
   public:
    RestrictedView(Algebra const& base, Signature sig, bool keep_constant);

    [[nodiscard]] std::size_t size() const noexcept override {
      return base_.size();
    }
    [[nodiscard]] Signature signature() const noexcept override {
      return sig_;
    }
    [[nodiscard]] Elem mul(Elem a, Elem b) const override {
      return base_.mul(a, b);
    }
    [[nodiscard]] Elem        add(Elem a, Elem b) const override;
    [[nodiscard]] Elem        star(Elem a) const override;
    [[nodiscard]] std::string label(Elem a) const override {
      return base_.label(a);
    }
    [[nodiscard]] std::optional<Elem> constant() const override {
      return keep_constant_ ? base_.constant() : std::nullopt;
    }

   private:
    Algebra const& base_;
    Signature      sig_;
    bool           keep_constant_;
  };

}  // namespace powersemi

#endif  // POWERSEMI_ALGEBRA_HPP_
