// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Terms, identities and quasi-identities over + (addition), juxtaposition
// or * (multiplication) and postfix ' (involution).
//
//   quasi    := identity ('&' identity)* '->' identity
//   identity := expr '=' expr
//   expr     := prod ('+' prod)*
//   prod     := post (('*')? post)*
//   post     := atom ("'")*
//   atom     := var | '(' expr ')'
//   var      := [a-z][0-9]*
//
// A variable is one letter with an optional numeric suffix, so "xy" reads
// as x * y and "x1y2" as x1 * y2.

#ifndef POWERSEMI_TERM_HPP_
#define POWERSEMI_TERM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powersemi/algebra.hpp"

namespace powersemi {

  class Term {
   public:
    enum class Kind { variable, product, sum, star };

    static Term variable(std::string name);
    static Term product(Term left, Term right);
    static Term sum(Term left, Term right);
    static Term star(Term child);

    [[nodiscard]] Kind               kind() const noexcept;
    [[nodiscard]] std::string const& name() const;
    [[nodiscard]] Term const&        left() const;
    [[nodiscard]] Term const&        right() const;
    [[nodiscard]] Term const&        child() const;

    //! Operations occurring in the term.
    [[nodiscard]] Signature signature() const;

    bool operator==(Term const& that) const;

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node);
    std::shared_ptr<Node const> node_;
  };

  struct Identity {
    Term lhs;
    Term rhs;

    bool operator==(Identity const&) const = default;
  };

  struct QuasiIdentity {
    std::vector<Identity> premises;
    Identity              conclusion;

    bool operator==(QuasiIdentity const&) const = default;
  };

  using Formula = std::variant<Term, Identity, QuasiIdentity>;

  //! Whichever of the three forms the text is.  Throws ParseError.
  [[nodiscard]] Formula       parse(std::string_view text);
  [[nodiscard]] Term          parse_term(std::string_view text);
  [[nodiscard]] Identity      parse_identity(std::string_view text);
  [[nodiscard]] QuasiIdentity parse_quasi_identity(std::string_view text);

  //! Minimal-parenthesis rendering; parse(to_string(t)) == t.
  [[nodiscard]] std::string to_string(Term const& t);
  [[nodiscard]] std::string to_string(Identity const& id);
  [[nodiscard]] std::string to_string(QuasiIdentity const& qi);

  //! Variables in order of first appearance.
  [[nodiscard]] std::vector<std::string> variables(Term const& t);
  [[nodiscard]] std::vector<std::string> variables(Identity const& id);
  [[nodiscard]] std::vector<std::string> variables(QuasiIdentity const& qi);

  [[nodiscard]] Signature signature(Identity const& id);
  [[nodiscard]] Signature signature(QuasiIdentity const& qi);

  //! The two block-group laws, "(2.1)" and "(2.2)":
  //!   ef = e & ee = e & fe = f & ff = f -> e = f
  //!   ef = f & ff = f & fe = e & ee = e -> e = f
  [[nodiscard]] QuasiIdentity block_group_law(int which);

  //! Resolves "(2.1)" and "(2.2)".
  [[nodiscard]] std::optional<QuasiIdentity> quasi_alias(std::string_view name);

}  // namespace powersemi

#endif  // POWERSEMI_TERM_HPP_
