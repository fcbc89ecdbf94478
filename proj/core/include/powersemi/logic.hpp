// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// Satisfaction of identities and quasi-identities in finite algebras by
// exhaustive assignment, and exhaustive (or sampled) homomorphism checks.

#ifndef POWERSEMI_LOGIC_HPP_
#define POWERSEMI_LOGIC_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powersemi/algebra.hpp"
#include "powersemi/term.hpp"

namespace powersemi {

  //! Variable cap for exhaustive checks.
  inline constexpr std::size_t max_variables = 6;

  //! Variable -> element, in first-appearance order of the variables.
  using Assignment = std::vector<std::pair<std::string, Elem>>;

  //! Throws SignatureMismatch or UnboundVariable.
  [[nodiscard]] Elem eval_term(Algebra const&                     A,
                               Term const&                        t,
                               std::map<std::string, Elem> const& assignment);

  struct CheckResult {
    bool holds = true;
    // First counterexample in lexicographic assignment order: the first
    // variable is the most significant digit.
    std::optional<Assignment> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  [[nodiscard]] CheckResult holds_identity(Algebra const& A, Identity const& id);
  [[nodiscard]] CheckResult holds_quasi_identity(Algebra const&       A,
                                                 QuasiIdentity const& qi);

  //! Both block-group laws; the counterexample of the first failing one.
  [[nodiscard]] CheckResult is_block_group(Algebra const& A);
  [[nodiscard]] CheckResult is_block_group(FiniteSemigroup const& S);

  //! Which operation a homomorphism check failed on.
  enum class Op { add, mul, star, constant };

  [[nodiscard]] char const* to_string(Op op);

  struct HomViolation {
    Op                op;
    std::vector<Elem> args;
  };

  struct HomCheckOptions {
    // Largest domain checked exhaustively; beyond it `samples` random
    // argument tuples are drawn from an mt19937_64 seeded with `seed`.
    std::size_t   exhaustive_limit = static_cast<std::size_t>(-1);
    std::size_t   samples          = 100000;
    std::uint64_t seed             = 0;
  };

  struct HomResult {
    bool                        ok = true;
    bool                        surjective = false;
    bool                        sampled    = false;
    std::size_t                 checks     = 0;
    std::optional<HomViolation> violation;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks f(op(x..)) = op(f(x)..) for each op in `ops`, and that f maps
  //! the constant of A to the constant of B when both have one.  Throws
  //! PartialMap if f is not a total map into B, SignatureMismatch if an op
  //! is missing from A or B.
  [[nodiscard]] HomResult check_homomorphism(std::span<Elem const> f,
                                             Algebra const&        A,
                                             Algebra const&        B,
                                             Signature             ops,
                                             HomCheckOptions const& options = {});

}  // namespace powersemi

#endif  // POWERSEMI_LOGIC_HPP_
