// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/error.hpp"

namespace powersemi {

  namespace {
    std::string join(std::vector<std::string> const& v) {
      std::string out;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != 0) {
          out += ", ";
        }
        out += v[k];
      }
      return out;
    }
  }  // namespace

  AssociativityViolation::AssociativityViolation(Elem i, Elem j, Elem k)
      : Error("associativity fails at (" + std::to_string(i) + ", "
              + std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}

  NotInverse::NotInverse(Elem witness, std::size_t inverse_count)
      : Error("not an inverse semigroup: element " + std::to_string(witness)
              + " has " + std::to_string(inverse_count) + " inverses"),
        witness(witness),
        inverse_count(inverse_count) {}

  NotClifford::NotClifford(Elem witness)
      : Error("not a Clifford semigroup: element " + std::to_string(witness)
              + " lies in no subgroup"),
        witness(witness) {}

  NotAnIdeal::NotAnIdeal(Elem s, Elem i)
      : Error("not an ideal: product of " + std::to_string(s) + " and "
              + std::to_string(i) + " leaves the set"),
        s(s),
        i(i) {}

  CarrierTooLarge::CarrierTooLarge(std::size_t size, std::size_t cap)
      : Error("carrier of size " + std::to_string(size)
              + " exceeds the cap of " + std::to_string(cap)),
        size(size),
        cap(cap) {}

  ParseError::ParseError(std::size_t position, std::vector<std::string> exp)
      : Error("parse error at position " + std::to_string(position)
              + ": expected one of " + join(exp)),
        position(position),
        expected(std::move(exp)) {}

  UnboundVariable::UnboundVariable(std::string const& name)
      : Error("unbound variable '" + name + "'"), name(name) {}

  TooManyVariables::TooManyVariables(std::size_t count, std::size_t cap)
      : Error(std::to_string(count) + " variables exceed the cap of "
              + std::to_string(cap)) {}

}  // namespace powersemi
