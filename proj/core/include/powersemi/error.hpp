// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#ifndef POWERSEMI_ERROR_HPP_
#define POWERSEMI_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace powersemi {

  using Elem = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  class AssociativityViolation : public Error {
   public:
    AssociativityViolation(Elem i, Elem j, Elem k);
    Elem i, j, k;
  };

  class NotInverse : public Error {
   public:
    NotInverse(Elem witness, std::size_t inverse_count);
    Elem        witness;
    std::size_t inverse_count;
  };

  class NotClifford : public Error {
   public:
    explicit NotClifford(Elem witness);
    Elem witness;
  };

  class NotAnIdeal : public Error {
   public:
    NotAnIdeal(Elem s, Elem i);
    Elem s, i;
  };

  class NotIdempotent : public Error {
   public:
    using Error::Error;
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class NotASubgroup : public Error {
   public:
    using Error::Error;
  };

  // A table fails one of the laws its signature promises.
  class AxiomViolation : public Error {
   public:
    using Error::Error;
  };

  class LinkIncompatible : public Error {
   public:
    using Error::Error;
  };

  // Raised whenever a construction would exceed its width cap.
  class CarrierTooLarge : public Error {
   public:
    CarrierTooLarge(std::size_t size, std::size_t cap);
    std::size_t size, cap;
  };

  class WrongBase : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t position, std::vector<std::string> expected);
    std::size_t              position;
    std::vector<std::string> expected;
  };

  class SignatureMismatch : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    explicit UnboundVariable(std::string const& name);
    std::string name;
  };

  class TooManyVariables : public Error {
   public:
    TooManyVariables(std::size_t count, std::size_t cap);
  };

  class PartialMap : public Error {
   public:
    using Error::Error;
  };

  // The witness constructions below are guaranteed to exist by theory;
  // failing to find one indicates a bug, never a property of the input.
  class Inconsistency : public Error {
   public:
    using Error::Error;
  };

  class NoSurjectionFound : public Inconsistency {
   public:
    using Inconsistency::Inconsistency;
  };

  class QuaternionNotFound : public Inconsistency {
   public:
    using Inconsistency::Inconsistency;
  };

  class NoNonDedekindSubgroup : public Error {
   public:
    using Error::Error;
  };

  class InputError : public Error {
   public:
    using Error::Error;
  };

}  // namespace powersemi

#endif  // POWERSEMI_ERROR_HPP_
