// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// The JSON algebra file format and report serialization.
//
//   { "name": "...", "elements": ["a", ...], "table": [[0, 1], ...],
//     "addition": [[...], ...], "star": [0, ...], "constant": 0 }
//
// Indices refer to positions in "elements".  "addition", "star" and
// "constant" are optional.

#ifndef POWERSEMI_IO_HPP_
#define POWERSEMI_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "powersemi/algebra.hpp"
#include "powersemi/witness.hpp"

namespace powersemi {

  //! Throws InputError (with the byte offset for JSON syntax errors) on
  //! malformed documents and the usual construction errors on bad tables.
  [[nodiscard]] TableAlgebra parse_algebra(std::string_view text);
  [[nodiscard]] TableAlgebra load_algebra(std::filesystem::path const& path);

  //! One line per row, stable key order.
  [[nodiscard]] std::string dump_algebra(TableAlgebra const& A);
  void save_algebra(TableAlgebra const& A, std::filesystem::path const& path);

  [[nodiscard]] std::string to_string(EmptySet mode);

  //! The report needs S for element labels.
  [[nodiscard]] std::string verdict_json(VerdictReport const&   r,
                                         FiniteSemigroup const& S);
  [[nodiscard]] std::string verdict_text(VerdictReport const&   r,
                                         FiniteSemigroup const& S);

}  // namespace powersemi

#endif  // POWERSEMI_IO_HPP_
