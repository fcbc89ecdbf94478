// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.
//
// The end-to-end verification suite: every constructive step checked on
// the built-in fixtures, one row per item, with wall-clock timings.

#ifndef POWERSEMI_SUITE_HPP_
#define POWERSEMI_SUITE_HPP_

#include <string>
#include <vector>

#include "powersemi/witness.hpp"

namespace powersemi {

  struct SuiteRow {
    int         item;
    std::string title;
    bool        passed;
    double      seconds;
    double      limit_seconds;  // 0 when untimed
    std::string detail;

    [[nodiscard]] bool in_time() const {
      return limit_seconds <= 0 || seconds < limit_seconds;
    }
  };

  struct SuiteOptions {
    WitnessOptions witness;
    // Corrupts one value of sigma before item 1 checks it, to show that the
    // suite notices.
    bool inject_failure = false;
  };

  [[nodiscard]] std::vector<SuiteRow> run_suite(SuiteOptions const& opts = {});

  [[nodiscard]] bool        suite_passed(std::vector<SuiteRow> const& rows);
  [[nodiscard]] std::string suite_text(std::vector<SuiteRow> const& rows);
  //! Timings are left out so that the output is byte-stable.
  [[nodiscard]] std::string suite_json(std::vector<SuiteRow> const& rows);

}  // namespace powersemi

#endif  // POWERSEMI_SUITE_HPP_
