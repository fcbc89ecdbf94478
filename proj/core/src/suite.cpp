// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powersemi/fixtures.hpp"

namespace powersemi {

  namespace {

    // Accumulates the outcome of one suite item.
    struct Tally {
      bool        passed = true;
      std::string detail;

      void note(bool ok, std::string const& what) {
        passed = passed && ok;
        if (!detail.empty()) {
          detail += "; ";
        }
        detail += what + (ok ? "" : " FAILED");
      }
    };

    SuiteRow timed(int                          item,
                   std::string                  title,
                   double                       limit,
                   std::function<void(Tally&)> const& body) {
      auto const start = std::chrono::steady_clock::now();
      Tally      tally;
      try {
        body(tally);
      } catch (std::exception const& e) {
        tally.note(false, std::string("error: ") + e.what());
      }
      std::chrono::duration<double> const elapsed
          = std::chrono::steady_clock::now() - start;
      return SuiteRow{item,
                      std::move(title),
                      tally.passed,
                      elapsed.count(),
                      limit,
                      std::move(tally.detail)};
    }

    bool all_passed(std::vector<Verification> const& log, bool allow_sampling) {
      for (auto const& v : log) {
        if (!v.passed || (v.sampled && !allow_sampling)) {
          return false;
        }
      }
      return !log.empty();
    }

    FiniteSemigroup fixture(char const* name) {
      return fixtures::named(name).semigroup();
    }

    void sigma_item(Tally& t, SuiteOptions const& opts) {
      EmptySet const mode = opts.witness.mode == EmptySet::constant
                                ? EmptySet::constant
                                : EmptySet::included;
      if (!opts.inject_failure) {
        auto const r = verify_corollary_sigma(mode);
        t.note(r.add.ok, "add " + std::to_string(r.add.checks));
        t.note(r.mul.ok, "mul " + std::to_string(r.mul.checks));
        t.note(r.star.ok, "star " + std::to_string(r.star.checks));
        t.note(r.surjective, "onto R2");
        return;
      }
      PowerAlgebra const P(brandt_b2().semigroup, mode);
      auto               f = sigma_map(P);
      f[P.index(SubsetCode(0b11))] ^= 1;  // injected fault
      auto const r = check_homomorphism(
          f, P.semiring_view(), boolean_matrix_semiring(2), Signature::semiring());
      t.note(r.ok, "sigma with an injected fault");
    }

    void block_group_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"z4", "s3", "z2-over-s3"}) {
        auto const r = verify_prop_block_group(fixture(name), opts.witness);
        t.note(r.passed, std::string(name) + " " + std::to_string(r.subsets));
      }
    }

    void solvable_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"z2", "s3", "z2-over-s3"}) {
        auto const r
            = verify_prop_solvable_subgroups(fixture(name), opts.witness);
        t.note(r.passed,
               std::string(name) + " " + std::to_string(r.rows.size())
                   + " groups");
      }
    }

    void case1_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"b2", "b21", "i2"}) {
        auto const S = fixture(name);
        auto const r = theorem_verdict(S, opts.witness);
        bool const ok
            = r.is_inverse && !r.is_clifford && r.case1
              && r.theorem_1_1.which == TheoremCase::case1
              && r.theorem_1_2.which == TheoremCase::case1
              && all_passed(r.log, false);
        t.note(ok,
               std::string(name) + " |T|="
                   + (r.case1 ? std::to_string(r.case1->T.semigroup.size())
                              : "?"));
      }
    }

    void case2_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"s3", "z2-over-s3"}) {
        auto const w = case2_witness(fixture(name), std::nullopt, opts.witness);
        bool const ok = all_passed(w.checks, false) && w.J.size() == 42
                        && w.B.size() == 47 && w.G.size() == 6;
        t.note(ok,
               std::string(name) + " |J|=" + std::to_string(w.J.size())
                   + " |B|=" + std::to_string(w.B.size()));
      }
    }

    void case3_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"q8", "q8xz3"}) {
        auto const r = theorem_verdict(fixture(name), opts.witness);
        bool       shape = !r.subgroups.empty();
        bool       nonabelian = false;
        for (auto const& row : r.subgroups) {
          shape      = shape && row.solvable && row.dedekind;
          nonabelian = nonabelian || !row.abelian;
        }
        bool const ok = r.is_clifford && shape && nonabelian && r.case3
                        && r.theorem_1_1.which == TheoremCase::case3
                        && !r.theorem_1_2.applies && all_passed(r.log, false);
        t.note(ok, name);
      }
    }

    void negative_item(Tally& t, SuiteOptions const& opts) {
      for (char const* name : {"z6", "chain3"}) {
        auto const r = theorem_verdict(fixture(name), opts.witness);
        t.note(r.is_clifford && !r.theorem_1_1.applies
                   && !r.theorem_1_2.applies,
               std::string(name) + " no conclusion");
      }
      auto const r = theorem_verdict(fixture("left-zero2"), opts.witness);
      t.note(!r.is_inverse && r.not_inverse.has_value()
                 && !r.theorem_1_1.applies && !r.theorem_1_2.applies,
             "left-zero2 not inverse");
    }

    void axioms_item(Tally& t, SuiteOptions const& opts) {
      static char const* const semiring_laws[] = {
          "x+x=x", "x+y=y+x", "x+(y+z)=(x+y)+z",
          "x(yz)=(xy)z", "x(y+z)=xy+xz", "(x+y)z=xz+yz"};
      static char const* const involution_laws[] = {
          "x(yz)=(xy)z", "(xy)'=y'x'", "x''=x"};
      auto run = [&](Algebra const& A, auto const& laws) {
        for (char const* law : laws) {
          if (!holds_identity(A, parse_identity(law))) {
            return false;
          }
        }
        return true;
      };
      std::size_t checked = 0;
      for (char const* name : {"z4", "s3", "z2-over-s3", "b2", "b21", "i2",
                               "q8"}) {
        PowerAlgebra const P(fixture(name), opts.witness.mode);
        t.note(run(P.semiring_view(), semiring_laws)
                   && run(P.involution_view(), involution_laws),
               std::string("P(") + name + ")");
        ++checked;
      }
      auto const R2 = boolean_matrix_semiring(2);
      t.note(run(RestrictedView(R2, Signature::semiring(), false),
                 semiring_laws)
                 && run(RestrictedView(R2, Signature::involution(), false),
                        involution_laws),
             "R2");
      auto const B21 = brandt_monoid_b21();
      t.note(run(RestrictedView(B21, Signature::semiring(), false),
                 semiring_laws)
                 && run(RestrictedView(B21, Signature::involution(), false),
                        involution_laws),
             "B21");
    }
  }  // namespace

  std::vector<SuiteRow> run_suite(SuiteOptions const& opts) {
    std::vector<SuiteRow> rows;
    rows.push_back(timed(1, "sigma: P(B2) onto R2", 1.0, [&](Tally& t) {
      sigma_item(t, opts);
    }));
    rows.push_back(timed(2, "power semigroups are block-groups", 10.0,
                         [&](Tally& t) { block_group_item(t, opts); }));
    rows.push_back(timed(3, "subgroups of power semigroups are solvable", 60.0,
                         [&](Tally& t) { solvable_item(t, opts); }));
    rows.push_back(timed(4, "case 1: onto B2 and lift to P(T)", 10.0,
                         [&](Tally& t) { case1_item(t, opts); }));
    rows.push_back(timed(5, "case 2: subset family onto B21", 5.0,
                         [&](Tally& t) { case2_item(t, opts); }));
    rows.push_back(timed(6, "case 3: quaternion subgroup", 5.0, [&](Tally& t) {
      case3_item(t, opts);
    }));
    rows.push_back(timed(7, "negative controls", 0.0, [&](Tally& t) {
      negative_item(t, opts);
    }));
    rows.push_back(timed(8, "semiring and involution laws", 0.0, [&](Tally& t) {
      axioms_item(t, opts);
    }));
    return rows;
  }

  bool suite_passed(std::vector<SuiteRow> const& rows) {
    for (auto const& r : rows) {
      if (!r.passed || !r.in_time()) {
        return false;
      }
    }
    return !rows.empty();
  }

  std::string suite_text(std::vector<SuiteRow> const& rows) {
    std::ostringstream out;
    for (auto const& r : rows) {
      char line[160];
      std::snprintf(line,
                    sizeof line,
                    "%d  %-44s %-4s %8.3fs",
                    r.item,
                    r.title.c_str(),
                    r.passed && r.in_time() ? "pass" : "FAIL",
                    r.seconds);
      out << line;
      if (r.limit_seconds > 0) {
        char limit[32];
        std::snprintf(limit, sizeof limit, " (limit %gs)", r.limit_seconds);
        out << limit;
      }
      out << "\n   " << r.detail << "\n";
    }
    out << (suite_passed(rows) ? "all passed\n" : "FAILED\n");
    return out.str();
  }

  std::string suite_json(std::vector<SuiteRow> const& rows) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (auto const& r : rows) {
      doc.push_back({{"item", r.item},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"within_limit", r.in_time()},
                     {"detail", r.detail}});
    }
    nlohmann::ordered_json out;
    out["passed"] = suite_passed(rows);
    out["items"]  = doc;
    return out.dump(2) + "\n";
  }

}  // namespace powersemi
