#include <nlohmann/json.hpp>

#include "catch_amalgamated.hpp"
#include "powersemi/fixtures.hpp"
#include "powersemi/io.hpp"
#include "powersemi/suite.hpp"

using namespace powersemi;
namespace fx = powersemi::fixtures;

namespace {
  std::size_t occurrences(std::string const& text, std::string const& word) {
    std::size_t count = 0;
    for (auto at = text.find(word); at != std::string::npos;
         at      = text.find(word, at + 1)) {
      ++count;
    }
    return count;
  }
}  // namespace

TEST_CASE("algebra files round-trip") {
  for (auto const& name : fx::names()) {
    INFO(name);
    auto const A    = fx::named(name);
    auto const text = dump_algebra(A);
    auto const B    = parse_algebra(text);
    CHECK(B.semigroup().same_table(A.semigroup()));
    CHECK(B.semigroup().labels() == A.semigroup().labels());
    CHECK(B.name() == A.name());
    CHECK(B.add_table() == A.add_table());
    CHECK(B.star_map() == A.star_map());
    CHECK(dump_algebra(B) == text);
  }
}

TEST_CASE("power exports carry all three operations") {
  auto const T = PowerAlgebra(fx::cyclic(2), EmptySet::constant).to_table_algebra();
  auto const B = parse_algebra(dump_algebra(T));
  CHECK(B.signature() == Signature::all());
  CHECK(B.constant() == T.constant());
}

TEST_CASE("malformed algebra files") {
  try {
    (void)parse_algebra(R"({"elements": ["a"], "table": [[0]])");
    FAIL("no error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra(R"({"table": [[0]]})"), InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"elements": ["a"], "table": [[1]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_algebra(R"({"elements": ["a","b"], "table": [[0,1]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_algebra(R"([1, 2])"), InputError);
  CHECK_THROWS_AS(
      parse_algebra(R"({"elements": ["a","b","c"],
                        "table": [[1,1,0],[0,0,0],[0,0,0]]})"),
      AssociativityViolation);
  // An addition table that is not commutative.
  CHECK_THROWS_AS(parse_algebra(R"({"elements": ["a","b"],
                                    "table": [[0,0],[0,0]],
                                    "addition": [[0,0],[1,1]]})"),
                  AxiomViolation);
}

TEST_CASE("verdict JSON is stable and complete") {
  auto const S  = fx::symmetric3();
  auto const r  = theorem_verdict(S);
  auto const j1 = verdict_json(r, S);
  auto const j2 = verdict_json(theorem_verdict(S), S);
  CHECK(j1 == j2);

  auto const doc = nlohmann::ordered_json::parse(j1);
  std::vector<std::string> keys;
  for (auto const& [k, v] : doc.items()) {
    keys.push_back(k);
  }
  CHECK(keys
        == std::vector<std::string>{"name", "size", "empty_set", "inverse",
                                    "clifford", "subgroups", "theorem_1_1",
                                    "theorem_1_2", "witness",
                                    "verification_log", "verified"});
  CHECK(doc["theorem_1_1"]["verdict"] == "theorem applies (nonfinitely based)");
  CHECK(doc["witness"]["case2"]["J_size"] == 42);
  CHECK(doc["witness"]["case2"]["B_size"] == 47);
  CHECK(doc["verified"] == true);
}

TEST_CASE("reports never claim finite basis") {
  for (auto const& name : fx::names()) {
    auto const S = fx::named(name).semigroup();
    auto const r = theorem_verdict(S);
    for (auto const& text : {verdict_json(r, S), verdict_text(r, S)}) {
      CHECK(occurrences(text, "finitely based")
            == occurrences(text, "nonfinitely based"));
    }
  }
}

TEST_CASE("text rendering mirrors the JSON") {
  auto const S    = brandt_b2().semigroup;
  auto const r    = theorem_verdict(S);
  auto const text = verdict_text(r, S);
  CHECK(text.find("clifford:  no (01/00 lies in no subgroup)") != std::string::npos);
  CHECK(text.find("theorem 1.1: theorem applies (nonfinitely based), case 1")
        != std::string::npos);
  CHECK(text.find("[pass] tau: T -> B2") != std::string::npos);
}

TEST_CASE("suite output") {
  std::vector<SuiteRow> const rows{{1, "a", true, 0.5, 1.0, "x"},
                                   {2, "b", true, 2.0, 1.0, "y"}};
  CHECK_FALSE(suite_passed(rows));  // item 2 is over its limit
  auto const doc = nlohmann::json::parse(suite_json(rows));
  CHECK(doc["passed"] == false);
  CHECK(doc["items"][1]["within_limit"] == false);
  CHECK(suite_json(rows).find("0.5") == std::string::npos);
  CHECK(suite_text(rows).find("FAIL") != std::string::npos);
}
