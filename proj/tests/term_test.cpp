#include <random>

#include "catch_amalgamated.hpp"
#include "powersemi/term.hpp"

using namespace powersemi;

namespace {
  Term v(char const* name) {
    return Term::variable(name);
  }

  Term random_term(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 0);
    std::uniform_int_distribution<int> var(0, 4);
    static char const* const names[] = {"x", "y", "z", "x1", "e"};
    switch (kind(rng)) {
      case 1:
        return Term::product(random_term(rng, depth - 1),
                             random_term(rng, depth - 1));
      case 2:
        return Term::sum(random_term(rng, depth - 1),
                         random_term(rng, depth - 1));
      case 3:
        return Term::star(random_term(rng, depth - 1));
      default:
        return Term::variable(names[var(rng)]);
    }
  }
}  // namespace

TEST_CASE("parsing identities") {
  auto const dist = parse_identity("x(y+z) = xy+xz");
  CHECK(dist.lhs == Term::product(v("x"), Term::sum(v("y"), v("z"))));
  CHECK(dist.rhs
        == Term::sum(Term::product(v("x"), v("y")),
                     Term::product(v("x"), v("z"))));

  auto const inv = parse_identity("(xy)' = y'x'");
  CHECK(inv.lhs == Term::star(Term::product(v("x"), v("y"))));
  CHECK(inv.rhs == Term::product(Term::star(v("y")), Term::star(v("x"))));

  CHECK(parse_identity("x*y=x y") == parse_identity("xy = xy"));
}

TEST_CASE("parse picks the form") {
  auto const q = parse("ef=e & e=e -> f=f");
  REQUIRE(std::holds_alternative<QuasiIdentity>(q));
  CHECK(std::get<QuasiIdentity>(q).premises.size() == 2);
  CHECK(std::holds_alternative<Identity>(parse("x=y")));
  CHECK(std::holds_alternative<Term>(parse("x+y'")));
}

TEST_CASE("precedence and associativity") {
  // star > product > sum, both binary operators left-associative
  CHECK(parse_term("x+yz'")
        == Term::sum(v("x"), Term::product(v("y"), Term::star(v("z")))));
  CHECK(parse_term("xyz")
        == Term::product(Term::product(v("x"), v("y")), v("z")));
  CHECK(parse_term("x+y+z") == Term::sum(Term::sum(v("x"), v("y")), v("z")));
  CHECK(parse_term("x''") == Term::star(Term::star(v("x"))));
  CHECK(parse_term("x1y2") == Term::product(v("x1"), v("y2")));
}

TEST_CASE("parse errors carry position and expected tokens") {
  try {
    (void)parse_identity("x(y+ = z");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.position == 5);
    CHECK_FALSE(e.expected.empty());
  }
  CHECK_THROWS_AS(parse_identity("x = "), ParseError);
  CHECK_THROWS_AS(parse_identity("x + y"), ParseError);
  CHECK_THROWS_AS(parse_quasi_identity("x = y"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("X"), ParseError);
  CHECK_THROWS_AS(parse_term("x)"), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(parse_term("((x)(y+z))")) == "x(y+z)");
  CHECK(to_string(parse_term("x(yz)")) == "x(yz)");
  CHECK(to_string(parse_term("(xy)z")) == "xyz");
  CHECK(to_string(parse_term("(xy)'")) == "(xy)'");
  CHECK(to_string(parse_term("x+(y+z)")) == "x+(y+z)");
  CHECK(to_string(parse_identity("(xy)'=y'x'")) == "(xy)' = y'x'");
}

TEST_CASE("print then parse is the identity on 1000 random terms") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    Term const        t    = random_term(rng, 5);
    std::string const text = to_string(t);
    INFO(text);
    CHECK(parse_term(text) == t);
  }
}

TEST_CASE("variables and signatures") {
  auto const id = parse_identity("x(y+z) = xy+xz");
  CHECK(variables(id) == std::vector<std::string>{"x", "y", "z"});
  CHECK(signature(id) == Signature::semiring());
  CHECK(signature(parse_identity("(xy)'=y'x'")) == Signature::involution());
  CHECK(variables(block_group_law(2)) == std::vector<std::string>{"e", "f"});
}

TEST_CASE("block-group law aliases") {
  CHECK(quasi_alias("(2.1)") == block_group_law(1));
  CHECK(quasi_alias("2.2") == block_group_law(2));
  CHECK_FALSE(quasi_alias("(2.3)").has_value());
  CHECK(to_string(block_group_law(1)) == "ef = e & ee = e & fe = f & ff = f -> e = f");
  CHECK_THROWS_AS(block_group_law(3), InputError);
}
