// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "powersemi/power.hpp"

namespace powersemi::fixtures {

  namespace {
    // Builds a table from elements of any value type closed under `op`.
    template <typename T, typename Op>
    FiniteSemigroup from_values(std::string                     name,
                                std::vector<T> const&           values,
                                std::vector<std::string> const& labels,
                                Op                              op) {
      std::size_t const n = values.size();
      std::vector<Elem> table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          T const ab = op(values[a], values[b]);
          auto    it = std::find(values.begin(), values.end(), ab);
          if (it == values.end()) {
            throw Inconsistency("fixture " + name + " is not closed");
          }
          table[a * n + b] = static_cast<Elem>(it - values.begin());
        }
      }
      return FiniteSemigroup(std::move(name), labels, std::move(table));
    }

    using Perm = std::array<int, 3>;

    // (p * q)(i) = q(p(i))
    Perm compose(Perm const& p, Perm const& q) {
      return {q[p[0]], q[p[1]], q[p[2]]};
    }
  }  // namespace

  FiniteSemigroup trivial() {
    return FiniteSemigroup("trivial", {"e"}, std::vector<Elem>{0});
  }

  FiniteSemigroup cyclic(std::size_t n) {
    if (n == 0) {
      throw ShapeError("cyclic group of order 0");
    }
    std::vector<std::string> labels;
    std::vector<Elem>        table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Elem>((a + b) % n);
      }
    }
    return FiniteSemigroup("Z" + std::to_string(n), labels, std::move(table));
  }

  FiniteSemigroup symmetric3() {
    std::vector<Perm> const values{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return from_values(
        "S3", values, {"()", "(12)", "(13)", "(23)", "(123)", "(132)"}, compose);
  }

  FiniteSemigroup dihedral4() {
    // Symmetries of a square acting on its corners 0..3.
    using P4 = std::array<int, 4>;
    P4 const          r{1, 2, 3, 0};
    P4 const          s{0, 3, 2, 1};
    auto              mul = [](P4 const& p, P4 const& q) {
      return P4{q[p[0]], q[p[1]], q[p[2]], q[p[3]]};
    };
    std::vector<P4>          values;
    std::vector<std::string> labels;
    P4                       x{0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
      values.push_back(x);
      labels.push_back(k == 0 ? "1" : "r" + std::to_string(k));
      x = mul(x, r);
    }
    x = s;
    for (int k = 0; k < 4; ++k) {
      values.push_back(x);
      labels.push_back(k == 0 ? "s" : "sr" + std::to_string(k));
      x = mul(x, r);
    }
    return from_values("D4", values, labels, mul);
  }

  FiniteSemigroup quaternion() {
    // (sign, unit) with unit 0 = 1, 1 = i, 2 = j, 3 = k
    using Q = std::pair<int, int>;
    static constexpr int unit_table[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    std::vector<Q> const values{
        {1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}};
    return from_values(
        "Q8",
        values,
        {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
        [](Q const& a, Q const& b) {
          auto const& u = unit_table[a.second][b.second];
          return Q{a.first * b.first * u[0], u[1]};
        });
  }

  FiniteSemigroup left_zero(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Elem>        table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(std::string(1, static_cast<char>('a' + a)));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Elem>(a);
      }
    }
    return FiniteSemigroup(
        "LZ" + std::to_string(n), std::move(labels), std::move(table));
  }

  FiniteSemigroup chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Elem>        table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("y" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Elem>(std::min(a, b));
      }
    }
    return FiniteSemigroup(
        "chain" + std::to_string(n), std::move(labels), std::move(table));
  }

  FiniteSemigroup symmetric_inverse_monoid2() {
    // images of points 0 and 1; -1 is undefined
    using PI = std::array<int, 2>;
    std::vector<PI> const values{
        {0, 1}, {1, 0}, {0, -1}, {1, -1}, {-1, 0}, {-1, 1}, {-1, -1}};
    return from_values("I2",
                       values,
                       {"[12]", "[21]", "[1-]", "[2-]", "[-1]", "[-2]", "[--]"},
                       [](PI const& p, PI const& q) {
                         PI out;
                         for (int i = 0; i < 2; ++i) {
                           out[i] = p[i] < 0 ? -1 : q[p[i]];
                         }
                         return out;
                       });
  }

  namespace {
    FiniteSemigroup z2_over_s3_with(Elem image_of_generator, std::string name) {
      FiniteSemigroup const Y("2-chain",
                              {"top", "bot"},
                              std::vector<Elem>{0, 1, 1, 1});
      return strong_semilattice(Y,
                                {cyclic(2), symmetric3()},
                                {{0, 1, {0, image_of_generator}}},
                                std::move(name));
    }
  }  // namespace

  FiniteSemigroup z2_over_s3() {
    return z2_over_s3_with(1, "Z2>S3");
  }

  FiniteSemigroup z2_over_s3_trivial_link() {
    return z2_over_s3_with(0, "Z2>S3 (trivial link)");
  }

  namespace {
    std::map<std::string, std::function<TableAlgebra()>> const& registry() {
      static std::map<std::string, std::function<TableAlgebra()>> const r{
          {"trivial", [] { return as_algebra(trivial()); }},
          {"z2", [] { return as_algebra(cyclic(2)); }},
          {"z3", [] { return as_algebra(cyclic(3)); }},
          {"z4", [] { return as_algebra(cyclic(4)); }},
          {"z6", [] { return as_algebra(cyclic(6)); }},
          {"z8", [] { return as_algebra(cyclic(8)); }},
          {"z2xz2",
           [] { return as_algebra(direct_product(cyclic(2), cyclic(2))); }},
          {"s3", [] { return as_algebra(symmetric3()); }},
          {"d4", [] { return as_algebra(dihedral4()); }},
          {"q8", [] { return as_algebra(quaternion()); }},
          {"q8xz2",
           [] { return as_algebra(direct_product(quaternion(), cyclic(2))); }},
          {"q8xz3",
           [] { return as_algebra(direct_product(quaternion(), cyclic(3))); }},
          {"left-zero2", [] { return as_algebra(left_zero(2)); }},
          {"chain2", [] { return as_algebra(chain(2)); }},
          {"chain3", [] { return as_algebra(chain(3)); }},
          {"i2", [] { return as_algebra(symmetric_inverse_monoid2()); }},
          {"z2-over-s3", [] { return as_algebra(z2_over_s3()); }},
          {"z2-over-s3-trivial",
           [] { return as_algebra(z2_over_s3_trivial_link()); }},
          {"b2", [] { return as_algebra(brandt_b2().semigroup); }},
          {"b21", [] { return brandt_monoid_b21(); }},
          {"r2", [] { return boolean_matrix_semiring(2); }},
      };
      return r;
    }
  }  // namespace

  std::vector<std::string> names() {
    std::vector<std::string> out;
    for (auto const& [name, make] : registry()) {
      out.push_back(name);
    }
    return out;
  }

  TableAlgebra named(std::string const& name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
      throw InputError("unknown fixture '" + name + "'");
    }
    return it->second();
  }

}  // namespace powersemi::fixtures
