// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/logic.hpp"

#include <algorithm>
#include <random>

namespace powersemi {

  namespace {
    // A term flattened to postfix over variable slots.
    class Program {
     public:
      Program(Term const& t, std::vector<std::string> const& vars) {
        compile(t, vars);
      }

      Elem run(Algebra const& A, std::span<Elem const> values) const {
        std::vector<Elem>& stack = scratch();
        stack.clear();
        for (auto const& [kind, slot] : code_) {
          switch (kind) {
            case Term::Kind::variable:
              stack.push_back(values[slot]);
              break;
            case Term::Kind::star:
              stack.back() = A.star(stack.back());
              break;
            case Term::Kind::product:
            case Term::Kind::sum: {
              Elem const b = stack.back();
              stack.pop_back();
              stack.back() = kind == Term::Kind::product ? A.mul(stack.back(), b)
                                                         : A.add(stack.back(), b);
              break;
            }
          }
        }
        return stack.back();
      }

     private:
      static std::vector<Elem>& scratch() {
        thread_local std::vector<Elem> stack;
        return stack;
      }

      void compile(Term const& t, std::vector<std::string> const& vars) {
        switch (t.kind()) {
          case Term::Kind::variable: {
            auto it = std::find(vars.begin(), vars.end(), t.name());
            if (it == vars.end()) {
              throw UnboundVariable(t.name());
            }
            code_.emplace_back(t.kind(), it - vars.begin());
            break;
          }
          case Term::Kind::star:
            compile(t.child(), vars);
            code_.emplace_back(t.kind(), 0);
            break;
          default:
            compile(t.left(), vars);
            compile(t.right(), vars);
            code_.emplace_back(t.kind(), 0);
        }
      }

      std::vector<std::pair<Term::Kind, std::size_t>> code_;
    };

    void require_signature(Algebra const& A, Signature needed) {
      if (!A.signature().contains(needed)) {
        throw SignatureMismatch("formula uses " + to_string(needed)
                                + " but the algebra has "
                                + to_string(A.signature()));
      }
    }

    // Runs `visit` on every assignment in lexicographic order until it
    // returns false; returns the assignment at which it stopped.
    template <typename Visit>
    std::optional<std::vector<Elem>> for_each_assignment(std::size_t k,
                                                         std::size_t n,
                                                         Visit&&     visit) {
      if (k > max_variables) {
        throw TooManyVariables(k, max_variables);
      }
      std::vector<Elem> values(k, 0);
      while (true) {
        if (!visit(std::span<Elem const>(values))) {
          return values;
        }
        std::size_t pos = k;
        while (pos > 0) {
          --pos;
          if (++values[pos] < n) {
            break;
          }
          values[pos] = 0;
          if (pos == 0) {
            return std::nullopt;
          }
        }
        if (k == 0) {
          return std::nullopt;
        }
      }
    }

    Assignment label(std::vector<std::string> const& vars,
                     std::vector<Elem> const&        values) {
      Assignment out;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        out.emplace_back(vars[i], values[i]);
      }
      return out;
    }

    struct CompiledIdentity {
      Program lhs;
      Program rhs;

      CompiledIdentity(Identity const& id, std::vector<std::string> const& v)
          : lhs(id.lhs, v), rhs(id.rhs, v) {}

      bool holds(Algebra const& A, std::span<Elem const> values) const {
        return lhs.run(A, values) == rhs.run(A, values);
      }
    };
  }  // namespace

  Elem eval_term(Algebra const&                     A,
                 Term const&                        t,
                 std::map<std::string, Elem> const& assignment) {
    require_signature(A, t.signature());
    auto const        vars = variables(t);
    std::vector<Elem> values;
    for (auto const& v : vars) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw UnboundVariable(v);
      }
      if (it->second >= A.size()) {
        throw ShapeError("value of " + v + " is outside the algebra");
      }
      values.push_back(it->second);
    }
    return Program(t, vars).run(A, values);
  }

  CheckResult holds_identity(Algebra const& A, Identity const& id) {
    require_signature(A, signature(id));
    auto const             vars = variables(id);
    CompiledIdentity const law(id, vars);
    auto bad = for_each_assignment(vars.size(), A.size(), [&](auto values) {
      return law.holds(A, values);
    });
    if (bad) {
      return CheckResult{false, label(vars, *bad)};
    }
    return CheckResult{};
  }

  CheckResult holds_quasi_identity(Algebra const& A, QuasiIdentity const& qi) {
    require_signature(A, signature(qi));
    auto const                    vars = variables(qi);
    std::vector<CompiledIdentity> premises;
    for (auto const& p : qi.premises) {
      premises.emplace_back(p, vars);
    }
    CompiledIdentity const conclusion(qi.conclusion, vars);
    auto bad = for_each_assignment(vars.size(), A.size(), [&](auto values) {
      for (auto const& p : premises) {
        if (!p.holds(A, values)) {
          return true;
        }
      }
      return conclusion.holds(A, values);
    });
    if (bad) {
      return CheckResult{false, label(vars, *bad)};
    }
    return CheckResult{};
  }

  CheckResult is_block_group(Algebra const& A) {
    for (int which : {1, 2}) {
      if (auto r = holds_quasi_identity(A, block_group_law(which)); !r) {
        return r;
      }
    }
    return CheckResult{};
  }

  CheckResult is_block_group(FiniteSemigroup const& S) {
    return is_block_group(as_algebra(S));
  }

  char const* to_string(Op op) {
    switch (op) {
      case Op::add:
        return "add";
      case Op::mul:
        return "mul";
      case Op::star:
        return "star";
      case Op::constant:
        return "constant";
    }
    return "?";
  }

  HomResult check_homomorphism(std::span<Elem const>  f,
                               Algebra const&         A,
                               Algebra const&         B,
                               Signature              ops,
                               HomCheckOptions const& options) {
    if (f.size() != A.size()) {
      throw PartialMap("map has " + std::to_string(f.size())
                       + " entries for a domain of "
                       + std::to_string(A.size()));
    }
    std::vector<bool> hit(B.size(), false);
    for (Elem y : f) {
      if (y >= B.size()) {
        throw PartialMap("map value " + std::to_string(y)
                         + " outside the codomain");
      }
      hit[y] = true;
    }
    require_signature(A, ops);
    require_signature(B, ops);

    HomResult result;
    result.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) {
      return b;
    });

    auto fail = [&](Op op, std::vector<Elem> args) {
      result.ok        = false;
      result.violation = HomViolation{op, std::move(args)};
    };

    if (A.constant() && B.constant()) {
      ++result.checks;
      if (f[*A.constant()] != *B.constant()) {
        fail(Op::constant, {});
        return result;
      }
    }

    auto check_pair = [&](Elem x, Elem y) {
      ++result.checks;
      if (ops.add && f[A.add(x, y)] != B.add(f[x], f[y])) {
        fail(Op::add, {x, y});
        return false;
      }
      if (ops.mul && f[A.mul(x, y)] != B.mul(f[x], f[y])) {
        fail(Op::mul, {x, y});
        return false;
      }
      return true;
    };
    auto check_one = [&](Elem x) {
      ++result.checks;
      if (ops.star && f[A.star(x)] != B.star(f[x])) {
        fail(Op::star, {x});
        return false;
      }
      return true;
    };

    std::size_t const n = A.size();
    if (n <= options.exhaustive_limit) {
      for (Elem x = 0; x < n; ++x) {
        if (!check_one(x)) {
          return result;
        }
        for (Elem y = 0; y < n; ++y) {
          if (!check_pair(x, y)) {
            return result;
          }
        }
      }
      return result;
    }

    result.sampled = true;
    std::mt19937_64                     rng(options.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t k = 0; k < options.samples; ++k) {
      Elem const x = pick(rng);
      Elem const y = pick(rng);
      if (!check_one(x) || !check_pair(x, y)) {
        return result;
      }
    }
    return result;
  }

}  // namespace powersemi
