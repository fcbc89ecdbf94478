// Slow, obviously-correct reference computations the library is checked
// against.  Nothing here calls into the library's algorithms; only
// FiniteSemigroup accessors and the Algebra interface are used to read
// tables.

#ifndef POWERSEMI_TESTS_ORACLES_HPP_
#define POWERSEMI_TESTS_ORACLES_HPP_

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "powersemi/algebra.hpp"
#include "powersemi/semigroup.hpp"

namespace oracle {

  using powersemi::Elem;
  using Table  = std::vector<std::vector<Elem>>;
  using Subset = std::set<Elem>;

  inline Table table_of(powersemi::FiniteSemigroup const& S) {
    Table t(S.size(), std::vector<Elem>(S.size()));
    for (Elem i = 0; i < S.size(); ++i) {
      for (Elem j = 0; j < S.size(); ++j) {
        t[i][j] = S.product(i, j);
      }
    }
    return t;
  }

  inline bool associative(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Number of t with sts = s and tst = t.
  inline std::size_t inverse_count(Table const& t, Elem s) {
    std::size_t count = 0;
    for (Elem x = 0; x < t.size(); ++x) {
      if (t[t[s][x]][s] == s && t[t[x][s]][x] == x) {
        ++count;
      }
    }
    return count;
  }

  inline std::vector<Elem> idempotents(Table const& t) {
    std::vector<Elem> out;
    for (Elem x = 0; x < t.size(); ++x) {
      if (t[x][x] == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! s lies in a subgroup iff some power s^(k+1) with k >= 1 returns to s.
  inline bool in_subgroup(Table const& t, Elem s) {
    Elem p = s;
    for (std::size_t k = 0; k < t.size() + 1; ++k) {
      p = t[p][s];
      if (p == s) {
        return true;
      }
    }
    return false;
  }

  inline Subset product(Table const& t, Subset const& A, Subset const& B) {
    Subset out;
    for (Elem a : A) {
      for (Elem b : B) {
        out.insert(t[a][b]);
      }
    }
    return out;
  }

  inline Subset from_bits(std::uint32_t bits) {
    Subset out;
    for (Elem i = 0; i < 32; ++i) {
      if ((bits >> i) & 1U) {
        out.insert(i);
      }
    }
    return out;
  }

  inline std::uint32_t to_bits(Subset const& A) {
    std::uint32_t bits = 0;
    for (Elem a : A) {
      bits |= std::uint32_t{1} << a;
    }
    return bits;
  }

  //! All subgroups of a group table, by scanning every subset.
  inline std::vector<Subset> subgroups_by_scan(Table const& t) {
    std::vector<Subset> out;
    std::size_t const   n = t.size();
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
      Subset const A = from_bits(bits);
      if (product(t, A, A) == A) {  // finite + closed + nonempty
        out.push_back(A);
      }
    }
    return out;
  }

  inline std::size_t binomial(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> pascal(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      pascal[i].assign(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) {
        pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
      }
    }
    return k > n ? 0 : pascal[n][k];
  }

  // 2x2 Boolean matrices written "ab/cd".
  using Mat = std::array<std::array<int, 2>, 2>;

  inline Mat mat(std::string const& label) {
    if (label.size() != 5 || label[2] != '/') {
      throw std::invalid_argument("not a 2x2 matrix label: " + label);
    }
    return {{{label[0] - '0', label[1] - '0'}, {label[3] - '0', label[4] - '0'}}};
  }

  inline std::string label(Mat const& m) {
    std::string out;
    out += char('0' + m[0][0]);
    out += char('0' + m[0][1]);
    out += '/';
    out += char('0' + m[1][0]);
    out += char('0' + m[1][1]);
    return out;
  }

  inline Mat mat_mul(Mat const& a, Mat const& b) {
    Mat c{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          c[i][j] = c[i][j] || (a[i][k] && b[k][j]);
        }
      }
    }
    return c;
  }

  inline Mat mat_max(Mat const& a, Mat const& b) {
    Mat c{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        c[i][j] = a[i][j] || b[i][j];
      }
    }
    return c;
  }

  inline Mat hadamard(Mat const& a, Mat const& b) {
    Mat c{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        c[i][j] = a[i][j] && b[i][j];
      }
    }
    return c;
  }

  inline Mat transpose(Mat const& a) {
    return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}};
  }

  //! Evaluates an identity's two sides straight from the text, without
  //! building a tree.  Single-letter variables only.
  class DirectEvaluator {
   public:
    DirectEvaluator(powersemi::Algebra const& A, std::map<char, Elem> values)
        : A_(A), values_(std::move(values)) {}

    bool holds(std::string const& law) {
      text_ = law;
      pos_  = 0;
      Elem const lhs = expr();
      skip();
      if (text_.at(pos_) != '=') {
        throw std::invalid_argument("expected '=' in " + law);
      }
      ++pos_;
      Elem const rhs = expr();
      return lhs == rhs;
    }

   private:
    Elem expr() {
      Elem v = prod();
      while (peek() == '+') {
        ++pos_;
        v = A_.add(v, prod());
      }
      return v;
    }

    Elem prod() {
      Elem v = post();
      while (true) {
        char const c = peek();
        if (c == '*') {
          ++pos_;
          v = A_.mul(v, post());
        } else if (c == '(' || std::islower(static_cast<unsigned char>(c))) {
          v = A_.mul(v, post());
        } else {
          return v;
        }
      }
    }

    Elem post() {
      Elem v = atom();
      while (peek() == '\'') {
        ++pos_;
        v = A_.star(v);
      }
      return v;
    }

    Elem atom() {
      char const c = peek();
      ++pos_;
      if (c == '(') {
        Elem const v = expr();
        if (peek() != ')') {
          throw std::invalid_argument("unbalanced parentheses");
        }
        ++pos_;
        return v;
      }
      return values_.at(c);
    }

    char peek() {
      skip();
      return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip() {
      while (pos_ < text_.size() && text_[pos_] == ' ') {
        ++pos_;
      }
    }

    powersemi::Algebra const& A_;
    std::map<char, Elem>      values_;
    std::string               text_;
    std::size_t               pos_ = 0;
  };

  //! Every assignment of the letters in `vars` satisfies `law`.
  inline bool holds_everywhere(powersemi::Algebra const& A,
                               std::string const&        vars,
                               std::string const&        law) {
    std::vector<Elem> v(vars.size(), 0);
    while (true) {
      std::map<char, Elem> values;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        values[vars[i]] = v[i];
      }
      if (!DirectEvaluator(A, values).holds(law)) {
        return false;
      }
      std::size_t pos = 0;
      while (pos < v.size() && ++v[pos] == A.size()) {
        v[pos++] = 0;
      }
      if (pos == v.size()) {
        return true;
      }
    }
  }

}  // namespace oracle

#endif  // POWERSEMI_TESTS_ORACLES_HPP_
