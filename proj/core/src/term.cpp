// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/term.hpp"

#include <algorithm>
#include <cctype>

namespace powersemi {

  struct Term::Node {
    Kind              kind;
    std::string       name;
    std::vector<Term> children;
  };

  Term::Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  Term Term::variable(std::string name) {
    return Term(
        std::make_shared<Node const>(Node{Kind::variable, std::move(name), {}}));
  }

  Term Term::product(Term left, Term right) {
    return Term(std::make_shared<Node const>(
        Node{Kind::product, {}, {std::move(left), std::move(right)}}));
  }

  Term Term::sum(Term left, Term right) {
    return Term(std::make_shared<Node const>(
        Node{Kind::sum, {}, {std::move(left), std::move(right)}}));
  }

  Term Term::star(Term child) {
    return Term(
        std::make_shared<Node const>(Node{Kind::star, {}, {std::move(child)}}));
  }

  Term::Kind Term::kind() const noexcept {
    return node_->kind;
  }

  std::string const& Term::name() const {
    return node_->name;
  }

  Term const& Term::left() const {
    return node_->children.at(0);
  }

  Term const& Term::right() const {
    return node_->children.at(1);
  }

  Term const& Term::child() const {
    return node_->children.at(0);
  }

  Signature Term::signature() const {
    Signature sig{false, false, false};
    std::vector<Term const*> stack{this};
    while (!stack.empty()) {
      Term const* t = stack.back();
      stack.pop_back();
      switch (t->kind()) {
        case Kind::variable:
          break;
        case Kind::product:
          sig.mul = true;
          break;
        case Kind::sum:
          sig.add = true;
          break;
        case Kind::star:
          sig.star = true;
          break;
      }
      for (auto const& c : t->node_->children) {
        stack.push_back(&c);
      }
    }
    return sig;
  }

  bool Term::operator==(Term const& that) const {
    return node_ == that.node_
           || (node_->kind == that.node_->kind && node_->name == that.node_->name
               && node_->children == that.node_->children);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Formula formula() {
        Term lhs = expr();
        if (!accept("=")) {
          finish();
          return lhs;
        }
        Identity first{std::move(lhs), expr()};
        if (at_end()) {
          return first;
        }
        std::vector<Identity> premises{std::move(first)};
        while (accept("&")) {
          premises.push_back(identity());
        }
        expect("->", {"'&'", "'->'", "end of input"});
        Identity conclusion = identity();
        finish();
        return QuasiIdentity{std::move(premises), std::move(conclusion)};
      }

      Term whole_term() {
        Term t = expr();
        finish();
        return t;
      }

      Identity whole_identity() {
        Identity id = identity();
        finish();
        return id;
      }

      QuasiIdentity whole_quasi_identity() {
        std::vector<Identity> premises{identity()};
        while (accept("&")) {
          premises.push_back(identity());
        }
        expect("->", {"'&'", "'->'"});
        Identity conclusion = identity();
        finish();
        return QuasiIdentity{std::move(premises), std::move(conclusion)};
      }

     private:
      Identity identity() {
        Term lhs = expr();
        expect("=", {"'='", "'+'", "'*'", "variable", "'('", "\"'\""});
        return Identity{std::move(lhs), expr()};
      }

      Term expr() {
        Term t = prod();
        while (accept("+")) {
          t = Term::sum(std::move(t), prod());
        }
        return t;
      }

      Term prod() {
        Term t = post();
        while (true) {
          if (accept("*")) {
            t = Term::product(std::move(t), post());
          } else if (starts_atom()) {
            t = Term::product(std::move(t), post());
          } else {
            return t;
          }
        }
      }

      Term post() {
        Term t = atom();
        while (accept("'")) {
          t = Term::star(std::move(t));
        }
        return t;
      }

      Term atom() {
        skip_space();
        if (accept("(")) {
          Term t = expr();
          expect(")", {"')'", "'+'", "'*'", "variable", "'('", "\"'\""});
          return t;
        }
        if (pos_ < text_.size() && std::islower(uchar(text_[pos_]))) {
          std::size_t const start = pos_++;
          while (pos_ < text_.size() && std::isdigit(uchar(text_[pos_]))) {
            ++pos_;
          }
          return Term::variable(std::string(text_.substr(start, pos_ - start)));
        }
        throw ParseError(pos_, {"variable", "'('"});
      }

      bool starts_atom() {
        skip_space();
        return pos_ < text_.size()
               && (text_[pos_] == '(' || std::islower(uchar(text_[pos_])));
      }

      bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
          pos_ += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token, std::vector<std::string> expected) {
        if (!accept(token)) {
          throw ParseError(pos_, std::move(expected));
        }
      }

      bool at_end() {
        skip_space();
        return pos_ == text_.size();
      }

      void finish() {
        if (!at_end()) {
          throw ParseError(pos_, {"end of input"});
        }
      }

      void skip_space() {
        while (pos_ < text_.size() && std::isspace(uchar(text_[pos_]))) {
          ++pos_;
        }
      }

      static unsigned char uchar(char c) {
        return static_cast<unsigned char>(c);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Formula parse(std::string_view text) {
    return Parser(text).formula();
  }

  Term parse_term(std::string_view text) {
    return Parser(text).whole_term();
  }

  Identity parse_identity(std::string_view text) {
    return Parser(text).whole_identity();
  }

  QuasiIdentity parse_quasi_identity(std::string_view text) {
    return Parser(text).whole_quasi_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Printer
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // precedence: sum 0 < product 1 < star 2 < variable 3
    int precedence(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::sum:
          return 0;
        case Term::Kind::product:
          return 1;
        case Term::Kind::star:
          return 2;
        case Term::Kind::variable:
          return 3;
      }
      return 3;
    }

    void print(Term const& t, std::string& out);

    void print_at(Term const& t, int min_precedence, std::string& out) {
      if (precedence(t) < min_precedence) {
        out += '(';
        print(t, out);
        out += ')';
      } else {
        print(t, out);
      }
    }

    void print(Term const& t, std::string& out) {
      switch (t.kind()) {
        case Term::Kind::variable:
          out += t.name();
          break;
        case Term::Kind::sum:
          print_at(t.left(), 0, out);
          out += '+';
          print_at(t.right(), 1, out);
          break;
        case Term::Kind::product: {
          print_at(t.left(), 1, out);
          print_at(t.right(), 2, out);
          break;
        }
        case Term::Kind::star:
          print_at(t.child(), 2, out);
          out += '\'';
          break;
      }
    }

    void collect(Term const& t, std::vector<std::string>& out) {
      if (t.kind() == Term::Kind::variable) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
          out.push_back(t.name());
        }
      } else if (t.kind() == Term::Kind::star) {
        collect(t.child(), out);
      } else {
        collect(t.left(), out);
        collect(t.right(), out);
      }
    }

    Signature join(Signature a, Signature b) {
      return {a.add || b.add, a.mul || b.mul, a.star || b.star};
    }
  }  // namespace

  std::string to_string(Term const& t) {
    std::string out;
    print(t, out);
    return out;
  }

  std::string to_string(Identity const& id) {
    return to_string(id.lhs) + " = " + to_string(id.rhs);
  }

  std::string to_string(QuasiIdentity const& qi) {
    std::string out;
    for (auto const& p : qi.premises) {
      if (!out.empty()) {
        out += " & ";
      }
      out += to_string(p);
    }
    return out + " -> " + to_string(qi.conclusion);
  }

  std::vector<std::string> variables(Term const& t) {
    std::vector<std::string> out;
    collect(t, out);
    return out;
  }

  std::vector<std::string> variables(Identity const& id) {
    std::vector<std::string> out;
    collect(id.lhs, out);
    collect(id.rhs, out);
    return out;
  }

  std::vector<std::string> variables(QuasiIdentity const& qi) {
    std::vector<std::string> out;
    for (auto const& p : qi.premises) {
      collect(p.lhs, out);
      collect(p.rhs, out);
    }
    collect(qi.conclusion.lhs, out);
    collect(qi.conclusion.rhs, out);
    return out;
  }

  Signature signature(Identity const& id) {
    return join(id.lhs.signature(), id.rhs.signature());
  }

  Signature signature(QuasiIdentity const& qi) {
    Signature sig = signature(qi.conclusion);
    for (auto const& p : qi.premises) {
      sig = join(sig, signature(p));
    }
    return sig;
  }

  QuasiIdentity block_group_law(int which) {
    switch (which) {
      case 1:
        return parse_quasi_identity("ef=e & ee=e & fe=f & ff=f -> e=f");
      case 2:
        return parse_quasi_identity("ef=f & ff=f & fe=e & ee=e -> e=f");
      default:
        throw InputError("there are two block-group laws");
    }
  }

  std::optional<QuasiIdentity> quasi_alias(std::string_view name) {
    if (name == "(2.1)" || name == "2.1") {
      return block_group_law(1);
    }
    if (name == "(2.2)" || name == "2.2") {
      return block_group_law(2);
    }
    return std::nullopt;
  }

}  // namespace powersemi
