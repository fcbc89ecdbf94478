// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/algebra.hpp"

namespace powersemi {

  std::string to_string(Signature sig) {
    std::string out = "{";
    auto        put = [&out](char const* op) {
      if (out.size() > 1) {
        out += ",";
      }
      out += op;
    };
    if (sig.add) {
      put("+");
    }
    if (sig.mul) {
      put("*");
    }
    if (sig.star) {
      put("'");
    }
    return out + "}";
  }

  Elem Algebra::add(Elem, Elem) const {
    throw SignatureMismatch("algebra has no addition");
  }

  Elem Algebra::star(Elem) const {
    throw SignatureMismatch("algebra has no involution");
  }

  TableAlgebra::TableAlgebra(FiniteSemigroup                  mul,
                             std::optional<std::vector<Elem>> add,
                             std::optional<std::vector<Elem>> star,
                             std::optional<Elem>              constant)
      : mul_(std::move(mul)),
        add_(std::move(add)),
        star_(std::move(star)),
        constant_(constant) {
    std::size_t const n = mul_.size();
    if (constant_ && *constant_ >= n) {
      throw ShapeError("constant out of range");
    }
    if (add_) {
      auto const& A = *add_;
      if (A.size() != n * n) {
        throw ShapeError("addition table has the wrong shape");
      }
      for (Elem x : A) {
        if (x >= n) {
          throw ShapeError("addition table entry out of range");
        }
      }
      auto plus = [&](Elem a, Elem b) { return A[a * n + b]; };
      for (Elem a = 0; a < n; ++a) {
        if (plus(a, a) != a) {
          throw AxiomViolation("addition is not idempotent at "
                               + mul_.label(a));
        }
        for (Elem b = 0; b < n; ++b) {
          if (plus(a, b) != plus(b, a)) {
            throw AxiomViolation("addition is not commutative at "
                                 + mul_.label(a) + ", " + mul_.label(b));
          }
          for (Elem c = 0; c < n; ++c) {
            if (plus(plus(a, b), c) != plus(a, plus(b, c))) {
              throw AxiomViolation("addition is not associative");
            }
            if (mul_.product(a, plus(b, c))
                != plus(mul_.product(a, b), mul_.product(a, c))) {
              throw AxiomViolation("left distributivity fails");
            }
            if (mul_.product(plus(a, b), c)
                != plus(mul_.product(a, c), mul_.product(b, c))) {
              throw AxiomViolation("right distributivity fails");
            }
          }
        }
      }
    }
    if (star_) {
      auto const& S = *star_;
      if (S.size() != n) {
        throw ShapeError("star map has the wrong length");
      }
      for (Elem x : S) {
        if (x >= n) {
          throw ShapeError("star map entry out of range");
        }
      }
      for (Elem a = 0; a < n; ++a) {
        if (S[S[a]] != a) {
          throw AxiomViolation("star is not an involution at "
                               + mul_.label(a));
        }
        for (Elem b = 0; b < n; ++b) {
          if (S[mul_.product(a, b)] != mul_.product(S[b], S[a])) {
            throw AxiomViolation("star is not an anti-homomorphism");
          }
        }
      }
    }
  }

  Elem TableAlgebra::add(Elem a, Elem b) const {
    if (!add_) {
      return Algebra::add(a, b);
    }
    return (*add_)[a * size() + b];
  }

  Elem TableAlgebra::star(Elem a) const {
    if (!star_) {
      return Algebra::star(a);
    }
    return (*star_)[a];
  }

  TableAlgebra TableAlgebra::reduct(Signature sig, bool keep_constant) const {
    return TableAlgebra(mul_,
                        sig.add ? add_ : std::nullopt,
                        sig.star ? star_ : std::nullopt,
                        keep_constant ? constant_ : std::nullopt);
  }

  TableAlgebra TableAlgebra::with_constant(std::optional<Elem> c) const {
    return TableAlgebra(mul_, add_, star_, c);
  }

  TableAlgebra as_algebra(FiniteSemigroup S) {
    return TableAlgebra(std::move(S));
  }

  RestrictedView::RestrictedView(Algebra const& base,
                                 Signature      sig,
                                 bool           keep_constant)
      : base_(base),
        sig_(sig.intersect(base.signature())),
        keep_constant_(keep_constant) {}

  Elem RestrictedView::add(Elem a, Elem b) const {
    if (!sig_.add) {
      return Algebra::add(a, b);
    }
    return base_.add(a, b);
  }

  Elem RestrictedView::star(Elem a) const {
    if (!sig_.star) {
      return Algebra::star(a);
    }
    return base_.star(a);
  }

}  // namespace powersemi
