// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/power.hpp"

#include <algorithm>

namespace powersemi {

  SubsetCode SubsetCode::of(std::span<Elem const> members) {
    std::uint32_t bits = 0;
    for (Elem e : members) {
      if (e >= 32) {
        throw ShapeError("subset member out of range");
      }
      bits |= std::uint32_t{1} << e;
    }
    return SubsetCode(bits);
  }

  std::vector<Elem> SubsetCode::members() const {
    std::vector<Elem> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PowerAlgebra
  ////////////////////////////////////////////////////////////////////////

  PowerAlgebra::PowerAlgebra(FiniteSemigroup base, EmptySet mode, std::size_t cap)
      : base_(std::move(base)), mode_(mode) {
    cap = std::min(cap, default_cap);
    if (base_.size() > cap) {
      throw CarrierTooLarge(base_.size(), cap);
    }
    if (auto inv = inversion_map(base_);
        std::holds_alternative<InversionMap>(inv)) {
      inversion_ = std::get<InversionMap>(std::move(inv));
    }
    std::size_t const n = base_.size();
    left_.resize(n);
    for (Elem a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::uint32_t byte = 0; byte < 256; ++byte) {
          std::uint32_t image = 0;
          for (std::uint32_t k = 0; k < 8; ++k) {
            Elem const b = static_cast<Elem>(8 * c + k);
            if (((byte >> k) & 1U) && b < n) {
              image |= std::uint32_t{1} << base_.product(a, b);
            }
          }
          left_[a][c][byte] = image;
        }
      }
    }
  }

  std::size_t PowerAlgebra::size() const noexcept {
    std::size_t const all = std::size_t{1} << width();
    return includes_empty() ? all : all - 1;
  }

  SubsetCode PowerAlgebra::product(SubsetCode A, SubsetCode B) const noexcept {
    std::uint32_t const lo  = B.bits() & 0xFFU;
    std::uint32_t const hi  = (B.bits() >> 8) & 0xFFU;
    std::uint32_t       out = 0;
    for (std::uint32_t a = A.bits(); a != 0; a &= a - 1) {
      auto const& row = left_[std::countr_zero(a)];
      out |= row[0][lo] | row[1][hi];
    }
    return SubsetCode(out);
  }

  SubsetCode PowerAlgebra::inverse(SubsetCode A) const {
    if (!inversion_) {
      throw SignatureMismatch("base semigroup " + base_.name()
                              + " is not inverse");
    }
    std::uint32_t out = 0;
    for (Elem a : A.members()) {
      out |= std::uint32_t{1} << (*inversion_)(a);
    }
    return SubsetCode(out);
  }

  Elem PowerAlgebra::index(SubsetCode A) const {
    if (A.bits() >> width() != 0 || (A.empty() && !includes_empty())) {
      throw ShapeError("subset code outside the power algebra");
    }
    return includes_empty() ? A.bits() : A.bits() - 1;
  }

  SubsetCode PowerAlgebra::code(Elem index) const {
    if (index >= size()) {
      throw ShapeError("index outside the power algebra");
    }
    return SubsetCode(includes_empty() ? index : index + 1);
  }

  std::string PowerAlgebra::format(SubsetCode A) const {
    std::string out = "{";
    bool        first = true;
    for (Elem a : A.members()) {
      if (!first) {
        out += ",";
      }
      out += base_.label(a);
      first = false;
    }
    return out + "}";
  }

  PowerView PowerAlgebra::involution_view() const {
    if (!is_inverse()) {
      throw SignatureMismatch("base semigroup " + base_.name()
                              + " is not inverse");
    }
    return view(Signature::involution());
  }

  FiniteSemigroup PowerAlgebra::power_semigroup(std::size_t cap) const {
    if (width() > cap) {
      throw CarrierTooLarge(width(), cap);
    }
    std::size_t const        m = size();
    std::vector<std::string> labels;
    labels.reserve(m);
    std::vector<Elem> table(m * m);
    for (Elem x = 0; x < m; ++x) {
      labels.push_back(format(code(x)));
      for (Elem y = 0; y < m; ++y) {
        table[x * m + y] = index(product(code(x), code(y)));
      }
    }
    // Associativity is inherited from the base; the eager n^3 check is only
    // affordable on the smaller powers.
    auto const check = m <= 256 ? FiniteSemigroup::Check::eager
                                : FiniteSemigroup::Check::trusted;
    return FiniteSemigroup(
        "P(" + base_.name() + ")", std::move(labels), std::move(table), check);
  }

  TableAlgebra PowerAlgebra::to_table_algebra(std::size_t cap) const {
    auto              mul = power_semigroup(cap);
    std::size_t const m   = size();
    std::vector<Elem> add(m * m);
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        add[x * m + y] = index(code(x) | code(y));
      }
    }
    std::optional<std::vector<Elem>> star;
    if (is_inverse()) {
      star.emplace(m);
      for (Elem x = 0; x < m; ++x) {
        (*star)[x] = index(inverse(code(x)));
      }
    }
    std::optional<Elem> zero;
    if (mode_ == EmptySet::constant) {
      zero = index(SubsetCode());
    }
    return TableAlgebra(std::move(mul), std::move(add), std::move(star), zero);
  }

  PowerView::PowerView(PowerAlgebra const& parent, Signature sig)
      : parent_(parent), sig_(sig.intersect(parent.signature())) {
    if (!parent.signature().contains(sig)) {
      throw SignatureMismatch("power algebra lacks operations "
                              + to_string(sig));
    }
  }

  std::size_t PowerView::size() const noexcept {
    return parent_.size();
  }

  Elem PowerView::mul(Elem a, Elem b) const {
    return parent_.index(parent_.product(parent_.code(a), parent_.code(b)));
  }

  Elem PowerView::add(Elem a, Elem b) const {
    if (!sig_.add) {
      return Algebra::add(a, b);
    }
    return parent_.index(parent_.code(a) | parent_.code(b));
  }

  Elem PowerView::star(Elem a) const {
    if (!sig_.star) {
      return Algebra::star(a);
    }
    return parent_.index(parent_.inverse(parent_.code(a)));
  }

  std::string PowerView::label(Elem a) const {
    return parent_.format(parent_.code(a));
  }

  std::optional<Elem> PowerView::constant() const {
    if (parent_.mode() == EmptySet::constant) {
      return parent_.index(SubsetCode());
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean matrices and the Brandt algebras
  ////////////////////////////////////////////////////////////////////////

  std::uint32_t bool_matrix_product(std::uint32_t a,
                                    std::uint32_t b,
                                    std::size_t   n) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (((a >> (i * n + k)) & 1U) && ((b >> (k * n + j)) & 1U)) {
            out |= std::uint32_t{1} << (i * n + j);
            break;
          }
        }
      }
    }
    return out;
  }

  std::uint32_t bool_matrix_transpose(std::uint32_t a, std::size_t n) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((a >> (i * n + j)) & 1U) {
          out |= std::uint32_t{1} << (j * n + i);
        }
      }
    }
    return out;
  }

  std::string bool_matrix_label(std::uint32_t a, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != 0) {
        out += '/';
      }
      for (std::size_t j = 0; j < n; ++j) {
        out += ((a >> (i * n + j)) & 1U) ? '1' : '0';
      }
    }
    return out;
  }

  TableAlgebra boolean_matrix_semiring(std::size_t n) {
    if (n == 0 || n > 3) {
      throw CarrierTooLarge(n, 3);
    }
    std::size_t const        m = std::size_t{1} << (n * n);
    std::vector<std::string> labels;
    std::vector<Elem>        mul(m * m), add(m * m), star(m);
    for (std::uint32_t a = 0; a < m; ++a) {
      labels.push_back(bool_matrix_label(a, n));
      star[a] = bool_matrix_transpose(a, n);
      for (std::uint32_t b = 0; b < m; ++b) {
        mul[a * m + b] = bool_matrix_product(a, b, n);
        add[a * m + b] = a | b;
      }
    }
    auto const check = m <= 16 ? FiniteSemigroup::Check::eager
                               : FiniteSemigroup::Check::trusted;
    return TableAlgebra(
        FiniteSemigroup(
            "R" + std::to_string(n), std::move(labels), std::move(mul), check),
        std::move(add),
        std::move(star));
  }

  namespace {
    // 00/00, 01/00, 00/10, 10/00, 00/01 and, for B_2^1, 10/01
    constexpr std::array<std::uint32_t, 6> brandt_codes{0b0000,
                                                        0b0010,
                                                        0b0100,
                                                        0b0001,
                                                        0b1000,
                                                        0b1001};

    FiniteSemigroup matrix_semigroup(std::string                       name,
                                     std::span<std::uint32_t const> codes) {
      std::size_t const        n = codes.size();
      std::vector<std::string> labels;
      std::vector<Elem>        table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(bool_matrix_label(codes[a], 2));
        for (std::size_t b = 0; b < n; ++b) {
          auto const ab = bool_matrix_product(codes[a], codes[b], 2);
          auto const it = std::find(codes.begin(), codes.end(), ab);
          table[a * n + b] = static_cast<Elem>(it - codes.begin());
        }
      }
      return FiniteSemigroup(std::move(name), std::move(labels), table);
    }

    Elem position(std::span<std::uint32_t const> codes, std::uint32_t c) {
      auto const it = std::find(codes.begin(), codes.end(), c);
      if (it == codes.end()) {
        throw Inconsistency("matrix " + bool_matrix_label(c, 2)
                            + " leaves the Brandt algebra");
      }
      return static_cast<Elem>(it - codes.begin());
    }
  }  // namespace

  BrandtB2 brandt_b2() {
    std::span<std::uint32_t const> codes(brandt_codes.data(), 5);
    auto S   = matrix_semigroup("B2", codes);
    auto inv = require_inverse(S);
    for (Elem x = 0; x < 5; ++x) {
      if (codes[inv(x)] != bool_matrix_transpose(codes[x], 2)) {
        throw Inconsistency("B2 inversion is not the transpose");
      }
    }
    return BrandtB2{
        std::move(S), std::move(inv), {codes.begin(), codes.end()}};
  }

  std::vector<std::uint32_t> b21_matrices() {
    return {brandt_codes.begin(), brandt_codes.end()};
  }

  TableAlgebra brandt_monoid_b21() {
    std::span<std::uint32_t const> codes(brandt_codes);
    auto              S = matrix_semigroup("B21", codes);
    std::size_t const n = codes.size();
    std::vector<Elem> add(n * n), star(n);
    for (std::size_t a = 0; a < n; ++a) {
      star[a] = position(codes, bool_matrix_transpose(codes[a], 2));
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = position(codes, codes[a] & codes[b]);
      }
    }
    return TableAlgebra(std::move(S), std::move(add), std::move(star));
  }

  std::vector<Elem> sigma_map(PowerAlgebra const& P) {
    auto const B2 = brandt_b2();
    if (!P.base().same_table(B2.semigroup)
        || P.base().labels() != B2.semigroup.labels()) {
      throw WrongBase("sigma is defined on the power algebra of B2 only");
    }
    if (!P.includes_empty()) {
      throw WrongBase("sigma needs the empty set in the power algebra");
    }
    std::vector<Elem> f(P.size());
    for (Elem k = 0; k < P.size(); ++k) {
      std::uint32_t sum = 0;
      for (Elem a : P.code(k).members()) {
        sum |= B2.matrix[a];
      }
      f[k] = sum;
    }
    return f;
  }

}  // namespace powersemi
