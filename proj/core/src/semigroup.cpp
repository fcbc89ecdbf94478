// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace powersemi {

  namespace {
    std::string unique_label(std::vector<std::string> const& labels,
                             std::string                     wanted) {
      while (std::find(labels.begin(), labels.end(), wanted) != labels.end()) {
        wanted += "'";
      }
      return wanted;
    }

    std::vector<bool> membership(std::size_t n, std::span<Elem const> set) {
      std::vector<bool> in(n, false);
      for (Elem x : set) {
        if (x >= n) {
          throw ShapeError("element index " + std::to_string(x)
                           + " out of range");
        }
        in[x] = true;
      }
      return in;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::string                          name,
                                   std::vector<std::string>             labels,
                                   std::vector<std::vector<Elem>> const& table,
                                   Check                                check)
      : name_(std::move(name)), labels_(std::move(labels)) {
    std::size_t const n = labels_.size();
    if (table.size() != n) {
      throw ShapeError("table has " + std::to_string(table.size())
                       + " rows but there are " + std::to_string(n)
                       + " elements");
    }
    table_.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw ShapeError("table row of length " + std::to_string(row.size())
                         + ", expected " + std::to_string(n));
      }
      table_.insert(table_.end(), row.begin(), row.end());
    }
    validate(check);
  }

  FiniteSemigroup::FiniteSemigroup(std::string              name,
                                   std::vector<std::string> labels,
                                   std::vector<Elem>        flat_table,
                                   Check                    check)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        table_(std::move(flat_table)) {
    if (table_.size() != labels_.size() * labels_.size()) {
      throw ShapeError("flat table of length " + std::to_string(table_.size())
                       + " does not match " + std::to_string(labels_.size())
                       + " elements");
    }
    validate(check);
  }

  void FiniteSemigroup::validate(Check check) const {
    std::size_t const n = labels_.size();
    if (n == 0) {
      throw ShapeError("a semigroup needs at least one element");
    }
    for (Elem x : table_) {
      if (x >= n) {
        throw ShapeError("table entry " + std::to_string(x)
                         + " out of range [0, " + std::to_string(n) + ")");
      }
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) {
      throw ShapeError("element labels are not pairwise distinct");
    }
    if (check == Check::trusted) {
      return;
    }
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        Elem const ij = product(i, j);
        for (Elem k = 0; k < n; ++k) {
          if (product(ij, k) != product(i, product(j, k))) {
            throw AssociativityViolation(i, j, k);
          }
        }
      }
    }
  }

  std::vector<std::vector<Elem>> FiniteSemigroup::table() const {
    std::size_t const              n = size();
    std::vector<std::vector<Elem>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].assign(table_.begin() + i * n, table_.begin() + (i + 1) * n);
    }
    return out;
  }

  std::optional<Elem>
  FiniteSemigroup::index_of(std::string const& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - labels_.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse and Clifford structure
  ////////////////////////////////////////////////////////////////////////

  std::variant<InversionMap, NotInverseWitness>
  inversion_map(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    InversionMap      result{std::vector<Elem>(n)};
    for (Elem s = 0; s < n; ++s) {
      std::size_t count = 0;
      for (Elem t = 0; t < n; ++t) {
        if (S.product(S.product(s, t), s) == s
            && S.product(S.product(t, s), t) == t) {
          result.inv[s] = t;
          ++count;
        }
      }
      if (count != 1) {
        return NotInverseWitness{s, count};
      }
    }
    return result;
  }

  InversionMap require_inverse(FiniteSemigroup const& S) {
    auto result = inversion_map(S);
    if (auto const* w = std::get_if<NotInverseWitness>(&result)) {
      throw NotInverse(w->element, w->inverse_count);
    }
    return std::get<InversionMap>(std::move(result));
  }

  bool is_idempotent(FiniteSemigroup const& S, Elem e) noexcept {
    return S.product(e, e) == e;
  }

  std::vector<Elem> idempotents(FiniteSemigroup const& S) {
    std::vector<Elem> out;
    for (Elem e = 0; e < S.size(); ++e) {
      if (is_idempotent(S, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  PowerProfile power_profile(FiniteSemigroup const& S, Elem s) {
    // first[x] = exponent at which x first appears among the powers of s
    std::map<Elem, std::size_t> first;
    Elem                        x = s;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = first.emplace(x, k);
      if (!inserted) {
        return PowerProfile{it->second, k - it->second};
      }
      x = S.product(x, s);
    }
  }

  bool element_in_subgroup(FiniteSemigroup const& S, Elem s) {
    return power_profile(S, s).index == 1;
  }

  Elem idempotent_power(FiniteSemigroup const& S, Elem s) {
    Elem x = s;
    while (!is_idempotent(S, x)) {
      x = S.product(x, s);
    }
    return x;
  }

  CliffordCheck is_clifford(FiniteSemigroup const& S) {
    (void) require_inverse(S);
    for (Elem s = 0; s < S.size(); ++s) {
      if (!element_in_subgroup(S, s)) {
        return CliffordCheck{false, s};
      }
    }
    return CliffordCheck{true, std::nullopt};
  }

  CliffordDecomposition clifford_decomposition(FiniteSemigroup const& S) {
    if (auto check = is_clifford(S); !check) {
      throw NotClifford(*check.witness);
    }
    std::vector<Elem> const E = idempotents(S);
    std::vector<Elem>       point(S.size(), 0);
    for (Elem a = 0; a < E.size(); ++a) {
      point[E[a]] = a;
    }
    std::vector<std::string>       labels;
    std::vector<std::vector<Elem>> table(E.size(), std::vector<Elem>(E.size()));
    for (Elem a = 0; a < E.size(); ++a) {
      labels.push_back(S.label(E[a]));
      for (Elem b = 0; b < E.size(); ++b) {
        Elem const ab = S.product(E[a], E[b]);
        if (!is_idempotent(S, ab)) {
          throw Inconsistency("product of idempotents is not idempotent");
        }
        table[a][b] = point[ab];
      }
    }
    CliffordDecomposition result{
        FiniteSemigroup(S.name() + "/Y", labels, table), E, {}, {}};

    auto const& Y = result.semilattice;
    for (Elem a = 0; a < Y.size(); ++a) {
      for (Elem b = 0; b < Y.size(); ++b) {
        if (Y.product(a, b) != Y.product(b, a)) {
          throw Inconsistency("idempotents do not commute");
        }
      }
      if (Y.product(a, a) != a) {
        throw Inconsistency("semilattice point is not idempotent");
      }
    }

    result.phi.resize(S.size());
    result.groups.resize(E.size());
    for (Elem s = 0; s < S.size(); ++s) {
      result.phi[s] = point[idempotent_power(S, s)];
      result.groups[result.phi[s]].push_back(s);
    }
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (result.phi[S.product(s, t)]
            != Y.product(result.phi[s], result.phi[t])) {
          throw Inconsistency("structure map is not a homomorphism");
        }
      }
    }
    for (Elem a = 0; a < E.size(); ++a) {
      auto const& fibre = result.groups[a];
      auto        sub   = subsemigroup(S, fibre);
      if (!identity_element(sub.semigroup)) {
        throw Inconsistency("fibre has no identity");
      }
      for (Elem x = 0; x < sub.semigroup.size(); ++x) {
        if (!element_in_subgroup(sub.semigroup, x)) {
          throw Inconsistency("fibre is not a group");
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures and sub-tables
  ////////////////////////////////////////////////////////////////////////

  Subsemigroup subsemigroup(FiniteSemigroup const& S,
                            std::span<Elem const>  elements) {
    std::vector<Elem> members(elements.begin(), elements.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      throw ShapeError("empty subsemigroup");
    }
    std::vector<Elem> local(S.size(), static_cast<Elem>(-1));
    for (Elem k = 0; k < members.size(); ++k) {
      if (members[k] >= S.size()) {
        throw ShapeError("element index out of range");
      }
      local[members[k]] = k;
    }
    std::vector<std::string> labels;
    std::vector<Elem>        table;
    table.reserve(members.size() * members.size());
    for (Elem a : members) {
      labels.push_back(S.label(a));
      for (Elem b : members) {
        Elem const ab = local[S.product(a, b)];
        if (ab == static_cast<Elem>(-1)) {
          throw ShapeError("subset is not closed under the product");
        }
        table.push_back(ab);
      }
    }
    return Subsemigroup{
        FiniteSemigroup(S.name() + "'",
                        std::move(labels),
                        std::move(table),
                        FiniteSemigroup::Check::trusted),
        std::move(members)};
  }

  std::vector<Elem> semigroup_closure(FiniteSemigroup const& S,
                                      std::span<Elem const>  gens) {
    std::vector<bool> in = membership(S.size(), gens);
    std::vector<Elem> out;
    for (Elem g : gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(g);
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (Elem g : gens) {
        Elem const x = S.product(out[k], g);
        if (!in[x]) {
          in[x] = true;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Subsemigroup generated_inverse_subsemigroup(FiniteSemigroup const& S,
                                              InversionMap const&    inv,
                                              std::span<Elem const>  gens) {
    std::vector<Elem> all(gens.begin(), gens.end());
    for (Elem g : gens) {
      all.push_back(inv(g));
    }
    auto closed = semigroup_closure(S, all);
    auto result = subsemigroup(S, closed);
    result.semigroup.set_name("<" + S.name() + " inverse closure>");
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients and adjunctions
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup rees_quotient(FiniteSemigroup const& S,
                                std::span<Elem const>  ideal) {
    if (ideal.empty()) {
      throw ShapeError("the ideal of a Rees quotient must be nonempty");
    }
    std::vector<bool> in = membership(S.size(), ideal);
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem i = 0; i < S.size(); ++i) {
        if (in[i] && (!in[S.product(s, i)] || !in[S.product(i, s)])) {
          throw NotAnIdeal(s, i);
        }
      }
    }
    std::vector<Elem>        keep;
    std::vector<std::string> labels;
    for (Elem s = 0; s < S.size(); ++s) {
      if (!in[s]) {
        keep.push_back(s);
        labels.push_back(S.label(s));
      }
    }
    Elem const        zero = static_cast<Elem>(keep.size());
    std::vector<Elem> local(S.size(), zero);
    for (Elem k = 0; k < keep.size(); ++k) {
      local[keep[k]] = k;
    }
    labels.push_back(unique_label(labels, "0"));
    std::size_t const m = labels.size();
    std::vector<Elem> table(m * m, zero);
    for (Elem a = 0; a < keep.size(); ++a) {
      for (Elem b = 0; b < keep.size(); ++b) {
        table[a * m + b] = local[S.product(keep[a], keep[b])];
      }
    }
    return FiniteSemigroup(S.name() + "/I", std::move(labels), std::move(table));
  }

  namespace {
    FiniteSemigroup adjoin(FiniteSemigroup const& S,
                           bool                   zero,
                           std::string const&     label,
                           std::string const&     suffix) {
      std::size_t const        n = S.size();
      std::size_t const        m = n + 1;
      std::vector<std::string> labels = S.labels();
      labels.push_back(unique_label(labels, label));
      std::vector<Elem> table(m * m);
      Elem const        extra = static_cast<Elem>(n);
      for (Elem a = 0; a < m; ++a) {
        for (Elem b = 0; b < m; ++b) {
          Elem value;
          if (a < n && b < n) {
            value = S.product(a, b);
          } else if (zero) {
            value = extra;
          } else {
            value = (a == extra) ? b : a;
          }
          table[a * m + b] = value;
        }
      }
      return FiniteSemigroup(S.name() + suffix, std::move(labels), table);
    }
  }  // namespace

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& S) {
    return adjoin(S, true, "0", "^0");
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    return adjoin(S, false, "1", "^1");
  }

  std::optional<Elem> identity_element(FiniteSemigroup const& S) {
    for (Elem e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (Elem x = 0; x < S.size() && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup strong_semilattice(FiniteSemigroup const&              Y,
                                     std::vector<FiniteSemigroup> const& groups,
                                     std::vector<SemilatticeLink> const& links,
                                     std::string                         name) {
    std::size_t const p = Y.size();
    for (Elem a = 0; a < p; ++a) {
      if (Y.product(a, a) != a) {
        throw LinkIncompatible("index semigroup is not a semilattice");
      }
      for (Elem b = 0; b < p; ++b) {
        if (Y.product(a, b) != Y.product(b, a)) {
          throw LinkIncompatible("index semigroup is not a semilattice");
        }
      }
    }
    if (groups.size() != p) {
      throw LinkIncompatible("need exactly one group per semilattice point");
    }
    std::vector<Elem> ids;
    for (auto const& G : groups) {
      auto e = identity_element(G);
      if (!e) {
        throw LinkIncompatible("group " + G.name() + " has no identity");
      }
      for (Elem x = 0; x < G.size(); ++x) {
        if (!element_in_subgroup(G, x)) {
          throw LinkIncompatible(G.name() + " is not a group");
        }
      }
      ids.push_back(*e);
    }

    // link[a][b] for a >= b
    std::vector<std::vector<std::optional<std::vector<Elem>>>> link(
        p, std::vector<std::optional<std::vector<Elem>>>(p));
    for (Elem a = 0; a < p; ++a) {
      std::vector<Elem> id(groups[a].size());
      std::iota(id.begin(), id.end(), 0);
      link[a][a] = std::move(id);
    }
    for (auto const& l : links) {
      if (l.from >= p || l.to >= p || Y.product(l.from, l.to) != l.to) {
        throw LinkIncompatible("link between incomparable points");
      }
      auto const& G = groups[l.from];
      auto const& H = groups[l.to];
      if (l.map.size() != G.size()) {
        throw LinkIncompatible("link is not total");
      }
      for (Elem x : l.map) {
        if (x >= H.size()) {
          throw LinkIncompatible("link image out of range");
        }
      }
      for (Elem x = 0; x < G.size(); ++x) {
        for (Elem y = 0; y < G.size(); ++y) {
          if (l.map[G.product(x, y)] != H.product(l.map[x], l.map[y])) {
            throw LinkIncompatible("link is not a homomorphism");
          }
        }
      }
      if (l.from == l.to) {
        if (l.map != *link[l.from][l.from]) {
          throw LinkIncompatible("diagonal link must be the identity");
        }
        continue;
      }
      link[l.from][l.to] = l.map;
    }
    for (Elem a = 0; a < p; ++a) {
      for (Elem b = 0; b < p; ++b) {
        if (Y.product(a, b) == b && !link[a][b]) {
          throw LinkIncompatible("missing link from " + Y.label(a) + " to "
                                 + Y.label(b));
        }
      }
    }
    for (Elem a = 0; a < p; ++a) {
      for (Elem b = 0; b < p; ++b) {
        if (Y.product(a, b) != b) {
          continue;
        }
        for (Elem c = 0; c < p; ++c) {
          if (Y.product(b, c) != c) {
            continue;
          }
          auto const& ab = *link[a][b];
          auto const& bc = *link[b][c];
          auto const& ac = *link[a][c];
          for (Elem x = 0; x < groups[a].size(); ++x) {
            if (bc[ab[x]] != ac[x]) {
              throw LinkIncompatible("links do not compose along "
                                     + Y.label(a) + " > " + Y.label(b)
                                     + " > " + Y.label(c));
            }
          }
        }
      }
    }

    std::vector<Elem> offset(p + 1, 0);
    for (Elem a = 0; a < p; ++a) {
      offset[a + 1] = offset[a] + static_cast<Elem>(groups[a].size());
    }
    std::size_t const        n = offset[p];
    std::vector<std::string> labels;
    std::vector<Elem>        point(n);
    for (Elem a = 0; a < p; ++a) {
      for (Elem x = 0; x < groups[a].size(); ++x) {
        labels.push_back(groups[a].label(x) + "@" + Y.label(a));
        point[offset[a] + x] = a;
      }
    }
    std::vector<Elem> table(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        Elem const a = point[s], b = point[t], c = Y.product(a, b);
        Elem const x = (*link[a][c])[s - offset[a]];
        Elem const y = (*link[b][c])[t - offset[b]];
        table[s * n + t] = offset[c] + groups[c].product(x, y);
      }
    }
    if (name.empty()) {
      name = "strong semilattice over " + Y.name();
    }
    return FiniteSemigroup(std::move(name), std::move(labels), std::move(table));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& A,
                                 FiniteSemigroup const& B) {
    std::size_t const        m = A.size(), k = B.size(), n = m * k;
    std::vector<std::string> labels;
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < k; ++b) {
        labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
      }
    }
    std::vector<Elem> table(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        Elem const a = A.product(s / k, t / k);
        Elem const b = B.product(s % k, t % k);
        table[s * n + t] = a * static_cast<Elem>(k) + b;
      }
    }
    return FiniteSemigroup(A.name() + "x" + B.name(),
                           std::move(labels),
                           std::move(table),
                           FiniteSemigroup::Check::trusted);
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  bool is_isomorphism(FiniteSemigroup const& A,
                      FiniteSemigroup const& B,
                      std::span<Elem const>  f) {
    if (A.size() != B.size() || f.size() != A.size()) {
      return false;
    }
    std::vector<bool> hit(B.size(), false);
    for (Elem x : f) {
      if (x >= B.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (f[A.product(x, y)] != B.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    constexpr Elem unset = static_cast<Elem>(-1);

    class IsomorphismSearch {
     public:
      IsomorphismSearch(FiniteSemigroup const& A, FiniteSemigroup const& B)
          : A_(A), B_(B) {
        for (Elem x = 0; x < A.size(); ++x) {
          profile_a_.push_back(power_profile(A, x));
          profile_b_.push_back(power_profile(B, x));
        }
        // Greedy generating set of A.
        std::vector<bool> covered(A.size(), false);
        for (Elem x = 0; x < A.size(); ++x) {
          if (!covered[x]) {
            gens_.push_back(x);
            for (Elem y : semigroup_closure(A, gens_)) {
              covered[y] = true;
            }
          }
        }
      }

      bool profiles_match() const {
        auto a = profile_a_, b = profile_b_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
      }

      std::optional<std::vector<Elem>> run() {
        std::vector<Elem> f(A_.size(), unset);
        if (search(0, f)) {
          return f;
        }
        return std::nullopt;
      }

     private:
      // Extends f along right multiplication by the first `k` generators;
      // false on a conflict.
      bool propagate(std::size_t k, std::vector<Elem>& f) const {
        std::vector<bool> used(B_.size(), false);
        std::vector<Elem> queue;
        for (Elem x = 0; x < A_.size(); ++x) {
          if (f[x] != unset) {
            if (used[f[x]]) {
              return false;
            }
            used[f[x]] = true;
            queue.push_back(x);
          }
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
          Elem const x = queue[q];
          for (std::size_t g = 0; g < k; ++g) {
            Elem const xg  = A_.product(x, gens_[g]);
            Elem const img = B_.product(f[x], f[gens_[g]]);
            if (f[xg] == unset) {
              if (used[img] || profile_a_[xg] != profile_b_[img]) {
                return false;
              }
              f[xg]     = img;
              used[img] = true;
              queue.push_back(xg);
            } else if (f[xg] != img) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t k, std::vector<Elem>& f) const {
        if (k == gens_.size()) {
          return is_isomorphism(A_, B_, f);
        }
        Elem const g = gens_[k];
        if (f[g] != unset) {
          auto next = f;
          if (propagate(k + 1, next) && search(k + 1, next)) {
            f = std::move(next);
            return true;
          }
          return false;
        }
        for (Elem b = 0; b < B_.size(); ++b) {
          if (profile_a_[g] != profile_b_[b]) {
            continue;
          }
          auto next = f;
          next[g]   = b;
          if (propagate(k + 1, next) && search(k + 1, next)) {
            f = std::move(next);
            return true;
          }
        }
        return false;
      }

      FiniteSemigroup const&    A_;
      FiniteSemigroup const&    B_;
      std::vector<PowerProfile> profile_a_;
      std::vector<PowerProfile> profile_b_;
      std::vector<Elem>         gens_;
    };
  }  // namespace

  std::optional<std::vector<Elem>> find_isomorphism(FiniteSemigroup const& A,
                                                    FiniteSemigroup const& B) {
    if (A.size() != B.size()
        || idempotents(A).size() != idempotents(B).size()) {
      return std::nullopt;
    }
    IsomorphismSearch search(A, B);
    if (!search.profiles_match()) {
      return std::nullopt;
    }
    return search.run();
  }

}  // namespace powersemi
