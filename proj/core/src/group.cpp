// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "powersemi/fixtures.hpp"

namespace powersemi {

  FiniteGroup::FiniteGroup(FiniteSemigroup table)
      : FiniteGroup(std::move(table), {}) {}

  FiniteGroup::FiniteGroup(FiniteSemigroup table, std::vector<Elem> to_parent)
      : table_(std::move(table)), identity_(0), to_parent_(std::move(to_parent)) {
    auto e = identity_element(table_);
    if (!e) {
      throw NotAGroup(table_.name() + " has no identity");
    }
    identity_ = *e;
    inverses_.resize(table_.size());
    for (Elem g = 0; g < table_.size(); ++g) {
      bool found = false;
      for (Elem h = 0; h < table_.size() && !found; ++h) {
        if (table_.product(g, h) == identity_
            && table_.product(h, g) == identity_) {
          inverses_[g] = h;
          found        = true;
        }
      }
      if (!found) {
        throw NotAGroup(table_.label(g) + " has no inverse in "
                        + table_.name());
      }
    }
    if (to_parent_.empty()) {
      to_parent_.resize(table_.size());
      std::iota(to_parent_.begin(), to_parent_.end(), 0);
    } else if (to_parent_.size() != table_.size()) {
      throw ShapeError("embedding has the wrong length");
    }
  }

  Subgroup::Subgroup(std::size_t group_size, std::vector<Elem> members)
      : members_(std::move(members)), in_(group_size, false) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    for (Elem g : members_) {
      if (g >= group_size) {
        throw NotASubgroup("member out of range");
      }
      in_[g] = true;
    }
  }

  std::strong_ordering Subgroup::operator<=>(Subgroup const& that) const {
    if (auto c = size() <=> that.size(); c != 0) {
      return c;
    }
    return members_ <=> that.members_;
  }

  Subgroup subgroup_closure(FiniteGroup const& G, std::span<Elem const> gens) {
    // In a finite group the submonoid generated by a set is a subgroup.
    std::vector<bool> in(G.size(), false);
    std::vector<Elem> out{G.identity()};
    in[G.identity()] = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (Elem g : gens) {
        Elem const x = G.product(out[k], g);
        if (!in[x]) {
          in[x] = true;
          out.push_back(x);
        }
      }
    }
    return Subgroup(G.size(), std::move(out));
  }

  Subgroup trivial_subgroup(FiniteGroup const& G) {
    return Subgroup(G.size(), {G.identity()});
  }

  Subgroup whole_group(FiniteGroup const& G) {
    std::vector<Elem> all(G.size());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(G.size(), std::move(all));
  }

  Subgroup make_subgroup(FiniteGroup const& G, std::span<Elem const> members) {
    Subgroup H(G.size(), std::vector<Elem>(members.begin(), members.end()));
    if (!H.contains(G.identity())) {
      throw NotASubgroup("subset does not contain the identity");
    }
    for (Elem a : H.members()) {
      if (!H.contains(G.inverse(a))) {
        throw NotASubgroup("subset is not closed under inverses");
      }
      for (Elem b : H.members()) {
        if (!H.contains(G.product(a, b))) {
          throw NotASubgroup("subset is not closed under the product");
        }
      }
    }
    return H;
  }

  FiniteGroup as_group(FiniteGroup const& G, Subgroup const& H) {
    auto              sub = subsemigroup(G.semigroup(), H.members());
    std::vector<Elem> to_parent;
    for (Elem g : sub.to_parent) {
      to_parent.push_back(G.to_parent()[g]);
    }
    return FiniteGroup(std::move(sub.semigroup), std::move(to_parent));
  }

  FiniteGroup maximal_subgroup_at(FiniteSemigroup const& S, Elem e) {
    if (e >= S.size() || !is_idempotent(S, e)) {
      throw NotIdempotent("element " + std::to_string(e)
                          + " is not idempotent");
    }
    std::set<Elem> local;
    for (Elem x = 0; x < S.size(); ++x) {
      local.insert(S.product(S.product(e, x), e));
    }
    std::vector<Elem> units;
    for (Elem a : local) {
      for (Elem b : local) {
        if (S.product(a, b) == e && S.product(b, a) == e) {
          units.push_back(a);
          break;
        }
      }
    }
    auto sub = subsemigroup(S, units);
    sub.semigroup.set_name("H(" + S.label(e) + ")");
    return FiniteGroup(std::move(sub.semigroup), std::move(sub.to_parent));
  }

  std::vector<Subgroup> enumerate_subgroups(FiniteGroup const& G) {
    // Each subgroup is kept with a generating set so that extending it by
    // one element only closes over a few generators.
    struct Entry {
      Subgroup          subgroup;
      std::vector<Elem> gens;
    };
    std::set<Subgroup> seen;
    std::vector<Entry> frontier{{trivial_subgroup(G), {}}};
    seen.insert(frontier.front().subgroup);
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (Elem x = 0; x < G.size(); ++x) {
        if (frontier[k].subgroup.contains(x)) {
          continue;
        }
        std::vector<Elem> gens = frontier[k].gens;
        gens.push_back(x);
        Subgroup K = subgroup_closure(G, gens);
        if (seen.insert(K).second) {
          frontier.push_back({std::move(K), std::move(gens)});
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  bool is_abelian(FiniteGroup const& G) {
    for (Elem a = 0; a < G.size(); ++a) {
      for (Elem b = a + 1; b < G.size(); ++b) {
        if (G.product(a, b) != G.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup derived_subgroup(FiniteGroup const& G, Subgroup const& H) {
    std::set<Elem> commutators;
    for (Elem x : H.members()) {
      for (Elem y : H.members()) {
        Elem const c = G.product(G.product(G.inverse(x), G.inverse(y)),
                                 G.product(x, y));
        commutators.insert(c);
      }
    }
    std::vector<Elem> gens(commutators.begin(), commutators.end());
    return subgroup_closure(G, gens);
  }

  Subgroup derived_subgroup(FiniteGroup const& G) {
    return derived_subgroup(G, whole_group(G));
  }

  std::vector<Subgroup> derived_series(FiniteGroup const& G) {
    std::vector<Subgroup> series{whole_group(G)};
    while (true) {
      Subgroup next = derived_subgroup(G, series.back());
      if (next == series.back()) {
        return series;
      }
      series.push_back(std::move(next));
    }
  }

  bool is_solvable(FiniteGroup const& G) {
    return derived_series(G).back().size() == 1;
  }

  std::vector<Elem>
  conjugate(FiniteGroup const& G, Subgroup const& H, Elem g) {
    std::vector<Elem> out;
    for (Elem h : H.members()) {
      out.push_back(G.product(G.product(G.inverse(g), h), g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_normal(FiniteGroup const& G, Subgroup const& H) {
    if (H.members().empty() || H.members().back() >= G.size()) {
      throw NotASubgroup("subgroup does not belong to this group");
    }
    for (Elem g = 0; g < G.size(); ++g) {
      if (conjugate(G, H, g) != H.members()) {
        return false;
      }
    }
    return true;
  }

  bool is_dedekind(FiniteGroup const& G) {
    return !find_non_normal_witness(G).has_value();
  }

  std::optional<NonNormalWitness>
  find_non_normal_witness(FiniteGroup const& G) {
    if (is_abelian(G)) {
      return std::nullopt;
    }
    for (auto const& H : enumerate_subgroups(G)) {
      for (Elem g = 0; g < G.size(); ++g) {
        if (conjugate(G, H, g) != H.members()) {
          return NonNormalWitness{H, g};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<QuaternionWitness>
  find_quaternion_subgroup(FiniteGroup const& G) {
    if (G.size() % 8 != 0) {
      return std::nullopt;
    }
    auto const Q = fixtures::quaternion();
    for (auto const& H : enumerate_subgroups(G)) {
      if (H.size() != 8) {
        continue;
      }
      auto sub = subsemigroup(G.semigroup(), H.members());
      if (auto f = find_isomorphism(Q, sub.semigroup)) {
        std::vector<Elem> into_g;
        for (Elem x : *f) {
          into_g.push_back(sub.to_parent[x]);
        }
        return QuaternionWitness{H, std::move(into_g)};
      }
    }
    return std::nullopt;
  }

}  // namespace powersemi
