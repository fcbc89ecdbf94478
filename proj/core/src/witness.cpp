// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/witness.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "powersemi/fixtures.hpp"

namespace powersemi {

  namespace {

    Verification from_hom(std::string what, HomResult const& r) {
      std::string detail = r.ok ? "homomorphism" : "violated";
      if (r.violation) {
        detail += std::string(" at ") + to_string(r.violation->op);
        for (Elem a : r.violation->args) {
          detail += " " + std::to_string(a);
        }
      }
      detail += r.surjective ? ", surjective" : ", not surjective";
      detail += ", " + std::to_string(r.checks) + " checks";
      if (r.sampled) {
        detail += " (SAMPLED)";
      }
      return Verification{
          std::move(what), r.ok && r.surjective, detail, r.sampled, r.checks};
    }

    Verification fact(std::string what, bool passed, std::string detail = "") {
      return Verification{std::move(what), passed, std::move(detail)};
    }

    // A family of subsets closed under the power-algebra operations, viewed
    // as an algebra in its own right.  Does not own the power algebra.
    class SubsetFamily final : public Algebra {
     public:
      SubsetFamily(PowerAlgebra const& P, std::vector<SubsetCode> members)
          : P_(P), members_(std::move(members)) {
        for (Elem k = 0; k < members_.size(); ++k) {
          index_.emplace(members_[k].bits(), k);
        }
      }

      [[nodiscard]] std::size_t size() const noexcept override {
        return members_.size();
      }
      [[nodiscard]] Signature signature() const noexcept override {
        return P_.signature();
      }
      [[nodiscard]] Elem mul(Elem a, Elem b) const override {
        return find(P_.product(members_[a], members_[b]));
      }
      [[nodiscard]] Elem add(Elem a, Elem b) const override {
        return find(members_[a] | members_[b]);
      }
      [[nodiscard]] Elem star(Elem a) const override {
        return find(P_.inverse(members_[a]));
      }
      [[nodiscard]] std::string label(Elem a) const override {
        return P_.format(members_[a]);
      }

      [[nodiscard]] bool contains(SubsetCode A) const {
        return index_.contains(A.bits());
      }

     private:
      Elem find(SubsetCode A) const {
        auto it = index_.find(A.bits());
        if (it == index_.end()) {
          throw Inconsistency("subset family is not closed");
        }
        return it->second;
      }

      PowerAlgebra const&                       P_;
      std::vector<SubsetCode>                   members_;
      std::unordered_map<std::uint32_t, Elem>   index_;
    };

    TableAlgebra b2_with_inversion() {
      auto B2 = brandt_b2();
      return TableAlgebra(std::move(B2.semigroup),
                          std::nullopt,
                          std::move(B2.inversion.inv));
    }

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t out = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
      }
      return out;
    }

    SubsetCode image_code(std::vector<Elem> const& into_s,
                          std::span<Elem const>    members) {
      std::vector<Elem> mapped;
      for (Elem m : members) {
        mapped.push_back(into_s[m]);
      }
      return SubsetCode::of(mapped);
    }
  }  // namespace

  std::string phrase(TheoremVerdict const& v) {
    return v.applies ? "theorem applies (nonfinitely based)"
                     : "theorem hypotheses not met (no conclusion)";
  }

  std::string to_string(TheoremCase c) {
    switch (c) {
      case TheoremCase::none:
        return "none";
      case TheoremCase::case1:
        return "1";
      case TheoremCase::case2:
        return "2";
      case TheoremCase::case3:
        return "3";
    }
    return "none";
  }

  bool VerdictReport::verified() const {
    return std::all_of(log.begin(), log.end(), [](Verification const& v) {
      return v.passed;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Case 1
  ////////////////////////////////////////////////////////////////////////

  Case1Witness case1_witness(FiniteSemigroup const& S,
                             InversionMap const&    inv,
                             WitnessOptions const&  opts) {
    std::optional<Elem> s;
    for (Elem x = 0; x < S.size() && !s; ++x) {
      if (!element_in_subgroup(S, x)) {
        s = x;
      }
    }
    if (!s) {
      throw NotClifford(0);  // unreachable for valid callers
    }
    std::vector<Elem> const gen{*s};
    auto T = generated_inverse_subsemigroup(S, inv, gen);

    std::size_t const n = T.semigroup.size();
    std::vector<Elem> local(S.size(), static_cast<Elem>(-1));
    for (Elem k = 0; k < n; ++k) {
      local[T.to_parent[k]] = k;
    }
    Elem const        s_t   = local[*s];
    Elem const        s_inv = local[inv(*s)];
    std::vector<Elem> star_t(n);
    for (Elem k = 0; k < n; ++k) {
      star_t[k] = local[inv(T.to_parent[k])];
    }
    TableAlgebra const T_alg(T.semigroup, std::nullopt, star_t);
    TableAlgebra const B2 = b2_with_inversion();

    constexpr Elem unset = static_cast<Elem>(-1);
    for (Elem b = 0; b < B2.size(); ++b) {
      // A homomorphism out of T is fixed by the image of its generator.
      std::vector<Elem> f(n, unset);
      f[s_t] = b;
      if (f[s_inv] != unset && f[s_inv] != B2.star(b)) {
        continue;
      }
      f[s_inv]                        = B2.star(b);
      bool                     ok     = true;
      std::vector<Elem>        queue  = {s_t};
      std::array<Elem, 2> const gens = {s_t, s_inv};
      if (s_inv != s_t) {
        queue.push_back(s_inv);
      }
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        Elem const x = queue[q];
        for (Elem g : gens) {
          Elem const xg  = T.semigroup.product(x, g);
          Elem const img = B2.mul(f[x], f[g]);
          if (f[xg] == unset) {
            f[xg] = img;
            queue.push_back(xg);
          } else if (f[xg] != img) {
            ok = false;
            break;
          }
        }
      }
      if (!ok || std::count(f.begin(), f.end(), unset) != 0) {
        continue;
      }
      auto tau_check = check_homomorphism(f, T_alg, B2, Signature::involution());
      if (!tau_check.ok || !tau_check.surjective) {
        continue;
      }

      Case1Witness w{*s, std::move(T), b, f, {}};
      w.checks.push_back(from_hom("tau: T -> B2 on {*,'}", tau_check));

      PowerAlgebra const PT(w.T.semigroup, opts.mode, opts.max_carrier);
      PowerAlgebra const PB(brandt_b2().semigroup, opts.mode);
      std::vector<Elem>  lift(PT.size());
      for (Elem k = 0; k < PT.size(); ++k) {
        std::uint32_t bits = 0;
        for (Elem a : PT.code(k).members()) {
          bits |= std::uint32_t{1} << f[a];
        }
        lift[k] = PB.index(SubsetCode(bits));
      }
      HomCheckOptions hopts;
      hopts.exhaustive_limit = std::size_t{1} << opts.exhaustive_base;
      hopts.samples          = opts.samples;
      hopts.seed             = opts.seed;
      auto sharp             = check_homomorphism(lift,
                                      PT.view(Signature::all()),
                                      PB.view(Signature::all()),
                                      Signature::all(),
                                      hopts);
      w.checks.push_back(
          from_hom("tau#: P(T) -> P(B2) on {+,*,'}", sharp));
      return w;
    }
    throw NoSurjectionFound("no homomorphism from the inverse subsemigroup "
                            "generated by "
                            + S.label(*s) + " onto B2");
  }

  ////////////////////////////////////////////////////////////////////////
  // Case 2
  ////////////////////////////////////////////////////////////////////////

  Case2Witness case2_witness(FiniteSemigroup const& S,
                             std::optional<Elem>    idempotent,
                             WitnessOptions const&  opts) {
    auto decomposition = clifford_decomposition(S);
    std::optional<FiniteGroup>      G;
    std::optional<NonNormalWitness> hg;
    Elem                            e = 0;
    for (Elem x : decomposition.idempotents) {
      if (idempotent && x != *idempotent) {
        continue;
      }
      auto candidate = maximal_subgroup_at(S, x);
      if (auto w = find_non_normal_witness(candidate)) {
        G  = std::move(candidate);
        hg = std::move(w);
        e  = x;
        break;
      }
    }
    if (!G) {
      throw NoNonDedekindSubgroup(
          idempotent ? "the chosen maximal subgroup is Dedekind"
                     : "every maximal subgroup is Dedekind");
    }

    PowerAlgebra const P(S, EmptySet::included, opts.max_carrier);
    auto const&        into_s = G->to_parent();
    Subgroup const&    H      = hg->subgroup;
    Elem const         g      = hg->conjugator;
    Elem const         g_inv  = G->inverse(g);

    std::vector<Elem> left, right;
    for (Elem h : H.members()) {
      left.push_back(G->product(g_inv, h));
      right.push_back(G->product(h, g));
    }
    std::vector<Elem> const one{G->identity()};

    Case2Witness w{e,
                   *G,
                   H,
                   g,
                   image_code(into_s, one),
                   image_code(into_s, H.members()),
                   image_code(into_s, left),
                   image_code(into_s, right),
                   image_code(into_s, conjugate(*G, H, g)),
                   {},
                   {},
                   {},
                   {}};

    std::array<SubsetCode, 5> const five{
        w.E, w.Hset, w.left_coset, w.right_coset, w.conjugate};
    bool distinct = true;
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = a + 1; b < 5; ++b) {
        distinct = distinct && five[a] != five[b];
      }
    }
    w.checks.push_back(fact("E, H, g^-1H, Hg, g^-1Hg pairwise distinct",
                            distinct));
    w.checks.push_back(
        fact("g^-1H * Hg = g^-1Hg",
             P.product(w.left_coset, w.right_coset) == w.conjugate));
    w.checks.push_back(fact("Hg * g^-1H = H",
                            P.product(w.right_coset, w.left_coset) == w.Hset));
    w.checks.push_back(fact("g^-1Hg != H", w.conjugate != w.Hset));

    std::size_t const order = G->size();
    if (order > 20) {
      throw CarrierTooLarge(order, 20);
    }
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << order); ++bits) {
      SubsetCode const A(bits);
      if (A.size() > H.size()) {
        w.J.push_back(image_code(into_s, A.members()));
      }
    }
    std::sort(w.J.begin(), w.J.end());
    std::size_t expected_j = 0;
    for (std::size_t k = H.size() + 1; k <= order; ++k) {
      expected_j += binomial(order, k);
    }
    w.checks.push_back(fact("|J| = sum of binomial(|G|, k) over k > |H|",
                            w.J.size() == expected_j,
                            std::to_string(w.J.size()) + " subsets"));

    w.B.assign(five.begin(), five.end());
    w.B.insert(w.B.end(), w.J.begin(), w.J.end());
    // Matrix order of brandt_monoid_b21(): 0, 01/00, 00/10, 10/00, 00/01, 1.
    w.classmap = {5, 3, 2, 1, 4};
    w.classmap.resize(w.B.size(), 0);

    SubsetFamily const family(P, w.B);
    std::size_t const  m      = w.B.size();
    bool const         sample = m > opts.exhaustive_family;
    bool               closed = true;
    std::size_t        pairs  = 0;
    auto               visit  = [&](Elem x, Elem y) {
      ++pairs;
      closed = closed && family.contains(w.B[x] | w.B[y])
               && family.contains(P.product(w.B[x], w.B[y]))
               && family.contains(P.inverse(w.B[x]));
    };
    if (!sample) {
      for (Elem x = 0; x < m && closed; ++x) {
        for (Elem y = 0; y < m && closed; ++y) {
          visit(x, y);
        }
      }
    } else {
      std::mt19937_64                     rng(opts.seed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m - 1));
      for (std::size_t k = 0; k < opts.samples && closed; ++k) {
        Elem const x = pick(rng);
        visit(x, pick(rng));
      }
    }
    w.checks.push_back(Verification{"B closed under +, *, '",
                                    closed,
                                    std::to_string(m) + " subsets",
                                    sample,
                                    pairs});
    if (!closed) {
      return w;
    }

    TableAlgebra const B21 = brandt_monoid_b21();
    HomCheckOptions    hopts;
    hopts.exhaustive_limit = opts.exhaustive_family;
    hopts.samples          = opts.samples;
    hopts.seed             = opts.seed;
    w.checks.push_back(from_hom(
        "B -> B21 on {+,*}",
        check_homomorphism(
            w.classmap, family, B21, Signature::semiring(), hopts)));
    w.checks.push_back(from_hom(
        "B -> B21 on {*,'}",
        check_homomorphism(
            w.classmap, family, B21, Signature::involution(), hopts)));
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Case 3
  ////////////////////////////////////////////////////////////////////////

  Case3Witness case3_witness(FiniteSemigroup const& S) {
    auto decomposition = clifford_decomposition(S);
    for (Elem e : decomposition.idempotents) {
      auto G = maximal_subgroup_at(S, e);
      if (is_abelian(G)) {
        continue;
      }
      if (!is_dedekind(G)) {
        throw InputError("maximal subgroup at " + S.label(e)
                         + " is not Dedekind; case 2 applies");
      }
      auto q = find_quaternion_subgroup(G);
      if (!q) {
        throw QuaternionNotFound("nonabelian maximal subgroup at "
                                 + S.label(e)
                                 + " has no quaternion subgroup");
      }
      std::vector<Elem> into_s;
      for (Elem x : q->isomorphism) {
        into_s.push_back(G.to_parent()[x]);
      }
      Case3Witness w{e, G, q->subgroup, into_s, {}};
      w.checks.push_back(fact("G nonabelian", !is_abelian(G)));
      w.checks.push_back(fact("G Dedekind", is_dedekind(G)));
      // Re-check the isomorphism against the table of S directly.
      auto const        sub = subsemigroup(S, into_s);
      std::vector<Elem> local;
      for (Elem x : into_s) {
        local.push_back(static_cast<Elem>(
            std::find(sub.to_parent.begin(), sub.to_parent.end(), x)
            - sub.to_parent.begin()));
      }
      w.checks.push_back(
          fact("Q8 isomorphism",
               is_isomorphism(fixtures::quaternion(), sub.semigroup, local),
               "subgroup of order " + std::to_string(q->subgroup.size())));
      return w;
    }
    throw QuaternionNotFound("no nonabelian maximal subgroup");
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdict
  ////////////////////////////////////////////////////////////////////////

  VerdictReport theorem_verdict(FiniteSemigroup const& S,
                                WitnessOptions const&  opts) {
    VerdictReport r;
    r.name = S.name();
    r.size = S.size();
    r.mode = opts.mode;

    auto inv = inversion_map(S);
    if (auto const* w = std::get_if<NotInverseWitness>(&inv)) {
      r.not_inverse          = *w;
      r.theorem_1_1.reason   = "not an inverse semigroup";
      r.theorem_1_2.reason   = "not an inverse semigroup";
      return r;
    }
    r.is_inverse = true;
    auto const& inversion = std::get<InversionMap>(inv);

    auto clifford = is_clifford(S);
    r.is_clifford = clifford.clifford;
    if (!clifford) {
      r.non_group_element = clifford.witness;
      r.theorem_1_1       = {true, TheoremCase::case1, "not Clifford"};
      r.theorem_1_2       = {true, TheoremCase::case1, "not Clifford"};
      r.case1             = case1_witness(S, inversion, opts);
      r.log               = r.case1->checks;
      return r;
    }

    for (Elem e : idempotents(S)) {
      auto G = maximal_subgroup_at(S, e);
      r.subgroups.push_back(
          {e, G.size(), is_abelian(G), is_solvable(G), is_dedekind(G)});
    }
    auto const& rows = r.subgroups;
    bool const  all_solvable
        = std::all_of(rows.begin(), rows.end(), [](auto const& x) {
            return x.solvable;
          });
    bool const some_nonabelian
        = std::any_of(rows.begin(), rows.end(), [](auto const& x) {
            return !x.abelian;
          });
    bool const some_non_dedekind
        = std::any_of(rows.begin(), rows.end(), [](auto const& x) {
            return !x.dedekind;
          });

    if (!all_solvable) {
      r.theorem_1_1.reason = "a subgroup is not solvable";
      r.theorem_1_2.reason = "a subgroup is not solvable";
    } else {
      if (some_nonabelian) {
        r.theorem_1_1 = {true,
                         some_non_dedekind ? TheoremCase::case2
                                           : TheoremCase::case3,
                         some_non_dedekind
                             ? "Clifford, solvable, a non-Dedekind subgroup"
                             : "Clifford, solvable, Dedekind, a nonabelian "
                               "subgroup"};
      } else {
        r.theorem_1_1.reason = "all subgroups abelian";
      }
      if (some_non_dedekind) {
        r.theorem_1_2 = {true,
                         TheoremCase::case2,
                         "Clifford, solvable, a non-Dedekind subgroup"};
      } else {
        r.theorem_1_2.reason = "all subgroups Dedekind";
      }
    }

    if (r.theorem_1_1.which == TheoremCase::case2
        || r.theorem_1_2.which == TheoremCase::case2) {
      r.case2 = case2_witness(S, std::nullopt, opts);
      r.log.insert(r.log.end(), r.case2->checks.begin(), r.case2->checks.end());
    }
    if (r.theorem_1_1.which == TheoremCase::case3) {
      r.case3 = case3_witness(S);
      r.log.insert(r.log.end(), r.case3->checks.begin(), r.case3->checks.end());
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Propositions about P(S) for Clifford S
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t proposition_cap = 10;

    void require_small_clifford(FiniteSemigroup const& S) {
      if (auto c = is_clifford(S); !c) {
        throw NotClifford(*c.witness);
      }
      if (S.size() > proposition_cap) {
        throw CarrierTooLarge(S.size(), proposition_cap);
      }
    }
  }  // namespace

  BlockGroupReport verify_prop_block_group(FiniteSemigroup const& S,
                                           WitnessOptions const&  opts) {
    require_small_clifford(S);
    PowerAlgebra const P(S, opts.mode, opts.max_carrier);
    auto const         view = P.semigroup_view();
    for (int law : {1, 2}) {
      auto r = holds_quasi_identity(view, block_group_law(law));
      if (!r) {
        return {false, P.size(), law, r.counterexample};
      }
    }
    return {true, P.size(), std::nullopt, std::nullopt};
  }

  SolvabilityReport verify_prop_solvable_subgroups(FiniteSemigroup const& S,
                                                   WitnessOptions const& opts) {
    require_small_clifford(S);
    for (Elem e : idempotents(S)) {
      if (!is_solvable(maximal_subgroup_at(S, e))) {
        throw InputError("maximal subgroup at " + S.label(e)
                         + " is not solvable");
      }
    }
    PowerAlgebra const P(S, opts.mode, opts.max_carrier);
    auto const         PS = P.power_semigroup(proposition_cap);
    SolvabilityReport  report{true, PS.size(), {}};
    for (Elem E : idempotents(PS)) {
      auto       G        = maximal_subgroup_at(PS, E);
      bool const solvable = is_solvable(G);
      report.rows.push_back({PS.label(E), G.size(), solvable});
      report.passed = report.passed && solvable;
    }
    return report;
  }

  SigmaReport verify_corollary_sigma(EmptySet mode) {
    if (mode == EmptySet::excluded) {
      throw WrongBase("sigma needs the empty set");
    }
    PowerAlgebra const P(brandt_b2().semigroup, mode);
    auto               R2 = boolean_matrix_semiring(2);
    if (mode == EmptySet::constant) {
      R2 = R2.with_constant(0);
    }
    auto const f    = sigma_map(P);
    auto const full = P.view(Signature::all());
    SigmaReport r{check_homomorphism(f, full, R2, {true, false, false}),
                  check_homomorphism(f, full, R2, {false, true, false}),
                  check_homomorphism(f, full, R2, {false, false, true}),
                  false};
    r.surjective = r.add.surjective;
    return r;
  }

}  // namespace powersemi
