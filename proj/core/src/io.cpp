// powersemi - power semirings and power involution semigroups of finite
// inverse semigroups.

#include "powersemi/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powersemi/fixtures.hpp"

namespace powersemi {

  using json = nlohmann::ordered_json;

  namespace {

    json const& field(json const& doc, char const* key) {
      auto it = doc.find(key);
      if (it == doc.end()) {
        throw InputError(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    Elem index_value(json const& v, std::size_t n, char const* where) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0
          || v.get<std::uint64_t>() >= n) {
        throw InputError(std::string(where) + ": " + v.dump()
                         + " is not an element index");
      }
      return v.get<Elem>();
    }

    std::vector<Elem> square(json const& rows, std::size_t n, char const* what) {
      if (!rows.is_array() || rows.size() != n) {
        throw InputError(std::string(what) + " must have "
                         + std::to_string(n) + " rows");
      }
      std::vector<Elem> flat;
      flat.reserve(n * n);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw InputError(std::string(what) + " must have "
                           + std::to_string(n) + " columns");
        }
        for (auto const& v : row) {
          flat.push_back(index_value(v, n, what));
        }
      }
      return flat;
    }

    std::string subset_label(FiniteSemigroup const& S, SubsetCode A) {
      std::string out = "{";
      for (Elem a : A.members()) {
        if (out.size() > 1) {
          out += ',';
        }
        out += S.label(a);
      }
      return out + "}";
    }

    json labels_of(FiniteSemigroup const& S, std::vector<Elem> const& xs) {
      json out = json::array();
      for (Elem x : xs) {
        out.push_back(S.label(x));
      }
      return out;
    }

    json log_json(std::vector<Verification> const& log) {
      json out = json::array();
      for (auto const& v : log) {
        out.push_back({{"check", v.what},
                       {"passed", v.passed},
                       {"sampled", v.sampled},
                       {"evaluations", v.checks},
                       {"detail", v.detail}});
      }
      return out;
    }

    json verdict_json(TheoremVerdict const& v) {
      return {{"applies", v.applies},
              {"case", to_string(v.which)},
              {"verdict", phrase(v)},
              {"reason", v.reason}};
    }

    json case1_json(Case1Witness const& w, FiniteSemigroup const& S) {
      auto const B2  = brandt_b2();
      json       tau = json::object();
      for (Elem t = 0; t < w.tau.size(); ++t) {
        tau[S.label(w.T.to_parent[t])] = B2.semigroup.label(w.tau[t]);
      }
      return {{"element", S.label(w.element)},
              {"T", labels_of(S, w.T.to_parent)},
              {"generator_image", B2.semigroup.label(w.generator_image)},
              {"tau", tau}};
    }

    json case2_json(Case2Witness const& w, FiniteSemigroup const& S) {
      auto const& into_s = w.G.to_parent();
      auto const  B21    = brandt_monoid_b21();
      std::vector<Elem> H;
      for (Elem h : w.H.members()) {
        H.push_back(into_s[h]);
      }
      std::array<char const*, 5> const names{
          "E", "H", "g^-1H", "Hg", "g^-1Hg"};
      json sets = json::object();
      for (std::size_t k = 0; k < 5; ++k) {
        sets[names[k]] = {{"set", subset_label(S, w.B[k])},
                          {"image", B21.label(w.classmap[k])}};
      }
      return {{"idempotent", S.label(w.idempotent)},
              {"G", labels_of(S, into_s)},
              {"H", labels_of(S, H)},
              {"g", S.label(into_s[w.g])},
              {"sets", sets},
              {"J_size", w.J.size()},
              {"J_image", B21.label(0)},
              {"B_size", w.B.size()}};
    }

    json case3_json(Case3Witness const& w, FiniteSemigroup const& S) {
      auto const Q   = fixtures::quaternion();
      json       iso = json::object();
      for (Elem q = 0; q < w.isomorphism.size(); ++q) {
        iso[Q.label(q)] = S.label(w.isomorphism[q]);
      }
      return {{"idempotent", S.label(w.idempotent)},
              {"G_order", w.G.size()},
              {"Q", labels_of(S, [&] {
                 std::vector<Elem> xs;
                 for (Elem q : w.Q.members()) {
                   xs.push_back(w.G.to_parent()[q]);
                 }
                 return xs;
               }())},
              {"isomorphism", iso}};
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }
  }  // namespace

  TableAlgebra parse_algebra(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw InputError("malformed JSON at byte " + std::to_string(e.byte)
                       + ": " + e.what());
    }
    if (!doc.is_object()) {
      throw InputError("an algebra file is a JSON object");
    }
    std::string name = "S";
    if (auto it = doc.find("name"); it != doc.end()) {
      if (!it->is_string()) {
        throw InputError("\"name\" must be a string");
      }
      name = it->get<std::string>();
    }
    auto const& elements = field(doc, "elements");
    if (!elements.is_array() || elements.empty()) {
      throw InputError("\"elements\" must be a nonempty array");
    }
    std::vector<std::string> labels;
    for (auto const& e : elements) {
      labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    std::size_t const n = labels.size();
    FiniteSemigroup   S(std::move(name),
                      std::move(labels),
                      square(field(doc, "table"), n, "table"));

    std::optional<std::vector<Elem>> add, star;
    std::optional<Elem>              constant;
    if (auto it = doc.find("addition"); it != doc.end()) {
      add = square(*it, n, "addition");
    }
    if (auto it = doc.find("star"); it != doc.end()) {
      if (!it->is_array() || it->size() != n) {
        throw InputError("\"star\" must list " + std::to_string(n)
                         + " indices");
      }
      star.emplace();
      for (auto const& v : *it) {
        star->push_back(index_value(v, n, "star"));
      }
    }
    if (auto it = doc.find("constant"); it != doc.end()) {
      constant = index_value(*it, n, "constant");
    }
    return TableAlgebra(std::move(S), std::move(add), std::move(star), constant);
  }

  TableAlgebra load_algebra(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot read " + path.string());
    }
    std::string const text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    return parse_algebra(text);
  }

  std::string dump_algebra(TableAlgebra const& A) {
    auto const&       S = A.semigroup();
    std::size_t const n = S.size();
    auto rows = [&](std::vector<Elem> const& flat) {
      std::string out = "[\n";
      for (std::size_t i = 0; i < n; ++i) {
        out += "    [";
        for (std::size_t j = 0; j < n; ++j) {
          out += (j ? ", " : "") + std::to_string(flat[i * n + j]);
        }
        out += i + 1 < n ? "],\n" : "]\n";
      }
      return out + "  ]";
    };
    std::string out = "{\n  \"name\": " + json(S.name()).dump() + ",\n";
    out += "  \"elements\": " + json(S.labels()).dump() + ",\n";
    out += "  \"table\": " + rows(S.flat_table());
    if (A.add_table()) {
      out += ",\n  \"addition\": " + rows(*A.add_table());
    }
    if (A.star_map()) {
      out += ",\n  \"star\": " + json(*A.star_map()).dump();
    }
    if (A.constant()) {
      out += ",\n  \"constant\": " + std::to_string(*A.constant());
    }
    return out + "\n}\n";
  }

  void save_algebra(TableAlgebra const& A, std::filesystem::path const& path) {
    std::ofstream out(path);
    if (!out) {
      throw InputError("cannot write " + path.string());
    }
    out << dump_algebra(A);
  }

  std::string to_string(EmptySet mode) {
    switch (mode) {
      case EmptySet::excluded:
        return "excluded";
      case EmptySet::included:
        return "included";
      case EmptySet::constant:
        return "constant";
    }
    return "included";
  }

  std::string verdict_json(VerdictReport const& r, FiniteSemigroup const& S) {
    json doc;
    doc["name"]      = r.name;
    doc["size"]      = r.size;
    doc["empty_set"] = to_string(r.mode);
    doc["inverse"]   = r.is_inverse;
    if (r.not_inverse) {
      doc["not_inverse_witness"] = {{"element", S.label(r.not_inverse->element)},
                                    {"inverses", r.not_inverse->inverse_count}};
    }
    if (r.is_inverse) {
      doc["clifford"] = r.is_clifford;
    }
    if (r.non_group_element) {
      doc["non_group_element"] = S.label(*r.non_group_element);
    }
    if (r.is_clifford) {
      json rows = json::array();
      for (auto const& row : r.subgroups) {
        rows.push_back({{"idempotent", S.label(row.idempotent)},
                        {"order", row.order},
                        {"abelian", row.abelian},
                        {"solvable", row.solvable},
                        {"dedekind", row.dedekind}});
      }
      doc["subgroups"] = rows;
    }
    doc["theorem_1_1"] = verdict_json(r.theorem_1_1);
    doc["theorem_1_2"] = verdict_json(r.theorem_1_2);
    json witness       = json::object();
    if (r.case1) {
      witness["case1"] = case1_json(*r.case1, S);
    }
    if (r.case2) {
      witness["case2"] = case2_json(*r.case2, S);
    }
    if (r.case3) {
      witness["case3"] = case3_json(*r.case3, S);
    }
    doc["witness"]          = witness;
    doc["verification_log"] = log_json(r.log);
    doc["verified"]         = r.verified();
    return doc.dump(2) + "\n";
  }

  std::string verdict_text(VerdictReport const& r, FiniteSemigroup const& S) {
    std::ostringstream out;
    out << r.name << " (" << r.size << " elements, empty set "
        << to_string(r.mode) << ")\n";
    out << "  inverse:   " << yes_no(r.is_inverse);
    if (r.not_inverse) {
      out << " (" << S.label(r.not_inverse->element) << " has "
          << r.not_inverse->inverse_count << " inverses)";
    }
    out << "\n";
    if (r.is_inverse) {
      out << "  clifford:  " << yes_no(r.is_clifford);
      if (r.non_group_element) {
        out << " (" << S.label(*r.non_group_element) << " lies in no subgroup)";
      }
      out << "\n";
    }
    if (!r.subgroups.empty()) {
      out << "  maximal subgroups:\n";
      for (auto const& row : r.subgroups) {
        out << "    at " << S.label(row.idempotent) << ": order " << row.order
            << ", abelian " << yes_no(row.abelian) << ", solvable "
            << yes_no(row.solvable) << ", dedekind " << yes_no(row.dedekind)
            << "\n";
      }
    }
    auto theorem = [&](char const* name, TheoremVerdict const& v) {
      out << "  " << name << ": " << phrase(v);
      if (v.applies) {
        out << ", case " << to_string(v.which);
      }
      if (!v.reason.empty()) {
        out << " [" << v.reason << "]";
      }
      out << "\n";
    };
    theorem("theorem 1.1", r.theorem_1_1);
    theorem("theorem 1.2", r.theorem_1_2);
    if (r.case1) {
      auto const B2 = brandt_b2();
      out << "  case 1: T generated by " << S.label(r.case1->element) << " has "
          << r.case1->T.semigroup.size() << " elements, generator maps to "
          << B2.semigroup.label(r.case1->generator_image) << "\n";
    }
    if (r.case2) {
      auto const& w = *r.case2;
      out << "  case 2: G at " << S.label(w.idempotent) << " (order "
          << w.G.size() << "), H = " << subset_label(S, w.Hset)
          << ", g = " << S.label(w.G.to_parent()[w.g]) << ", |J| = "
          << w.J.size() << ", |B| = " << w.B.size() << "\n";
    }
    if (r.case3) {
      out << "  case 3: quaternion subgroup in G at "
          << S.label(r.case3->idempotent) << " (order " << r.case3->G.size()
          << ")\n";
    }
    for (auto const& v : r.log) {
      out << "  [" << (v.passed ? "pass" : "FAIL") << "] " << v.what;
      if (!v.detail.empty()) {
        out << ": " << v.detail;
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace powersemi
