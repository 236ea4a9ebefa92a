#include "sgforge/catalog.hpp"

#include <algorithm>  // for find
#include <cctype>     // for isdigit
#include <regex>      // for regex, smatch
#include <sstream>    // for istringstream
#include <utility>    // for move

#include "json.hpp"  // for nlohmann::json

#include "catalog_data.hpp"
#include "sgforge/error.hpp"
#include "sgforge/satisfaction.hpp"
#include "sgforge/transformation.hpp"

namespace sgforge {

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  Semigroup cyclic_group(size_t n) {
    if (n == 0) {
      throw BadParams("Z_n needs n >= 1");
    }
    std::vector<element_type> flat(n * n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        flat[a * n + b] = (a + b) % n;
      }
    }
    return Semigroup(n, std::move(flat), "Z_" + std::to_string(n));
  }

  Semigroup nilpotent_monogenic(size_t n) {
    if (n == 0) {
      throw BadParams("N_n needs n >= 1");
    }
    std::vector<element_type> flat(n * n, 0);
    for (size_t a = 1; a < n; ++a) {
      for (size_t b = 1; b < n; ++b) {
        flat[a * n + b] = a + b < n ? a + b : 0;
      }
    }
    return Semigroup(n, std::move(flat), "N_" + std::to_string(n));
  }

  Semigroup o_semigroup(size_t k) {
    if (k < 2) {
      throw BadParams("O_k needs k >= 2");
    }
    // N_k^I has a^i = i for i < k (0 is the zero) and I = k; R2 has e = 0,
    // f = 1. The pair (s, r) is s * 2 + r in the product.
    auto const P    = product(adjoin_identity(nilpotent_monogenic(k),
                                           IdentityMode::always),
                           build_named("R2"));
    auto const pair = [](size_t s, size_t r) {
      return static_cast<element_type>(s * 2 + r);
    };
    std::vector<element_type> T;
    for (element_type x = 0; x < P.size(); ++x) {
      if (x != pair(k, 0)) {
        T.push_back(x);
      }
    }
    auto const                S     = restrict_to(P, T);
    std::vector<element_type> ideal = {pair(0, 0), pair(0, 1), pair(k - 1, 1)};
    for (auto& x : ideal) {
      x = std::find(T.begin(), T.end(), x) - T.begin();
    }
    return rees_quotient(S, ideal).with_name("O_" + std::to_string(k));
  }

  namespace {
    // Alternating words over {e, f} are (first letter, length); the
    // forbidden factor is (ef)^n, followed by e when with_e.
    Semigroup alternating_quotient(size_t n, bool with_e, std::string name) {
      if (n == 0) {
        throw BadParams(name + " needs n >= 1");
      }
      size_t const need = 2 * n + (with_e ? 1 : 0);
      auto forbidden = [&](size_t c, size_t len) {
        return c == 0 ? len >= need : len >= need + 1;
      };
      std::vector<std::pair<size_t, size_t>> words;
      for (size_t c = 0; c < 2; ++c) {
        for (size_t len = 1; !forbidden(c, len); ++len) {
          words.emplace_back(c, len);
        }
      }
      size_t const N    = words.size() + 1;
      element_type zero = 0;
      auto index = [&](size_t c, size_t len) -> element_type {
        if (forbidden(c, len)) {
          return zero;
        }
        return std::find(words.begin(), words.end(), std::make_pair(c, len))
               - words.begin() + 1;
      };
      std::vector<element_type> flat(N * N, zero);
      for (size_t a = 1; a < N; ++a) {
        for (size_t b = 1; b < N; ++b) {
          auto [c1, l1]   = words[a - 1];
          auto [c2, l2]   = words[b - 1];
          size_t last     = l1 % 2 == 1 ? c1 : 1 - c1;
          size_t len      = last == c2 ? l1 + l2 - 1 : l1 + l2;
          flat[a * N + b] = index(c1, len);
        }
      }
      return Semigroup(N, std::move(flat), std::move(name));
    }
  }  // namespace

  Semigroup h_semigroup(size_t n) {
    return alternating_quotient(n, false, "H_" + std::to_string(n));
  }

  Semigroup k_semigroup(size_t n) {
    return alternating_quotient(n, true, "K_" + std::to_string(n));
  }

  ////////////////////////////////////////////////////////////////////////
  // Data files
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Block {
      std::string                                      kind;
      std::string                                      name;
      std::vector<std::pair<std::string, std::string>> fields;
    };

    struct ParsedFile {
      std::vector<Block>                                 blocks;
      std::vector<std::pair<std::string, std::string>> top;
    };

    ParsedFile parse_blocks(char const* text, std::string const& file) {
      ParsedFile         out;
      std::istringstream in(text);
      std::string        line;
      Block*             cur    = nullptr;
      size_t             lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        line      = line.substr(first, last - first + 1);
        auto sp   = line.find(' ');
        auto key  = line.substr(0, sp);
        auto val  = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (cur == nullptr) {
          if (key == "basis" || key == "exclusion" || key == "condition") {
            out.blocks.push_back({key, val, {}});
            cur = &out.blocks.back();
          } else {
            out.top.emplace_back(key, val);
          }
        } else if (key == "end") {
          cur = nullptr;
        } else {
          cur->fields.emplace_back(key, val);
        }
      }
      if (cur != nullptr) {
        throw Error(file + ": unterminated block at line "
                    + std::to_string(lineno));
      }
      return out;
    }

    Pseudoidentity parse_data(std::string const& text, std::string const& where) {
      try {
        return parse_pseudoidentity(text);
      } catch (Error const& e) {
        throw Error(where + ": cannot parse \"" + text + "\": " + e.what());
      }
    }
  }  // namespace

  std::vector<TranscribedTable> const& transcribed_tables() {
    static std::vector<TranscribedTable> const tables = [] {
      std::vector<TranscribedTable> out;
      auto const j = nlohmann::json::parse(detail::tables_json);
      for (auto const& [name, v] : j.items()) {
        TranscribedTable t;
        t.name     = name;
        t.elements = v.at("elements").get<std::vector<std::string>>();
        t.table    = v.at("table").get<table_type>();
        out.push_back(std::move(t));
      }
      return out;
    }();
    return tables;
  }

  TranscribedTable const* transcribed_table(std::string const& name) {
    for (auto const& t : transcribed_tables()) {
      if (t.name == name) {
        return &t;
      }
    }
    return nullptr;
  }

  std::vector<BasisRecord> const& basis_records() {
    static std::vector<BasisRecord> const records = [] {
      std::vector<BasisRecord> out;
      for (auto const& b : parse_blocks(detail::bases_txt, "bases").blocks) {
        BasisRecord r;
        r.name = b.name;
        for (auto const& [key, val] : b.fields) {
          if (key == "semigroup") {
            r.semigroup = val;
          } else if (key == "target") {
            r.target = val;
          } else if (key == "sigma") {
            r.sigma_text.push_back(val);
            r.sigma.push_back(parse_data(val, "basis " + b.name));
          } else if (key == "epsilon") {
            r.epsilon_text = val;
            r.epsilon      = parse_data(val, "basis " + b.name);
          } else if (key == "source") {
            r.source = val;
          }
        }
        out.push_back(std::move(r));
      }
      return out;
    }();
    return records;
  }

  std::vector<ExclusionRecord> const& exclusion_records() {
    static std::vector<ExclusionRecord> const records = [] {
      std::vector<ExclusionRecord> out;
      for (auto const& b :
           parse_blocks(detail::exclusions_txt, "exclusions").blocks) {
        ExclusionRecord r;
        r.name = b.name;
        for (auto const& [key, val] : b.fields) {
          if (key == "semigroup") {
            r.semigroup = val;
          } else if (key == "pid") {
            r.pid_text = val;
            r.pid      = parse_data(val, "exclusion " + b.name);
          } else if (key == "letters") {
            std::istringstream in(val);
            for (std::string l; in >> l;) {
              auto& a = r.pid.alphabet;
              if (std::find(a.begin(), a.end(), l) == a.end()) {
                a.push_back(l);
              }
            }
          } else if (key == "local") {
            r.local = val == "yes";
          } else if (key == "source") {
            r.source = val;
          }
        }
        out.push_back(std::move(r));
      }
      return out;
    }();
    return records;
  }

  ConditionCatalog const& condition_catalog() {
    static ConditionCatalog const cat = [] {
      ConditionCatalog out;
      auto const       parsed = parse_blocks(detail::conditions_txt, "conditions");
      for (auto const& [key, val] : parsed.top) {
        std::istringstream       in(val);
        std::vector<std::string> names;
        for (std::string s; in >> s;) {
          names.push_back(s);
        }
        if (key == "selfdual") {
          out.selfdual.insert(names.begin(), names.end());
        } else if (key == "dual" && names.size() == 2) {
          out.duals[names[0]] = names[1];
          out.duals[names[1]] = names[0];
        } else {
          throw Error("conditions: unexpected line \"" + key + " " + val + "\"");
        }
      }
      for (auto const& b : parsed.blocks) {
        Condition c;
        c.id = b.name;
        c.ji = !b.name.empty() && b.name[0] == 'A';
        for (auto const& [key, val] : b.fields) {
          if (key == "target") {
            c.target = val;
          } else if (key == "describe") {
            c.describe = val;
          } else if (key == "satisfy") {
            c.satisfy_text.push_back(val);
            c.satisfy.push_back(parse_data(val, "condition " + b.name));
          } else if (key == "violate") {
            c.violate_text.push_back(val);
            c.violate.push_back(parse_data(val, "condition " + b.name));
          } else if (key == "source") {
            c.source = val;
          }
        }
        if (c.ji && c.target.empty()) {
          throw Error("condition " + c.id + " has no target");
        }
        out.conditions.push_back(std::move(c));
      }
      return out;
    }();
    return cat;
  }

  bool Condition::holds(Semigroup const& S) const {
    return satisfies_all(S, satisfy) && violates_all(S, violate);
  }

  std::string ConditionCatalog::dual_name(std::string const& target) const {
    if (selfdual.count(target)) {
      return target;
    }
    if (auto it = duals.find(target); it != duals.end()) {
      return it->second;
    }
    std::string const suffix = "^op";
    if (target.size() > suffix.size()
        && target.compare(target.size() - suffix.size(), suffix.size(), suffix)
               == 0) {
      return target.substr(0, target.size() - suffix.size());
    }
    return target + suffix;
  }

  Condition const* ConditionCatalog::find(std::string const& id) const {
    for (auto const& c : conditions) {
      if (c.id == id) {
        return &c;
      }
    }
    return nullptr;
  }

  std::vector<std::string> ji_target_names() {
    auto const&              cat = condition_catalog();
    std::vector<std::string> out;
    auto add = [&out](std::string const& s) {
      if (std::find(out.begin(), out.end(), s) == out.end()) {
        out.push_back(s);
      }
    };
    for (auto const& c : cat.conditions) {
      if (c.ji) {
        add(c.target);
        add(cat.dual_name(c.target));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool ends_with(std::string const& s, std::string const& suffix) {
      return s.size() > suffix.size()
             && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

    size_t need(std::optional<size_t> const& v,
                std::string const&           what,
                std::string const&           name) {
      if (!v) {
        throw BadParams(name + " needs the parameter " + what);
      }
      return *v;
    }

    std::optional<Semigroup> build_family(std::string const& name,
                                          BuildParams const& params) {
      static std::regex const re("^(Z|N|O|H|K)_?([0-9]+)?$");
      std::smatch             m;
      if (!std::regex_match(name, m, re)) {
        return std::nullopt;
      }
      std::string const family = m[1];
      std::optional<size_t> num;
      if (m[2].matched) {
        num = std::stoul(m[2]);
      } else if (family == "O") {
        num = params.k;
      } else {
        num = params.n;
      }
      size_t const v = need(num, family == "O" ? "k" : "n", name);
      if (family == "Z") {
        return v == 1 ? trivial_semigroup() : cyclic_group(v);
      } else if (family == "N") {
        return nilpotent_monogenic(v);
      } else if (family == "O") {
        return o_semigroup(v);
      } else if (family == "H") {
        return h_semigroup(v);
      }
      return k_semigroup(v);
    }

    Semigroup build_any(std::string const& name, BuildParams const& params) {
      if (name == "trivial") {
        return trivial_semigroup();
      }
      if (name == "l3bar") {
        return opposite(build_any("l3bar^op", params));
      }
      if (auto const* t = transcribed_table(name)) {
        return Semigroup(t->table);
      }
      if (name == "ReesM0") {
        size_t const                  n = params.n.value_or(2);
        size_t const                  g = params.g.value_or(1);
        std::vector<std::vector<int>> P(n, std::vector<int>(n, -1));
        for (size_t i = 0; i < n; ++i) {
          P[i][i] = 0;
        }
        return rees_matrix_semigroup(g, P);
      }
      if (auto S = build_family(name, params)) {
        return *S;
      }
      if (ends_with(name, "^op")) {
        return opposite(build_any(name.substr(0, name.size() - 3), params));
      }
      if (ends_with(name, "bar")) {
        return augment(build_any(name.substr(0, name.size() - 3), params),
                       AugmentMode::bar);
      }
      if (ends_with(name, "I")) {
        return adjoin_identity(build_any(name.substr(0, name.size() - 1), params),
                               IdentityMode::always);
      }
      throw UnknownName("unknown semigroup name \"" + name + "\"");
    }
  }  // namespace

  Semigroup build_named(std::string const& name, BuildParams const& params) {
    return build_any(name, params).with_name(name);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  bool violates_exclusion(Semigroup const& S, ExclusionRecord const& r) {
    return r.local ? !in_local(S, r.pid) : !satisfies(S, r.pid).satisfied;
  }

  std::vector<CatalogCheck> verify_catalog() {
    std::vector<CatalogCheck> out;
    auto run = [&out](std::string kind, std::string name, auto&& body) {
      CatalogCheck c{std::move(kind), std::move(name), false, ""};
      try {
        c.passed = body(c.detail);
      } catch (std::exception const& e) {
        c.detail = e.what();
      }
      out.push_back(std::move(c));
    };

    for (auto const& t : transcribed_tables()) {
      run("table", t.name, [&t](std::string& detail) {
        Semigroup S(t.table);
        detail = "associative, order " + std::to_string(S.size());
        return S.size() == t.elements.size();
      });
    }
    struct Pair {
      std::string name;
      std::string table;
      Semigroup (*build)();
    };
    std::vector<Pair> const pairs = {
        {"Z2bar = augment(Z_2)", "Z2bar",
         [] { return augment(build_named("Z_2"), AugmentMode::bar); }},
        {"N2bar = augment(N_2)", "N2bar",
         [] { return augment(build_named("N_2"), AugmentMode::bar); }},
        {"LZbar = augment(L2)", "LZbar",
         [] { return augment(build_named("L2"), AugmentMode::bar); }},
        {"l3bar = augment(l3)", "l3bar",
         [] { return augment(build_named("l3"), AugmentMode::bar); }},
        {"l3bar = opposite(l3bar^op)", "l3bar",
         [] { return build_named("l3bar"); }},
        {"l3 = O_2", "l3", [] { return build_named("O_2"); }},
        {"Sl2 = N_1I", "Sl2", [] { return build_named("N_1I"); }},
        {"R2 = opposite(L2)", "R2", [] { return opposite(build_named("L2")); }},
        {"B2 = ReesM0", "B2", [] { return build_named("ReesM0"); }},
        {"A2 = Rees matrix", "A2",
         [] { return rees_matrix_semigroup(1, {{0, 0}, {-1, 0}}); }},
    };
    for (auto const& p : pairs) {
      run("table", p.name, [&p](std::string& detail) {
        Semigroup const S = p.build();
        Semigroup const T(transcribed_table(p.table)->table);
        detail = "canonical keys " + canonical_key(S, CanonMode::iso) + " "
                 + canonical_key(T, CanonMode::iso);
        return isomorphic(S, T);
      });
    }
    for (auto const& r : basis_records()) {
      run("basis", r.name, [&r](std::string& detail) {
        auto const S = build_named(r.semigroup);
        for (size_t i = 0; i < r.sigma.size(); ++i) {
          if (!satisfies(S, r.sigma[i]).satisfied) {
            detail = "fails " + r.sigma_text[i];
            return false;
          }
        }
        if (satisfies(S, r.epsilon).satisfied) {
          detail = "satisfies " + r.epsilon_text;
          return false;
        }
        detail = std::to_string(r.sigma.size()) + " identities, epsilon violated";
        return true;
      });
    }
    for (auto const& r : exclusion_records()) {
      run("exclusion", r.name, [&r](std::string& detail) {
        bool const ok = violates_exclusion(build_named(r.semigroup), r);
        detail        = ok ? "violated by " + r.semigroup
                           : "satisfied by " + r.semigroup;
        return ok;
      });
    }
    for (auto const& c : condition_catalog().conditions) {
      run("condition", c.id, [&c](std::string& detail) {
        detail = std::to_string(c.satisfy.size()) + " satisfy, "
                 + std::to_string(c.violate.size()) + " violate";
        return c.ji ? !c.target.empty() : !c.describe.empty();
      });
    }
    return out;
  }

}  // namespace sgforge
