#ifndef SGFORGE_CATALOG_HPP_
#define SGFORGE_CATALOG_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <vector>    // for vector

#include "sgforge/semigroup.hpp"
#include "sgforge/term.hpp"

namespace sgforge {

  struct BuildParams {
    std::optional<size_t> n;  // Z, N, NI, H, K, ReesM0
    std::optional<size_t> k;  // O
    std::optional<size_t> g;  // order of the group of ReesM0
  };

  // Names are either transcribed tables, families such as "Z_4", "N3",
  // "O_k" with params, or derived names with the suffixes "I" (adjoin an
  // identity), "bar" (augmentation) and "^op". Throws UnknownName or
  // BadParams.
  Semigroup build_named(std::string const& name, BuildParams const& params = {});

  // N_n = <a | a^n = 0>; the zero is 0 and a^i is i.
  Semigroup nilpotent_monogenic(size_t n);

  // The cyclic group of order n under addition mod n.
  Semigroup cyclic_group(size_t n);

  // (N_k^I x R2) minus (I, e), modulo the ideal {(0,e), (0,f), (a^(k-1),f)}.
  Semigroup o_semigroup(size_t k);

  // <e, f | e^2 = e, f^2 = f, (ef)^n = 0> and the variant with (ef)^n e = 0.
  Semigroup h_semigroup(size_t n);
  Semigroup k_semigroup(size_t n);

  struct TranscribedTable {
    std::string              name;
    std::vector<std::string> elements;
    table_type               table;
  };

  std::vector<TranscribedTable> const& transcribed_tables();
  TranscribedTable const*              transcribed_table(std::string const& name);

  struct BasisRecord {
    std::string                 name;
    std::string                 semigroup;
    std::string                 target;  // "-" when not a ji target
    std::vector<std::string>    sigma_text;
    std::vector<Pseudoidentity> sigma;
    std::string                 epsilon_text;
    Pseudoidentity              epsilon;
    std::string                 source;
  };

  struct ExclusionRecord {
    std::string    name;
    std::string    semigroup;
    std::string    pid_text;
    Pseudoidentity pid;
    bool           local = false;
    std::string    source;
  };

  struct Condition {
    std::string                 id;
    bool                        ji = true;  // block A
    std::string                 target;     // block A
    std::string                 describe;   // block B
    std::vector<std::string>    satisfy_text;
    std::vector<Pseudoidentity> satisfy;
    std::vector<std::string>    violate_text;
    std::vector<Pseudoidentity> violate;
    std::string                 source;

    // S satisfies every satisfy clause and violates every violate clause.
    bool holds(Semigroup const& S) const;
  };

  struct ConditionCatalog {
    std::vector<Condition>             conditions;
    std::set<std::string>              selfdual;
    std::map<std::string, std::string> duals;

    std::string      dual_name(std::string const& target) const;
    Condition const* find(std::string const& id) const;
  };

  std::vector<BasisRecord> const&     basis_records();
  std::vector<ExclusionRecord> const& exclusion_records();
  ConditionCatalog const&             condition_catalog();

  // The ji targets of block A together with their duals.
  std::vector<std::string> ji_target_names();

  // S is outside the class defined by the record.
  bool violates_exclusion(Semigroup const& S, ExclusionRecord const& r);

  struct CatalogCheck {
    std::string kind;  // basis, exclusion, table, condition
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  std::vector<CatalogCheck> verify_catalog();

}  // namespace sgforge

#endif  // SGFORGE_CATALOG_HPP_
