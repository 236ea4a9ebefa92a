#ifndef SGFORGE_CLASSIFIER_HPP_
#define SGFORGE_CLASSIFIER_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <set>      // for set
#include <string>   // for string
#include <vector>   // for vector

#include "sgforge/semigroup.hpp"

namespace sgforge {

  enum class Verdict { ji, non_ji, unclassified };

  std::string verdict_name(Verdict v);

  struct ClassificationRecord {
    std::string canonical_key;
    size_t      order   = 0;
    Verdict     verdict = Verdict::unclassified;
    std::string target;  // ji only
    std::string condition_id;
    bool        dual_applied = false;
    // Every firing condition, "A5" or "A5^op", when requested.
    std::vector<std::string> all_matches;
  };

  // Throws BadParams for the trivial semigroup and ConflictingConditions when
  // conditions from both blocks fire.
  ClassificationRecord classify_one(Semigroup const& S, bool all_matches = false);

  // The matched condition holds on S, or on S^op when dual_applied.
  bool replay_condition(ClassificationRecord const& r, Semigroup const& S);

  // For ji records, the basis of the target holds on S (or S^op) and the
  // witness identity fails.
  bool replay_basis(ClassificationRecord const& r, Semigroup const& S);

  struct OrderCounts {
    size_t ji           = 0;
    size_t non_ji       = 0;
    size_t unclassified = 0;
    size_t total        = 0;
  };

  struct ClassificationReport {
    std::map<size_t, OrderCounts>     counts;
    std::set<std::string>             ji_targets;  // closed under duality
    std::vector<ClassificationRecord> records;  // by order, then key
  };

  // Orders 2 to max_order.
  ClassificationReport classify_small_orders(size_t max_order,
                                             size_t jobs        = 1,
                                             bool   all_matches = false);

  // order,canonical_key,verdict,target,condition_id,dual_applied
  std::string report_csv(ClassificationReport const& r);

  std::string summary_json(ClassificationReport const& r);

}  // namespace sgforge

#endif  // SGFORGE_CLASSIFIER_HPP_
