#ifndef SGFORGE_ENUMERATION_HPP_
#define SGFORGE_ENUMERATION_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "sgforge/semigroup.hpp"

namespace sgforge {

  struct EnumerationCounts {
    size_t labeled            = 0;  // associative tables on {0, ..., n - 1}
    size_t up_to_iso          = 0;
    size_t up_to_equivalence  = 0;  // up to isomorphism and anti-isomorphism
  };

  struct EnumerationResult {
    size_t                   order = 0;
    CanonMode                mode  = CanonMode::iso_antiiso;
    std::vector<std::string> keys;     // sorted hex canonical keys
    std::vector<Semigroup>   classes;  // key-minimal labelings, same order
    EnumerationCounts        counts;
  };

  // The largest order accepted by enumerate_semigroups: SGFORGE_MAX_ORDER if
  // set, otherwise 5.
  size_t max_enumeration_order();

  // Throws OrderTooLarge.
  EnumerationResult enumerate_semigroups(size_t    order,
                                         CanonMode mode,
                                         size_t    jobs = 1);

  // Canonical forms (raw bytes) of all n^(n^2) tables that are associative.
  std::vector<std::string> brute_force_classes(size_t n, CanonMode mode);

}  // namespace sgforge

#endif  // SGFORGE_ENUMERATION_HPP_
