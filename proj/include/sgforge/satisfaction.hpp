#ifndef SGFORGE_SATISFACTION_HPP_
#define SGFORGE_SATISFACTION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "sgforge/semigroup.hpp"
#include "sgforge/term.hpp"

namespace sgforge {

  struct Assignment {
    std::vector<std::pair<std::string, element_type>> letters;
    std::optional<element_type>                       kernel;

    std::optional<element_type> value(std::string const& letter) const;
  };

  struct SatisfactionReport {
    bool                      satisfied = true;
    std::optional<Assignment> witness;
    element_type              lhs_value = 0;
    element_type              rhs_value = 0;
  };

  // x^[P'], the generator of the P-primary part of <x^(w+1)>.
  element_type pi_omega_power(Semigroup const&             S,
                              element_type                 x,
                              std::vector<unsigned> const& primes);

  // x^(w+k) for any integer k.
  element_type omega_plus_power(Semigroup const& S, element_type x, long k);

  // Throws MissingLetter or InvalidKernelChoice.
  element_type eval_term(Semigroup const& S, Term const& t, Assignment const& a);

  // Idempotents in the minimal ideal of the subsemigroup generated by images.
  std::vector<element_type> kernel_idempotents(
      Semigroup const&                 S,
      std::vector<element_type> const& images);

  SatisfactionReport satisfies(Semigroup const& S, Pseudoidentity const& p);

  bool satisfies_all(Semigroup const& S, std::vector<Pseudoidentity> const& ps);

  // Every listed pseudoidentity fails in S.
  bool violates_all(Semigroup const& S, std::vector<Pseudoidentity> const& ps);

  // The local monoid uSu as a semigroup.
  Semigroup local_monoid(Semigroup const& S, element_type u);

  bool in_local(Semigroup const& S, Pseudoidentity const& p);

  struct SeparationBounds {
    size_t        max_letters = 3;
    size_t        max_length  = 8;
    size_t        samples     = 1000;
    std::uint64_t seed        = 1;
  };

  // An identity satisfied by A and violated by B, if one is found.
  std::optional<Pseudoidentity> separation_search(Semigroup const&        A,
                                                  Semigroup const&        B,
                                                  SeparationBounds const& bounds
                                                  = {});

  // Letters used for generated words: x, y, z, t, h, k, ...
  std::string variable_name(size_t i);

}  // namespace sgforge

#endif  // SGFORGE_SATISFACTION_HPP_
