#ifndef SGFORGE_TRANSFORMATION_HPP_
#define SGFORGE_TRANSFORMATION_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "sgforge/semigroup.hpp"

namespace sgforge {

  using transf_type = std::vector<element_type>;

  // Maps act on the right: x(fg) = (xf)g.
  struct TransformationSemigroup {
    size_t                   degree = 0;
    std::vector<transf_type> maps;
    std::vector<std::string> tags;
  };

  transf_type compose(transf_type const& f, transf_type const& g);

  TransformationSemigroup right_regular(Semigroup const& S);

  // The semigroup generated by the maps; elements are listed with the given
  // maps first, in order, duplicates removed.
  Semigroup to_semigroup(TransformationSemigroup const& X,
                         size_t                         cap = 4096);

  enum class AugmentMode { bar, flat };

  // Right translations of S together with all constant maps, acting on S
  // when right translation is faithful there and on S^bullet otherwise.
  TransformationSemigroup bar_action(Semigroup const& S);

  Semigroup augment(Semigroup const& S, AugmentMode mode);

  TransformationSemigroup rlm_action(Semigroup const& T);

  Semigroup rlm(Semigroup const& T);

  std::vector<Semigroup> hierarchy_iterate(Semigroup const&                seed,
                                           std::vector<AugmentMode> const& pattern,
                                           size_t                          depth,
                                           size_t max_order = 64,
                                           size_t max_depth = 3);

}  // namespace sgforge

#endif  // SGFORGE_TRANSFORMATION_HPP_
