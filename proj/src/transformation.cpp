#include "sgforge/transformation.hpp"

#include <map>      // for map
#include <set>      // for set
#include <utility>  // for move

#include "sgforge/error.hpp"

namespace sgforge {

  transf_type compose(transf_type const& f, transf_type const& g) {
    transf_type out(f.size());
    for (size_t x = 0; x < f.size(); ++x) {
      out[x] = g[f[x]];
    }
    return out;
  }

  TransformationSemigroup right_regular(Semigroup const& S) {
    auto const              Sb = adjoin_identity(S, IdentityMode::bullet);
    TransformationSemigroup out;
    out.degree = Sb.size();
    // When an identity is adjoined it is the last element of Sb, and the
    // elements of S keep their indices.
    for (element_type s = 0; s < S.size(); ++s) {
      transf_type f(out.degree);
      for (element_type x = 0; x < out.degree; ++x) {
        f[x] = Sb(x, s);
      }
      out.maps.push_back(std::move(f));
      out.tags.push_back(std::to_string(s));
    }
    return out;
  }

  Semigroup to_semigroup(TransformationSemigroup const& X, size_t cap) {
    std::map<transf_type, element_type> index;
    std::vector<transf_type>            elts;
    for (auto const& f : X.maps) {
      if (index.emplace(f, elts.size()).second) {
        elts.push_back(f);
      }
    }
    std::vector<transf_type> gens = elts;
    for (size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        auto h = compose(elts[i], g);
        if (index.emplace(h, elts.size()).second) {
          elts.push_back(std::move(h));
          if (elts.size() > cap) {
            throw SizeLimitExceeded("transformation semigroup exceeds "
                                    + std::to_string(cap) + " elements");
          }
        }
      }
    }
    size_t const              n = elts.size();
    std::vector<element_type> flat(n * n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        flat[a * n + b] = index.at(compose(elts[a], elts[b]));
      }
    }
    return Semigroup(n, std::move(flat));
  }

  TransformationSemigroup bar_action(Semigroup const& S) {
    auto X = right_regular(S);
    if (X.degree > S.size()) {
      // Act on S itself when that action is already faithful.
      std::set<transf_type> seen;
      for (auto const& f : X.maps) {
        seen.emplace(f.begin(), f.begin() + S.size());
      }
      if (seen.size() == X.maps.size()) {
        X.degree = S.size();
        for (auto& f : X.maps) {
          f.resize(S.size());
        }
      }
    }
    for (element_type c = 0; c < X.degree; ++c) {
      X.maps.emplace_back(X.degree, c);
      X.tags.push_back("const" + std::to_string(c));
    }
    return X;
  }

  Semigroup augment(Semigroup const& S, AugmentMode mode) {
    if (mode == AugmentMode::flat) {
      return opposite(augment(opposite(S), AugmentMode::bar));
    }
    return to_semigroup(bar_action(S));
  }

  TransformationSemigroup rlm_action(Semigroup const& T) {
    auto const          K = minimal_ideal(T);
    auto const          L = green_partition(T, Green::L);
    std::vector<size_t> cls;  // L-class ids of the kernel, in order
    std::map<size_t, element_type> local;
    for (auto k : K) {
      if (local.emplace(L[k], local.size()).second) {
        cls.push_back(k);
      }
    }
    TransformationSemigroup out;
    out.degree = cls.size();
    for (element_type t = 0; t < T.size(); ++t) {
      transf_type f(out.degree);
      for (size_t c = 0; c < cls.size(); ++c) {
        f[c] = local.at(L[T(cls[c], t)]);
      }
      out.maps.push_back(std::move(f));
      out.tags.push_back(std::to_string(t));
    }
    return out;
  }

  Semigroup rlm(Semigroup const& T) {
    return to_semigroup(rlm_action(T));
  }

  std::vector<Semigroup> hierarchy_iterate(Semigroup const&                seed,
                                           std::vector<AugmentMode> const& pattern,
                                           size_t                          depth,
                                           size_t max_order,
                                           size_t max_depth) {
    if (pattern.empty()) {
      throw BadParams("the operator pattern is empty");
    }
    if (depth > max_depth) {
      throw SizeLimitExceeded("depth " + std::to_string(depth)
                              + " exceeds the configured maximum "
                              + std::to_string(max_depth));
    }
    std::vector<Semigroup> out{seed};
    for (size_t i = 0; i < depth; ++i) {
      auto next = augment(out.back(), pattern[i % pattern.size()]);
      if (next.size() > max_order) {
        throw SizeLimitExceeded("iterate " + std::to_string(i + 1) + " has "
                                + std::to_string(next.size())
                                + " elements, above the cap of "
                                + std::to_string(max_order));
      }
      out.push_back(std::move(next));
    }
    return out;
  }

}  // namespace sgforge
