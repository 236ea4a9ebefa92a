#ifndef SGFORGE_SEMIGROUP_HPP_
#define SGFORGE_SEMIGROUP_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

namespace sgforge {

  using element_type = std::uint32_t;
  using table_type   = std::vector<std::vector<element_type>>;

  // Finite semigroup given by its multiplication table; row = left factor.
  // Instances are validated on construction and never modified afterwards.
  class Semigroup {
   public:
    Semigroup();

    // Throws NotClosed or NotAssociative.
    explicit Semigroup(table_type const& rows, std::string name = "");
    Semigroup(size_t n, std::vector<element_type> flat, std::string name = "");

    size_t size() const noexcept {
      return _n;
    }

    element_type operator()(element_type a, element_type b) const noexcept {
      return _table[a * _n + b];
    }

    std::vector<element_type> const& flat() const noexcept {
      return _table;
    }

    table_type rows() const;

    std::string const& name() const noexcept {
      return _name;
    }

    Semigroup with_name(std::string name) const;

    bool operator==(Semigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

   private:
    void validate() const;

    size_t                    _n;
    std::vector<element_type> _table;
    std::string               _name;
  };

  Semigroup new_from_table(table_type const& rows);

  Semigroup trivial_semigroup();

  Semigroup product(Semigroup const& S, Semigroup const& T);

  Semigroup opposite(Semigroup const& S);

  enum class IdentityMode { always, bullet };

  std::optional<element_type> identity_element(Semigroup const& S);

  // The new identity, when one is adjoined, is the last element.
  Semigroup adjoin_identity(Semigroup const& S, IdentityMode mode);

  // Sorted list of the elements of the subsemigroup generated by seed.
  std::vector<element_type> subsemigroup_closure(
      Semigroup const&                 S,
      std::vector<element_type> const& seed);

  // Elements are renumbered in increasing order of their index in S.
  Semigroup restrict_to(Semigroup const& S, std::vector<element_type> elts);

  // The zero of the quotient is the last element; throws NotAnIdeal.
  Semigroup rees_quotient(Semigroup const&                 S,
                          std::vector<element_type> const& ideal);

  // table[perm[a]][perm[b]] = perm[a * b]
  Semigroup relabel(Semigroup const& S, std::vector<element_type> const& perm);

  bool is_ideal(Semigroup const& S, std::vector<element_type> const& elts);

  enum class Green { L, R, J, H };

  // Block ids numbered by first appearance.
  std::vector<size_t> green_partition(Semigroup const& S, Green rel);

  std::vector<element_type> minimal_ideal(Semigroup const& S);

  element_type power(Semigroup const& S, element_type x, size_t k);

  element_type omega_power(Semigroup const& S, element_type x);

  bool is_idempotent(Semigroup const& S, element_type x);

  std::vector<element_type> idempotents(Semigroup const& S);

  bool is_commutative(Semigroup const& S);

  struct Monogenic {
    size_t       index;   // least i with x^i = x^(i + period)
    size_t       period;  // order of the cyclic group <x^(w+1)>
    element_type omega;   // the idempotent power of x
  };

  Monogenic monogenic(Semigroup const& S, element_type x);

  enum class CanonMode { iso, iso_antiiso };

  // Lexicographically least flattened table over all relabelings, one byte per
  // entry.
  std::string canonical_form(Semigroup const& S, CanonMode mode);

  std::string canonical_form(size_t                     n,
                             element_type const*        table,
                             std::vector<element_type>& perm_scratch);

  std::string to_hex(std::string const& bytes);

  std::string canonical_key(Semigroup const& S, CanonMode mode);

  // The table stored in a canonical form.
  Semigroup from_canonical_form(std::string const& bytes);

  bool isomorphic(Semigroup const& S, Semigroup const& T);

  bool anti_isomorphic_or_isomorphic(Semigroup const& S, Semigroup const& T);

  struct Congruence {
    std::vector<size_t> block;

    bool is_trivial() const;
    bool related(element_type a, element_type b) const {
      return block[a] == block[b];
    }
  };

  Congruence principal_congruence(Semigroup const& S,
                                  element_type     a,
                                  element_type     b);

  bool is_congruence(Semigroup const& S, Congruence const& c);

  bool is_sdi(Semigroup const& S);

  struct DivisionConfig {
    size_t exact_bound    = 20;
    size_t max_generators = 4;
    size_t node_budget    = 2'000'000;
  };

  struct DivisionVerdict {
    enum class Result { yes, no, inconclusive };

    Result result = Result::no;
    // Generators in T and their images in S, when result is yes.
    std::vector<element_type> generators;
    std::vector<element_type> images;
    // Elements of the generated subsemigroup of T and their images in S.
    std::vector<element_type> domain;
    std::vector<element_type> map;
  };

  // Is S a homomorphic image of a subsemigroup of T?
  DivisionVerdict divides(Semigroup const&      S,
                          Semigroup const&      T,
                          DivisionConfig const& cfg = {});

  bool replay(DivisionVerdict const& v, Semigroup const& S, Semigroup const& T);

  // Some generating set of S, reasonably small.
  std::vector<element_type> generating_set(Semigroup const& S);

  // M0(G; I, L; P) for G = Z_g; entries of the L x I matrix P are group
  // exponents, or -1 for zero. The zero is element 0.
  Semigroup rees_matrix_semigroup(size_t                               g,
                                  std::vector<std::vector<int>> const& P);

}  // namespace sgforge

#endif  // SGFORGE_SEMIGROUP_HPP_
