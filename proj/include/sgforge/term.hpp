#ifndef SGFORGE_TERM_HPP_
#define SGFORGE_TERM_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <vector>    // for vector

namespace sgforge {

  struct Exponent {
    enum class Kind { integer, omega_plus, pi_omega };

    Kind kind  = Kind::integer;
    long value = 1;
    // The primes P for x^[P'], sorted and distinct.
    std::vector<unsigned> primes;

    static Exponent integer(long k);
    static Exponent omega_plus(long k);
    static Exponent pi_omega(std::vector<unsigned> primes);

    bool operator==(Exponent const& that) const {
      return kind == that.kind && value == that.value && primes == that.primes;
    }
  };

  struct Term {
    enum class Kind { letter, kernel, concat, power };

    Kind              kind = Kind::letter;
    std::string       name;      // letters only
    std::vector<Term> children;  // factors of a concat, or the base of a power
    Exponent          exponent;  // powers only

    static Term letter(std::string name);
    static Term kernel();
    static Term concat(std::vector<Term> children);
    static Term power(Term base, Exponent e);

    bool operator==(Term const& that) const;
    bool operator!=(Term const& that) const {
      return !(*this == that);
    }
  };

  struct Pseudoidentity {
    Term lhs;
    Term rhs;
    // Letters in order of first occurrence, lhs before rhs.
    std::vector<std::string> alphabet;
    bool                     uses_kernel = false;

    // True if only letters, concatenation and positive integer powers occur.
    bool is_plain() const;
  };

  // Throws SyntaxError or ReservedLetterMisuse.
  Term           parse_term(std::string const& text);
  Pseudoidentity parse_pseudoidentity(std::string const& text);
  Pseudoidentity make_pseudoidentity(Term lhs, Term rhs);

  std::string format(Exponent const& e);
  std::string format(Term const& t);
  std::string format(Pseudoidentity const& p);

  std::vector<std::string> letters_of(Term const& t);
  bool                     uses_kernel(Term const& t);

  using Word = std::vector<std::string>;

  // Expands integer powers; nullopt for terms with other exponents or e.
  std::optional<Word> as_word(Term const& t);

  Term word_term(Word const& w);

  struct WordStats {
    std::map<std::string, size_t> occ;
    std::set<std::string>         con;
    Word                          ini;
    Word                          fin;
  };

  WordStats word_stats(Word const& w);

  std::string format(Word const& w);

}  // namespace sgforge

#endif  // SGFORGE_TERM_HPP_
