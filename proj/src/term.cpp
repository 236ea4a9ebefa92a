#include "sgforge/term.hpp"

#include <algorithm>  // for find, sort, unique
#include <cctype>     // for isdigit, islower, isspace
#include <utility>    // for move

#include "sgforge/error.hpp"

namespace sgforge {

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  Exponent Exponent::integer(long k) {
    return Exponent{Kind::integer, k, {}};
  }

  Exponent Exponent::omega_plus(long k) {
    return Exponent{Kind::omega_plus, k, {}};
  }

  Exponent Exponent::pi_omega(std::vector<unsigned> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return Exponent{Kind::pi_omega, 0, std::move(primes)};
  }

  Term Term::letter(std::string name) {
    Term t;
    t.kind = Kind::letter;
    t.name = std::move(name);
    return t;
  }

  Term Term::kernel() {
    Term t;
    t.kind = Kind::kernel;
    return t;
  }

  Term Term::concat(std::vector<Term> children) {
    Term t;
    t.kind     = Kind::concat;
    t.children = std::move(children);
    return t;
  }

  Term Term::power(Term base, Exponent e) {
    Term t;
    t.kind = Kind::power;
    t.children.push_back(std::move(base));
    t.exponent = std::move(e);
    return t;
  }

  bool Term::operator==(Term const& that) const {
    if (kind != that.kind) {
      return false;
    }
    switch (kind) {
      case Kind::letter:
        return name == that.name;
      case Kind::kernel:
        return true;
      case Kind::power:
        return exponent == that.exponent && children == that.children;
      case Kind::concat:
      default:
        return children == that.children;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      Parser(std::string const& text, size_t offset)
          : _text(text), _pos(0), _offset(offset) {}

      Term parse_all() {
        Term t = term();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        check_empty_factors(t, false);
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw SyntaxError(_offset + _pos, msg);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _text.size() && _text[_pos] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      bool at_atom() {
        skip();
        if (_pos >= _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || std::islower(static_cast<unsigned char>(c));
      }

      long integer() {
        skip();
        size_t start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        if (_pos - start > 9) {
          fail("integer too large");
        }
        return std::stol(_text.substr(start, _pos - start));
      }

      Term term() {
        std::vector<Term> factors;
        if (!at_atom()) {
          fail("expected a letter or '('");
        }
        while (at_atom()) {
          factors.push_back(factor());
        }
        if (factors.size() == 1) {
          return std::move(factors[0]);
        }
        return Term::concat(std::move(factors));
      }

      Term factor() {
        Term base = atom();
        while (peek('^')) {
          ++_pos;
          base = Term::power(std::move(base), exponent());
        }
        return base;
      }

      Term atom() {
        skip();
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          Term t = term();
          expect(')');
          return t;
        }
        ++_pos;
        std::string name(1, c);
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          name.push_back(_text[_pos++]);
        }
        if (name == "e") {
          return Term::kernel();
        }
        if (c == 'e') {
          fail("the letter e is reserved for the kernel idempotent");
        }
        return Term::letter(name);
      }

      Exponent exponent() {
        skip();
        if (_pos >= _text.size()) {
          fail("missing exponent");
        }
        char c = _text[_pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
          return Exponent::integer(integer());
        }
        if (c == 'w') {
          ++_pos;
          return Exponent::omega_plus(0);
        }
        if (c == '[') {
          ++_pos;
          std::vector<unsigned> primes;
          do {
            long p = integer();
            if (!is_prime(p)) {
              fail(std::to_string(p) + " is not prime");
            }
            primes.push_back(static_cast<unsigned>(p));
          } while (peek(',') && (++_pos, true));
          expect('\'');
          expect(']');
          return Exponent::pi_omega(std::move(primes));
        }
        if (c == '(') {
          ++_pos;
          if (peek('w')) {
            ++_pos;
            long sign = 0;
            if (peek('+')) {
              sign = 1;
            } else if (peek('-')) {
              sign = -1;
            } else {
              fail("expected '+' or '-'");
            }
            ++_pos;
            long k = integer();
            expect(')');
            return Exponent::omega_plus(sign * k);
          }
          long k = integer();
          expect('+');
          expect('w');
          expect(')');
          return Exponent::omega_plus(k);
        }
        fail("malformed exponent");
      }

      static bool is_prime(long p) {
        if (p < 2) {
          return false;
        }
        for (long d = 2; d * d <= p; ++d) {
          if (p % d == 0) {
            return false;
          }
        }
        return true;
      }

      static bool is_empty(Term const& t) {
        if (t.kind == Term::Kind::power) {
          return (t.exponent.kind == Exponent::Kind::integer
                  && t.exponent.value == 0)
                 || is_empty(t.children[0]);
        }
        if (t.kind == Term::Kind::concat) {
          return std::all_of(t.children.begin(), t.children.end(), is_empty);
        }
        return false;
      }

      // Zero exponents may only erase a factor that has a nonempty sibling.
      void check_empty_factors(Term const& t, bool inside_concat) const {
        if (t.kind == Term::Kind::power) {
          bool zero = t.exponent.kind == Exponent::Kind::integer
                      && t.exponent.value == 0;
          if (zero && t.children[0].kind == Term::Kind::kernel
              && !inside_concat) {
            throw ReservedLetterMisuse("e^0 cannot stand alone");
          }
          if (zero && !inside_concat) {
            throw SyntaxError(_offset, "a zero exponent must sit inside a "
                                       "product with another factor");
          }
          if (is_empty(t.children[0])) {
            throw SyntaxError(_offset, "empty base under an exponent");
          }
          check_empty_factors(t.children[0], false);
          return;
        }
        if (t.kind == Term::Kind::concat) {
          if (is_empty(t)) {
            throw SyntaxError(_offset, "every factor of the product is empty");
          }
          for (auto const& c : t.children) {
            check_empty_factors(c, true);
          }
        }
      }

      std::string const& _text;
      size_t             _pos;
      size_t             _offset;
    };
  }  // namespace

  Term parse_term(std::string const& text) {
    return Parser(text, 0).parse_all();
  }

  namespace {
    void collect_letters(Term const& t, std::vector<std::string>& out) {
      if (t.kind == Term::Kind::letter) {
        if (std::find(out.begin(), out.end(), t.name) == out.end()) {
          out.push_back(t.name);
        }
      }
      for (auto const& c : t.children) {
        collect_letters(c, out);
      }
    }

    // Replaces the UTF-8 sign for approximate equality by '='.
    std::string normalize(std::string const& text) {
      std::string       out;
      std::string const approx = "\xE2\x89\x88";
      for (size_t i = 0; i < text.size();) {
        if (text.compare(i, approx.size(), approx) == 0) {
          out.push_back('=');
          i += approx.size();
        } else {
          out.push_back(text[i++]);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> letters_of(Term const& t) {
    std::vector<std::string> out;
    collect_letters(t, out);
    return out;
  }

  bool uses_kernel(Term const& t) {
    if (t.kind == Term::Kind::kernel) {
      return true;
    }
    return std::any_of(t.children.begin(), t.children.end(), [](Term const& c) {
      return uses_kernel(c);
    });
  }

  Pseudoidentity make_pseudoidentity(Term lhs, Term rhs) {
    Pseudoidentity p;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    collect_letters(p.lhs, p.alphabet);
    collect_letters(p.rhs, p.alphabet);
    p.uses_kernel = uses_kernel(p.lhs) || uses_kernel(p.rhs);
    return p;
  }

  Pseudoidentity parse_pseudoidentity(std::string const& raw) {
    std::string text = normalize(raw);
    size_t      eq   = text.find('=');
    if (eq == std::string::npos) {
      throw SyntaxError(text.size(), "expected '=' between the two sides");
    }
    if (text.find('=', eq + 1) != std::string::npos) {
      throw SyntaxError(text.find('=', eq + 1), "more than one '='");
    }
    Term lhs = Parser(text.substr(0, eq), 0).parse_all();
    Term rhs = Parser(text.substr(eq + 1), eq + 1).parse_all();
    return make_pseudoidentity(std::move(lhs), std::move(rhs));
  }

  bool Pseudoidentity::is_plain() const {
    struct {
      bool operator()(Term const& t) const {
        switch (t.kind) {
          case Term::Kind::letter:
            return true;
          case Term::Kind::kernel:
            return false;
          case Term::Kind::power:
            return t.exponent.kind == Exponent::Kind::integer
                   && (*this)(t.children[0]);
          case Term::Kind::concat:
          default:
            return std::all_of(
                t.children.begin(), t.children.end(), [this](Term const& c) {
                  return (*this)(c);
                });
        }
      }
    } plain;
    return plain(lhs) && plain(rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  std::string format(Exponent const& e) {
    switch (e.kind) {
      case Exponent::Kind::integer:
        return std::to_string(e.value);
      case Exponent::Kind::omega_plus:
        if (e.value == 0) {
          return "w";
        }
        return e.value > 0 ? "(w+" + std::to_string(e.value) + ")"
                           : "(w-" + std::to_string(-e.value) + ")";
      case Exponent::Kind::pi_omega:
      default: {
        std::string out = "[";
        for (size_t i = 0; i < e.primes.size(); ++i) {
          out += (i == 0 ? "" : ",") + std::to_string(e.primes[i]);
        }
        return out + "']";
      }
    }
  }

  std::string format(Term const& t) {
    switch (t.kind) {
      case Term::Kind::letter:
        return t.name;
      case Term::Kind::kernel:
        return "e";
      case Term::Kind::power: {
        Term const& b    = t.children[0];
        bool        bare = b.kind == Term::Kind::letter
                    || b.kind == Term::Kind::kernel;
        std::string base = bare ? format(b) : "(" + format(b) + ")";
        return base + "^" + format(t.exponent);
      }
      case Term::Kind::concat:
      default: {
        std::string out;
        for (auto const& c : t.children) {
          out += c.kind == Term::Kind::concat ? "(" + format(c) + ")"
                                              : format(c);
        }
        return out;
      }
    }
  }

  std::string format(Pseudoidentity const& p) {
    return format(p.lhs) + " = " + format(p.rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool expand(Term const& t, Word& out) {
      switch (t.kind) {
        case Term::Kind::letter:
          out.push_back(t.name);
          return true;
        case Term::Kind::kernel:
          return false;
        case Term::Kind::power: {
          if (t.exponent.kind != Exponent::Kind::integer) {
            return false;
          }
          Word base;
          if (!expand(t.children[0], base)) {
            return false;
          }
          for (long i = 0; i < t.exponent.value; ++i) {
            out.insert(out.end(), base.begin(), base.end());
          }
          return true;
        }
        case Term::Kind::concat:
        default:
          for (auto const& c : t.children) {
            if (!expand(c, out)) {
              return false;
            }
          }
          return true;
      }
    }
  }  // namespace

  std::optional<Word> as_word(Term const& t) {
    Word out;
    if (!expand(t, out)) {
      return std::nullopt;
    }
    return out;
  }

  Term word_term(Word const& w) {
    std::vector<Term> factors;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      Term x = Term::letter(w[i]);
      factors.push_back(j - i == 1 ? x : Term::power(x, Exponent::integer(j - i)));
      i = j;
    }
    if (factors.size() == 1) {
      return factors[0];
    }
    return Term::concat(std::move(factors));
  }

  WordStats word_stats(Word const& w) {
    WordStats out;
    for (auto const& x : w) {
      if (out.occ[x]++ == 0) {
        out.ini.push_back(x);
      }
      out.con.insert(x);
    }
    for (size_t i = 0; i < w.size(); ++i) {
      if (std::find(w.begin() + i + 1, w.end(), w[i]) == w.end()) {
        out.fin.push_back(w[i]);
      }
    }
    return out;
  }

  std::string format(Word const& w) {
    return format(word_term(w));
  }

}  // namespace sgforge
