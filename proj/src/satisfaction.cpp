#include "sgforge/satisfaction.hpp"

#include <algorithm>      // for sort, find
#include <map>            // for map
#include <random>         // for mt19937_64, uniform_int_distribution
#include <unordered_map>  // for unordered_map
#include <utility>        // for move

#include "sgforge/error.hpp"

namespace sgforge {

  std::optional<element_type> Assignment::value(std::string const& letter) const {
    for (auto const& [name, v] : letters) {
      if (name == letter) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::string variable_name(size_t i) {
    static char const names[] = "xyzthk";
    if (i < 6) {
      return std::string(1, names[i]);
    }
    return "x" + std::to_string(i - 5);
  }

  ////////////////////////////////////////////////////////////////////////
  // Powers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    long inverse_mod(long a, long m) {
      long g = m, x = 0, x1 = 1, a1 = a % m;
      while (a1 != 0) {
        long q = g / a1;
        long t = g - q * a1;
        g      = a1;
        a1     = t;
        t      = x - q * x1;
        x      = x1;
        x1     = t;
      }
      return ((x % m) + m) % m;
    }

    // g^r in the cyclic group with identity omega generated by g.
    element_type group_power(Semigroup const& S,
                             element_type     omega,
                             element_type     g,
                             long             r) {
      return r == 0 ? omega : power(S, g, static_cast<size_t>(r));
    }

    element_type pi_omega_from(Semigroup const&             S,
                               Monogenic const&             m,
                               element_type                 x,
                               std::vector<unsigned> const& primes) {
      long const   p  = static_cast<long>(m.period);
      element_type g  = S(m.omega, x);
      long         mp = 1;
      long         r  = p;
      for (unsigned q : primes) {
        while (r % q == 0) {
          r /= q;
          mp *= q;
        }
      }
      // t = 0 mod r and t = 1 mod mp
      long t = mp == 1 ? 0 : (r * inverse_mod(r % mp, mp)) % p;
      return group_power(S, m.omega, g, t);
    }

    element_type omega_plus_from(Semigroup const& S,
                                 Monogenic const& m,
                                 element_type     x,
                                 long             k) {
      long const p = static_cast<long>(m.period);
      return group_power(S, m.omega, S(m.omega, x), ((k % p) + p) % p);
    }
  }  // namespace

  element_type pi_omega_power(Semigroup const&             S,
                              element_type                 x,
                              std::vector<unsigned> const& primes) {
    return pi_omega_from(S, monogenic(S, x), x, primes);
  }

  element_type omega_plus_power(Semigroup const& S, element_type x, long k) {
    return omega_plus_from(S, monogenic(S, x), x, k);
  }

  std::vector<element_type> kernel_idempotents(
      Semigroup const&                 S,
      std::vector<element_type> const& images) {
    auto U = subsemigroup_closure(S, images);
    if (U.empty()) {
      return {};
    }
    element_type z = U[0];
    for (size_t i = 1; i < U.size(); ++i) {
      z = S(z, U[i]);
    }
    std::vector<char> in(S.size(), 0);
    in[z] = 1;
    for (auto a : U) {
      in[S(a, z)] = 1;
    }
    std::vector<char> left = in;
    for (element_type y = 0; y < S.size(); ++y) {
      if (left[y]) {
        for (auto b : U) {
          in[S(y, b)] = 1;
        }
      }
    }
    std::vector<element_type> out;
    for (element_type y = 0; y < S.size(); ++y) {
      if (in[y] && S(y, y) == y) {
        out.push_back(y);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation of compiled terms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Node {
      Term::Kind        kind;
      int               var = -1;
      std::vector<Node> kids;
      Exponent          exp;
      bool              empty = false;  // a factor with exponent 0
    };

    Node compile(Term const& t, std::vector<std::string> const& alphabet) {
      Node n;
      n.kind = t.kind;
      if (t.kind == Term::Kind::letter) {
        auto it = std::find(alphabet.begin(), alphabet.end(), t.name);
        if (it == alphabet.end()) {
          throw MissingLetter("no value for the letter " + t.name);
        }
        n.var = static_cast<int>(it - alphabet.begin());
      }
      for (auto const& c : t.children) {
        n.kids.push_back(compile(c, alphabet));
      }
      if (t.kind == Term::Kind::power) {
        n.exp   = t.exponent;
        n.empty = t.exponent.kind == Exponent::Kind::integer
                  && t.exponent.value == 0;
      }
      return n;
    }

    class Evaluator {
     public:
      explicit Evaluator(Semigroup const& S) : _S(S), _mono(), _have() {
        _mono.resize(S.size());
        _have.assign(S.size(), 0);
      }

      Monogenic const& mono(element_type x) {
        if (!_have[x]) {
          _mono[x] = monogenic(_S, x);
          _have[x] = 1;
        }
        return _mono[x];
      }

      element_type eval(Node const& n, element_type const* vals, element_type e) {
        switch (n.kind) {
          case Term::Kind::letter:
            return vals[n.var];
          case Term::Kind::kernel:
            return e;
          case Term::Kind::power: {
            element_type b = eval(n.kids[0], vals, e);
            switch (n.exp.kind) {
              case Exponent::Kind::integer:
                return power(_S, b, static_cast<size_t>(n.exp.value));
              case Exponent::Kind::omega_plus:
                return omega_plus_from(_S, mono(b), b, n.exp.value);
              case Exponent::Kind::pi_omega:
              default:
                return pi_omega_from(_S, mono(b), b, n.exp.primes);
            }
          }
          case Term::Kind::concat:
          default: {
            bool         have = false;
            element_type acc  = 0;
            for (auto const& k : n.kids) {
              if (k.empty) {
                continue;
              }
              element_type v = eval(k, vals, e);
              acc            = have ? _S(acc, v) : v;
              have           = true;
            }
            return acc;
          }
        }
      }

     private:
      Semigroup const&       _S;
      std::vector<Monogenic> _mono;
      std::vector<char>      _have;
    };

    // Plain identities: both sides are words, evaluated depth first with
    // prefixes shared between assignments.
    class PlainChecker {
     public:
      struct Run {
        size_t var;
        size_t exp;
      };

      PlainChecker(Semigroup const& S, Pseudoidentity const& p)
          : _S(S), _k(p.alphabet.size()), _vals(_k, 0), _pw() {
        size_t max_exp = 1;
        for (auto const* side : {&p.lhs, &p.rhs}) {
          auto w    = *as_word(*side);
          auto& out = side == &p.lhs ? _u : _v;
          for (size_t i = 0; i < w.size();) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) {
              ++j;
            }
            size_t var = std::find(p.alphabet.begin(), p.alphabet.end(), w[i])
                         - p.alphabet.begin();
            out.push_back({var, j - i});
            max_exp = std::max(max_exp, j - i);
            i       = j;
          }
        }
        size_t const n = S.size();
        _pw.assign(max_exp + 1, std::vector<element_type>(n));
        for (element_type x = 0; x < n; ++x) {
          _pw[1][x] = x;
          for (size_t e = 2; e <= max_exp; ++e) {
            _pw[e][x] = S(_pw[e - 1][x], x);
          }
        }
      }

      bool run() {
        return dfs(0, 0, 0, false, 0, 0, false);
      }

      std::vector<element_type> const& witness() const {
        return _vals;
      }

      element_type lhs_value() const {
        return _lv;
      }

      element_type rhs_value() const {
        return _rv;
      }

     private:
      void advance(std::vector<Run> const& w,
                   size_t                  d,
                   size_t&                 pos,
                   element_type&           val,
                   bool&                   has) const {
        while (pos < w.size() && w[pos].var < d) {
          element_type x = _pw[w[pos].exp][_vals[w[pos].var]];
          val            = has ? _S(val, x) : x;
          has            = true;
          ++pos;
        }
      }

      bool dfs(size_t       d,
               size_t       pu,
               element_type vu,
               bool         hu,
               size_t       pv,
               element_type vv,
               bool         hv) {
        advance(_u, d, pu, vu, hu);
        advance(_v, d, pv, vv, hv);
        if (d == _k) {
          if (vu != vv) {
            _lv = vu;
            _rv = vv;
            return false;
          }
          return true;
        }
        for (element_type x = 0; x < _S.size(); ++x) {
          _vals[d] = x;
          if (!dfs(d + 1, pu, vu, hu, pv, vv, hv)) {
            return false;
          }
        }
        return true;
      }

      Semigroup const&                       _S;
      size_t                                 _k;
      std::vector<element_type>              _vals;
      std::vector<std::vector<element_type>> _pw;
      std::vector<Run>                       _u, _v;
      element_type                           _lv = 0, _rv = 0;
    };

    Assignment make_assignment(Pseudoidentity const&            p,
                               std::vector<element_type> const& vals) {
      Assignment a;
      for (size_t i = 0; i < p.alphabet.size(); ++i) {
        a.letters.emplace_back(p.alphabet[i], vals[i]);
      }
      return a;
    }
  }  // namespace

  element_type eval_term(Semigroup const& S, Term const& t, Assignment const& a) {
    std::vector<std::string>  names;
    std::vector<element_type> vals;
    for (auto const& [name, v] : a.letters) {
      if (v >= S.size()) {
        throw MissingLetter("the value of " + name + " is out of range");
      }
      names.push_back(name);
      vals.push_back(v);
    }
    Node         n = compile(t, names);
    element_type e = 0;
    if (uses_kernel(t)) {
      if (!a.kernel) {
        throw InvalidKernelChoice("no value for the kernel idempotent");
      }
      auto ks = kernel_idempotents(S, vals);
      if (std::find(ks.begin(), ks.end(), *a.kernel) == ks.end()) {
        throw InvalidKernelChoice(
            "the kernel choice is not an idempotent of the minimal ideal of "
            "the subsemigroup generated by the letters");
      }
      e = *a.kernel;
    }
    Evaluator ev(S);
    return ev.eval(n, vals.data(), e);
  }

  SatisfactionReport satisfies(Semigroup const& S, Pseudoidentity const& p) {
    SatisfactionReport out;
    size_t const       k = p.alphabet.size();
    if (k == 0) {
      throw BadParams("a pseudoidentity needs at least one letter");
    }
    if (p.is_plain()) {
      PlainChecker check(S, p);
      if (!check.run()) {
        out.satisfied = false;
        out.witness   = make_assignment(p, check.witness());
        out.lhs_value = check.lhs_value();
        out.rhs_value = check.rhs_value();
      }
      return out;
    }
    Node const lhs = compile(p.lhs, p.alphabet);
    Node const rhs = compile(p.rhs, p.alphabet);
    Evaluator  ev(S);
    std::map<std::vector<element_type>, std::vector<element_type>> cache;
    std::vector<element_type> vals(k, 0);
    std::vector<element_type> none{0};
    while (true) {
      std::vector<element_type> const* choices = &none;
      if (p.uses_kernel) {
        std::vector<element_type> key = vals;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto it = cache.find(key);
        if (it == cache.end()) {
          it = cache.emplace(key, kernel_idempotents(S, key)).first;
        }
        choices = &it->second;
      }
      for (auto f : *choices) {
        element_type l = ev.eval(lhs, vals.data(), f);
        element_type r = ev.eval(rhs, vals.data(), f);
        if (l != r) {
          out.satisfied = false;
          out.witness   = make_assignment(p, vals);
          if (p.uses_kernel) {
            out.witness->kernel = f;
          }
          out.lhs_value = l;
          out.rhs_value = r;
          return out;
        }
      }
      size_t i = k;
      while (i > 0 && ++vals[i - 1] == S.size()) {
        vals[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  bool satisfies_all(Semigroup const& S, std::vector<Pseudoidentity> const& ps) {
    for (auto const& p : ps) {
      if (!satisfies(S, p).satisfied) {
        return false;
      }
    }
    return true;
  }

  bool violates_all(Semigroup const& S, std::vector<Pseudoidentity> const& ps) {
    for (auto const& p : ps) {
      if (satisfies(S, p).satisfied) {
        return false;
      }
    }
    return true;
  }

  Semigroup local_monoid(Semigroup const& S, element_type u) {
    std::vector<element_type> elts;
    for (element_type s = 0; s < S.size(); ++s) {
      elts.push_back(S(S(u, s), u));
    }
    return restrict_to(S, elts);
  }

  bool in_local(Semigroup const& S, Pseudoidentity const& p) {
    for (auto u : idempotents(S)) {
      if (!satisfies(local_monoid(S, u), p).satisfied) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Separation search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint64_t mix(std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }

    std::uint64_t fingerprint(std::vector<element_type> const& v) {
      std::uint64_t h = 0;
      for (auto x : v) {
        h = mix(h ^ (x + 0x100000000ULL));
      }
      return h;
    }

    // Term functions of all words of a fixed length, one vector entry per
    // assignment of the letters.
    class WordTable {
     public:
      WordTable(Semigroup const& S, size_t letters) : _S(S), _letters() {
        size_t total = 1;
        for (size_t i = 0; i < letters; ++i) {
          if (total > 5'000'000 / S.size()) {
            throw SizeLimitExceeded("too many assignments for separation");
          }
          total *= S.size();
        }
        for (size_t i = 0; i < letters; ++i) {
          std::vector<element_type> v(total);
          size_t                    stride = 1;
          for (size_t j = i + 1; j < letters; ++j) {
            stride *= S.size();
          }
          for (size_t a = 0; a < total; ++a) {
            v[a] = (a / stride) % S.size();
          }
          _letters.push_back(std::move(v));
        }
      }

      std::vector<element_type> const& letter(size_t i) const {
        return _letters[i];
      }

      void extend(std::vector<element_type> const& prefix,
                  size_t                           i,
                  std::vector<element_type>&       out) const {
        auto const& l = _letters[i];
        out.resize(l.size());
        for (size_t a = 0; a < l.size(); ++a) {
          out[a] = _S(prefix[a], l[a]);
        }
      }

     private:
      Semigroup const&                       _S;
      std::vector<std::vector<element_type>> _letters;
    };

    Pseudoidentity identity_of(Word const& u, Word const& v) {
      return make_pseudoidentity(word_term(u), word_term(v));
    }
  }  // namespace

  std::optional<Pseudoidentity> separation_search(Semigroup const&        A,
                                                  Semigroup const&        B,
                                                  SeparationBounds const& bounds) {
    size_t const L = bounds.max_letters;
    if (L == 0 || bounds.max_length == 0) {
      return std::nullopt;
    }
    WordTable ta(A, L), tb(B, L);
    // fingerprint over A -> (fingerprint over B, first word)
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::vector<size_t>>>
        groups;
    auto to_word = [](std::vector<size_t> const& w) {
      Word out;
      for (auto i : w) {
        out.push_back(variable_name(i));
      }
      return out;
    };

    for (size_t len = 1; len <= bounds.max_length; ++len) {
      std::vector<std::vector<element_type>> va(len + 1), vb(len + 1);
      std::vector<size_t>                    w(len, 0);
      // Odometer over words of this length; recompute from the first
      // changed position.
      size_t from = 0;
      while (true) {
        for (size_t d = from; d < len; ++d) {
          if (d == 0) {
            va[1] = ta.letter(w[0]);
            vb[1] = tb.letter(w[0]);
          } else {
            ta.extend(va[d], w[d], va[d + 1]);
            tb.extend(vb[d], w[d], vb[d + 1]);
          }
        }
        std::uint64_t ha = fingerprint(va[len]), hb = fingerprint(vb[len]);
        auto [it, fresh] = groups.emplace(ha, std::make_pair(hb, w));
        if (!fresh && it->second.first != hb) {
          auto p = identity_of(to_word(it->second.second), to_word(w));
          if (satisfies(A, p).satisfied && !satisfies(B, p).satisfied) {
            return p;
          }
        }
        size_t i = len;
        while (i > 0 && ++w[i - 1] == L) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        from = i - 1;
      }
    }

    std::mt19937_64                       rng(bounds.seed);
    std::uniform_int_distribution<size_t> letter(0, L - 1);
    std::uniform_int_distribution<size_t> length(1, 2 * bounds.max_length);
    for (size_t s = 0; s < bounds.samples; ++s) {
      Word u, v;
      for (size_t i = length(rng); i > 0; --i) {
        u.push_back(variable_name(letter(rng)));
      }
      for (size_t i = length(rng); i > 0; --i) {
        v.push_back(variable_name(letter(rng)));
      }
      auto p = identity_of(u, v);
      if (satisfies(A, p).satisfied && !satisfies(B, p).satisfied) {
        return p;
      }
    }
    return std::nullopt;
  }

}  // namespace sgforge
