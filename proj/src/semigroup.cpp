#include "sgforge/semigroup.hpp"

#include <algorithm>  // for sort, next_permutation, fill
#include <map>        // for map
#include <numeric>    // for iota
#include <utility>    // for move

#include "sgforge/error.hpp"

namespace sgforge {

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  Semigroup::Semigroup() : _n(1), _table({0}), _name() {}

  Semigroup::Semigroup(table_type const& rows, std::string name)
      : _n(rows.size()), _table(), _name(std::move(name)) {
    if (_n == 0) {
      throw NotClosed("a semigroup must have at least one element");
    }
    _table.reserve(_n * _n);
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw NotClosed("the table is not square");
      }
      _table.insert(_table.end(), row.begin(), row.end());
    }
    validate();
  }

  Semigroup::Semigroup(size_t n, std::vector<element_type> flat, std::string name)
      : _n(n), _table(std::move(flat)), _name(std::move(name)) {
    if (_n == 0 || _table.size() != _n * _n) {
      throw NotClosed("the table has the wrong number of entries");
    }
    validate();
  }

  void Semigroup::validate() const {
    for (size_t p = 0; p < _table.size(); ++p) {
      if (_table[p] >= _n) {
        throw NotClosed("entry " + std::to_string(_table[p]) + " at ("
                        + std::to_string(p / _n) + ", "
                        + std::to_string(p % _n) + ") is out of range");
      }
    }
    for (size_t i = 0; i < _n; ++i) {
      for (size_t j = 0; j < _n; ++j) {
        element_type ij = _table[i * _n + j];
        for (size_t k = 0; k < _n; ++k) {
          if (_table[ij * _n + k] != _table[i * _n + _table[j * _n + k]]) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
  }

  table_type Semigroup::rows() const {
    table_type out(_n);
    for (size_t i = 0; i < _n; ++i) {
      out[i].assign(_table.begin() + i * _n, _table.begin() + (i + 1) * _n);
    }
    return out;
  }

  Semigroup Semigroup::with_name(std::string name) const {
    Semigroup out = *this;
    out._name     = std::move(name);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Semigroup new_from_table(table_type const& rows) {
    return Semigroup(rows);
  }

  Semigroup trivial_semigroup() {
    return Semigroup();
  }

  Semigroup product(Semigroup const& S, Semigroup const& T) {
    size_t const              m = S.size(), n = T.size(), N = m * n;
    std::vector<element_type> flat(N * N);
    for (size_t a = 0; a < N; ++a) {
      for (size_t b = 0; b < N; ++b) {
        flat[a * N + b] = S(a / n, b / n) * n + T(a % n, b % n);
      }
    }
    return Semigroup(N, std::move(flat));
  }

  Semigroup opposite(Semigroup const& S) {
    size_t const              n = S.size();
    std::vector<element_type> flat(n * n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        flat[a * n + b] = S(b, a);
      }
    }
    return Semigroup(n, std::move(flat));
  }

  std::optional<element_type> identity_element(Semigroup const& S) {
    size_t const n = S.size();
    for (element_type e = 0; e < n; ++e) {
      bool ok = true;
      for (element_type x = 0; x < n && ok; ++x) {
        ok = S(e, x) == x && S(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  Semigroup adjoin_identity(Semigroup const& S, IdentityMode mode) {
    if (mode == IdentityMode::bullet && identity_element(S)) {
      return S;
    }
    size_t const              n = S.size(), N = n + 1;
    std::vector<element_type> flat(N * N);
    for (size_t a = 0; a < N; ++a) {
      for (size_t b = 0; b < N; ++b) {
        if (a == n) {
          flat[a * N + b] = b;
        } else if (b == n) {
          flat[a * N + b] = a;
        } else {
          flat[a * N + b] = S(a, b);
        }
      }
    }
    return Semigroup(N, std::move(flat));
  }

  std::vector<element_type> subsemigroup_closure(
      Semigroup const&                 S,
      std::vector<element_type> const& seed) {
    size_t const              n = S.size();
    std::vector<char>         seen(n, 0);
    std::vector<element_type> elts;
    for (auto x : seed) {
      if (!seen[x]) {
        seen[x] = 1;
        elts.push_back(x);
      }
    }
    std::vector<element_type> gens = elts;
    for (size_t i = 0; i < elts.size(); ++i) {
      for (auto g : gens) {
        element_type y = S(elts[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          elts.push_back(y);
        }
      }
    }
    std::sort(elts.begin(), elts.end());
    return elts;
  }

  Semigroup restrict_to(Semigroup const& S, std::vector<element_type> elts) {
    std::sort(elts.begin(), elts.end());
    elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
    std::vector<element_type> pos(S.size(), S.size());
    for (size_t i = 0; i < elts.size(); ++i) {
      pos[elts[i]] = i;
    }
    size_t const              m = elts.size();
    std::vector<element_type> flat(m * m);
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        element_type p = pos[S(elts[a], elts[b])];
        if (p == S.size()) {
          throw NotClosed("the element set is not a subsemigroup");
        }
        flat[a * m + b] = p;
      }
    }
    return Semigroup(m, std::move(flat));
  }

  bool is_ideal(Semigroup const& S, std::vector<element_type> const& elts) {
    if (elts.empty()) {
      return false;
    }
    std::vector<char> in(S.size(), 0);
    for (auto x : elts) {
      in[x] = 1;
    }
    for (auto x : elts) {
      for (element_type s = 0; s < S.size(); ++s) {
        if (!in[S(x, s)] || !in[S(s, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  Semigroup rees_quotient(Semigroup const&                 S,
                          std::vector<element_type> const& ideal) {
    for (auto x : ideal) {
      if (x >= S.size()) {
        throw NotAnIdeal("element out of range");
      }
    }
    if (!is_ideal(S, ideal)) {
      throw NotAnIdeal("the element set is not a two-sided ideal");
    }
    std::vector<char> in(S.size(), 0);
    for (auto x : ideal) {
      in[x] = 1;
    }
    std::vector<element_type> keep;
    for (element_type x = 0; x < S.size(); ++x) {
      if (!in[x]) {
        keep.push_back(x);
      }
    }
    size_t const              N    = keep.size() + 1;
    element_type const        zero = N - 1;
    std::vector<element_type> pos(S.size(), zero);
    for (size_t i = 0; i < keep.size(); ++i) {
      pos[keep[i]] = i;
    }
    std::vector<element_type> flat(N * N, zero);
    for (size_t a = 0; a < keep.size(); ++a) {
      for (size_t b = 0; b < keep.size(); ++b) {
        flat[a * N + b] = pos[S(keep[a], keep[b])];
      }
    }
    return Semigroup(N, std::move(flat));
  }

  Semigroup relabel(Semigroup const& S, std::vector<element_type> const& perm) {
    size_t const              n = S.size();
    std::vector<element_type> flat(n * n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        flat[perm[a] * n + perm[b]] = perm[S(a, b)];
      }
    }
    return Semigroup(n, std::move(flat));
  }

  Semigroup rees_matrix_semigroup(size_t                               g,
                                  std::vector<std::vector<int>> const& P) {
    if (g == 0 || P.empty() || P[0].empty()) {
      throw BadParams("empty Rees matrix data");
    }
    size_t const nL = P.size(), nI = P[0].size();
    for (auto const& row : P) {
      if (row.size() != nI) {
        throw BadParams("the sandwich matrix is not rectangular");
      }
    }
    size_t const N    = 1 + nI * g * nL;
    auto         code = [&](size_t i, size_t a, size_t l) {
      return static_cast<element_type>(1 + (i * g + a) * nL + l);
    };
    std::vector<element_type> flat(N * N, 0);
    for (size_t i = 0; i < nI; ++i) {
      for (size_t a = 0; a < g; ++a) {
        for (size_t l = 0; l < nL; ++l) {
          for (size_t j = 0; j < nI; ++j) {
            for (size_t b = 0; b < g; ++b) {
              for (size_t m = 0; m < nL; ++m) {
                int p = P[l][j];
                flat[code(i, a, l) * N + code(j, b, m)]
                    = p < 0 ? 0 : code(i, (a + p + b) % g, m);
              }
            }
          }
        }
      }
    }
    return Semigroup(N, std::move(flat));
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<char> left_ideal(Semigroup const& S, element_type x) {
      std::vector<char> out(S.size(), 0);
      out[x] = 1;
      for (element_type s = 0; s < S.size(); ++s) {
        out[S(s, x)] = 1;
      }
      return out;
    }

    std::vector<char> right_ideal(Semigroup const& S, element_type x) {
      std::vector<char> out(S.size(), 0);
      out[x] = 1;
      for (element_type s = 0; s < S.size(); ++s) {
        out[S(x, s)] = 1;
      }
      return out;
    }

    std::vector<char> two_sided_ideal(Semigroup const& S, element_type x) {
      std::vector<char> out = left_ideal(S, x);
      std::vector<char> lx  = out;
      for (element_type y = 0; y < S.size(); ++y) {
        if (lx[y]) {
          for (element_type s = 0; s < S.size(); ++s) {
            out[S(y, s)] = 1;
          }
        }
      }
      return out;
    }

    template <typename Key>
    std::vector<size_t> number_blocks(std::vector<Key> const& keys) {
      std::map<Key, size_t> ids;
      std::vector<size_t>   out(keys.size());
      for (size_t x = 0; x < keys.size(); ++x) {
        auto it = ids.emplace(keys[x], ids.size()).first;
        out[x]  = it->second;
      }
      return out;
    }
  }  // namespace

  std::vector<size_t> green_partition(Semigroup const& S, Green rel) {
    size_t const n = S.size();
    switch (rel) {
      case Green::L: {
        std::vector<std::vector<char>> keys;
        for (element_type x = 0; x < n; ++x) {
          keys.push_back(left_ideal(S, x));
        }
        return number_blocks(keys);
      }
      case Green::R: {
        std::vector<std::vector<char>> keys;
        for (element_type x = 0; x < n; ++x) {
          keys.push_back(right_ideal(S, x));
        }
        return number_blocks(keys);
      }
      case Green::J: {
        std::vector<std::vector<char>> keys;
        for (element_type x = 0; x < n; ++x) {
          keys.push_back(two_sided_ideal(S, x));
        }
        return number_blocks(keys);
      }
      case Green::H:
      default: {
        auto l = green_partition(S, Green::L);
        auto r = green_partition(S, Green::R);
        std::vector<std::pair<size_t, size_t>> keys;
        for (element_type x = 0; x < n; ++x) {
          keys.emplace_back(l[x], r[x]);
        }
        return number_blocks(keys);
      }
    }
  }

  std::vector<element_type> minimal_ideal(Semigroup const& S) {
    // A product of all the elements lies in every ideal.
    element_type z = 0;
    for (element_type x = 1; x < S.size(); ++x) {
      z = S(z, x);
    }
    auto                      in = two_sided_ideal(S, z);
    std::vector<element_type> out;
    for (element_type x = 0; x < S.size(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  element_type power(Semigroup const& S, element_type x, size_t k) {
    if (k == 0) {
      throw BadParams("exponent must be positive");
    } else if (x >= S.size()) {
      throw BadParams("element out of range");
    }
    element_type acc = x;
    element_type b   = x;
    --k;
    while (k > 0) {
      if (k & 1) {
        acc = S(acc, b);
      }
      b = S(b, b);
      k >>= 1;
    }
    return acc;
  }

  Monogenic monogenic(Semigroup const& S, element_type x) {
    if (x >= S.size()) {
      throw BadParams("element out of range");
    }
    std::vector<size_t> pos(S.size(), 0);
    element_type        y = x;
    for (size_t i = 1;; ++i) {
      if (pos[y] != 0) {
        size_t index  = pos[y];
        size_t period = i - pos[y];
        size_t m      = ((index + period - 1) / period) * period;
        return {index, period, power(S, x, m)};
      }
      pos[y] = i;
      y      = S(y, x);
    }
  }

  element_type omega_power(Semigroup const& S, element_type x) {
    return monogenic(S, x).omega;
  }

  bool is_idempotent(Semigroup const& S, element_type x) {
    return S(x, x) == x;
  }

  std::vector<element_type> idempotents(Semigroup const& S) {
    std::vector<element_type> out;
    for (element_type x = 0; x < S.size(); ++x) {
      if (is_idempotent(S, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_commutative(Semigroup const& S) {
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = a + 1; b < S.size(); ++b) {
        if (S(a, b) != S(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  std::string canonical_form(size_t                     n,
                             element_type const*        table,
                             std::vector<element_type>& perm) {
    if (n > 255) {
      throw SizeLimitExceeded("canonical forms need at most 255 elements");
    }
    // inv[new] = old, perm[old] = new
    std::vector<element_type> inv(n);
    std::iota(inv.begin(), inv.end(), 0);
    perm.resize(n);
    std::string best, cur(n * n, '\0');
    do {
      for (size_t i = 0; i < n; ++i) {
        perm[inv[i]] = i;
      }
      // 0 undecided, -1 smaller, 1 larger
      int cmp = best.empty() ? -1 : 0;
      for (size_t p = 0; p < n * n && cmp != 1; ++p) {
        auto v = static_cast<unsigned char>(
            perm[table[inv[p / n] * n + inv[p % n]]]);
        cur[p] = static_cast<char>(v);
        if (cmp == 0) {
          auto w = static_cast<unsigned char>(best[p]);
          cmp    = v < w ? -1 : (v > w ? 1 : 0);
        }
      }
      if (cmp == -1) {
        best = cur;
      }
    } while (std::next_permutation(inv.begin(), inv.end()));
    return best;
  }

  std::string canonical_form(Semigroup const& S, CanonMode mode) {
    std::vector<element_type> scratch;
    std::string key = canonical_form(S.size(), S.flat().data(), scratch);
    if (mode == CanonMode::iso_antiiso) {
      auto        op = opposite(S);
      std::string k2 = canonical_form(op.size(), op.flat().data(), scratch);
      if (k2 < key) {
        key = k2;
      }
    }
    return key;
  }

  std::string to_hex(std::string const& bytes) {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  std::string canonical_key(Semigroup const& S, CanonMode mode) {
    return to_hex(canonical_form(S, mode));
  }

  Semigroup from_canonical_form(std::string const& bytes) {
    size_t n = 0;
    while (n * n < bytes.size()) {
      ++n;
    }
    if (n * n != bytes.size()) {
      throw BadParams("a canonical form has square length");
    }
    std::vector<element_type> flat;
    for (unsigned char c : bytes) {
      flat.push_back(c);
    }
    return Semigroup(n, std::move(flat));
  }

  namespace {
    // Extends gens[i] -> imgs[i] to a map on the subsemigroup generated by
    // gens, following right multiplication by generators. Returns false if
    // the assignment is not a homomorphism. dom lists the generated elements.
    bool extend_hom(Semigroup const&                 T,
                    Semigroup const&                 S,
                    std::vector<element_type> const& gens,
                    std::vector<element_type> const& imgs,
                    std::vector<element_type>&       phi,
                    std::vector<element_type>&       dom) {
      element_type const none = S.size();
      phi.assign(T.size(), none);
      dom.clear();
      for (size_t i = 0; i < gens.size(); ++i) {
        if (phi[gens[i]] == none) {
          phi[gens[i]] = imgs[i];
          dom.push_back(gens[i]);
        } else if (phi[gens[i]] != imgs[i]) {
          return false;
        }
      }
      for (size_t q = 0; q < dom.size(); ++q) {
        element_type u = dom[q];
        for (size_t i = 0; i < gens.size(); ++i) {
          element_type w   = T(u, gens[i]);
          element_type img = S(phi[u], imgs[i]);
          if (phi[w] == none) {
            phi[w] = img;
            dom.push_back(w);
          } else if (phi[w] != img) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool isomorphic(Semigroup const& S, Semigroup const& T) {
    if (S.size() != T.size()) {
      return false;
    }
    if (S.size() <= 7) {
      return canonical_form(S, CanonMode::iso)
             == canonical_form(T, CanonMode::iso);
    }
    // Search for a homomorphism from S onto T that is injective on a
    // generating set of S.
    auto                      gens = generating_set(S);
    size_t const              g    = gens.size();
    std::vector<element_type> imgs(g, 0), phi, dom;
    auto                      idS = idempotents(S).size();
    if (idS != idempotents(T).size()) {
      return false;
    }
    std::vector<Monogenic> ms, mt;
    for (element_type x = 0; x < S.size(); ++x) {
      ms.push_back(monogenic(S, x));
      mt.push_back(monogenic(T, x));
    }
    auto compatible = [&](element_type s, element_type t) {
      return ms[s].index == mt[t].index && ms[s].period == mt[t].period;
    };
    std::vector<element_type> choice(g, 0);
    size_t                    level = 0;
    // Iterative depth-first search over images of the generators.
    std::vector<element_type> next(g + 1, 0);
    while (true) {
      if (level == g) {
        if (extend_hom(S, T, gens, imgs, phi, dom) && dom.size() == S.size()) {
          std::vector<char> hit(T.size(), 0);
          bool              inj = true;
          for (auto x : dom) {
            inj = inj && !hit[phi[x]];
            hit[phi[x]] = 1;
          }
          if (inj) {
            return true;
          }
        }
        --level;
        continue;
      }
      element_type t = next[level];
      while (t < T.size() && !compatible(gens[level], t)) {
        ++t;
      }
      if (t == T.size()) {
        if (level == 0) {
          return false;
        }
        next[level] = 0;
        --level;
        continue;
      }
      next[level] = t + 1;
      imgs[level] = t;
      std::vector<element_type> g_prefix(gens.begin(), gens.begin() + level + 1);
      std::vector<element_type> i_prefix(imgs.begin(), imgs.begin() + level + 1);
      if (extend_hom(S, T, g_prefix, i_prefix, phi, dom)) {
        ++level;
        if (level < g) {
          next[level] = 0;
        }
      }
    }
  }

  bool anti_isomorphic_or_isomorphic(Semigroup const& S, Semigroup const& T) {
    return isomorphic(S, T) || isomorphic(opposite(S), T);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  bool Congruence::is_trivial() const {
    for (size_t x = 0; x < block.size(); ++x) {
      for (size_t y = x + 1; y < block.size(); ++y) {
        if (block[x] == block[y]) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    size_t find(std::vector<size_t>& parent, size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  Congruence principal_congruence(Semigroup const& S,
                                  element_type     a,
                                  element_type     b) {
    size_t const        n = S.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<element_type, element_type>> todo{{a, b}};
    auto unite = [&](element_type x, element_type y) {
      size_t rx = find(parent, x), ry = find(parent, y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
        todo.emplace_back(x, y);
      }
    };
    todo.clear();
    unite(a, b);
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      for (element_type s = 0; s < n; ++s) {
        unite(S(s, x), S(s, y));
        unite(S(x, s), S(y, s));
      }
    }
    std::vector<size_t> root(n);
    for (size_t x = 0; x < n; ++x) {
      root[x] = find(parent, x);
    }
    return Congruence{number_blocks(root)};
  }

  bool is_congruence(Semigroup const& S, Congruence const& c) {
    size_t const n = S.size();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (!c.related(a, b)) {
          continue;
        }
        for (element_type s = 0; s < n; ++s) {
          if (!c.related(S(s, a), S(s, b)) || !c.related(S(a, s), S(b, s))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_sdi(Semigroup const& S) {
    size_t const n = S.size();
    if (n < 2) {
      return false;
    }
    std::vector<size_t> meet(n, 0);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        auto c = principal_congruence(S, a, b);
        std::vector<std::pair<size_t, size_t>> keys;
        for (size_t x = 0; x < n; ++x) {
          keys.emplace_back(meet[x], c.block[x]);
        }
        meet = number_blocks(keys);
      }
    }
    return !Congruence{meet}.is_trivial();
  }

  ////////////////////////////////////////////////////////////////////////
  // Division
  ////////////////////////////////////////////////////////////////////////

  std::vector<element_type> generating_set(Semigroup const& S) {
    size_t const      n = S.size();
    std::vector<char> decomposable(n, 0);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        decomposable[S(a, b)] = 1;
      }
    }
    std::vector<element_type> gens;
    for (element_type x = 0; x < n; ++x) {
      if (!decomposable[x]) {
        gens.push_back(x);
      }
    }
    auto closed = gens.empty() ? std::vector<element_type>()
                               : subsemigroup_closure(S, gens);
    while (closed.size() < n) {
      std::vector<char> in(n, 0);
      for (auto x : closed) {
        in[x] = 1;
      }
      element_type best      = n;
      size_t       best_size = 0;
      for (element_type x = 0; x < n; ++x) {
        if (in[x]) {
          continue;
        }
        auto trial = gens;
        trial.push_back(x);
        size_t sz = subsemigroup_closure(S, trial).size();
        if (sz > best_size) {
          best_size = sz;
          best      = x;
        }
      }
      gens.push_back(best);
      closed = subsemigroup_closure(S, gens);
    }
    return gens;
  }

  DivisionVerdict divides(Semigroup const&      S,
                          Semigroup const&      T,
                          DivisionConfig const& cfg) {
    using Result = DivisionVerdict::Result;
    DivisionVerdict out;
    bool const      exact = T.size() <= cfg.exact_bound;
    auto            gens  = generating_set(S);
    size_t const    g     = gens.size();
    if (!exact && g > cfg.max_generators) {
      out.result = Result::inconclusive;
      return out;
    }
    // Assign preimages in T to the generators of S one at a time; each
    // partial assignment must already extend to a homomorphism from the
    // subsemigroup it generates.
    std::vector<element_type> pre(g, 0), phi, dom;
    std::vector<element_type> next(g, 0);
    size_t                    level = 0, nodes = 0;
    while (true) {
      if (next[level] == T.size()) {
        if (level == 0) {
          out.result = Result::no;
          return out;
        }
        next[level] = 0;
        --level;
        continue;
      }
      if (!exact && ++nodes > cfg.node_budget) {
        out.result = Result::inconclusive;
        return out;
      }
      pre[level] = next[level]++;
      std::vector<element_type> tp(pre.begin(), pre.begin() + level + 1);
      std::vector<element_type> sp(gens.begin(), gens.begin() + level + 1);
      // extend_hom maps the subsemigroup of T generated by tp onto S.
      if (!extend_hom(T, S, tp, sp, phi, dom)) {
        continue;
      }
      if (level + 1 == g) {
        out.result     = Result::yes;
        out.generators = tp;
        out.images     = sp;
        std::sort(dom.begin(), dom.end());
        out.domain = dom;
        for (auto x : dom) {
          out.map.push_back(phi[x]);
        }
        return out;
      }
      ++level;
      next[level] = 0;
    }
  }

  bool replay(DivisionVerdict const& v, Semigroup const& S, Semigroup const& T) {
    if (v.result != DivisionVerdict::Result::yes) {
      return false;
    }
    auto closed = subsemigroup_closure(T, v.generators);
    if (closed != v.domain || v.map.size() != v.domain.size()) {
      return false;
    }
    std::vector<element_type> phi(T.size(), S.size());
    for (size_t i = 0; i < v.domain.size(); ++i) {
      phi[v.domain[i]] = v.map[i];
    }
    std::vector<char> hit(S.size(), 0);
    for (auto a : v.domain) {
      hit[phi[a]] = 1;
      for (auto b : v.domain) {
        if (phi[T(a, b)] != S(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
  }

}  // namespace sgforge
