#include "sgforge/enumeration.hpp"

#include <algorithm>  // for min
#include <cstdlib>    // for getenv
#include <set>        // for set
#include <thread>     // for thread
#include <utility>    // for move

#include "sgforge/error.hpp"

namespace sgforge {

  namespace {
    constexpr element_type undefined = 255;

    class Search {
     public:
      explicit Search(size_t n) : _n(n), _t(n * n, undefined), _scratch() {}

      // Fills the first row and returns every consistent choice.
      std::vector<std::vector<element_type>> first_rows() {
        std::vector<std::vector<element_type>> out;
        collect(0, out);
        return out;
      }

      void run_from(std::vector<element_type> const& row) {
        std::fill(_t.begin(), _t.end(), undefined);
        for (size_t b = 0; b < _n; ++b) {
          _t[b] = row[b];
        }
        dfs(_n);
      }

      size_t                       labeled = 0;
      std::set<std::string>        keys;

     private:
      element_type at(size_t a, size_t b) const {
        return _t[a * _n + b];
      }

      // All triples that became fully determined when cell (a, b) was set.
      bool consistent(size_t a, size_t b) const {
        size_t const       n = _n;
        element_type const v = at(a, b);
        for (size_t z = 0; z < n; ++z) {
          // (ab)z = a(bz)
          element_type l = at(v, z), bz = at(b, z);
          if (l != undefined && bz != undefined) {
            element_type r = at(a, bz);
            if (r != undefined && r != l) {
              return false;
            }
          }
          // (za)b = z(ab)
          element_type za = at(z, a), r2 = at(z, v);
          if (za != undefined && r2 != undefined) {
            element_type l2 = at(za, b);
            if (l2 != undefined && l2 != r2) {
              return false;
            }
          }
        }
        for (size_t x = 0; x < n; ++x) {
          for (size_t y = 0; y < n; ++y) {
            // (xy)b = x(yb) with xy = a
            if (at(x, y) == a) {
              element_type yb = at(y, b);
              if (yb != undefined) {
                element_type r = at(x, yb);
                if (r != undefined && r != v) {
                  return false;
                }
              }
            }
            // (ax)y = a(xy) with xy = b
            if (at(x, y) == b) {
              element_type ax = at(a, x);
              if (ax != undefined) {
                element_type l = at(ax, y);
                if (l != undefined && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      void collect(size_t p, std::vector<std::vector<element_type>>& out) {
        if (p == _n) {
          out.emplace_back(_t.begin(), _t.begin() + _n);
          return;
        }
        for (element_type v = 0; v < _n; ++v) {
          _t[p] = v;
          if (consistent(0, p)) {
            collect(p + 1, out);
          }
        }
        _t[p] = undefined;
      }

      void dfs(size_t p) {
        if (p == _n * _n) {
          ++labeled;
          keys.insert(canonical_form(_n, _t.data(), _scratch));
          return;
        }
        for (element_type v = 0; v < _n; ++v) {
          _t[p] = v;
          if (consistent(p / _n, p % _n)) {
            dfs(p + 1);
          }
        }
        _t[p] = undefined;
      }

      size_t                    _n;
      std::vector<element_type> _t;
      std::vector<element_type> _scratch;
    };
  }  // namespace

  size_t max_enumeration_order() {
    if (char const* env = std::getenv("SGFORGE_MAX_ORDER")) {
      try {
        return std::stoul(env);
      } catch (std::exception const&) {
        throw BadParams("SGFORGE_MAX_ORDER is not a number");
      }
    }
    return 5;
  }

  EnumerationResult enumerate_semigroups(size_t order, CanonMode mode, size_t jobs) {
    if (order == 0) {
      throw BadParams("the order must be at least 1");
    }
    size_t const cap = std::min<size_t>(max_enumeration_order(), 255);
    if (order > cap) {
      throw OrderTooLarge("order " + std::to_string(order)
                          + " exceeds the maximum " + std::to_string(cap));
    }
    jobs = std::max<size_t>(jobs, 1);

    auto const          rows = Search(order).first_rows();
    std::vector<Search> workers(jobs, Search(order));
    auto work = [&](size_t w) {
      for (size_t i = w; i < rows.size(); i += jobs) {
        workers[w].run_from(rows[i]);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (size_t w = 0; w < jobs; ++w) {
        threads.emplace_back(work, w);
      }
      for (auto& t : threads) {
        t.join();
      }
    }

    EnumerationResult out;
    out.order = order;
    out.mode  = mode;
    std::set<std::string> iso;
    for (auto& w : workers) {
      out.counts.labeled += w.labeled;
      iso.merge(w.keys);
    }
    std::set<std::string>     equiv;
    std::vector<element_type> scratch;
    for (auto const& k : iso) {
      auto const  op = opposite(from_canonical_form(k));
      std::string k2 = canonical_form(op.size(), op.flat().data(), scratch);
      equiv.insert(std::min(k, k2));
    }
    out.counts.up_to_iso         = iso.size();
    out.counts.up_to_equivalence = equiv.size();
    for (auto const& k : mode == CanonMode::iso ? iso : equiv) {
      out.keys.push_back(to_hex(k));
      out.classes.push_back(from_canonical_form(k));
    }
    return out;
  }

  std::vector<std::string> brute_force_classes(size_t n, CanonMode mode) {
    if (n == 0 || n > 3) {
      throw BadParams("brute force enumeration is limited to orders 1 to 3");
    }
    size_t const              cells = n * n;
    std::vector<element_type> t(cells, 0);
    std::set<std::string>     keys;
    while (true) {
      bool assoc = true;
      for (size_t x = 0; x < n && assoc; ++x) {
        for (size_t y = 0; y < n && assoc; ++y) {
          for (size_t z = 0; z < n && assoc; ++z) {
            assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      if (assoc) {
        keys.insert(canonical_form(Semigroup(n, t), mode));
      }
      size_t i = 0;
      while (i < cells && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == cells) {
        break;
      }
    }
    return {keys.begin(), keys.end()};
  }

}  // namespace sgforge
