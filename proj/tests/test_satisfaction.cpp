#include <algorithm>  // for find
#include <numeric>    // for gcd
#include <random>     // for mt19937

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE, ...

#include "sgforge/catalog.hpp"
#include "sgforge/error.hpp"
#include "sgforge/satisfaction.hpp"
#include "sgforge/transformation.hpp"

using namespace sgforge;

namespace {
  Word random_word(std::mt19937& rng, size_t letters, size_t max_len) {
    Word w;
    for (size_t i = 0, n = 1 + rng() % max_len; i < n; ++i) {
      w.push_back(variable_name(rng() % letters));
    }
    return w;
  }

  Pseudoidentity identity(Word const& u, Word const& v) {
    return make_pseudoidentity(word_term(u), word_term(v));
  }

  // Generator of the P-primary part of <x> in Z_m, by search over t.
  element_type crt_oracle(size_t m, element_type x, std::vector<unsigned> const& P) {
    size_t const d  = m / std::gcd<size_t>(x, m);
    size_t       dp = 1;
    for (size_t q = 2; q <= d; ++q) {
      bool prime = true;
      for (size_t r = 2; r * r <= q; ++r) {
        prime = prime && q % r != 0;
      }
      if (!prime || std::find(P.begin(), P.end(), q) == P.end()) {
        continue;
      }
      for (size_t k = d; k % q == 0; k /= q) {
        dp *= q;
      }
    }
    size_t const rest = d / dp;
    for (size_t t = 0; t < d; ++t) {
      if (t % rest == 0 && t % dp == 1 % dp) {
        return static_cast<element_type>((t * x) % m);
      }
    }
    return 0;
  }

  std::vector<Pseudoidentity> catalog_identities(size_t max_letters) {
    std::vector<Pseudoidentity> out;
    auto add = [&](Pseudoidentity const& p) {
      if (p.alphabet.size() <= max_letters) {
        out.push_back(p);
      }
    };
    for (auto const& r : basis_records()) {
      for (auto const& p : r.sigma) {
        add(p);
      }
      add(r.epsilon);
    }
    for (auto const& r : exclusion_records()) {
      add(r.pid);
    }
    for (auto const& c : condition_catalog().conditions) {
      for (auto const& p : c.satisfy) {
        add(p);
      }
      for (auto const& p : c.violate) {
        add(p);
      }
    }
    return out;
  }

  // Every ideal with at least two elements and not the whole semigroup.
  std::vector<std::vector<element_type>> proper_ideals(Semigroup const& S) {
    std::vector<std::vector<element_type>> out;
    for (unsigned mask = 1; mask + 1 < (1u << S.size()); ++mask) {
      std::vector<element_type> I;
      for (element_type x = 0; x < S.size(); ++x) {
        if (mask >> x & 1) {
          I.push_back(x);
        }
      }
      if (I.size() >= 2 && is_ideal(S, I)) {
        out.push_back(I);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("evaluation of exponents", "[satisfaction]") {
  auto const Z12 = build_named("Z_12");
  Assignment a{{{"x", 1}}, std::nullopt};
  REQUIRE(eval_term(Z12, parse_term("x^[2']"), a) == 9);
  REQUIRE(eval_term(build_named("Z_3"), parse_term("x^[2']"), a) == 0);
  REQUIRE(eval_term(build_named("N_3"), parse_term("x^(w+2)"), a) == 0);
  REQUIRE(eval_term(Z12, parse_term("x^(w-1)"), a) == 11);
  REQUIRE(eval_term(Z12, parse_term("x^(w+13)"), a) == 1);
  REQUIRE(eval_term(Z12, parse_term("x^w"), a) == 0);
  REQUIRE(omega_plus_power(Z12, 1, 5) == 5);
  REQUIRE(pi_omega_power(Z12, 1, {3}) == 4);
  REQUIRE(pi_omega_power(Z12, 1, {2, 3}) == 1);
}

TEST_CASE("pi-omega powers agree with a CRT oracle", "[satisfaction]") {
  std::vector<std::vector<unsigned>> sets = {{}, {2}, {3}, {5}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 5}};
  for (size_t m = 1; m <= 30; ++m) {
    auto const Z = build_named("Z_" + std::to_string(m));
    for (auto const& P : sets) {
      for (element_type x = 0; x < m; ++x) {
        REQUIRE(pi_omega_power(Z, x, P) == crt_oracle(m, x, P));
      }
    }
  }
}

TEST_CASE("evaluation errors", "[satisfaction]") {
  auto const B2 = build_named("B2");
  REQUIRE_THROWS_AS(eval_term(B2, parse_term("xy"), Assignment{{{"x", 1}}, {}}),
                    MissingLetter);
  REQUIRE_THROWS_AS(eval_term(B2, parse_term("ex"), Assignment{{{"x", 1}}, {}}),
                    InvalidKernelChoice);
  REQUIRE_THROWS_AS(eval_term(B2, parse_term("ex"), Assignment{{{"x", 1}}, 1}),
                    InvalidKernelChoice);
  REQUIRE(eval_term(B2, parse_term("ex"), Assignment{{{"x", 1}}, 0}) == 0);
}

TEST_CASE("documented satisfaction examples", "[satisfaction]") {
  REQUIRE(satisfies(build_named("Z_2"), parse_pseudoidentity("x^2 y = y")).satisfied);
  auto const p = parse_pseudoidentity("((xy)^w (yx)^w (xy)^w)^w = (xy)^w");
  auto const r = satisfies(build_named("B2"), p);  // 0, a, ab, ba, b
  REQUIRE(!r.satisfied);
  REQUIRE(r.witness->value("x") == element_type(1));
  REQUIRE(r.witness->value("y") == element_type(4));
  REQUIRE(r.lhs_value == 0);
  REQUIRE(r.rhs_value == 2);
  REQUIRE(satisfies(build_named("B0"), p).satisfied);
  REQUIRE(violates_all(build_named("W"), {parse_pseudoidentity("x^2y^2z^2 = x^2yz^2")}));
  REQUIRE(satisfies_all(build_named("L2"), {parse_pseudoidentity("xy = x")}));
  REQUIRE(satisfies_all(build_named("L2"), {}));
  REQUIRE(violates_all(build_named("L2"), {}));
  REQUIRE_THROWS_AS(satisfies(build_named("L2"), parse_pseudoidentity("e = e^2")),
                    BadParams);
}

TEST_CASE("witnesses replay", "[satisfaction]") {
  auto const ids = catalog_identities(4);
  for (auto name : {"B2", "A0", "l3bar", "N2bar", "Z2bar", "LZbar"}) {
    auto const S = build_named(name);
    for (auto const& p : ids) {
      auto const r = satisfies(S, p);
      if (!r.satisfied) {
        REQUIRE(r.lhs_value != r.rhs_value);
        REQUIRE(eval_term(S, p.lhs, *r.witness) == r.lhs_value);
        REQUIRE(eval_term(S, p.rhs, *r.witness) == r.rhs_value);
      }
    }
  }
}

TEST_CASE("kernel choices are kernel idempotents", "[satisfaction]") {
  std::mt19937 rng(3);
  for (auto name : {"B2", "A2", "W", "l3bar", "Z2bar", "N2barI"}) {
    auto const S = build_named(name);
    for (int i = 0; i < 20; ++i) {
      std::vector<element_type> images = {element_type(rng() % S.size()),
                                          element_type(rng() % S.size())};
      auto const U   = subsemigroup_closure(S, images);
      auto const sub = restrict_to(S, U);
      auto const K   = minimal_ideal(sub);
      auto const ks  = kernel_idempotents(S, images);
      REQUIRE(!ks.empty());
      for (auto f : ks) {
        REQUIRE(is_idempotent(S, f));
        auto const pos = std::find(U.begin(), U.end(), f) - U.begin();
        REQUIRE(std::find(K.begin(), K.end(), element_type(pos)) != K.end());
      }
    }
  }
}

TEST_CASE("plain and generic engines agree", "[satisfaction]") {
  std::mt19937 rng(11);
  for (auto name : {"B2", "A0", "W", "l3bar", "N_3I", "Z_4"}) {
    auto const S = build_named(name);
    for (int i = 0; i < 200; ++i) {
      auto const u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
      auto const p = identity(u, v);
      // the same identity, forced through the generic path
      auto const q = make_pseudoidentity(
          Term::concat({Term::power(word_term(u), Exponent::omega_plus(0)),
                        word_term(u)}),
          Term::concat({Term::power(word_term(u), Exponent::omega_plus(0)),
                        word_term(v)}));
      auto const r = satisfies(S, p);
      bool       generic = true;
      // evaluate the plain identity by brute force
      auto const k = p.alphabet.size();
      std::vector<element_type> vals(k, 0);
      while (true) {
        Assignment a;
        for (size_t j = 0; j < k; ++j) {
          a.letters.emplace_back(p.alphabet[j], vals[j]);
        }
        if (eval_term(S, p.lhs, a) != eval_term(S, p.rhs, a)) {
          generic = false;
          break;
        }
        size_t j = k;
        while (j > 0 && ++vals[j - 1] == S.size()) {
          vals[--j] = 0;
        }
        if (j == 0) {
          break;
        }
      }
      REQUIRE(r.satisfied == generic);
      if (r.satisfied) {
        REQUIRE(satisfies(S, q).satisfied);
      }
    }
  }
}

TEST_CASE("word oracles", "[satisfaction]") {
  std::mt19937 rng(99);
  for (size_t n : {2, 3, 4, 6}) {
    auto const Z = build_named("Z_" + std::to_string(n));
    for (int i = 0; i < 1000; ++i) {
      auto const u = random_word(rng, 5, 8), v = random_word(rng, 5, 8);
      auto const su = word_stats(u), sv = word_stats(v);
      bool       expected = true;
      for (size_t j = 0; j < 5; ++j) {
        auto const x  = variable_name(j);
        size_t     cu = su.occ.count(x) ? su.occ.at(x) : 0;
        size_t     cv = sv.occ.count(x) ? sv.occ.at(x) : 0;
        expected      = expected && cu % n == cv % n;
      }
      REQUIRE(satisfies(Z, identity(u, v)).satisfied == expected);
    }
  }
  for (size_t n : {1, 2, 3}) {
    auto const N = build_named("N_" + std::to_string(n) + "I");
    for (int i = 0; i < 1000; ++i) {
      auto const u = random_word(rng, 5, 8), v = random_word(rng, 5, 8);
      auto const su = word_stats(u), sv = word_stats(v);
      bool       expected = true;
      for (size_t j = 0; j < 5; ++j) {
        auto const x  = variable_name(j);
        size_t     cu = su.occ.count(x) ? su.occ.at(x) : 0;
        size_t     cv = sv.occ.count(x) ? sv.occ.at(x) : 0;
        expected      = expected && (cu == cv || (cu >= n && cv >= n));
      }
      REQUIRE(satisfies(N, identity(u, v)).satisfied == expected);
    }
  }
  auto const L2I = build_named("L2I"), R2I = build_named("R2I");
  for (int i = 0; i < 1000; ++i) {
    auto const u = random_word(rng, 5, 8), v = random_word(rng, 5, 8);
    REQUIRE(satisfies(L2I, identity(u, v)).satisfied
            == (word_stats(u).ini == word_stats(v).ini));
    REQUIRE(satisfies(R2I, identity(u, v)).satisfied
            == (word_stats(u).fin == word_stats(v).fin));
  }
}

TEST_CASE("local monoids", "[satisfaction]") {
  auto const p = parse_pseudoidentity("x^(w+1) = x");
  REQUIRE(in_local(build_named("l3"), p));
  REQUIRE(!in_local(build_named("N_2I"), p));
  for (auto const& q : catalog_identities(3)) {
    REQUIRE(in_local(trivial_semigroup(), q) == satisfies(trivial_semigroup(), q).satisfied);
  }
  auto const B2 = build_named("B2");
  REQUIRE(local_monoid(B2, 0).size() == 1);
  REQUIRE(local_monoid(B2, 2).size() == 2);
}

TEST_CASE("quotients preserve identities", "[satisfaction]") {
  auto const ids = catalog_identities(4);
  for (auto name : {"A2", "B2", "W", "l3bar", "N2bar", "A0I"}) {
    auto const S = build_named(name);
    for (auto const& I : proper_ideals(S)) {
      auto const T = rees_quotient(S, I);
      for (auto const& p : ids) {
        if (satisfies(S, p).satisfied) {
          REQUIRE(satisfies(T, p).satisfied);
        }
      }
    }
  }
}

TEST_CASE("division preserves identities", "[satisfaction]") {
  using R        = DivisionVerdict::Result;
  auto const ids = catalog_identities(4);
  std::vector<std::string> const names = {
      "Z_2", "N_2", "Sl2", "L2", "R2", "l3", "A0", "B0", "Z2bar", "N2bar", "B2", "A2"};
  for (auto const& s : names) {
    auto const S = build_named(s);
    for (auto const& t : names) {
      auto const T = build_named(t);
      if (divides(S, T).result != R::yes) {
        continue;
      }
      for (auto const& p : ids) {
        if (satisfies(T, p).satisfied) {
          REQUIRE(satisfies(S, p).satisfied);
        }
      }
    }
  }
}

TEST_CASE("separation search", "[satisfaction]") {
  auto const Sl2 = build_named("Sl2");
  auto const p   = separation_search(Sl2, augment(Sl2, AugmentMode::bar));
  REQUIRE(p);
  REQUIRE(format(*p) == "xy = yx");
  REQUIRE(!separation_search(Sl2, Sl2, {2, 4, 50, 1}));
  auto const N2 = build_named("N_2"), Z2 = build_named("Z_2");
  auto const q  = separation_search(N2, Z2);
  REQUIRE(q);
  REQUIRE(satisfies(N2, *q).satisfied);
  REQUIRE(!satisfies(Z2, *q).satisfied);
  REQUIRE(variable_name(0) == "x");
  REQUIRE(variable_name(5) == "k");
  REQUIRE(variable_name(6) == "x1");
}

TEST_CASE("out of range elements", "[satisfaction]") {
  auto const Z = build_named("Z_3");
  REQUIRE_THROWS_AS(pi_omega_power(Z, 3, {2}), BadParams);
  REQUIRE_THROWS_AS(omega_plus_power(Z, 7, 1), BadParams);
  REQUIRE_THROWS_AS(eval_term(Z, parse_term("x"), Assignment{{{"x", 3}}, {}}),
                    MissingLetter);
}
