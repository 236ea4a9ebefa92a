#include "sgforge/classifier.hpp"

#include <algorithm>  // for max
#include <sstream>    // for ostringstream
#include <thread>     // for thread

#include "json.hpp"  // for nlohmann::json

#include "sgforge/catalog.hpp"
#include "sgforge/enumeration.hpp"
#include "sgforge/error.hpp"
#include "sgforge/satisfaction.hpp"

namespace sgforge {

  std::string verdict_name(Verdict v) {
    switch (v) {
      case Verdict::ji:
        return "ji";
      case Verdict::non_ji:
        return "non_ji";
      case Verdict::unclassified:
      default:
        return "unclassified";
    }
  }

  ClassificationRecord classify_one(Semigroup const& S, bool all_matches) {
    if (S.size() < 2) {
      throw BadParams("classification needs a nontrivial semigroup");
    }
    auto const&          cat = condition_catalog();
    Semigroup const      op  = opposite(S);
    ClassificationRecord rec;
    rec.order         = S.size();
    rec.canonical_key = canonical_key(S, CanonMode::iso_antiiso);

    Condition const* first_a = nullptr;
    Condition const* first_b = nullptr;
    bool             dual_a = false, dual_b = false;
    for (auto const& c : cat.conditions) {
      Condition const*& slot = c.ji ? first_a : first_b;
      bool&             dual = c.ji ? dual_a : dual_b;
      if (slot != nullptr && !all_matches) {
        continue;
      }
      for (bool use_op : {false, true}) {
        if (c.holds(use_op ? op : S)) {
          if (all_matches) {
            rec.all_matches.push_back(c.id + (use_op ? "^op" : ""));
          }
          if (slot == nullptr) {
            slot = &c;
            dual = use_op;
          }
          if (!all_matches) {
            break;
          }
        }
      }
    }
    if (first_a != nullptr && first_b != nullptr) {
      throw ConflictingConditions("conditions " + first_a->id + " and "
                                  + first_b->id + " both hold for "
                                  + rec.canonical_key);
    }
    if (first_a != nullptr) {
      rec.verdict      = Verdict::ji;
      rec.condition_id = first_a->id;
      rec.dual_applied = dual_a;
      rec.target = dual_a ? cat.dual_name(first_a->target) : first_a->target;
    } else if (first_b != nullptr) {
      rec.verdict      = Verdict::non_ji;
      rec.condition_id = first_b->id;
      rec.dual_applied = dual_b;
    }
    return rec;
  }

  bool replay_condition(ClassificationRecord const& r, Semigroup const& S) {
    auto const* c = condition_catalog().find(r.condition_id);
    if (c == nullptr) {
      return false;
    }
    return c->holds(r.dual_applied ? opposite(S) : S);
  }

  bool replay_basis(ClassificationRecord const& r, Semigroup const& S) {
    if (r.verdict != Verdict::ji) {
      return false;
    }
    auto const& cat = condition_catalog();
    for (auto const& b : basis_records()) {
      bool const direct = b.target == r.target;
      bool const dual   = !direct && cat.dual_name(b.target) == r.target;
      if (!direct && !dual) {
        continue;
      }
      auto const T = dual ? opposite(S) : S;
      return satisfies_all(T, b.sigma) && !satisfies(T, b.epsilon).satisfied;
    }
    return false;
  }

  ClassificationReport classify_small_orders(size_t max_order,
                                             size_t jobs,
                                             bool   all_matches) {
    ClassificationReport out;
    jobs = std::max<size_t>(jobs, 1);
    for (size_t n = 2; n <= max_order; ++n) {
      auto const en = enumerate_semigroups(n, CanonMode::iso_antiiso, jobs);
      std::vector<ClassificationRecord> recs(en.classes.size());
      std::vector<std::exception_ptr>   errors(jobs);
      auto work = [&](size_t w) {
        try {
          for (size_t i = w; i < recs.size(); i += jobs) {
            recs[i] = classify_one(en.classes[i], all_matches);
          }
        } catch (...) {
          errors[w] = std::current_exception();
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
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      auto& counts = out.counts[n];
      for (auto& r : recs) {
        ++counts.total;
        switch (r.verdict) {
          case Verdict::ji:
            ++counts.ji;
            // A class stands for both S and S^op.
            out.ji_targets.insert(r.target);
            out.ji_targets.insert(condition_catalog().dual_name(r.target));
            break;
          case Verdict::non_ji:
            ++counts.non_ji;
            break;
          case Verdict::unclassified:
            ++counts.unclassified;
            break;
        }
        out.records.push_back(std::move(r));
      }
    }
    return out;
  }

  std::string report_csv(ClassificationReport const& r) {
    std::ostringstream out;
    out << "order,canonical_key,verdict,target,condition_id,dual_applied\n";
    for (auto const& rec : r.records) {
      out << rec.order << ',' << rec.canonical_key << ','
          << verdict_name(rec.verdict) << ',' << rec.target << ','
          << rec.condition_id << ',' << (rec.dual_applied ? "true" : "false")
          << '\n';
    }
    return out.str();
  }

  std::string summary_json(ClassificationReport const& r) {
    nlohmann::json j;
    j["orders"] = nlohmann::json::array();
    for (auto const& [n, c] : r.counts) {
      j["orders"].push_back({{"order", n},
                             {"ji", c.ji},
                             {"non_ji", c.non_ji},
                             {"unclassified", c.unclassified},
                             {"total", c.total}});
    }
    j["ji_targets"] = r.ji_targets;
    return j.dump(2) + "\n";
  }

}  // namespace sgforge
