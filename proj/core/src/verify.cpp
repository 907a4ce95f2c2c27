#include "hstrata/verify.hpp"

#include <utility>
#include <vector>

#include "hstrata/experiments.hpp"
#include "hstrata/rng.hpp"
#include "hstrata/sampling.hpp"
#include "hstrata/strata.hpp"
#include "json.hpp"

namespace hstrata {

namespace {

using nlohmann::ordered_json;

std::vector<std::pair<int, int>> grid_or_default(const VerifyOptions& opt,
                                                 std::vector<std::pair<int, int>> def) {
  if (opt.j >= 0 && opt.d >= 0) return {{opt.j, opt.d}};
  if (opt.j >= 0 || opt.d >= 0)
    throw std::invalid_argument("verify: pass both --j and --d, or neither");
  return def;
}

VerifyResult finish(const std::string& suite, bool pass, ordered_json extra) {
  ordered_json o;
  o["suite"] = suite;
  o["pass"] = pass;
  for (auto& [key, value] : extra.items()) o[key] = value;
  return {pass, o.dump(2) + "\n"};
}

VerifyResult verify_orders(const VerifyOptions& opt) {
  long checks = 0;
  ordered_json failures = ordered_json::array();
  for (int j = 1; j <= opt.max_j; ++j)
    for (int d = 1; d <= j + 1; ++d) {
      auto lambdas = enumerate_partitions(j + 1 - d, d - 1);
      for (const auto& a : lambdas)
        for (const auto& b : lambdas) {
          bool t = termwise_leq(tail_from_lambda(a, 0, j, d), tail_from_lambda(b, 0, j, d));
          bool lam = bruhat_leq(a, b);
          bool conj = bruhat_leq(b.conjugate(), a.conjugate());
          bool deg = bruhat_leq(relation_degrees(a, d), relation_degrees(b, d));
          ++checks;
          if (t != lam || t != conj || t != deg) {
            ordered_json f;
            f["j"] = j;
            f["d"] = d;
            f["lambda"] = a.parts();
            f["lambda_prime"] = b.parts();
            f["tail_leq"] = t;
            f["bruhat_leq"] = lam;
            f["conjugate_geq"] = conj;
            f["degrees_leq"] = deg;
            failures.push_back(std::move(f));
          }
        }
    }

  // the classic incomparable pair at (9,4)
  Partition a({4, 1, 1}), b({3, 3});
  bool incomparable = !bruhat_leq(a, b) && !bruhat_leq(b, a) &&
                      !termwise_leq(tail_from_lambda(a, 0, 9, 4), tail_from_lambda(b, 0, 9, 4)) &&
                      !termwise_leq(tail_from_lambda(b, 0, 9, 4), tail_from_lambda(a, 0, 9, 4));

  ordered_json extra;
  extra["checks"] = checks;
  extra["incomparable_pair_confirmed"] = incomparable;
  extra["failures"] = failures;
  return finish("orders", failures.empty() && incomparable, std::move(extra));
}

VerifyResult verify_dims(const GF& k, const VerifyOptions& opt) {
  auto grid = grid_or_default(opt, {{6, 3}, {8, 3}, {9, 4}});
  const int seeds = 5;
  ordered_json rows = ordered_json::array();
  bool pass = true;
  for (auto [j, d] : grid)
    for (const auto& D : enumerate_partitions(j, d - 1, true)) {
      int expected = d * (j + 1) - cod_in_G(D, 0, d);
      ordered_json row;
      row["j"] = j;
      row["d"] = d;
      row["D"] = D.parts();
      row["expected"] = expected;
      ordered_json ranks = ordered_json::array();
      for (int s = 0; s < seeds; ++s) {
        int r = jacobian_rank_dim(k, j, d, D, derive_seed(opt.seed, {static_cast<std::uint64_t>(s)}));
        ranks.push_back(r);
        if (r != expected) pass = false;
      }
      row["ranks"] = std::move(ranks);
      rows.push_back(std::move(row));
    }
  ordered_json extra;
  extra["strata"] = rows;
  return finish("dims", pass, std::move(extra));
}

VerifyResult verify_closure(const GF& k, const VerifyOptions& opt) {
  auto grid = grid_or_default(opt, {{6, 3}, {8, 3}});
  bool pass = true;
  long pairs = 0;
  ordered_json mismatches = ordered_json::array();
  for (auto [j, d] : grid) {
    auto poset = build_poset(j, d);
    const std::size_t n = poset.strata.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ++pairs;
        const auto& special = poset.strata[a];
        const auto& target = poset.strata[b];
        bool predicted = termwise_leq(target.tail, special.tail);
        int disagreements = 0;
        for (int s = 0; s < 3; ++s) {
          std::uint64_t seed = derive_seed(opt.seed, {static_cast<std::uint64_t>(s), a, b,
                                                      static_cast<std::uint64_t>(j)});
          auto v = sample_hilbert_burch(k, j, d, special.D, special.c, seed).V;
          auto cert = certify_closure_membership(v, target.tail, seed, opt.retries);
          if ((cert.outcome == CertifyOutcome::success) != predicted) ++disagreements;
        }
        if (disagreements > 0) {
          ordered_json m;
          m["j"] = j;
          m["d"] = d;
          m["special_tail"] = special.tail.values();
          m["target_tail"] = target.tail.values();
          m["predicted_success"] = predicted;
          m["disagreements_of_3"] = disagreements;
          mismatches.push_back(std::move(m));
          if (disagreements == 3) pass = false;  // systematic
        }
      }
  }
  ordered_json extra;
  extra["pairs"] = pairs;
  extra["mismatches"] = mismatches;
  return finish("closure", pass, std::move(extra));
}

VerifyResult verify_semicontinuity(const GF& k, const VerifyOptions& opt) {
  auto grid = grid_or_default(opt, {{6, 3}, {8, 3}});
  int trials = opt.trials > 0 ? opt.trials : 10000;
  int per_grid = trials / static_cast<int>(grid.size());
  long violations = 0;
  long run = 0;
  ordered_json examples = ordered_json::array();
  for (auto [j, d] : grid) {
    auto poset = build_poset(j, d);
    for (int t = 0; t < per_grid; ++t) {
      std::uint64_t seed = derive_seed(opt.seed, {static_cast<std::uint64_t>(j),
                                                  static_cast<std::uint64_t>(t)});
      Rng rng(seed);
      const auto& s = poset.strata[rng.below(poset.strata.size())];
      auto v0 = sample_hilbert_burch(k, j, d, s.D, s.c, seed).V;
      auto v1 = random_form_space(k, j, d, rng);
      auto rep = pencil_limit(v0, v1, derive_seed(seed, {1}));
      ++run;
      if (!rep.semicontinuous) {
        ++violations;
        if (examples.size() < 10) {
          ordered_json e;
          e["j"] = j;
          e["d"] = d;
          e["seed"] = seed;
          e["h_special"] = rep.h_special.values();
          e["h_generic"] = rep.h_generic.values();
          examples.push_back(std::move(e));
        }
      }
    }
  }
  ordered_json extra;
  extra["trials"] = run;
  extra["violations"] = violations;
  extra["examples"] = examples;
  return finish("semicontinuity", violations == 0, std::move(extra));
}

VerifyResult verify_mu(const VerifyOptions& opt) {
  bool pass = true;
  ordered_json tables = ordered_json::array();
  for (int n = 1; n <= opt.max_n; ++n) {
    ordered_json rows = ordered_json::array();
    ordered_json chain = ordered_json::array();
    for (const auto& row : mu_family_dims(n)) {
      if (row.dim_from_codim != row.dim_closed_form) pass = false;
      ordered_json r;
      r["mu"] = row.mu;
      r["dim_from_codim"] = row.dim_from_codim;
      r["dim_closed_form"] = row.dim_closed_form;
      rows.push_back(std::move(r));
      chain.push_back(row.mu);
    }
    ordered_json t;
    t["n"] = n;
    t["rows"] = std::move(rows);
    // closures are nested along increasing mu: each family contains every
    // earlier one in its closure
    t["closure_chain"] = std::move(chain);
    tables.push_back(std::move(t));
  }
  ordered_json extra;
  extra["tables"] = tables;
  return finish("mu", pass, std::move(extra));
}

}  // namespace

VerifyResult verify_suite(const GF& k, const std::string& suite, const VerifyOptions& opt) {
  if (suite == "orders") return verify_orders(opt);
  if (suite == "dims") return verify_dims(k, opt);
  if (suite == "closure") return verify_closure(k, opt);
  if (suite == "semicontinuity") return verify_semicontinuity(k, opt);
  if (suite == "mu") return verify_mu(opt);
  throw std::invalid_argument("verify: unknown suite \"" + suite +
                              "\" (expected dims|orders|closure|semicontinuity|mu)");
}

}  // namespace hstrata
