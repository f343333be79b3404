// Acceptance suite: one PASS/FAIL line per criterion. Library results are
// cross-checked against the test-only oracles wherever one applies.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "braidroots/error.hpp"
#include "braidroots/garside.hpp"
#include "braidroots/periodic.hpp"
#include "braidroots/roots.hpp"
#include "braidroots/tubular.hpp"
#include "families.hpp"
#include "oracles.hpp"

using namespace braidroots;

namespace {

  std::mt19937_64 rng(20261016);

  struct Tally {
    int         checks   = 0;
    int         failures = 0;
    std::string first_failure;
    std::string note;

    void check(bool ok, std::string const& label) {
      ++checks;
      if (!ok && failures++ == 0) {
        first_failure = label;
      }
    }
  };

  int failed_criteria = 0;

  void criterion(int number, std::function<void(Tally&)> const& body) {
    Tally      t;
    auto const start = std::chrono::steady_clock::now();
    try {
      body(t);
    } catch (BraidError const& e) {
      t.check(false, std::string("unexpected error: ") + e.what());
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const ok = t.failures == 0 && t.checks > 0;
    failed_criteria += ok ? 0 : 1;
    std::printf("criterion %d: %s (%d checks, %d failures, %.2fs)%s%s%s%s\n", number,
                ok ? "PASS" : "FAIL", t.checks, t.failures, secs,
                t.first_failure.empty() ? "" : "; first failure: ", t.first_failure.c_str(),
                t.note.empty() ? "" : "; ", t.note.c_str());
    std::fflush(stdout);
  }

  //! Garside equality and the Burau oracle must agree, and both must hold.
  bool same(BraidWord const& a, BraidWord const& b) {
    bool const g = equals(a, b);
    bool const o = oracle::burau_equal(a, b);
    return g && o;
  }

  //! lk_i from the forward crossing trace, as twice its value.
  int64_t oracle_lk_i_twice(BraidWord const& w, int i) {
    auto const counts = oracle::crossing_counts(w);
    auto const it     = counts.find({1, i});
    return it == counts.end() ? 0 : it->second;
  }

  int64_t oracle_lk(BraidWord const& w) {
    int64_t twice = 0;
    for (int i = 2; i <= w.strands(); ++i) {
      twice += oracle_lk_i_twice(w, i);
    }
    return twice / 2;
  }

  Composition random_composition(int max_n, int max_r) {
    int const        r = family::uniform(rng, 2, max_r);
    std::vector<int> parts(static_cast<size_t>(r), 1);
    for (int extra = family::uniform(rng, 0, max_n - r); extra > 0; --extra) {
      parts[rng() % parts.size()]++;
    }
    return Composition(parts);
  }

  Decomposition random_decomposition() {
    auto          n = random_composition(9, 4);
    Decomposition d{n, oracle::random_word(rng, n.size(), family::uniform(rng, 0, 12)), {}};
    for (int i = 1; i <= n.size(); ++i) {
      d.interiors.push_back(oracle::random_word(rng, n[i], family::uniform(rng, 0, 12)));
    }
    return d;
  }

  //! Every composition of m, including (m) and (1,...,1).
  std::vector<Composition> all_compositions(int m) {
    std::vector<Composition> out;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
      std::vector<int> parts{1};
      for (int b = 0; b < m - 1; ++b) {
        if (mask & (1u << b)) {
          parts.push_back(1);
        } else {
          parts.back()++;
        }
      }
      out.emplace_back(parts);
    }
    return out;
  }

  BraidWord figure_word() {
    return BraidWord(4, {-2, 1, 1, -2, -1, -1, -2, -1, -1, 3, 2, 1, 1, 2, 3});
  }

  std::pair<BraidWord, BraidWord> const example_pairs[] = {
      {BraidWord(3, {1, 1}), BraidWord(3, {2, 2})},
      {BraidWord(3, {1, 1, 2, 2, 2, 2}), BraidWord(3, {2, 2, 1, 1, 1, 1})}};

  //! Verifies a returned certificate independently of certify().
  bool verified(RootProblem const& pr, ConjugacyCertificate const& c) {
    bool ok = same(c.gamma * pr.alpha * c.gamma.inverse(), pr.beta) && c.checked.conjugates;
    if (pr.P.contains(1)) {
      auto const perm = induced_permutation(c.gamma);
      for (int p : pr.P.members()) {
        ok = ok && perm(p) == p;
      }
      ok = ok && same(delete_strands(c.gamma, pr.P), BraidWord(pr.P.size()));
      ok = ok && oracle_lk(c.gamma) == 0 && c.checked.P_straight && c.checked.one_unlinked
           && c.lk_value == 0;
    }
    return ok;
  }

}  // namespace

int main() {
  std::vector<Decomposition> sample;
  for (int t = 0; t < 200; ++t) {
    sample.push_back(random_decomposition());
  }

  criterion(1, [&](Tally& t) {
    for (auto const& d : sample) {
      auto const& n = d.composition;
      auto const  w = compose_decomposition(d);
      // Round trip.
      auto const e  = extract(w, n);
      bool       ok = e.composition == n && same(e.exterior, d.exterior);
      for (size_t i = 0; i < d.interiors.size(); ++i) {
        ok = ok && same(e.interiors[i], d.interiors[i]);
      }
      t.check(ok, "round trip over " + n.to_string());
      // The inverse is standard over the moved composition.
      auto const theta = induced_permutation(d.exterior);
      auto const moved = act_on_composition(theta, n);
      t.check(same(extract(w.inverse(), moved).exterior, d.exterior.inverse()),
              "inverse over " + moved.to_string());
      // Interiors slide through the cabled exterior.
      std::vector<BraidWord> permuted(d.interiors.size(), BraidWord(1));
      for (int i = 1; i <= n.size(); ++i) {
        permuted[static_cast<size_t>(theta(i) - 1)] = d.interiors[static_cast<size_t>(i - 1)];
      }
      t.check(same(w, block_sum(permuted, moved) * cable(d.exterior, n)),
              "interchange over " + n.to_string());
      // Cabling is multiplicative.
      auto const a  = oracle::random_word(rng, n.size(), family::uniform(rng, 0, 12));
      auto const b  = oracle::random_word(rng, n.size(), family::uniform(rng, 0, 12));
      auto const bn = act_on_composition(induced_permutation(b), n);
      t.check(same(cable(a * b, n), cable(a, bn) * cable(b, n)),
              "cable multiplicativity over " + n.to_string());
      t.check(same(cable(a, n).inverse(),
                   cable(a.inverse(), act_on_composition(induced_permutation(a), n))),
              "cable inverse over " + n.to_string());
      // Block sums are multiplicative.
      std::vector<BraidWord> y, xy, xinv;
      for (int i = 1; i <= n.size(); ++i) {
        auto const& x = d.interiors[static_cast<size_t>(i - 1)];
        y.push_back(oracle::random_word(rng, n[i], family::uniform(rng, 0, 12)));
        xy.push_back(x * y.back());
        xinv.push_back(x.inverse());
      }
      t.check(same(block_sum(xy, n), block_sum(d.interiors, n) * block_sum(y, n)),
              "block sum multiplicativity over " + n.to_string());
      t.check(same(block_sum(d.interiors, n).inverse(), block_sum(xinv, n)),
              "block sum inverse over " + n.to_string());
    }
    for (int m = 1; m <= 8; ++m) {
      for (auto const& n : all_compositions(m)) {
        std::vector<BraidWord> in;
        for (int i = 1; i <= n.size(); ++i) {
          in.push_back(half_twist(n[i]));
        }
        t.check(same(cable(half_twist(n.size()), n) * block_sum(in, n), half_twist(m)),
                "half twist splits over " + n.to_string());
      }
    }
  });

  criterion(2, [](Tally& t) {
    for (int n = 3; n <= 8; ++n) {
      auto const D2 = half_twist(n).pow(2);
      t.check(same(delta_word(n).pow(n), D2), "delta^n = Delta^2 for n = " + std::to_string(n));
      t.check(same(epsilon_word(n).pow(n - 1), D2),
              "epsilon^(n-1) = Delta^2 for n = " + std::to_string(n));
    }
    for (auto [s, d] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
      int const         r     = d * s + 1;
      std::string const shape = "(s,d) = (" + std::to_string(s) + "," + std::to_string(d) + ")";
      t.check(same(mu_word(r, s).pow(s), half_twist(r).pow(2)), "mu_s^s = Delta^2 at " + shape);
      for (int j = 1; j <= d; ++j) {
        auto const mj = mu_factor(r, s, j);
        t.check(lk(mj) == 1 && oracle_lk(mj) == 1, "lk(mu_{s,j}) = 1 at " + shape);
        for (int i = 1; i <= d; ++i) {
          auto const mi = mu_factor(r, s, i);
          t.check(same(mi * mj, mj * mi), "mu factors commute at " + shape);
        }
        for (int k = 1; k <= d; ++k) {
          for (int l = 1; l <= s; ++l) {
            int const  want = k == j && l == 1 ? 2 : 0;
            int const  idx  = bracket(s, k, l);
            t.check(lk_i(mj, idx).twice_value() == want && oracle_lk_i_twice(mj, idx) == want,
                    "lk concentration at " + shape);
          }
        }
      }
    }
  });

  criterion(3, [](Tally& t) {
    for (int trial = 0; trial < 100; ++trial) {
      int const  n   = family::uniform(rng, 3, 7);
      auto const a   = oracle::random_one_pure(rng, n, 12);
      auto const chi = oracle::random_one_pure(rng, n, 12);
      auto const c   = chi * a * chi.inverse();
      t.check(lk(c) == lk(a) && oracle_lk(c) == oracle_lk(a), "conjugation invariance");
    }
    for (int trial = 0; trial < 100; ++trial) {
      auto const    n = random_composition(9, 4);
      Decomposition d{n, oracle::random_one_pure(rng, n.size(), 8), {}};
      d.interiors.push_back(oracle::random_one_pure(rng, n[1], 8));
      for (int i = 2; i <= n.size(); ++i) {
        d.interiors.push_back(oracle::random_word(rng, n[i], 8));
      }
      int64_t twice = 2 * oracle_lk(d.interiors[0]);
      for (int i = 2; i <= n.size(); ++i) {
        twice += n[i] * oracle_lk_i_twice(d.exterior, i);
      }
      auto const w = compose_decomposition(d);
      t.check(2 * lk(w) == twice && 2 * oracle_lk(w) == twice,
              "linking number of a cabled braid over " + n.to_string());
    }
    for (int trial = 0; trial < 100; ++trial) {
      int const  n = family::uniform(rng, 2, 8);
      auto const a = oracle::random_one_pure(rng, n, 16);
      int64_t    twice = 0;
      auto const all   = lk_all(a);
      for (int i = 2; i <= n; ++i) {
        twice += all[static_cast<size_t>(i - 2)].twice_value();
        t.check(lk_i(a, i).twice_value() == oracle_lk_i_twice(a, i), "lk_i against the trace");
      }
      t.check(twice == 2 * lk(a) && lk(a) == oracle_lk(a), "sum of lk_i is lk");
    }
  });

  criterion(4, [](Tally& t) {
    auto const& [a1, b1] = example_pairs[0];
    auto const& [a2, b2] = example_pairs[1];
    t.check(lk(a1) == 1 && oracle_lk(a1) == 1, "lk(s1^2) = 1");
    t.check(lk(b1) == 0 && oracle_lk(b1) == 0, "lk(s2^2) = 0");
    t.check(lk(a2) == 1 && oracle_lk(a2) == 1, "lk(s1^2 s2^4) = 1");
    t.check(lk(b2) == 2 && oracle_lk(b2) == 2, "lk(s2^2 s1^4) = 2");
    auto const D = half_twist(3);
    for (auto const& [a, b] : example_pairs) {
      t.check(same(D * a * D.inverse(), b), "Delta conjugates the example pair");
    }
    auto const f = figure_word();
    t.check(lk_i(f, 2).twice_value() == 0 && lk_i(f, 3).twice_value() == -2
                && lk_i(f, 4).twice_value() == 2,
            "figure braid lk_i = (0,-1,1)");
    t.check(oracle_lk_i_twice(f, 2) == 0 && oracle_lk_i_twice(f, 3) == -2
                && oracle_lk_i_twice(f, 4) == 2,
            "figure braid lk_i by the trace");
    t.check(lk(f) == 0 && oracle_lk(f) == 0, "figure braid lk = 0");
    auto const c = cable(f, {3, 1, 1, 2});
    t.check(lk(c) == 1 && oracle_lk(c) == 1, "cabled figure braid lk = 1");
  });

  RootStats         stats;
  RootOptions const opts{kDefaultSearchDepth, true, &stats};
  int               identity_violations = 0;

  // Runs one root problem, counting internal identity violations apart.
  auto solve = [&](Tally& t, RootProblem const& pr, std::string const& label)
      -> std::optional<ConjugacyCertificate> {
    try {
      return root_conjugator(pr, opts);
    } catch (BraidError const& e) {
      if (e.code() == ErrorCode::InternalIdentityViolated) {
        ++identity_violations;
      }
      t.check(false, label + ": " + e.what());
      return std::nullopt;
    }
  };

  criterion(5, [&](Tally& t) {
    int bound = 0;
    for (int trial = 0; trial < 50; ++trial) {
      int const  n  = 3 + trial % 4;
      auto const pr = family::periodic(rng, n);
      try {
        auto const c = root_conjugator(pr, opts);
        t.check(verified(pr, c), "periodic instance on " + std::to_string(n) + " strands");
      } catch (BraidError const& e) {
        bound += e.code() == ErrorCode::BoundExceeded ? 1 : 0;
        identity_violations += e.code() == ErrorCode::InternalIdentityViolated ? 1 : 0;
        t.check(false, std::string("periodic instance: ") + e.what());
      }
    }
    t.note = std::to_string(bound) + " BoundExceeded";
  });

  criterion(6, [&](Tally& t) {
    for (int trial = 0; trial < 25; ++trial) {
      int const  m  = 2 + trial % 2;
      int const  p  = trial % 5 - 2;
      auto const pr = family::swap(rng, m, p);
      if (auto const c = solve(t, pr, "swap instance")) {
        t.check(verified(pr, *c), "swap instance, blocks of " + std::to_string(m));
      }
    }
  });

  criterion(7, [&](Tally& t) {
    for (int trial = 0; trial < 25; ++trial) {
      auto const pr = family::pure(rng, family::uniform(rng, 3, 5));
      if (auto const c = solve(t, pr, "pure instance")) {
        t.check(verified(pr, *c), "pure instance certified");
        t.check(same(c->gamma, BraidWord(pr.alpha.strands())), "pure instance gives the identity");
        t.check(same(pr.alpha, pr.beta), "alpha = beta");
      }
    }
  });

  RootStats const after_5_to_7 = stats;

  criterion(8, [](Tally& t) {
    for (auto const& [a, b] : example_pairs) {
      for (int k = 1; k <= 4; ++k) {
        t.check(!equals(a.pow(k), b.pow(k)) && !oracle::burau_equal(a.pow(k), b.pow(k)),
                "powers differ at k = " + std::to_string(k));
      }
      t.check(lk(a) != lk(b) && oracle_lk(a) != oracle_lk(b), "linking numbers differ");
      auto const found = try_conjugacy_search(a, b, 3);
      t.check(found && same(*found * a * found->inverse(), b), "conjugator within depth 3");
      auto const D = half_twist(3);
      t.check(same(D * a * D.inverse(), b), "Delta conjugates");
    }
  });

  criterion(9, [&](Tally& t) {
    bool rejected = false;
    try {
      extract(BraidWord(3, {2}), {2, 1});
    } catch (BraidError const& e) {
      rejected = e.code() == ErrorCode::NotStandardlyReduced;
    }
    t.check(rejected, "sigma_2 over (2,1) is rejected");
    auto const found = find_preserved_compositions(BraidWord(3, {1, 1}));
    t.check(std::find(found.begin(), found.end(), Composition{2, 1}) != found.end(),
            "sigma_1^2 preserves (2,1)");
    for (auto const& d : sample) {
      auto const e  = extract(compose_decomposition(d), d.composition);
      bool       ok = same(e.exterior, d.exterior);
      for (size_t i = 0; i < d.interiors.size(); ++i) {
        ok = ok && same(e.interiors[i], d.interiors[i]);
      }
      t.check(ok, "round trip over " + d.composition.to_string());
    }
  });

  criterion(10, [&](Tally& t) {
    t.check(opts.debug_checks, "identity assertions enabled");
    t.check(identity_violations == 0, "no identity violation in criteria 5 to 7");
    t.check(after_5_to_7.cycle_identity_checks > 0, "cycle telescoping identity exercised");
    // The generated families never reach the periodic-exterior route, so
    // its identity is exercised on dedicated instances with the same
    // assertions switched on.
    RootStats         extra;
    RootOptions const eopts{10, true, &extra};
    for (auto const& chi0 : {BraidWord(3, {2, 2}), BraidWord(3, {1, 1, 2, 2})}) {
      Composition const n{1, 2, 2};
      auto const        alpha = cable(epsilon_word(3), n);
      auto const        chi   = cable(chi0, n);
      RootProblem const pr{alpha, chi * alpha * chi.inverse(), StrandSet{1}, 2, std::nullopt};
      try {
        auto const c = root_conjugator(pr, eopts);
        t.check(verified(pr, c) && c.route.rfind("per-ext", 0) == 0, "periodic exterior route");
      } catch (BraidError const& e) {
        t.check(false, std::string("periodic exterior route: ") + e.what());
      }
    }
    t.check(after_5_to_7.commutant_identity_checks + extra.commutant_identity_checks > 0,
            "commutant identity exercised");
    t.note = "cycle checks " + std::to_string(after_5_to_7.cycle_identity_checks)
             + ", commutant checks " + std::to_string(after_5_to_7.commutant_identity_checks)
             + " in criteria 5 to 7 and " + std::to_string(extra.commutant_identity_checks)
             + " on periodic exteriors";
  });

  std::printf("%s\n", failed_criteria == 0 ? "all criteria passed"
                                           : (std::to_string(failed_criteria) + " criteria failed").c_str());
  return failed_criteria == 0 ? 0 : 1;
}
