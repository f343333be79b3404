#include "braidroots/selftest.hpp"

#include <algorithm>  // for reverse, swap
#include <cstdlib>    // for abs
#include <functional>  // for function
#include <random>     // for mt19937_64

#include "braidroots/error.hpp"
#include "braidroots/garside.hpp"
#include "braidroots/periodic.hpp"
#include "braidroots/roots.hpp"
#include "braidroots/tubular.hpp"

namespace braidroots {

  namespace {

    using Rng = std::mt19937_64;

    class Group {
     public:
      explicit Group(std::string name) {
        _g.name = std::move(name);
      }
      void check(bool ok, std::string const& label) {
        ++_g.checks;
        if (!ok) {
          if (_g.failures == 0) {
            _g.first_failure = label;
          }
          ++_g.failures;
        }
      }
      //! Runs \p body, counting a thrown BraidError as one failure.
      template <typename F>
      SelftestGroup run(F&& body) {
        try {
          body(*this);
        } catch (BraidError const& e) {
          check(false, e.what());
        }
        return _g;
      }

     private:
      SelftestGroup _g;
    };

    int uniform(Rng& rng, int lo, int hi) {
      return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    }

    BraidWord random_word(Rng& rng, int n, int max_len) {
      std::vector<int> letters;
      if (n >= 2) {
        int const len = uniform(rng, 0, max_len);
        for (int i = 0; i < len; ++i) {
          int const g = uniform(rng, 1, n - 1);
          letters.push_back(rng() % 2 ? g : -g);
        }
      }
      return BraidWord(n, std::move(letters));
    }

    //! A word in sigma_1^{+-2}, sigma_2^{+-1}, ...
    BraidWord random_one_pure(Rng& rng, int n, int max_len) {
      std::vector<int> letters;
      if (n >= 2) {
        int const len = uniform(rng, 0, max_len);
        while (static_cast<int>(letters.size()) < len) {
          int const g = uniform(rng, 1, n - 1);
          int const s = rng() % 2 ? 1 : -1;
          if (g == 1 && static_cast<int>(letters.size()) + 2 > len) {
            break;
          }
          letters.push_back(s * g);
          if (g == 1) {
            letters.push_back(s * g);
          }
        }
      }
      return BraidWord(n, std::move(letters));
    }

    //! Product of generators A_ij = c sigma_i^2 c^{-1}, c = sigma_{j-1}..sigma_{i+1}.
    BraidWord random_pure(Rng& rng, int n, int factors) {
      BraidWord w(n);
      for (int f = 0; f < factors && n >= 2; ++f) {
        int const        i = uniform(rng, 1, n - 1);
        int const        j = uniform(rng, i + 1, n);
        std::vector<int> c;
        for (int k = j - 1; k > i; --k) {
          c.push_back(k);
        }
        BraidWord const conj(n, c);
        auto const      a = conj * BraidWord(n, {i, i}) * conj.inverse();
        w *= rng() % 2 ? a : a.inverse();
      }
      return w;
    }

    Composition random_composition(Rng& rng, int max_n, int max_r) {
      int const        r = uniform(rng, 2, max_r);
      std::vector<int> parts(static_cast<size_t>(r), 1);
      for (int extra = uniform(rng, 0, max_n - r); extra > 0; --extra) {
        parts[rng() % parts.size()]++;
      }
      return Composition(parts);
    }

    Decomposition random_decomposition(Rng& rng) {
      auto          n = random_composition(rng, 9, 4);
      Decomposition d{n, random_word(rng, n.size(), 12), {}};
      for (int i = 1; i <= n.size(); ++i) {
        d.interiors.push_back(random_word(rng, n[i], 12));
      }
      return d;
    }

    //! Cabling with the running block sizes seeded from the wrong end.
    BraidWord cable_wrong_end(BraidWord const& a0, Composition const& n) {
      std::vector<int> c = n.parts();
      std::vector<int> out;
      for (int g : a0.letters()) {
        size_t const j = static_cast<size_t>(std::abs(g));
        int          o = 0;
        for (size_t k = 0; k + 1 < j; ++k) {
          o += c[k];
        }
        int const        p = g > 0 ? c[j - 1] : c[j];
        int const        q = g > 0 ? c[j] : c[j - 1];
        std::vector<int> word;
        for (int k = p; k >= 1; --k) {
          for (int m = 0; m < q; ++m) {
            word.push_back(o + k + m);
          }
        }
        if (g < 0) {
          std::reverse(word.begin(), word.end());
          for (int& x : word) {
            x = -x;
          }
        }
        out.insert(out.end(), word.begin(), word.end());
        std::swap(c[j - 1], c[j]);
      }
      return BraidWord(n.total(), out);
    }

    BraidWord figure_word() {
      return BraidWord(4, {-2, 1, 1, -2, -1, -1, -2, -1, -1, 3, 2, 1, 1, 2, 3});
    }

    std::vector<HalfInteger> ints(std::vector<int> const& v) {
      std::vector<HalfInteger> out;
      for (int x : v) {
        out.push_back(HalfInteger::from_integer(x));
      }
      return out;
    }

    bool certified(RootProblem const& pr, RootOptions const& opts) {
      auto const c = root_conjugator(pr, opts);
      bool       ok = equals(c.gamma * pr.alpha * c.gamma.inverse(), pr.beta);
      if (pr.P.contains(1)) {
        ok = ok && is_P_straight(c.gamma, pr.P) && lk(c.gamma) == 0;
      }
      return ok;
    }

  }  // namespace

  std::vector<SelftestGroup> run_selftest(SelftestOptions const& options) {
    Rng                        rng(options.seed);
    std::vector<SelftestGroup> out;
    using Cabler = std::function<BraidWord(BraidWord const&, Composition const&)>;
    Cabler const cabler = options.mutate_cabling ? Cabler(cable_wrong_end) : Cabler(
        [](BraidWord const& a, Composition const& n) { return cable(a, n); });

    out.push_back(Group("fixtures").run([](Group& g) {
      BraidWord const a1(3, {1, 1}), b1(3, {2, 2});
      BraidWord const a2(3, {1, 1, 2, 2, 2, 2}), b2(3, {2, 2, 1, 1, 1, 1});
      g.check(lk(a1) == 1, "lk(s1^2) = 1");
      g.check(lk(b1) == 0, "lk(s2^2) = 0");
      g.check(lk(a2) == 1, "lk(s1^2 s2^4) = 1");
      g.check(lk(b2) == 2, "lk(s2^2 s1^4) = 2");
      auto const D = half_twist(3);
      g.check(equals(D * a1 * D.inverse(), b1), "Delta conjugates the first pair");
      g.check(equals(D * a2 * D.inverse(), b2), "Delta conjugates the second pair");
      auto const f = figure_word();
      g.check(lk_all(f) == ints({0, -1, 1}), "figure braid lk_i");
      g.check(lk(f) == 0, "figure braid lk");
      auto const c = cable(f, {3, 1, 1, 2});
      g.check(lk(c) == 1, "cabled figure braid lk");
      g.check(lk_all(c) == ints({0, 0, 0, -1, 1, 1}), "cabled figure braid lk_i");
      g.check(epsilon_word(3) == BraidWord(3, {2, 1, 1}), "epsilon = delta sigma_1");
      g.check(artin_embed({ArtinType::Kind::TypeB, 2}, {1, 2}) == BraidWord(3, {1, 1, 2}),
              "type B embedding");
    }));

    out.push_back(Group("periodic identities").run([](Group& g) {
      for (int n = 3; n <= 8; ++n) {
        auto const D2 = half_twist(n).pow(2);
        g.check(equals(delta_word(n).pow(n), D2), "delta^n = Delta^2");
        g.check(equals(epsilon_word(n).pow(n - 1), D2), "epsilon^(n-1) = Delta^2");
      }
      for (auto [s, d] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
        int const r = d * s + 1;
        g.check(equals(mu_word(r, s).pow(s), half_twist(r).pow(2)), "mu_s^s = Delta^2");
        for (int j = 1; j <= d; ++j) {
          auto const mj = mu_factor(r, s, j);
          g.check(lk(mj) == 1, "lk(mu_{s,j}) = 1");
          for (int i = 1; i <= d; ++i) {
            auto const mi = mu_factor(r, s, i);
            g.check(equals(mi * mj, mj * mi), "mu factors commute");
          }
          for (int k = 1; k <= d; ++k) {
            for (int l = 1; l <= s; ++l) {
              int const want = k == j && l == 1 ? 1 : 0;
              g.check(lk_i(mj, bracket(s, k, l)) == HalfInteger::from_integer(want),
                      "lk of mu_{s,j} concentrates on [j,1]");
            }
          }
        }
      }
    }));

    std::vector<Decomposition> sample;
    for (int t = 0; t < 200; ++t) {
      sample.push_back(random_decomposition(rng));
    }

    out.push_back(Group("decomposition: round trip").run([&](Group& g) {
      for (auto const& d : sample) {
        auto const e  = extract(compose_decomposition(d), d.composition);
        bool       ok = equals(e.exterior, d.exterior);
        for (size_t i = 0; i < d.interiors.size(); ++i) {
          ok = ok && equals(e.interiors[i], d.interiors[i]);
        }
        g.check(ok, "extract inverts compose on " + d.composition.to_string());
      }
    }));

    out.push_back(Group("decomposition: action").run([&](Group& g) {
      for (auto const& d : sample) {
        auto const moved = act_on_composition(induced_permutation(d.exterior), d.composition);
        auto const e     = extract(compose_decomposition(d).inverse(), moved);
        g.check(equals(e.exterior, d.exterior.inverse()), "inverse is standard over pi * n");
      }
    }));

    out.push_back(Group("decomposition: interchange").run([&](Group& g) {
      for (auto const& d : sample) {
        auto const             theta = induced_permutation(d.exterior);
        std::vector<BraidWord> permuted(d.interiors.size(), BraidWord(1));
        for (int i = 1; i <= d.composition.size(); ++i) {
          permuted[static_cast<size_t>(theta(i) - 1)] = d.interiors[static_cast<size_t>(i - 1)];
        }
        auto const rhs = block_sum(permuted, act_on_composition(theta, d.composition))
                         * cabler(d.exterior, d.composition);
        g.check(equals(compose_decomposition(d), rhs), "interchange on " + d.composition.to_string());
      }
    }));

    out.push_back(Group("decomposition: cabling multiplicativity").run([&](Group& g) {
      for (size_t t = 0; t + 1 < sample.size(); t += 2) {
        auto const& n  = sample[t].composition;
        auto const  a  = random_word(rng, n.size(), 12);
        auto const  b  = random_word(rng, n.size(), 12);
        auto const  bn = act_on_composition(induced_permutation(b), n);
        g.check(equals(cabler(a * b, n), cabler(a, bn) * cabler(b, n)),
                "cabling is multiplicative on " + n.to_string());
        g.check(equals(cabler(a, n).inverse(),
                       cabler(a.inverse(), act_on_composition(induced_permutation(a), n))),
                "cabling respects inverses on " + n.to_string());
      }
    }));

    out.push_back(Group("decomposition: block sums").run([&](Group& g) {
      for (auto const& d : sample) {
        std::vector<BraidWord> y, xy, xinv;
        for (int i = 1; i <= d.composition.size(); ++i) {
          auto const& x = d.interiors[static_cast<size_t>(i - 1)];
          y.push_back(random_word(rng, d.composition[i], 12));
          xy.push_back(x * y.back());
          xinv.push_back(x.inverse());
        }
        auto const& n = d.composition;
        g.check(equals(block_sum(xy, n), block_sum(d.interiors, n) * block_sum(y, n)),
                "block sum is multiplicative");
        g.check(equals(block_sum(d.interiors, n).inverse(), block_sum(xinv, n)),
                "block sum respects inverses");
      }
    }));

    out.push_back(Group("decomposition: half twist").run([&](Group& g) {
      for (int m = 1; m <= 8; ++m) {
        auto all = essential_compositions(m);
        all.push_back(Composition{m});
        if (m >= 2) {
          all.push_back(Composition(std::vector<int>(static_cast<size_t>(m), 1)));
        }
        for (auto const& n : all) {
          std::vector<BraidWord> in;
          for (int i = 1; i <= n.size(); ++i) {
            in.push_back(half_twist(n[i]));
          }
          auto const w = cabler(half_twist(n.size()), n) * block_sum(in, n);
          g.check(equals(w, half_twist(m)), "Delta splits over " + n.to_string());
        }
      }
    }));

    out.push_back(Group("linking laws").run([&](Group& g) {
      for (int t = 0; t < 100; ++t) {
        int const  n   = uniform(rng, 3, 7);
        auto const a   = random_one_pure(rng, n, 12);
        auto const chi = random_one_pure(rng, n, 12);
        g.check(lk(chi * a * chi.inverse()) == lk(a), "lk is a conjugacy invariant");
        HalfInteger sum;
        for (auto const& x : lk_all(a)) {
          sum += x;
        }
        g.check(sum == HalfInteger::from_integer(lk(a)), "sum of lk_i is lk");
      }
      for (int t = 0; t < 100; ++t) {
        auto const    n = random_composition(rng, 9, 4);
        Decomposition d{n, random_one_pure(rng, n.size(), 8), {}};
        d.interiors.push_back(random_one_pure(rng, n[1], 8));
        for (int i = 2; i <= n.size(); ++i) {
          d.interiors.push_back(random_word(rng, n[i], 8));
        }
        HalfInteger rhs = HalfInteger::from_integer(lk(d.interiors[0]));
        for (int i = 2; i <= n.size(); ++i) {
          rhs += static_cast<int64_t>(n[i]) * lk_i(d.exterior, i);
        }
        g.check(HalfInteger::from_integer(lk(compose_decomposition(d))) == rhs,
                "lk of a cabled braid");
      }
    }));

    out.push_back(Group("extraction").run([](Group& g) {
      bool rejected = false;
      try {
        extract(BraidWord(3, {2}), {2, 1});
      } catch (BraidError const& e) {
        rejected = e.code() == ErrorCode::NotStandardlyReduced;
      }
      g.check(rejected, "sigma_2 does not preserve (2,1)");
      auto const found = find_preserved_compositions(BraidWord(3, {1, 1}));
      g.check(std::find(found.begin(), found.end(), Composition{2, 1}) != found.end(),
              "sigma_1^2 preserves (2,1)");
    }));

    RootStats         stats;
    RootOptions const ropts{kDefaultSearchDepth, true, &stats};

    out.push_back(Group("roots: periodic family").run([&](Group& g) {
      for (int t = 0; t < 10; ++t) {
        int const  n   = uniform(rng, 3, 6);
        auto const chi = random_one_pure(rng, n, 6);
        auto const e   = epsilon_word(n);
        g.check(certified({e, chi * e * chi.inverse(), StrandSet{1}, n - 1, std::nullopt}, ropts),
                "periodic instance certified");
      }
    }));

    out.push_back(Group("roots: swap family").run([&](Group& g) {
      for (int t = 0; t < 10; ++t) {
        int const         m = uniform(rng, 2, 3);
        Composition const n{1, m, m};
        auto const        a = random_word(rng, m, 4);
        auto const        b = random_word(rng, m, 4);
        auto const        z = (a * b).pow(uniform(rng, -2, 2));
        BraidWord const   ext(3, {2});
        auto const        one = BraidWord(1);
        RootProblem const pr{compose_decomposition({n, ext, {one, a, b}}),
                             compose_decomposition({n, ext, {one, z * a, a.inverse() * z.inverse() * a * b}}),
                             StrandSet{1}, 2, std::nullopt};
        g.check(certified(pr, ropts), "swap instance certified");
      }
    }));

    out.push_back(Group("roots: pure braids").run([&](Group& g) {
      for (int t = 0; t < 10; ++t) {
        int const  n     = uniform(rng, 3, 5);
        auto const alpha = random_pure(rng, n, uniform(rng, 1, 3));
        auto const x     = random_word(rng, n, 5);
        auto const beta  = normal_form(alpha * x * x.inverse()).to_word();
        auto const c = root_conjugator({alpha, beta, StrandSet::range(1, n), 2, std::nullopt}, ropts);
        g.check(equals(c.gamma, BraidWord(n)), "pure problem gives the identity");
      }
    }));

    out.push_back(Group("obstruction").run([](Group& g) {
      std::pair<BraidWord, BraidWord> const pairs[] = {
          {BraidWord(3, {1, 1}), BraidWord(3, {2, 2})},
          {BraidWord(3, {1, 1, 2, 2, 2, 2}), BraidWord(3, {2, 2, 1, 1, 1, 1})}};
      for (auto const& [a, b] : pairs) {
        g.check(lk(a) != lk(b), "linking numbers differ");
        for (int k = 1; k <= 4; ++k) {
          g.check(!equals(a.pow(k), b.pow(k)), "powers differ");
        }
        auto const found = try_conjugacy_search(a, b, 3);
        g.check(found && equals(*found * a * found->inverse(), b), "a conjugator within depth 3");
      }
    }));

    return out;
  }

}  // namespace braidroots
