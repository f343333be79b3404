#include "braidroots/roots.hpp"

#include <algorithm>  // for sort
#include <map>        // for map
#include <numeric>    // for lcm

#include "braidroots/error.hpp"
#include "braidroots/periodic.hpp"

namespace braidroots {

  namespace {

    void bump(int64_t RootStats::*field, RootOptions const& options) {
      if (options.stats != nullptr) {
        ++(options.stats->*field);
      }
    }

    BraidWord conj(BraidWord const& g, BraidWord const& a) {
      return g * a * g.inverse();
    }

    bool one_pure(BraidWord const& w) {
      return w.strands() == 0 || induced_permutation(w)(1) == 1;
    }

    //! P-straight and 1-unlinked when 1 is in P, P-straight otherwise.
    bool straight_enough(BraidWord const& g, StrandSet const& P) {
      if (P.empty()) {
        return true;
      }
      if (!is_P_straight(g, P)) {
        return false;
      }
      return !P.contains(1) || lk(g) == 0;
    }

    //! A conjugator for the case where nothing constrains it.
    BraidWord free_conjugator(BraidWord const& a, BraidWord const& b, RootOptions const& options) {
      if (equals(a, b)) {
        return BraidWord(a.strands());
      }
      return conjugacy_search(a, b, options.depth);
    }

    //! Solves one block subproblem by recursion.
    BraidWord solve_block(BraidWord const&   a,
                          BraidWord const&   b,
                          StrandSet const&   Q,
                          int64_t            k,
                          RootOptions const& options) {
      if (a.strands() <= 1) {
        return BraidWord(a.strands());
      }
      return root_conjugator(RootProblem{a, b, Q, k, std::nullopt}, options).gamma;
    }

    //! The mu-standard frame of a braid whose exterior over n is periodic
    //! and non-central.
    struct PerExtFrame {
      Composition   n;
      BraidWord     zeta;  // cable of zeta0 over n
      Permutation   theta;
      MuShape       shape;
      Decomposition moved;  // decomposition of zeta alpha zeta^{-1}
    };

    PerExtFrame per_ext_frame(BraidWord const&   alpha,
                              Composition const& n,
                              StrandSet const&   P,
                              RootOptions const& options) {
      if (!P.contains(1)) {
        raise(ErrorCode::HypothesisViolated, "the commutant construction needs 1 in P");
      }
      if (!is_P_pure(alpha, P)) {
        raise(ErrorCode::HypothesisViolated, "alpha is not P-pure");
      }
      auto const dec = extract(alpha, n);
      if (!is_periodic(dec.exterior)) {
        raise(ErrorCode::NotPeriodicExterior, "the exterior braid is not periodic");
      }
      if (is_central(dec.exterior)) {
        raise(ErrorCode::CentralExterior, "the exterior braid is central");
      }
      auto const st    = mu_standardize(dec.exterior, options.depth);
      auto const theta = induced_permutation(st.zeta0);
      auto const zeta  = cable(st.zeta0, n);
      auto const moved = extract(conj(zeta, alpha), act_on_composition(theta, n));
      if (!equals(moved.exterior, mu_word(st.shape.r, st.shape.s).pow(st.shape.t))) {
        raise(ErrorCode::InternalIdentityViolated, "standardised exterior is not mu_s^t");
      }
      return {n, zeta, theta, st.shape, moved};
    }

    BraidWord frame_commutant(PerExtFrame const& f,
                              StrandSet const&   P,
                              int                i,
                              BraidWord const&   alpha,
                              RootOptions const& options) {
      if (i < 2 || i > f.n.size()) {
        raise(ErrorCode::IndexOutOfRange, "commutant block index must satisfy 2 <= i <= r");
      }
      auto const& sh     = f.shape;
      auto const& nprime = f.moved.composition;
      int const   j      = (f.theta(i) - 2) / sh.s + 1;
      auto const  a_at   = [&](int l) -> BraidWord const& {
        return f.moved.interiors[static_cast<size_t>(bracket(sh.s, j, l) - 1)];
      };
      Decomposition g{nprime, mu_factor(sh.r, sh.s, j), {}};
      for (int b = 1; b <= nprime.size(); ++b) {
        g.interiors.emplace_back(nprime[b]);
      }
      std::vector<BraidWord> gj(static_cast<size_t>(sh.s) + 1);
      for (int l = 1; l <= sh.s; ++l) {
        BraidWord prod(nprime[bracket(sh.s, j, l)]);
        for (int64_t u = sh.a - 1; u >= 0; --u) {
          prod *= a_at(static_cast<int>(l - u * sh.t));
        }
        gj[static_cast<size_t>(l)] = prod;
        g.interiors[static_cast<size_t>(bracket(sh.s, j, l) - 1)] = prod;
      }
      if (options.debug_checks) {
        auto const g_at = [&](int64_t l) -> BraidWord const& {
          return gj[static_cast<size_t>(((l - 1) % sh.s + sh.s) % sh.s + 1)];
        };
        for (int l = 1; l <= sh.s; ++l) {
          bump(&RootStats::commutant_identity_checks, options);
          if (!equals(a_at(l - 1) * g_at(l), g_at(l - sh.t) * a_at(l))) {
            raise(ErrorCode::InternalIdentityViolated, "commutant interior identity failed");
          }
        }
      }
      auto const gamma = f.zeta.inverse() * compose_decomposition(g) * f.zeta;
      if (!equals(gamma * alpha, alpha * gamma) || !is_P_straight(gamma, P)
          || lk(gamma) != f.n[i]) {
        raise(ErrorCode::InternalIdentityViolated, "commutant fails its postconditions");
      }
      return gamma;
    }

    BraidWord frame_balance(PerExtFrame const&   f,
                            StrandSet const&     P,
                            BraidWord const&     alpha,
                            Decomposition const& chi,
                            RootOptions const&   options) {
      if (chi.composition != f.n) {
        raise(ErrorCode::ShapeMismatch, "chi is decomposed over a different composition");
      }
      if (!one_pure(chi.exterior) || !is_one_unlinked(chi.interiors.front())) {
        raise(ErrorCode::HypothesisViolated, "chi needs a 1-pure exterior and 1-unlinked first interior");
      }
      int const             N = alpha.strands();
      BraidWord             gamma(N);
      std::map<int, BraidWord> cache;
      for (int i = 2; i <= f.n.size(); ++i) {
        auto const e = lk_i(chi.exterior, i);
        if (!e.is_integer()) {
          raise(ErrorCode::InternalIdentityViolated, "non-integral linking number of a 1-pure braid");
        }
        int64_t const power = -e.integer_value();
        if (power == 0) {
          continue;
        }
        auto it = cache.find(f.n[i]);
        if (it == cache.end()) {
          it = cache.emplace(f.n[i], frame_commutant(f, P, i, alpha, options)).first;
        }
        gamma *= it->second.pow(power);
      }
      if (!equals(gamma * alpha, alpha * gamma)
          || lk(gamma) != -lk(compose_decomposition(chi))) {
        raise(ErrorCode::InternalIdentityViolated, "balancing braid fails its postconditions");
      }
      return gamma;
    }

    //! Moves the least member of P to strand 1 by a positive word.
    BraidWord pre_conjugator(StrandSet const& P, int N) {
      int const        p = P.min();
      std::vector<int> up, down;
      for (int i = 1; i < p; ++i) {
        up.push_back(i);
        down.push_back(p - i);
      }
      for (auto const& letters : {up, down}) {
        BraidWord const z(N, letters);
        if (P.image(induced_permutation(z)).contains(1)) {
          return z;
        }
      }
      raise(ErrorCode::InternalIdentityViolated, "no pre-conjugator brings P to strand 1");
    }

    std::vector<Composition> candidate_compositions(BraidWord const& a, BraidWord const& b) {
      auto       ca = find_preserved_compositions(a);
      auto const cb = find_preserved_compositions(b);
      std::vector<Composition> both;
      for (auto const& c : ca) {
        if (std::find(cb.begin(), cb.end(), c) != cb.end()) {
          both.push_back(c);
        }
      }
      std::stable_sort(both.begin(), both.end(), [](Composition const& x, Composition const& y) {
        return x.size() > y.size();
      });
      return both;
    }

    struct Solved {
      BraidWord   gamma;
      std::string route;
    };

    //! The periodic-exterior route for alpha != beta over n.
    BraidWord per_ext_route(RootProblem const& pr, Composition const& n, RootOptions const& options) {
      auto const frame = per_ext_frame(pr.alpha, n, pr.P, options);
      auto const accept = [&n](BraidWord const& z) {
        Decomposition d;
        return try_extract(z, n, d) && one_pure(d.exterior)
               && act_on_composition(induced_permutation(d.exterior), n) == n;
      };
      auto const zeta = conjugacy_search(pr.alpha, pr.beta, options.depth, accept);
      auto       xi   = extract(zeta, n);
      auto const a1   = extract(pr.alpha, n).interiors.front();
      auto const b1   = extract(pr.beta, n).interiors.front();
      xi.interiors.front() = solve_block(a1, b1, block_strand_set(pr.P, n, 1), pr.k, options);
      auto const xi_word = compose_decomposition(xi);
      auto const balance = frame_balance(frame, pr.P, pr.alpha, xi, options);
      return xi_word * balance;
    }

    Solved preconjugated(RootProblem const& pr, RootOptions const& options) {
      auto const  z = pre_conjugator(pr.P, pr.alpha.strands());
      RootProblem inner{conj(z, pr.alpha), conj(z, pr.beta), pr.P.image(induced_permutation(z)),
                        pr.k, std::nullopt};
      auto const  g = root_conjugator(inner, options).gamma;
      return {transport_by_chi(z, pr, g, TransportMode::Conjugate), "preconjugate"};
    }

    Solved solve(RootProblem const&                pr,
                 RootOptions const&                options,
                 std::optional<Composition> const& forced) {
      int const  N         = pr.alpha.strands();
      bool const has_one   = pr.P.contains(1);
      if (equals(pr.alpha, pr.beta)) {
        return {BraidWord(N), "identity"};
      }
      if (N <= 2) {
        if (!pr.P.empty()) {
          raise(ErrorCode::InternalIdentityViolated,
                "distinct pure-strand 2-braids cannot have equal powers");
        }
        return {free_conjugator(pr.alpha, pr.beta, options), "search"};
      }
      if (is_periodic(pr.alpha)) {
        if (has_one) {
          return {irred_root_conjugator(pr, options).gamma, "periodic"};
        }
        if (pr.P.empty()) {
          return {free_conjugator(pr.alpha, pr.beta, options), "search"};
        }
        return preconjugated(pr, options);
      }
      if (!forced && pr.hint) {
        auto const& z = pr.hint->standardizer;
        if (z.strands() != N) {
          raise(ErrorCode::StrandCountMismatch, "standardizer has the wrong strand count");
        }
        if (has_one && !one_pure(z)) {
          raise(ErrorCode::HypothesisViolated, "the standardizer must be 1-pure");
        }
        RootProblem inner{conj(z, pr.alpha), conj(z, pr.beta), pr.P.image(induced_permutation(z)),
                          pr.k, std::nullopt};
        auto const g = solve(inner, options, pr.hint->composition);
        return {transport_by_chi(z, pr, g.gamma, TransportMode::Conjugate), "hint+" + g.route};
      }

      std::vector<Composition> candidates;
      if (forced) {
        candidates.push_back(*forced);
      } else {
        candidates = candidate_compositions(pr.alpha, pr.beta);
      }
      bool hit_bound = false;
      for (auto const& n : candidates) {
        Decomposition da, db;
        if (!try_extract(pr.alpha, n, da) || !try_extract(pr.beta, n, db)) {
          continue;
        }
        try {
          if (equals(da.exterior, db.exterior)) {
            return {same_ext_root_conjugator(pr, n, options).gamma, "same-ext" + n.to_string()};
          }
          if (has_one && is_periodic(da.exterior) && !is_central(da.exterior)) {
            return {per_ext_route(pr, n, options), "per-ext" + n.to_string()};
          }
        } catch (BraidError const& e) {
          if (e.code() == ErrorCode::BoundExceeded) {
            hit_bound = true;
            continue;
          }
          if (e.code() == ErrorCode::HintRequired) {
            continue;
          }
          throw;
        }
      }
      // Unstructured fallbacks.
      if (pr.P.empty()) {
        return {free_conjugator(pr.alpha, pr.beta, options), "search"};
      }
      if (!has_one && !forced) {
        return preconjugated(pr, options);
      }
      if (hit_bound) {
        raise(ErrorCode::BoundExceeded, "every candidate reduction system needed a deeper search");
      }
      raise(ErrorCode::HintRequired, "no standard reduction system found; supply a hint");
    }

    void validate(RootProblem const& pr) {
      int const N = pr.alpha.strands();
      if (pr.beta.strands() != N) {
        raise(ErrorCode::StrandCountMismatch, "alpha and beta have different strand counts");
      }
      if (!pr.P.empty() && (pr.P.min() < 1 || pr.P.max() > N)) {
        raise(ErrorCode::IndexOutOfRange, "P names a strand outside the braid");
      }
      if (pr.k == 0) {
        raise(ErrorCode::HypothesisViolated, "k must be nonzero");
      }
      if (!is_P_pure(pr.alpha, pr.P) || !is_P_pure(pr.beta, pr.P)) {
        raise(ErrorCode::HypothesisViolated, "alpha and beta must be P-pure");
      }
      if (!equals(pr.alpha.pow(pr.k), pr.beta.pow(pr.k))) {
        raise(ErrorCode::HypothesisViolated, "alpha^k and beta^k differ");
      }
    }

  }  // namespace

  BraidWord transport_by_chi(BraidWord const&   chi,
                             RootProblem const& problem,
                             BraidWord const&   inner_gamma,
                             TransportMode      mode) {
    auto const gamma = mode == TransportMode::Conjugate ? chi.inverse() * inner_gamma * chi
                                                        : chi.inverse() * inner_gamma;
    if (!equals(conj(gamma, problem.alpha), problem.beta)
        || !straight_enough(gamma, problem.P)) {
      raise(ErrorCode::HypothesisViolated, "transported conjugator fails verification");
    }
    return gamma;
  }

  ConjugacyCertificate irred_root_conjugator(RootProblem const& problem,
                                             RootOptions const& options) {
    int const N = problem.alpha.strands();
    if (equals(problem.alpha, problem.beta)) {
      return certify(problem, BraidWord(N), "identity");
    }
    if (!is_periodic(problem.alpha)) {
      raise(ErrorCode::NotApplicable, "alpha is neither periodic nor equal to beta");
    }
    if (is_central(problem.alpha)) {
      raise(ErrorCode::HypothesisViolated, "a central alpha forces alpha = beta");
    }
    if (problem.P != StrandSet{1}) {
      raise(ErrorCode::HypothesisViolated, "a non-central periodic braid is pure on strand 1 only");
    }
    auto const g1 = conjugator_to_eps_power(problem.alpha, options.depth);
    auto const g2 = conjugator_to_eps_power(problem.beta, options.depth);
    if (g1.m != g2.m) {
      raise(ErrorCode::HypothesisViolated, "alpha and beta have different epsilon exponents");
    }
    return certify(problem, g2.gamma.inverse() * g1.gamma, "periodic");
  }

  namespace {
    ConjugacyCertificate same_ext_impl(RootProblem const& problem,
                                       Composition const& n,
                                       RootOptions const& options,
                                       bool               relabelled);
  }

  ConjugacyCertificate same_ext_root_conjugator(RootProblem const& problem,
                                                Composition const& n,
                                                RootOptions const& options) {
    return same_ext_impl(problem, n, options, false);
  }

  namespace {
  ConjugacyCertificate same_ext_impl(RootProblem const& problem,
                                     Composition const& n,
                                     RootOptions const& options,
                                     bool               relabelled) {
    auto const da = extract(problem.alpha, n);
    auto const db = extract(problem.beta, n);
    if (!equals(da.exterior, db.exterior)) {
      raise(ErrorCode::ExteriorMismatch, "alpha and beta have different exteriors");
    }
    int const  r  = n.size();
    auto const pi = induced_permutation(da.exterior);
    if (act_on_composition(pi, n) != n) {
      raise(ErrorCode::ExteriorMismatch, "the exterior does not preserve the composition");
    }

    // Relabel blocks so fixed blocks come first in order, then each cycle
    // on consecutive labels i+1..i+L with pi(i+j) = i+j-1, pi(i+1) = i+L.
    std::vector<int> theta(static_cast<size_t>(r) + 1, 0);
    std::vector<int> cycle_lengths;
    int              next = 1;
    for (int x = 1; x <= r; ++x) {
      if (pi(x) == x) {
        theta[static_cast<size_t>(x)] = next++;
      }
    }
    int const fixed = next - 1;
    // Cycles are laid out in increasing order of their largest block, so a
    // layout that is already standard is left alone.
    std::vector<int>  maxima;
    std::vector<bool> seen(static_cast<size_t>(r) + 1, false);
    for (int x = 1; x <= r; ++x) {
      if (pi(x) == x || seen[static_cast<size_t>(x)]) {
        continue;
      }
      int c = x;
      for (int y = pi(x); y != x; y = pi(y)) {
        c = std::max(c, y);
        seen[static_cast<size_t>(y)] = true;
      }
      seen[static_cast<size_t>(x)] = true;
      maxima.push_back(c);
    }
    std::sort(maxima.begin(), maxima.end());
    for (int c : maxima) {
      int L = 1;
      for (int y = pi(c); y != c; y = pi(y)) {
        ++L;
      }
      int y = c;
      for (int t = 0; t < L; ++t, y = pi(y)) {
        theta[static_cast<size_t>(y)] = next - 1 + L - t;
      }
      next += L;
      cycle_lengths.push_back(L);
    }
    theta.erase(theta.begin());
    Permutation const th(theta);

    if (!th.is_identity()) {
      if (relabelled) {
        raise(ErrorCode::InternalIdentityViolated, "relabelled exterior is still not standard");
      }
      auto const  zeta = cable(permutation_braid_word(th), n);
      RootProblem inner{conj(zeta, problem.alpha), conj(zeta, problem.beta),
                        problem.P.image(induced_permutation(zeta)), problem.k, std::nullopt};
      auto const  inner_cert = same_ext_impl(inner, act_on_composition(th, n), options, true);
      return certify(problem,
                     transport_by_chi(zeta, problem, inner_cert.gamma, TransportMode::Conjugate),
                     "same-ext");
    }

    // Standard frame from here on.
    int64_t k = problem.k;
    if (!cycle_lengths.empty()) {
      int64_t l = 1;
      for (int L : cycle_lengths) {
        l = std::lcm(l, static_cast<int64_t>(L));
      }
      if (options.debug_checks) {
        bump(&RootStats::power_checks, options);
        if (!equals(problem.alpha.pow(k * l), problem.beta.pow(k * l))) {
          raise(ErrorCode::InternalIdentityViolated, "raising k broke the power equality");
        }
      }
      k *= l;
    }

    std::vector<BraidWord> gamma;
    for (int i = 1; i <= fixed; ++i) {
      auto const& ai = da.interiors[static_cast<size_t>(i - 1)];
      auto const& bi = db.interiors[static_cast<size_t>(i - 1)];
      gamma.push_back(solve_block(ai, bi, block_strand_set(problem.P, n, i), k, options));
    }
    for (int i = fixed; i < r;) {
      int const L = pi(i + 1) - i;
      auto      a_at = [&](int j) -> BraidWord const& {
        return da.interiors[static_cast<size_t>(i + j - 1)];
      };
      auto b_at = [&](int j) -> BraidWord const& {
        return db.interiors[static_cast<size_t>(i + j - 1)];
      };
      int const m = n[i + 1];
      BraidWord at(m), bt(m);
      for (int j = 1; j <= L; ++j) {
        at *= a_at(j);
        bt *= b_at(j);
      }
      auto const             z = free_conjugator(at, bt, options);
      std::vector<BraidWord> g;
      BraidWord              A(m), B(m);
      for (int j = 1; j <= L; ++j) {
        A *= a_at(j);
        B *= b_at(j);
        g.push_back(B.inverse() * z * A);
      }
      if (options.debug_checks) {
        for (int j = 1; j <= L; ++j) {
          bump(&RootStats::cycle_identity_checks, options);
          auto const& prev = g[static_cast<size_t>(j == 1 ? L - 1 : j - 2)];
          auto const& cur  = g[static_cast<size_t>(j - 1)];
          if (!equals(prev * a_at(j) * cur.inverse(), b_at(j))) {
            raise(ErrorCode::InternalIdentityViolated, "cycle telescoping identity failed");
          }
        }
      }
      gamma.insert(gamma.end(), g.begin(), g.end());
      i += L;
    }
    return certify(problem, block_sum(gamma, n), "same-ext");
  }
  }  // namespace

  BraidWord per_ext_commutant(BraidWord const&   alpha,
                              Composition const& n,
                              StrandSet const&   P,
                              int                i,
                              RootOptions const& options) {
    auto const f = per_ext_frame(alpha, n, P, options);
    return frame_commutant(f, P, i, alpha, options);
  }

  BraidWord per_ext_balance(BraidWord const&     alpha,
                            Composition const&   n,
                            StrandSet const&     P,
                            Decomposition const& chi,
                            RootOptions const&   options) {
    auto const f = per_ext_frame(alpha, n, P, options);
    return frame_balance(f, P, alpha, chi, options);
  }

  ConjugacyCertificate root_conjugator(RootProblem const& problem, RootOptions const& options) {
    validate(problem);
    bump(&RootStats::recursive_calls, options);
    auto const s = solve(problem, options, std::nullopt);
    return certify(problem, s.gamma, s.route);
  }

  ConjugacyCertificate certify(RootProblem const& problem,
                               BraidWord const&   gamma,
                               std::string        route) {
    ConjugacyCertificate c{gamma, {}, 0, std::move(route)};
    c.checked.conjugates = equals(conj(gamma, problem.alpha), problem.beta);
    if (!c.checked.conjugates) {
      raise(ErrorCode::VerificationFailed, "gamma does not conjugate alpha to beta");
    }
    if (!problem.P.empty()) {
      c.checked.P_straight = is_P_straight(gamma, problem.P);
      if (!c.checked.P_straight) {
        raise(ErrorCode::VerificationFailed, "gamma is not P-straight");
      }
    }
    if (one_pure(gamma)) {
      c.lk_value = lk(gamma);
      c.checked.one_unlinked = c.lk_value == 0;
    }
    if (problem.P.contains(1) && !c.checked.one_unlinked) {
      raise(ErrorCode::VerificationFailed, "gamma is not 1-unlinked");
    }
    return c;
  }

  int ArtinType::strands() const {
    int const min_rank = kind == Kind::TypeB ? 2 : 1;
    if (rank < min_rank) {
      raise(ErrorCode::IndexOutOfRange, "Artin type parameter out of range");
    }
    return kind == Kind::TypeB ? rank + 1 : rank + 2;
  }

  StrandSet ArtinType::pure_set() const {
    if (kind == Kind::AffineC) {
      return StrandSet{1, strands()};
    }
    return StrandSet{1};
  }

  std::string ArtinType::to_string() const {
    switch (kind) {
      case Kind::TypeB:
        return "TypeB(" + std::to_string(rank) + ")";
      case Kind::AffineA:
        return "AffineA(" + std::to_string(rank) + ")";
      case Kind::AffineC:
        return "AffineC(" + std::to_string(rank) + ")";
    }
    return "";
  }

  BraidWord artin_embed(ArtinType const& type, std::vector<int> const& letters) {
    if (type.kind != ArtinType::Kind::TypeB) {
      raise(ErrorCode::NotApplicable, "generator images are only implemented for type B");
    }
    int const        N = type.strands();
    std::vector<int> out;
    for (int g : letters) {
      int const a = g < 0 ? -g : g;
      if (g == 0 || a > type.rank) {
        raise(ErrorCode::IndexOutOfRange, "Artin generator index out of range");
      }
      out.push_back(g);
      if (a == 1) {
        out.push_back(g);
      }
    }
    return BraidWord(N, std::move(out));
  }

  bool artin_member(ArtinType const& type, BraidWord const& w) {
    if (w.strands() != type.strands()) {
      return false;
    }
    switch (type.kind) {
      case ArtinType::Kind::TypeB:
        return one_pure(w);
      case ArtinType::Kind::AffineA:
        return is_one_unlinked(w);
      case ArtinType::Kind::AffineC:
        return is_P_pure(w, type.pure_set());
    }
    return false;
  }

  ConjugacyCertificate artin_root_conjugate(ArtinType const&   type,
                                            BraidWord const&   alpha,
                                            BraidWord const&   beta,
                                            int64_t            k,
                                            RootOptions const& options) {
    if (!artin_member(type, alpha) || !artin_member(type, beta)) {
      raise(ErrorCode::NotMember, "input braid is not in " + type.to_string());
    }
    auto cert = root_conjugator(RootProblem{alpha, beta, type.pure_set(), k, std::nullopt}, options);
    if (!artin_member(type, cert.gamma)) {
      raise(ErrorCode::VerificationFailed, "conjugator is not in " + type.to_string());
    }
    return cert;
  }

}  // namespace braidroots
