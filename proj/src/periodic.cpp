#include "braidroots/periodic.hpp"

#include <numeric>  // for gcd
#include <tuple>    // for tie

#include "braidroots/error.hpp"

namespace braidroots {

  BraidWord delta_word(int n) {
    std::vector<int> letters;
    for (int i = n - 1; i >= 1; --i) {
      letters.push_back(i);
    }
    return BraidWord(n, std::move(letters));
  }

  BraidWord epsilon_word(int n) {
    if (n < 2) {
      return BraidWord(n);
    }
    return delta_word(n) * BraidWord(n, {1});
  }

  BraidWord mu_factor(int r, int s, int j) {
    if (s < 2 || r < 3 || (r - 1) % s != 0) {
      raise(ErrorCode::IndexOutOfRange, "mu needs s >= 2 and r = d s + 1");
    }
    int const d = (r - 1) / s;
    if (j < 1 || j > d) {
      raise(ErrorCode::IndexOutOfRange, "mu_{s,j} needs 1 <= j <= d");
    }
    std::vector<int> letters;
    for (int i = j * s; i >= 1; --i) {
      letters.push_back(i);
    }
    for (int i = 1; i <= (j - 1) * s + 1; ++i) {
      letters.push_back(i);
    }
    return BraidWord(r, std::move(letters));
  }

  BraidWord mu_word(int r, int s) {
    BraidWord result(r);
    int const d = s >= 2 ? (r - 1) / s : 0;
    for (int j = 1; j <= d; ++j) {
      result *= mu_factor(r, s, j);
    }
    if (d == 0) {
      raise(ErrorCode::IndexOutOfRange, "mu needs s >= 2 and r = d s + 1");
    }
    return result;
  }

  int bracket(int s, int k, int l) {
    int const lm = ((l - 1) % s + s) % s + 1;
    return (k - 1) * s + lm + 1;
  }

  std::string PeriodicKind::to_string() const {
    switch (tag) {
      case Tag::DeltaType:
        return "DeltaType(" + std::to_string(m) + ")";
      case Tag::EpsilonType:
        return "EpsilonType(" + std::to_string(m) + ")";
      case Tag::Central:
        return "Central(" + std::to_string(m) + ")";
      case Tag::NotPeriodic:
        return "NotPeriodic";
    }
    return "NotPeriodic";
  }

  PeriodicKind classify_periodic(BraidWord const& w) {
    using Tag   = PeriodicKind::Tag;
    int const n = w.strands();
    if (n <= 2) {
      auto const c = centrality(w);
      if (c.delta_power % 2 == 0) {
        return {Tag::Central, c.delta_power / 2};
      }
      return {Tag::DeltaType, c.delta_power};
    }
    if (!is_periodic(w)) {
      return {Tag::NotPeriodic, 0};
    }
    if (auto m = centrality(w).full_twist_power()) {
      return {Tag::Central, *m};
    }
    auto const pi    = induced_permutation(w);
    int        fixed = 0;
    for (int i = 1; i <= n; ++i) {
      fixed += pi(i) == i;
    }
    if (fixed == 0) {
      if (auto m = centrality(w.pow(n)).full_twist_power()) {
        return {Tag::DeltaType, *m};
      }
    } else if (fixed == 1) {
      if (auto m = centrality(w.pow(n - 1)).full_twist_power()) {
        return {Tag::EpsilonType, *m};
      }
    }
    raise(ErrorCode::InternalIdentityViolated,
          "periodic braid fits neither the delta nor the epsilon pattern");
  }

  int64_t eps_exponent(BraidWord const& w) {
    if (induced_permutation(w)(1) != 1) {
      raise(ErrorCode::NotOnePure, "the first strand is not pure");
    }
    if (!is_periodic(w)) {
      raise(ErrorCode::NotPeriodic, "no power of the braid is central");
    }
    return lk(w);
  }

  EpsConjugator conjugator_to_eps_power(BraidWord const& w, int depth) {
    int64_t const m      = eps_exponent(w);
    int const     n      = w.strands();
    auto const    target = epsilon_word(n).pow(m);
    if (is_central(w)) {
      // Delta^{2c} = epsilon^{(n-1)c} exactly.
      return {BraidWord(n), m};
    }
    auto const g1 = conjugacy_search(w, target, depth);
    if (induced_permutation(g1)(1) != 1) {
      raise(ErrorCode::InternalIdentityViolated, "conjugator onto epsilon^m is not 1-pure");
    }
    // epsilon commutes with epsilon^m and has lk 1, so this cancels lk(g1).
    auto const gamma = epsilon_word(n).pow(-lk(g1)) * g1;
    if (lk(gamma) != 0 || !equals(gamma * w * gamma.inverse(), target)) {
      raise(ErrorCode::InternalIdentityViolated, "epsilon normalisation failed");
    }
    return {gamma, m};
  }

  std::pair<int64_t, int64_t> euclid_pair(int64_t t, int64_t s) {
    if (s < 1 || std::gcd(t, s) != 1) {
      raise(ErrorCode::IndexOutOfRange, "euclid_pair needs coprime t and s >= 1");
    }
    int64_t const tm = ((t % s) + s) % s;
    for (int64_t a = 1; a <= s; ++a) {
      if ((a * tm) % s == 1 % s) {
        return {a, (1 - a * t) / s};
      }
    }
    raise(ErrorCode::InternalIdentityViolated, "no inverse found");
  }

  MuStandardization mu_standardize(BraidWord const& a0, int depth) {
    int const r = a0.strands();
    if (induced_permutation(a0)(1) != 1) {
      raise(ErrorCode::NotOnePure, "the first strand is not pure");
    }
    if (is_central(a0)) {
      raise(ErrorCode::CentralInput, "mu standardisation needs a non-central braid");
    }
    int64_t const m = eps_exponent(a0);
    MuShape       shape;
    shape.r = r;
    shape.m = m;
    shape.d = static_cast<int>(std::gcd(m, static_cast<int64_t>(r - 1)));
    shape.t = m / shape.d;
    shape.s = (r - 1) / shape.d;
    std::tie(shape.a, shape.b) = euclid_pair(shape.t, shape.s);
    auto const target = mu_word(r, shape.s).pow(shape.t);
    auto const zeta0  = conjugacy_search(a0, target, depth);
    if (induced_permutation(zeta0)(1) != 1) {
      raise(ErrorCode::InternalIdentityViolated, "mu standardiser is not 1-pure");
    }
    return {zeta0, shape};
  }

}  // namespace braidroots
