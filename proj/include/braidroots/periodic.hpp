#ifndef BRAIDROOTS_PERIODIC_HPP_
#define BRAIDROOTS_PERIODIC_HPP_

#include <cstdint>  // for int64_t
#include <string>   // for string
#include <utility>  // for pair

#include "braid_word.hpp"
#include "garside.hpp"

namespace braidroots {

  //! delta = sigma_{n-1} ... sigma_1
  BraidWord delta_word(int n);
  //! epsilon = delta sigma_1
  BraidWord epsilon_word(int n);
  //! mu_{s,j} on r = d s + 1 strands, 1 <= j <= d.
  BraidWord mu_factor(int r, int s, int j);
  //! mu_s = mu_{s,1} ... mu_{s,d}
  BraidWord mu_word(int r, int s);

  //! The block index [k, l] = (k - 1) s + l + 1 with l read modulo s, so
  //! l = 0 means l = s.
  int bracket(int s, int k, int l);

  struct PeriodicKind {
    enum class Tag { DeltaType, EpsilonType, Central, NotPeriodic };
    Tag     tag = Tag::NotPeriodic;
    int64_t m   = 0;

    std::string to_string() const;
    friend bool operator==(PeriodicKind const&, PeriodicKind const&) = default;
  };

  //! Which of delta^m, epsilon^m, Delta^{2m} the braid is conjugate to. In
  //! B_2 every odd power of sigma_1 is reported as DeltaType.
  PeriodicKind classify_periodic(BraidWord const& w);

  //! The m with w conjugate to epsilon^m, for 1-pure periodic w.
  int64_t eps_exponent(BraidWord const& w);

  struct EpsConjugator {
    BraidWord gamma;
    int64_t   m;
  };

  //! A 1-unlinked gamma with gamma w gamma^{-1} = epsilon^m.
  EpsConjugator conjugator_to_eps_power(BraidWord const& w, int depth = kDefaultSearchDepth);

  //! Integers with r = d s + 1, m = d t, gcd(s, t) = 1, and the pair
  //! a > 0, b with a t + b s = 1.
  struct MuShape {
    int     r = 0, s = 0, d = 0;
    int64_t t = 0, m = 0;
    int64_t a = 0, b = 0;
  };

  //! Smallest a > 0 with a t = 1 mod s, and b = (1 - a t) / s.
  std::pair<int64_t, int64_t> euclid_pair(int64_t t, int64_t s);

  struct MuStandardization {
    BraidWord zeta0;
    MuShape   shape;
  };

  //! A 1-pure zeta0 with zeta0 a0 zeta0^{-1} = mu_s^t. Throws CentralInput,
  //! NotPeriodic, NotOnePure or BoundExceeded.
  MuStandardization mu_standardize(BraidWord const& a0, int depth = kDefaultSearchDepth);

}  // namespace braidroots

#endif  // BRAIDROOTS_PERIODIC_HPP_
