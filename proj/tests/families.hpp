// Generated root-problem families shared by the unit tests and the
// acceptance binary.
#ifndef BRAIDROOTS_TESTS_FAMILIES_HPP_
#define BRAIDROOTS_TESTS_FAMILIES_HPP_

#include <random>

#include "braidroots/periodic.hpp"
#include "braidroots/roots.hpp"
#include "braidroots/tubular.hpp"
#include "oracles.hpp"

namespace family {

  using namespace braidroots;

  inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  }

  //! alpha = epsilon, beta = chi epsilon chi^{-1} with chi 1-pure,
  //! k = n - 1, P = {1}.
  inline RootProblem periodic(std::mt19937_64& rng, int n) {
    auto const chi = oracle::random_one_pure(rng, n, 6);
    auto const e   = epsilon_word(n);
    return {e, chi * e * chi.inverse(), StrandSet{1}, n - 1, std::nullopt};
  }

  //! Two blocks of size m swapped by the exterior, behind a singleton first
  //! block: alpha = <sigma_2>(1 + a + b), beta = <sigma_2>(1 + c + d) with
  //! c = z a, d = a^{-1} z^{-1} a b, z = (ab)^p. Then alpha^2 = beta^2.
  inline RootProblem swap(std::mt19937_64& rng, int m, int p) {
    Composition const n{1, m, m};
    auto const        a   = oracle::random_word(rng, m, uniform(rng, 1, 4));
    auto const        b   = oracle::random_word(rng, m, uniform(rng, 1, 4));
    auto const        z   = (a * b).pow(p);
    auto const        c   = z * a;
    auto const        d   = a.inverse() * z.inverse() * a * b;
    BraidWord const   ext(3, {2});
    auto const        one = BraidWord(1);
    auto const alpha = compose_decomposition({n, ext, {one, a, b}});
    auto const beta  = compose_decomposition({n, ext, {one, c, d}});
    return {alpha, beta, StrandSet{1}, 2, std::nullopt};
  }

  //! P = {1..n}: alpha pure, beta the normal-form word of alpha x x^{-1}.
  inline RootProblem pure(std::mt19937_64& rng, int n) {
    auto const alpha = oracle::random_pure(rng, n, uniform(rng, 1, 3));
    auto const x     = oracle::random_word(rng, n, uniform(rng, 1, 5));
    auto const beta  = normal_form(alpha * x * x.inverse()).to_word();
    return {alpha, beta, StrandSet::range(1, n), uniform(rng, 1, 3), std::nullopt};
  }

}  // namespace family

#endif  // BRAIDROOTS_TESTS_FAMILIES_HPP_
