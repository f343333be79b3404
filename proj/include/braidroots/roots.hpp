#ifndef BRAIDROOTS_ROOTS_HPP_
#define BRAIDROOTS_ROOTS_HPP_

#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "braid_word.hpp"
#include "garside.hpp"
#include "tubular.hpp"

namespace braidroots {

  //! Find gamma with gamma alpha gamma^{-1} = beta, given alpha^k = beta^k
  //! and both braids P-pure.
  struct RootProblem {
    BraidWord                    alpha;
    BraidWord                    beta;
    StrandSet                    P;
    int64_t                      k = 1;
    std::optional<ReductionHint> hint;
  };

  struct CertificateFlags {
    bool conjugates   = false;
    bool P_straight   = false;
    bool one_unlinked = false;
  };

  struct ConjugacyCertificate {
    BraidWord        gamma;
    CertificateFlags checked;
    //! lk(gamma) when gamma is 1-pure, else 0.
    int64_t lk_value = 0;
    //! Which construction produced gamma at the top level.
    std::string route;
  };

  //! Counts of the internal identities checked while solving.
  struct RootStats {
    int64_t cycle_identity_checks     = 0;
    int64_t commutant_identity_checks = 0;
    int64_t power_checks              = 0;
    int64_t recursive_calls           = 0;
  };

  struct RootOptions {
    int        depth        = kDefaultSearchDepth;
    bool       debug_checks = true;
    RootStats* stats        = nullptr;
  };

  enum class TransportMode { Conjugate, Absorb };

  //! Conjugate: chi^{-1} inner chi, where inner solves the problem moved by
  //! chi. Absorb: chi^{-1} inner, where inner solves (alpha, chi beta
  //! chi^{-1}). Throws HypothesisViolated if the result does not conjugate
  //! alpha to beta, or, when 1 is in P, is not P-straight and 1-unlinked.
  BraidWord transport_by_chi(BraidWord const&   chi,
                             RootProblem const& problem,
                             BraidWord const&   inner_gamma,
                             TransportMode      mode);

  //! The case where alpha is periodic, or alpha = beta.
  ConjugacyCertificate irred_root_conjugator(RootProblem const& problem,
                                             RootOptions const& options = {});

  //! The case where alpha and beta carry the block system of n to itself
  //! with equal exteriors. Requires 1 in P.
  ConjugacyCertificate same_ext_root_conjugator(RootProblem const& problem,
                                                Composition const& n,
                                                RootOptions const& options = {});

  //! A P-straight braid commuting with alpha with lk = n_i, for alpha whose
  //! exterior over n is periodic and non-central.
  BraidWord per_ext_commutant(BraidWord const&   alpha,
                              Composition const& n,
                              StrandSet const&   P,
                              int                i,
                              RootOptions const& options = {});

  //! A P-straight braid commuting with alpha with lk = -lk(chi).
  BraidWord per_ext_balance(BraidWord const&     alpha,
                            Composition const&   n,
                            StrandSet const&     P,
                            Decomposition const& chi,
                            RootOptions const&   options = {});

  //! The full recursion. With P empty only conjugation is certified.
  ConjugacyCertificate root_conjugator(RootProblem const& problem,
                                       RootOptions const& options = {});

  //! Re-verifies gamma against the problem and fills in the flags. Throws
  //! VerificationFailed when a required property fails.
  ConjugacyCertificate certify(RootProblem const& problem,
                               BraidWord const&   gamma,
                               std::string        route);

  ////////////////////////////////////////////////////////////////////////
  // Artin groups realised inside braid groups
  ////////////////////////////////////////////////////////////////////////

  struct ArtinType {
    enum class Kind { TypeB, AffineA, AffineC };
    Kind kind = Kind::TypeB;
    //! The subscript: n for TypeB(n), n - 1 for the affine types.
    int rank = 2;

    //! TypeB(n) and both affine types of subscript n - 1 live in B_{n+1}.
    int strands() const;
    //! {1} for TypeB and AffineA, {1, n+1} for AffineC.
    StrandSet pure_set() const;
    std::string to_string() const;
  };

  //! TypeB only: s_1 -> sigma_1^2, s_i -> sigma_i for i >= 2. Letters are
  //! signed 1-based generator indices.
  BraidWord artin_embed(ArtinType const& type, std::vector<int> const& letters);

  bool artin_member(ArtinType const& type, BraidWord const& w);

  //! Runs root_conjugator with the type's pure set and checks the
  //! conjugator's membership. Throws NotMember for inputs outside the group.
  ConjugacyCertificate artin_root_conjugate(ArtinType const&   type,
                                            BraidWord const&   alpha,
                                            BraidWord const&   beta,
                                            int64_t            k,
                                            RootOptions const& options = {});

}  // namespace braidroots

#endif  // BRAIDROOTS_ROOTS_HPP_
