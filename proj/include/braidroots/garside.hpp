#ifndef BRAIDROOTS_GARSIDE_HPP_
#define BRAIDROOTS_GARSIDE_HPP_

#include <cstdint>     // for int64_t, uint8_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "braid_word.hpp"

namespace braidroots {

  //! A positive braid in which any two strands cross at most once, stored as
  //! the permutation it induces. Internally the permutation is kept in
  //! reading order: images()[i] is the right-end position (0-based) of the
  //! strand that enters at left-end position i.
  class PermutationBraid {
   public:
    PermutationBraid() = default;

    static PermutationBraid identity(int n);
    static PermutationBraid half_twist(int n);
    //! sigma_j, 1 <= j < n.
    static PermutationBraid generator(int n, int j);
    //! Delta sigma_j^{-1}.
    static PermutationBraid delta_over_generator(int n, int j);
    //! The simple element with the given induced permutation.
    static PermutationBraid from_induced(Permutation const& p);

    int strands() const noexcept {
      return static_cast<int>(_images.size());
    }
    bool is_identity() const noexcept;
    bool is_half_twist() const noexcept;

    //! The permutation in the library-wide convention of induced_permutation.
    Permutation induced() const;
    //! A positive word for this element.
    BraidWord word() const;

    //! j (1-based) such that this = sigma_j * x with x positive.
    std::vector<int> starting_set() const;
    //! j (1-based) such that this = x * sigma_j with x positive.
    std::vector<int> finishing_set() const;

    //! Delta^{-1} x Delta.
    PermutationBraid flipped() const;

    std::vector<uint8_t> const& images() const noexcept {
      return _images;
    }

    friend bool operator==(PermutationBraid const&, PermutationBraid const&) = default;

   private:
    friend bool make_left_weighted(PermutationBraid& a, PermutationBraid& b);
    std::vector<uint8_t> _images;
  };

  //! Rewrites the pair so that a * b is unchanged and (a, b) is
  //! left-weighted. Returns true if anything moved.
  bool make_left_weighted(PermutationBraid& a, PermutationBraid& b);

  //! Left canonical form Delta^p x_1 ... x_l.
  class NormalForm {
   public:
    NormalForm() = default;
    NormalForm(int strands, int64_t infimum, std::vector<PermutationBraid> factors)
        : _strands(strands), _infimum(infimum), _factors(std::move(factors)) {}

    int strands() const noexcept {
      return _strands;
    }
    int64_t infimum() const noexcept {
      return _infimum;
    }
    int64_t supremum() const noexcept {
      return _infimum + static_cast<int64_t>(_factors.size());
    }
    std::vector<PermutationBraid> const& factors() const noexcept {
      return _factors;
    }
    bool is_identity() const noexcept {
      return _infimum == 0 && _factors.empty();
    }

    //! No factor is trivial or Delta, and adjacent factors are left-weighted.
    bool is_left_weighted() const;

    BraidWord to_word() const;

    //! "D^p | f1 | f2 | ...", each factor as its induced image list.
    std::string to_string() const;

    //! A compact byte string; equal keys iff equal braids.
    std::string key() const;

    friend bool operator==(NormalForm const&, NormalForm const&) = default;

   private:
    int                           _strands = 1;
    int64_t                       _infimum = 0;
    std::vector<PermutationBraid> _factors;
  };

  NormalForm normal_form(BraidWord const& w);

  //! Group-element equality; throws StrandCountMismatch.
  bool equals(BraidWord const& a, BraidWord const& b);

  //! A positive permutation braid inducing \p p.
  BraidWord permutation_braid_word(Permutation const& p);

  enum class CentralityKind { Trivial, Central, NotCentral };

  struct Centrality {
    CentralityKind kind = CentralityKind::Trivial;
    //! The exponent p with w = Delta^p, when central.
    int64_t delta_power = 0;

    //! m with w = Delta^{2m}; only when kind != NotCentral and p is even.
    std::optional<int64_t> full_twist_power() const {
      if (kind == CentralityKind::NotCentral || delta_power % 2 != 0) {
        return std::nullopt;
      }
      return delta_power / 2;
    }
    std::string to_string() const;
  };

  // B_2 is abelian: every element is reported central there, and odd powers
  // of Delta_(2) = sigma_1 carry an odd delta_power.
  Centrality centrality(BraidWord const& w);
  bool       is_central(BraidWord const& w);

  //! Some power is central; tested on w^n and w^{n-1}.
  bool is_periodic(BraidWord const& w);

  //! P-pure, and trivial once every strand outside P is deleted.
  bool is_P_straight(BraidWord const& w, StrandSet const& P);

  constexpr int kDefaultSearchDepth = 8;

  using ConjugatorFilter = std::function<bool(BraidWord const&)>;

  //! Bounded search for g with g a g^{-1} = b, conjugating by one generator
  //! at a time. Meets in the middle: frontiers grow from a and from b, states
  //! are deduplicated by normal form, and \p depth bounds the total number of
  //! generator steps. Children are generated in the fixed order
  //! sigma_1, sigma_1^{-1}, sigma_2, ... so the result is deterministic.
  //! When \p accept is set, candidates it rejects are skipped.
  std::optional<BraidWord> try_conjugacy_search(BraidWord const&        a,
                                                BraidWord const&        b,
                                                int                     depth,
                                                ConjugatorFilter const& accept = {});

  //! As try_conjugacy_search, throwing BoundExceeded on failure. A failure
  //! is inconclusive, not a proof that a and b are not conjugate.
  BraidWord conjugacy_search(BraidWord const&        a,
                             BraidWord const&        b,
                             int                     depth = kDefaultSearchDepth,
                             ConjugatorFilter const& accept = {});

}  // namespace braidroots

#endif  // BRAIDROOTS_GARSIDE_HPP_
