#ifndef BRAIDROOTS_BRAID_WORD_HPP_
#define BRAIDROOTS_BRAID_WORD_HPP_

#include <cstdint>           // for int64_t
#include <initializer_list>  // for initializer_list
#include <span>              // for span
#include <string>            // for string
#include <vector>            // for vector

namespace braidroots {

  // Conventions used throughout the library.
  //
  // A word is read left to right, and the product ab is "the letters of a,
  // then the letters of b". Braids act on the punctured disk on the left,
  // so the rightmost letter acts first: strands are labelled by their
  // position at the right end of the word, and the induced permutation sends
  // that label to the strand's position at the left end. With this choice
  // pi_{ab} = pi_a o pi_b. Strand indices are 1-based everywhere.

  //! A permutation of {1, ..., n}.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int degree() const noexcept {
      return static_cast<int>(_images.size());
    }

    //! The image of \p i, 1-based.
    int operator()(int i) const {
      return _images[static_cast<size_t>(i - 1)];
    }

    std::vector<int> const& images() const noexcept {
      return _images;
    }

    Permutation inverse() const;
    bool        is_identity() const noexcept;

    //! Composition: (p * q)(i) = p(q(i)).
    friend Permutation operator*(Permutation const& p, Permutation const& q);

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  //! A subset of {1, ..., n}, kept sorted.
  class StrandSet {
   public:
    StrandSet() = default;
    StrandSet(std::initializer_list<int> members);
    explicit StrandSet(std::vector<int> members);

    //! {first, ..., last}; empty when last < first.
    static StrandSet range(int first, int last);

    bool contains(int i) const noexcept;
    bool empty() const noexcept {
      return _members.empty();
    }
    size_t size() const noexcept {
      return _members.size();
    }
    int min() const {
      return _members.front();
    }
    int max() const {
      return _members.back();
    }
    std::vector<int> const& members() const noexcept {
      return _members;
    }

    //! {p(i) : i in this set}.
    StrandSet image(Permutation const& p) const;

    friend bool operator==(StrandSet const&, StrandSet const&) = default;

   private:
    std::vector<int> _members;
  };

  //! An exact element of (1/2)Z.
  class HalfInteger {
   public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int64_t twice) noexcept {
      HalfInteger h;
      h._twice = twice;
      return h;
    }
    static constexpr HalfInteger from_integer(int64_t v) noexcept {
      return from_twice(2 * v);
    }

    constexpr int64_t twice_value() const noexcept {
      return _twice;
    }
    constexpr bool is_integer() const noexcept {
      return _twice % 2 == 0;
    }
    //! Only meaningful when is_integer().
    constexpr int64_t integer_value() const noexcept {
      return _twice / 2;
    }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
      return from_twice(a._twice + b._twice);
    }
    friend constexpr HalfInteger operator-(HalfInteger a) {
      return from_twice(-a._twice);
    }
    friend constexpr HalfInteger operator*(int64_t k, HalfInteger a) {
      return from_twice(k * a._twice);
    }
    HalfInteger& operator+=(HalfInteger b) {
      _twice += b._twice;
      return *this;
    }
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

    //! "3", "-1/2", ...
    std::string to_string() const;

   private:
    int64_t _twice = 0;
  };

  //! A braid given by a word in the Artin generators. Letter +j is sigma_j,
  //! letter -j its inverse. Values are immutable once built.
  class BraidWord {
   public:
    BraidWord() = default;
    //! Identity braid on \p strands strands.
    explicit BraidWord(int strands);
    //! Throws IndexOutOfRange unless every letter satisfies 1 <= |g| < n.
    BraidWord(int strands, std::vector<int> letters);
    BraidWord(int strands, std::initializer_list<int> letters);

    int strands() const noexcept {
      return _strands;
    }
    std::span<int const> letters() const noexcept {
      return _letters;
    }
    size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    //! Reverse and negate.
    BraidWord inverse() const;
    //! Repetition; negative exponents repeat the inverse.
    BraidWord pow(int64_t exponent) const;
    //! Cancels adjacent letters +j, -j until none remain. Never applied
    //! implicitly.
    BraidWord free_reduced() const;
    //! The image under sigma_j -> sigma_{j + offset} in B_{strands}.
    BraidWord shifted(int offset, int strands) const;

    //! Concatenation; throws StrandCountMismatch.
    friend BraidWord operator*(BraidWord const& a, BraidWord const& b);
    BraidWord&       operator*=(BraidWord const& b);

    //! Letter-level equality. Group equality lives in garside.hpp.
    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    int              _strands = 1;
    std::vector<int> _letters;
  };

  //! Product of several words on the same strand count.
  BraidWord product(std::initializer_list<BraidWord> words);

  //! sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
  BraidWord half_twist(int n);

  ////////////////////////////////////////////////////////////////////////
  // Strand tracing
  ////////////////////////////////////////////////////////////////////////

  Permutation induced_permutation(BraidWord const& w);

  //! pi_w fixes every member of P.
  bool is_P_pure(BraidWord const& w, StrandSet const& P);

  //! The braid formed by the strands whose right-end labels are in \p keep.
  //! Crossings between two kept strands survive, reindexed by rank; every
  //! other crossing disappears. Throws EmptyKeepSet.
  BraidWord delete_strands(BraidWord const& w, StrandSet const& keep);

  //! Linking number of the first strand with the others. Throws NotOnePure.
  int64_t lk(BraidWord const& w);

  //! Half the signed number of crossings between strand 1 and strand i.
  //! Throws NotOnePure, IndexOutOfRange.
  HalfInteger lk_i(BraidWord const& w, int i);

  //! lk_i for every i; entry 0 corresponds to i = 2.
  std::vector<HalfInteger> lk_all(BraidWord const& w);

  //! 1-pure with lk = 0.
  bool is_one_unlinked(BraidWord const& w);

}  // namespace braidroots

#endif  // BRAIDROOTS_BRAID_WORD_HPP_
