#ifndef BRAIDROOTS_TUBULAR_HPP_
#define BRAIDROOTS_TUBULAR_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "braid_word.hpp"

namespace braidroots {

  //! An ordered tuple (n_1, ..., n_r) of positive integers. It names the
  //! round-circle system that groups punctures into consecutive blocks of
  //! these sizes.
  class Composition {
   public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    //! r
    int size() const noexcept {
      return static_cast<int>(_parts.size());
    }
    //! n = n_1 + ... + n_r
    int total() const noexcept {
      return _total;
    }
    //! n_i, 1-based.
    int operator[](int i) const {
      return _parts[static_cast<size_t>(i - 1)];
    }
    std::vector<int> const& parts() const noexcept {
      return _parts;
    }
    //! n_1 + ... + n_{i-1}
    int offset(int i) const;
    //! The punctures of block i.
    StrandSet block(int i) const;
    //! The block containing puncture \p strand.
    int block_of(int strand) const;

    //! "(n_1,...,n_r)"
    std::string to_string() const;

    friend bool operator==(Composition const&, Composition const&) = default;
    friend auto operator<=>(Composition const&, Composition const&) = default;

   private:
    std::vector<int> _parts;
    int              _total = 0;
  };

  //! All compositions of \p n into at least 2 parts, at most n - 1 parts
  //! (so some part is at least 2), in lexicographic order.
  std::vector<Composition> essential_compositions(int n);

  //! p * n = (n_{p^{-1}(1)}, ..., n_{p^{-1}(r)}); throws DegreeMismatch.
  Composition act_on_composition(Permutation const& p, Composition const& n);

  //! The n-braid made of n_i parallel copies of strand i of \p a0. The
  //! composition describes the block sizes at the right end of the word.
  BraidWord cable(BraidWord const& a0, Composition const& n);

  //! Each interior placed on its own block; throws ShapeMismatch.
  BraidWord block_sum(std::vector<BraidWord> const& interiors, Composition const& n);

  struct Decomposition {
    Composition            composition;
    BraidWord              exterior;
    std::vector<BraidWord> interiors;

    //! Throws ShapeMismatch unless strand counts fit the composition.
    void validate() const;
  };

  //! cable(exterior) * block_sum(interiors).
  BraidWord compose_decomposition(Decomposition const& d);

  //! Recovers the unique decomposition of \p w over \p n, or throws
  //! NotStandardlyReduced if none exists.
  Decomposition extract(BraidWord const& w, Composition const& n);

  //! As extract, returning false instead of throwing.
  bool try_extract(BraidWord const& w, Composition const& n, Decomposition& out);

  //! Essential compositions n for which w carries the block system of n
  //! to itself.
  std::vector<Composition> find_preserved_compositions(BraidWord const& w);

  //! For i >= 1 the members of P in block i, renumbered within the block.
  //! For i = 0 the blocks that meet P.
  StrandSet block_strand_set(StrandSet const& P, Composition const& n, int i);

  //! A composition together with a standardizer zeta that carries the
  //! braid's exterior reduction system to the standard one.
  struct ReductionHint {
    Composition composition;
    BraidWord   standardizer;
  };

}  // namespace braidroots

#endif  // BRAIDROOTS_TUBULAR_HPP_
