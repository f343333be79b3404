#include "braidroots/braid_word.hpp"

#include <algorithm>  // for sort, unique, reverse
#include <cstdlib>    // for abs
#include <numeric>    // for iota

#include "braidroots/error.hpp"

namespace braidroots {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    int const        n = degree();
    std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : _images) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)]++ != 0) {
        raise(ErrorCode::IndexOutOfRange, "images do not form a permutation");
      }
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(_images.size());
    for (size_t i = 0; i < _images.size(); ++i) {
      inv[static_cast<size_t>(_images[i] - 1)] = static_cast<int>(i) + 1;
    }
    Permutation result;
    result._images = std::move(inv);
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    for (size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != static_cast<int>(i) + 1) {
        return false;
      }
    }
    return true;
  }

  Permutation operator*(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      raise(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    }
    Permutation result;
    result._images.resize(q._images.size());
    for (size_t i = 0; i < q._images.size(); ++i) {
      result._images[i] = p(q._images[i]);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // StrandSet
  ////////////////////////////////////////////////////////////////////////

  StrandSet::StrandSet(std::initializer_list<int> members)
      : StrandSet(std::vector<int>(members)) {}

  StrandSet::StrandSet(std::vector<int> members) : _members(std::move(members)) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    if (!_members.empty() && _members.front() < 1) {
      raise(ErrorCode::IndexOutOfRange, "strand indices are 1-based");
    }
  }

  StrandSet StrandSet::range(int first, int last) {
    std::vector<int> m;
    for (int i = first; i <= last; ++i) {
      m.push_back(i);
    }
    return StrandSet(std::move(m));
  }

  bool StrandSet::contains(int i) const noexcept {
    return std::binary_search(_members.begin(), _members.end(), i);
  }

  StrandSet StrandSet::image(Permutation const& p) const {
    std::vector<int> m;
    m.reserve(_members.size());
    for (int i : _members) {
      if (i > p.degree()) {
        raise(ErrorCode::IndexOutOfRange, "strand set exceeds permutation degree");
      }
      m.push_back(p(i));
    }
    return StrandSet(std::move(m));
  }

  std::string HalfInteger::to_string() const {
    if (is_integer()) {
      return std::to_string(_twice / 2);
    }
    return std::to_string(_twice) + "/2";
  }

  ////////////////////////////////////////////////////////////////////////
  // BraidWord
  ////////////////////////////////////////////////////////////////////////

  BraidWord::BraidWord(int strands) : _strands(strands) {
    if (strands < 1) {
      raise(ErrorCode::IndexOutOfRange, "a braid needs at least one strand");
    }
  }

  BraidWord::BraidWord(int strands, std::vector<int> letters)
      : _strands(strands), _letters(std::move(letters)) {
    if (strands < 1) {
      raise(ErrorCode::IndexOutOfRange, "a braid needs at least one strand");
    }
    for (int g : _letters) {
      if (g == 0 || std::abs(g) >= strands) {
        raise(ErrorCode::IndexOutOfRange,
              "letter " + std::to_string(g) + " out of range for "
                  + std::to_string(strands) + " strands");
      }
    }
  }

  BraidWord::BraidWord(int strands, std::initializer_list<int> letters)
      : BraidWord(strands, std::vector<int>(letters)) {}

  BraidWord BraidWord::inverse() const {
    BraidWord result(*this);
    std::reverse(result._letters.begin(), result._letters.end());
    for (int& g : result._letters) {
      g = -g;
    }
    return result;
  }

  BraidWord BraidWord::pow(int64_t exponent) const {
    BraidWord const base = exponent < 0 ? inverse() : *this;
    uint64_t const  times = exponent < 0 ? -static_cast<uint64_t>(exponent)
                                         : static_cast<uint64_t>(exponent);
    BraidWord result(_strands);
    result._letters.reserve(base._letters.size() * times);
    for (uint64_t t = 0; t < times; ++t) {
      result._letters.insert(result._letters.end(), base._letters.begin(), base._letters.end());
    }
    return result;
  }

  BraidWord BraidWord::free_reduced() const {
    BraidWord result(_strands);
    for (int g : _letters) {
      if (!result._letters.empty() && result._letters.back() == -g) {
        result._letters.pop_back();
      } else {
        result._letters.push_back(g);
      }
    }
    return result;
  }

  BraidWord BraidWord::shifted(int offset, int strands) const {
    if (offset < 0 || offset + _strands > strands) {
      raise(ErrorCode::IndexOutOfRange, "shifted word does not fit");
    }
    BraidWord result(strands);
    result._letters.reserve(_letters.size());
    for (int g : _letters) {
      result._letters.push_back(g > 0 ? g + offset : g - offset);
    }
    return result;
  }

  BraidWord& BraidWord::operator*=(BraidWord const& b) {
    if (_strands != b._strands) {
      raise(ErrorCode::StrandCountMismatch,
            std::to_string(_strands) + " vs " + std::to_string(b._strands) + " strands");
    }
    _letters.insert(_letters.end(), b._letters.begin(), b._letters.end());
    return *this;
  }

  BraidWord operator*(BraidWord const& a, BraidWord const& b) {
    BraidWord result(a);
    result *= b;
    return result;
  }

  BraidWord product(std::initializer_list<BraidWord> words) {
    if (words.size() == 0) {
      raise(ErrorCode::ShapeMismatch, "empty product has no strand count");
    }
    BraidWord result(words.begin()->strands());
    for (auto const& w : words) {
      result *= w;
    }
    return result;
  }

  BraidWord half_twist(int n) {
    std::vector<int> letters;
    for (int i = 1; i < n; ++i) {
      for (int j = i; j >= 1; --j) {
        letters.push_back(j);
      }
    }
    return BraidWord(n, std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Strand tracing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Walks the word from its right end. at[p] is the label (right-end
    // position) of the strand currently at position p + 1. The visitor sees
    // each letter together with the labels of the two strands it crosses.
    template <typename Visitor>
    std::vector<int> trace(BraidWord const& w, Visitor&& visit) {
      std::vector<int> at(static_cast<size_t>(w.strands()));
      std::iota(at.begin(), at.end(), 1);
      auto const letters = w.letters();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        size_t const j = static_cast<size_t>(std::abs(*it));
        visit(*it, at[j - 1], at[j]);
        std::swap(at[j - 1], at[j]);
      }
      return at;
    }

    void require_one_pure(BraidWord const& w) {
      if (induced_permutation(w)(1) != 1) {
        raise(ErrorCode::NotOnePure, "the first strand is not pure");
      }
    }
  }  // namespace

  Permutation induced_permutation(BraidWord const& w) {
    auto const       at = trace(w, [](int, int, int) {});
    std::vector<int> images(at.size());
    for (size_t p = 0; p < at.size(); ++p) {
      images[static_cast<size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
    }
    return Permutation(std::move(images));
  }

  bool is_P_pure(BraidWord const& w, StrandSet const& P) {
    if (!P.empty() && P.max() > w.strands()) {
      raise(ErrorCode::IndexOutOfRange, "strand set exceeds the strand count");
    }
    auto const pi = induced_permutation(w);
    for (int i : P.members()) {
      if (pi(i) != i) {
        return false;
      }
    }
    return true;
  }

  BraidWord delete_strands(BraidWord const& w, StrandSet const& keep) {
    if (keep.empty()) {
      raise(ErrorCode::EmptyKeepSet, "nothing to keep");
    }
    if (keep.max() > w.strands()) {
      raise(ErrorCode::IndexOutOfRange, "keep set exceeds the strand count");
    }
    std::vector<int>  kept;
    std::vector<char> is_kept(static_cast<size_t>(w.strands()) + 1, 0);
    for (int i : keep.members()) {
      is_kept[static_cast<size_t>(i)] = 1;
    }
    std::vector<int> at(static_cast<size_t>(w.strands()));
    std::iota(at.begin(), at.end(), 1);
    // rank_before[p] = number of kept strands at positions < p (0-based p).
    // A crossing of two kept strands at positions j, j+1 does not change
    // the rank of j, and any other crossing changes it only for position j,
    // so a running array suffices.
    std::vector<int> rank_before(at.size() + 1, 0);
    for (size_t p = 0; p < at.size(); ++p) {
      rank_before[p + 1] = rank_before[p] + is_kept[static_cast<size_t>(at[p])];
    }
    auto const letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      size_t const j = static_cast<size_t>(std::abs(*it));
      int const    u = at[j - 1];
      int const    v = at[j];
      if (is_kept[static_cast<size_t>(u)] && is_kept[static_cast<size_t>(v)]) {
        int const rank = rank_before[j - 1] + 1;
        kept.push_back(*it > 0 ? rank : -rank);
      }
      std::swap(at[j - 1], at[j]);
      rank_before[j] = rank_before[j - 1] + is_kept[static_cast<size_t>(at[j - 1])];
    }
    std::reverse(kept.begin(), kept.end());
    return BraidWord(static_cast<int>(keep.size()), std::move(kept));
  }

  int64_t lk(BraidWord const& w) {
    require_one_pure(w);
    int64_t twice = 0;
    trace(w, [&twice](int g, int u, int v) {
      if (u == 1 || v == 1) {
        twice += g > 0 ? 1 : -1;
      }
    });
    // The first strand is pure, so its total crossing count is even.
    return twice / 2;
  }

  HalfInteger lk_i(BraidWord const& w, int i) {
    if (i < 2 || i > w.strands()) {
      raise(ErrorCode::IndexOutOfRange, "lk_i needs 2 <= i <= n");
    }
    require_one_pure(w);
    int64_t twice = 0;
    trace(w, [&twice, i](int g, int u, int v) {
      if ((u == 1 && v == i) || (u == i && v == 1)) {
        twice += g > 0 ? 1 : -1;
      }
    });
    return HalfInteger::from_twice(twice);
  }

  std::vector<HalfInteger> lk_all(BraidWord const& w) {
    require_one_pure(w);
    std::vector<int64_t> twice(static_cast<size_t>(w.strands()) + 1, 0);
    trace(w, [&twice](int g, int u, int v) {
      if (u == 1 || v == 1) {
        twice[static_cast<size_t>(u == 1 ? v : u)] += g > 0 ? 1 : -1;
      }
    });
    std::vector<HalfInteger> result;
    for (size_t i = 2; i < twice.size(); ++i) {
      result.push_back(HalfInteger::from_twice(twice[i]));
    }
    return result;
  }

  bool is_one_unlinked(BraidWord const& w) {
    return induced_permutation(w)(1) == 1 && lk(w) == 0;
  }

}  // namespace braidroots
