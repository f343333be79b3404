#include "braidroots/garside.hpp"

#include <algorithm>      // for reverse
#include <cstdlib>        // for abs
#include <deque>          // for deque
#include <unordered_map>  // for unordered_map

#include "braidroots/error.hpp"

namespace braidroots {

  ////////////////////////////////////////////////////////////////////////
  // PermutationBraid
  ////////////////////////////////////////////////////////////////////////

  PermutationBraid PermutationBraid::identity(int n) {
    PermutationBraid result;
    result._images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      result._images[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    }
    return result;
  }

  PermutationBraid PermutationBraid::half_twist(int n) {
    PermutationBraid result;
    result._images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      result._images[static_cast<size_t>(i)] = static_cast<uint8_t>(n - 1 - i);
    }
    return result;
  }

  PermutationBraid PermutationBraid::generator(int n, int j) {
    auto result = identity(n);
    std::swap(result._images[static_cast<size_t>(j - 1)], result._images[static_cast<size_t>(j)]);
    return result;
  }

  PermutationBraid PermutationBraid::from_induced(Permutation const& p) {
    // induced(e) is the left-end position of the strand leaving at e, so the
    // reading-order permutation is its inverse.
    PermutationBraid result;
    result._images.resize(static_cast<size_t>(p.degree()));
    for (int e = 1; e <= p.degree(); ++e) {
      result._images[static_cast<size_t>(p(e) - 1)] = static_cast<uint8_t>(e - 1);
    }
    return result;
  }

  PermutationBraid PermutationBraid::delta_over_generator(int n, int j) {
    // x sigma_j = Delta, so x[i] = s_j(Delta[i]) in reading order.
    auto result = half_twist(n);
    for (auto& v : result._images) {
      if (v == j - 1) {
        v = static_cast<uint8_t>(j);
      } else if (v == j) {
        v = static_cast<uint8_t>(j - 1);
      }
    }
    return result;
  }

  bool PermutationBraid::is_identity() const noexcept {
    for (size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool PermutationBraid::is_half_twist() const noexcept {
    size_t const n = _images.size();
    for (size_t i = 0; i < n; ++i) {
      if (_images[i] != n - 1 - i) {
        return false;
      }
    }
    return true;
  }

  Permutation PermutationBraid::induced() const {
    std::vector<int> images(_images.size());
    for (size_t i = 0; i < _images.size(); ++i) {
      images[_images[i]] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(images));
  }

  BraidWord PermutationBraid::word() const {
    std::vector<uint8_t> a = _images;
    std::vector<int>     letters;
    // Peel off sigma_j from the left while strands entering at j, j+1 cross.
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t j = 0; j + 1 < a.size(); ++j) {
        if (a[j] > a[j + 1]) {
          letters.push_back(static_cast<int>(j) + 1);
          std::swap(a[j], a[j + 1]);
          progress = true;
        }
      }
    }
    return BraidWord(strands(), std::move(letters));
  }

  std::vector<int> PermutationBraid::starting_set() const {
    std::vector<int> result;
    for (size_t j = 0; j + 1 < _images.size(); ++j) {
      if (_images[j] > _images[j + 1]) {
        result.push_back(static_cast<int>(j) + 1);
      }
    }
    return result;
  }

  std::vector<int> PermutationBraid::finishing_set() const {
    std::vector<uint8_t> inv(_images.size());
    for (size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = static_cast<uint8_t>(i);
    }
    std::vector<int> result;
    for (size_t j = 0; j + 1 < inv.size(); ++j) {
      if (inv[j] > inv[j + 1]) {
        result.push_back(static_cast<int>(j) + 1);
      }
    }
    return result;
  }

  PermutationBraid PermutationBraid::flipped() const {
    size_t const     n = _images.size();
    PermutationBraid result;
    result._images.resize(n);
    for (size_t i = 0; i < n; ++i) {
      result._images[i] = static_cast<uint8_t>(n - 1 - _images[n - 1 - i]);
    }
    return result;
  }

  bool make_left_weighted(PermutationBraid& a, PermutationBraid& b) {
    auto&        ai = a._images;
    auto&        bi = b._images;
    size_t const n  = ai.size();
    // a_inv[p] is the entry position of the strand leaving a at p.
    uint8_t a_inv[256];
    for (size_t i = 0; i < n; ++i) {
      a_inv[ai[i]] = static_cast<uint8_t>(i);
    }
    bool changed = false;
    for (size_t j = 0; j + 1 < n;) {
      // sigma_j starts b but does not finish a: move it across.
      if (bi[j] > bi[j + 1] && a_inv[j] < a_inv[j + 1]) {
        ai[a_inv[j]]     = static_cast<uint8_t>(j + 1);
        ai[a_inv[j + 1]] = static_cast<uint8_t>(j);
        std::swap(a_inv[j], a_inv[j + 1]);
        std::swap(bi[j], bi[j + 1]);
        changed = true;
        j       = j == 0 ? 0 : j - 1;
      } else {
        ++j;
      }
    }
    return changed;
  }

  ////////////////////////////////////////////////////////////////////////
  // NormalForm
  ////////////////////////////////////////////////////////////////////////

  bool NormalForm::is_left_weighted() const {
    for (size_t k = 0; k < _factors.size(); ++k) {
      if (_factors[k].is_identity() || _factors[k].is_half_twist()) {
        return false;
      }
      if (k + 1 < _factors.size()) {
        auto a = _factors[k];
        auto b = _factors[k + 1];
        if (make_left_weighted(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  BraidWord NormalForm::to_word() const {
    BraidWord result = half_twist(_strands).pow(_infimum);
    for (auto const& f : _factors) {
      result *= f.word();
    }
    return result;
  }

  std::string NormalForm::to_string() const {
    std::string out = "D^" + std::to_string(_infimum);
    for (auto const& f : _factors) {
      out += " |";
      auto const p = f.induced();
      for (int v : p.images()) {
        out += ' ';
        out += std::to_string(v);
      }
    }
    return out;
  }

  std::string NormalForm::key() const {
    std::string k;
    k.reserve(sizeof(int64_t) + _factors.size() * static_cast<size_t>(_strands));
    for (size_t b = 0; b < sizeof(int64_t); ++b) {
      k.push_back(static_cast<char>((static_cast<uint64_t>(_infimum) >> (8 * b)) & 0xFF));
    }
    for (auto const& f : _factors) {
      for (uint8_t v : f.images()) {
        k.push_back(static_cast<char>(v));
      }
    }
    return k;
  }

  NormalForm normal_form(BraidWord const& w) {
    int const n = w.strands();
    if (n > 255) {
      raise(ErrorCode::IndexOutOfRange, "at most 255 strands are supported");
    }
    auto const letters = w.letters();
    // sigma_j^{-1} = Delta^{-1} (Delta sigma_j^{-1}). Each Delta^{-1} is moved
    // to the front, flipping (conjugating by Delta) every simple factor it
    // passes; only the parity of the number of flips matters.
    int64_t negatives = 0;
    for (int g : letters) {
      negatives += g < 0 ? 1 : 0;
    }
    int64_t                      infimum = -negatives;
    int64_t                      after   = negatives;
    std::deque<PermutationBraid> factors;

    for (int g : letters) {
      if (g < 0) {
        --after;
      }
      int j = std::abs(g);
      if (after % 2 != 0) {
        j = n - j;
      }
      PermutationBraid s = g > 0 ? PermutationBraid::generator(n, j)
                                 : PermutationBraid::delta_over_generator(n, j);
      factors.push_back(std::move(s));
      for (size_t k = factors.size() - 1; k-- > 0;) {
        if (!make_left_weighted(factors[k], factors[k + 1])) {
          break;
        }
      }
      while (!factors.empty() && factors.front().is_half_twist()) {
        factors.pop_front();
        ++infimum;
      }
      while (!factors.empty() && factors.back().is_identity()) {
        factors.pop_back();
      }
    }
    return NormalForm(
        n, infimum, std::vector<PermutationBraid>(factors.begin(), factors.end()));
  }

  bool equals(BraidWord const& a, BraidWord const& b) {
    if (a.strands() != b.strands()) {
      raise(ErrorCode::StrandCountMismatch, "comparing braids on different strand counts");
    }
    return normal_form(a) == normal_form(b);
  }

  BraidWord permutation_braid_word(Permutation const& p) {
    return PermutationBraid::from_induced(p).word();
  }

  ////////////////////////////////////////////////////////////////////////
  // Centrality and periodicity
  ////////////////////////////////////////////////////////////////////////

  std::string Centrality::to_string() const {
    switch (kind) {
      case CentralityKind::Trivial:
        return "Trivial";
      case CentralityKind::NotCentral:
        return "NotCentral";
      case CentralityKind::Central:
        if (auto m = full_twist_power()) {
          return "CentralPowerOfFullTwist(" + std::to_string(*m) + ")";
        }
        return "Central(D^" + std::to_string(delta_power) + ")";
    }
    return "";
  }

  Centrality centrality(BraidWord const& w) {
    if (w.strands() == 1) {
      return {CentralityKind::Trivial, 0};
    }
    auto const nf = normal_form(w);
    if (!nf.factors().empty()) {
      return {CentralityKind::NotCentral, 0};
    }
    if (nf.infimum() == 0) {
      return {CentralityKind::Trivial, 0};
    }
    if (w.strands() == 2 || nf.infimum() % 2 == 0) {
      return {CentralityKind::Central, nf.infimum()};
    }
    return {CentralityKind::NotCentral, 0};
  }

  bool is_central(BraidWord const& w) {
    return centrality(w).kind != CentralityKind::NotCentral;
  }

  bool is_periodic(BraidWord const& w) {
    int const n = w.strands();
    if (n <= 2) {
      return true;
    }
    return is_central(w.pow(n)) || is_central(w.pow(n - 1));
  }

  bool is_P_straight(BraidWord const& w, StrandSet const& P) {
    if (!is_P_pure(w, P)) {
      return false;
    }
    if (P.empty()) {
      return true;
    }
    return normal_form(delete_strands(w, P)).is_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugacy search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct SearchNode {
      BraidWord state;
      // conjugator * origin * conjugator^{-1} = state
      BraidWord conjugator;
    };

    struct Side {
      std::unordered_map<std::string, size_t> index;
      std::vector<SearchNode>                 nodes;
      size_t                                  level_begin = 0;
      int                                     depth       = 0;

      size_t frontier_size() const {
        return nodes.size() - level_begin;
      }
    };
  }  // namespace

  std::optional<BraidWord> try_conjugacy_search(BraidWord const&        a,
                                                BraidWord const&        b,
                                                int                     depth,
                                                ConjugatorFilter const& accept) {
    if (a.strands() != b.strands()) {
      raise(ErrorCode::StrandCountMismatch, "conjugacy search across strand counts");
    }
    int const n = a.strands();
    auto      accepted = [&accept](BraidWord const& g) {
      return !accept || accept(g);
    };

    Side forward, backward;
    auto seed = [n](Side& side, BraidWord const& w) {
      side.index.emplace(normal_form(w).key(), 0);
      side.nodes.push_back({w, BraidWord(n)});
    };
    seed(forward, a);
    seed(backward, b);
    if (forward.index.begin()->first == backward.index.begin()->first
        && accepted(BraidWord(n))) {
      return BraidWord(n);
    }

    std::vector<int> generators;
    for (int j = 1; j < n; ++j) {
      generators.push_back(j);
      generators.push_back(-j);
    }

    while (forward.depth + backward.depth < depth) {
      bool const grow_forward  = forward.frontier_size() <= backward.frontier_size();
      Side&      side          = grow_forward ? forward : backward;
      Side&      other         = grow_forward ? backward : forward;
      size_t const level_end   = side.nodes.size();
      if (side.frontier_size() == 0) {
        break;
      }
      for (size_t i = side.level_begin; i < level_end; ++i) {
        for (int g : generators) {
          BraidWord const gw(n, {g});
          BraidWord       state
              = (gw * side.nodes[i].state * gw.inverse()).free_reduced();
          std::string key = normal_form(state).key();
          if (side.index.contains(key)) {
            continue;
          }
          BraidWord conjugator = (gw * side.nodes[i].conjugator).free_reduced();
          side.index.emplace(key, side.nodes.size());
          side.nodes.push_back({std::move(state), conjugator});
          auto hit = other.index.find(key);
          if (hit == other.index.end()) {
            continue;
          }
          auto const& there = other.nodes[hit->second].conjugator;
          // f a f^{-1} = x = h b h^{-1}  =>  (h^{-1} f) a (h^{-1} f)^{-1} = b
          BraidWord candidate
              = grow_forward ? (there.inverse() * conjugator).free_reduced()
                             : (conjugator.inverse() * there).free_reduced();
          if (accepted(candidate)) {
            return candidate;
          }
        }
      }
      side.level_begin = level_end;
      ++side.depth;
    }
    return std::nullopt;
  }

  BraidWord conjugacy_search(BraidWord const&        a,
                             BraidWord const&        b,
                             int                     depth,
                             ConjugatorFilter const& accept) {
    auto result = try_conjugacy_search(a, b, depth, accept);
    if (!result) {
      raise(ErrorCode::BoundExceeded,
            "no conjugator found within depth " + std::to_string(depth));
    }
    if (!equals(*result * a * result->inverse(), b)) {
      raise(ErrorCode::VerificationFailed, "search produced a non-conjugator");
    }
    return *result;
  }

}  // namespace braidroots
