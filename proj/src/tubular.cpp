#include "braidroots/tubular.hpp"

#include <algorithm>  // for minmax_element

#include "braidroots/error.hpp"
#include "braidroots/garside.hpp"

namespace braidroots {

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  Composition::Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  Composition::Composition(std::vector<int> parts) : _parts(std::move(parts)) {
    if (_parts.empty()) {
      raise(ErrorCode::ShapeMismatch, "a composition needs at least one part");
    }
    for (int p : _parts) {
      if (p < 1) {
        raise(ErrorCode::ShapeMismatch, "composition parts must be positive");
      }
      _total += p;
    }
  }

  int Composition::offset(int i) const {
    if (i < 1 || i > size()) {
      raise(ErrorCode::IndexOutOfRange, "block index out of range");
    }
    int o = 0;
    for (int k = 1; k < i; ++k) {
      o += (*this)[k];
    }
    return o;
  }

  StrandSet Composition::block(int i) const {
    int const o = offset(i);
    return StrandSet::range(o + 1, o + (*this)[i]);
  }

  int Composition::block_of(int strand) const {
    int upto = 0;
    for (int i = 1; i <= size(); ++i) {
      upto += (*this)[i];
      if (strand <= upto) {
        return i;
      }
    }
    raise(ErrorCode::IndexOutOfRange, "strand beyond the composition total");
  }

  std::string Composition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < _parts.size(); ++i) {
      out += (i ? "," : "") + std::to_string(_parts[i]);
    }
    return out + ")";
  }

  std::vector<Composition> essential_compositions(int n) {
    std::vector<Composition> result;
    std::vector<int>         parts;
    // Depth-first over first parts in increasing order gives lexicographic
    // output.
    auto recurse = [&](auto&& self, int left) -> void {
      if (left == 0) {
        int const r = static_cast<int>(parts.size());
        if (r >= 2 && r <= n - 1) {
          result.emplace_back(parts);
        }
        return;
      }
      for (int p = 1; p <= left; ++p) {
        parts.push_back(p);
        self(self, left - p);
        parts.pop_back();
      }
    };
    recurse(recurse, n);
    return result;
  }

  Composition act_on_composition(Permutation const& p, Composition const& n) {
    if (p.degree() != n.size()) {
      raise(ErrorCode::DegreeMismatch,
            "permutation of degree " + std::to_string(p.degree()) + " on "
                + std::to_string(n.size()) + " parts");
    }
    std::vector<int> parts(static_cast<size_t>(n.size()));
    for (int i = 1; i <= n.size(); ++i) {
      parts[static_cast<size_t>(p(i) - 1)] = n[i];
    }
    return Composition(std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cabling and block sums
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Block of p strands at offset o crossing positively over the q strands
    // to its right.
    void append_block_crossing(std::vector<int>& out, int o, int p, int q, bool positive) {
      std::vector<int> word;
      for (int k = p; k >= 1; --k) {
        for (int m = 0; m < q; ++m) {
          word.push_back(o + k + m);
        }
      }
      if (positive) {
        out.insert(out.end(), word.begin(), word.end());
      } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          out.push_back(-*it);
        }
      }
    }
  }  // namespace

  BraidWord cable(BraidWord const& a0, Composition const& n) {
    if (a0.strands() != n.size()) {
      raise(ErrorCode::DegreeMismatch, "exterior strand count differs from the part count");
    }
    // Block sizes just left of the current letter; the left end carries a0 * n.
    std::vector<int> c = act_on_composition(induced_permutation(a0), n).parts();
    std::vector<int> out;
    for (int g : a0.letters()) {
      size_t const j = static_cast<size_t>(std::abs(g));
      int          o = 0;
      for (size_t k = 0; k + 1 < j; ++k) {
        o += c[k];
      }
      if (g > 0) {
        append_block_crossing(out, o, c[j - 1], c[j], true);
      } else {
        append_block_crossing(out, o, c[j], c[j - 1], false);
      }
      std::swap(c[j - 1], c[j]);
    }
    return BraidWord(n.total(), std::move(out));
  }

  BraidWord block_sum(std::vector<BraidWord> const& interiors, Composition const& n) {
    if (static_cast<int>(interiors.size()) != n.size()) {
      raise(ErrorCode::ShapeMismatch, "one interior per part is required");
    }
    BraidWord result(n.total());
    for (int i = 1; i <= n.size(); ++i) {
      auto const& a = interiors[static_cast<size_t>(i - 1)];
      if (a.strands() != n[i]) {
        raise(ErrorCode::ShapeMismatch,
              "interior " + std::to_string(i) + " has " + std::to_string(a.strands())
                  + " strands, expected " + std::to_string(n[i]));
      }
      result *= a.shifted(n.offset(i), n.total());
    }
    return result;
  }

  void Decomposition::validate() const {
    if (exterior.strands() != composition.size()) {
      raise(ErrorCode::ShapeMismatch, "exterior strand count differs from the part count");
    }
    if (static_cast<int>(interiors.size()) != composition.size()) {
      raise(ErrorCode::ShapeMismatch, "one interior per part is required");
    }
    for (int i = 1; i <= composition.size(); ++i) {
      if (interiors[static_cast<size_t>(i - 1)].strands() != composition[i]) {
        raise(ErrorCode::ShapeMismatch, "interior strand count differs from its part");
      }
    }
  }

  BraidWord compose_decomposition(Decomposition const& d) {
    d.validate();
    return cable(d.exterior, d.composition) * block_sum(d.interiors, d.composition);
  }

  ////////////////////////////////////////////////////////////////////////
  // Extraction
  ////////////////////////////////////////////////////////////////////////

  bool try_extract(BraidWord const& w, Composition const& n, Decomposition& out) {
    if (w.strands() != n.total()) {
      raise(ErrorCode::StrandCountMismatch, "braid and composition sizes differ");
    }
    // Cheap necessary condition: every block lands on a run of consecutive
    // positions at the left end.
    auto const pi = induced_permutation(w);
    for (int i = 1; i <= n.size(); ++i) {
      auto const image = n.block(i).image(pi);
      if (image.max() - image.min() + 1 != static_cast<int>(image.size())) {
        return false;
      }
    }
    std::vector<int> reps;
    for (int i = 1; i <= n.size(); ++i) {
      reps.push_back(n.offset(i) + 1);
    }
    Decomposition d{n, delete_strands(w, StrandSet(reps)), {}};
    for (int i = 1; i <= n.size(); ++i) {
      d.interiors.push_back(delete_strands(w, n.block(i)));
    }
    if (!equals(w, compose_decomposition(d))) {
      return false;
    }
    out = std::move(d);
    return true;
  }

  Decomposition extract(BraidWord const& w, Composition const& n) {
    Decomposition d;
    if (!try_extract(w, n, d)) {
      raise(ErrorCode::NotStandardlyReduced,
            "the braid does not carry the block system " + n.to_string() + " to a standard one");
    }
    return d;
  }

  std::vector<Composition> find_preserved_compositions(BraidWord const& w) {
    std::vector<Composition> result;
    for (auto const& n : essential_compositions(w.strands())) {
      Decomposition d;
      if (try_extract(w, n, d) && act_on_composition(induced_permutation(d.exterior), n) == n) {
        result.push_back(n);
      }
    }
    return result;
  }

  StrandSet block_strand_set(StrandSet const& P, Composition const& n, int i) {
    if (i < 0 || i > n.size()) {
      raise(ErrorCode::IndexOutOfRange, "block index out of range");
    }
    std::vector<int> m;
    if (i == 0) {
      for (int k = 1; k <= n.size(); ++k) {
        if (!block_strand_set(P, n, k).empty()) {
          m.push_back(k);
        }
      }
    } else {
      int const o = n.offset(i);
      for (int p : P.members()) {
        if (p > o && p <= o + n[i]) {
          m.push_back(p - o);
        }
      }
    }
    return StrandSet(std::move(m));
  }

}  // namespace braidroots
