#include "braidroots/io.hpp"

#include <cctype>  // for isdigit, isspace
#include <charconv>  // for from_chars

namespace braidroots {

  ParseFailure::ParseFailure(size_t position, std::string const& what)
      : BraidError(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + what),
        _position(position) {}

  namespace {

    bool separator(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',';
    }

    //! Reads a signed integer occupying all of \p token.
    bool read_int(std::string_view token, int& out) {
      if (token.empty()) {
        return false;
      }
      char const* first = token.data();
      if (*first == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), out);
      return ec == std::errc() && ptr == token.data() + token.size();
    }

    int read_letter(std::string_view token, size_t pos) {
      int value = 0;
      if (token.front() == 's' || token.front() == 'S') {
        auto const body  = token.substr(1);
        auto const caret = body.find('^');
        if (!read_int(body.substr(0, caret), value) || value <= 0) {
          throw ParseFailure(pos, "expected sN or sN^-1, got '" + std::string(token) + "'");
        }
        if (caret != std::string_view::npos) {
          int e = 0;
          if (!read_int(body.substr(caret + 1), e) || (e != 1 && e != -1)) {
            throw ParseFailure(pos + 1 + caret, "only exponents 1 and -1 are accepted");
          }
          value *= e;
        }
        return value;
      }
      if (!read_int(token, value)) {
        throw ParseFailure(pos, "expected a generator, got '" + std::string(token) + "'");
      }
      if (value == 0) {
        throw ParseFailure(pos, "generator 0 does not exist");
      }
      return value;
    }

    template <typename F>
    void for_each_token(std::string_view text, F&& f) {
      size_t i = 0;
      while (i < text.size()) {
        if (separator(text[i])) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j < text.size() && !separator(text[j])) {
          ++j;
        }
        f(text.substr(i, j - i), i);
        i = j;
      }
    }

    std::vector<int> int_list(nlohmann::json const& j, char const* what) {
      if (!j.is_array()) {
        throw ParseFailure(0, std::string(what) + " must be an array of integers");
      }
      std::vector<int> out;
      for (auto const& x : j) {
        if (!x.is_number_integer()) {
          throw ParseFailure(0, std::string(what) + " must be an array of integers");
        }
        out.push_back(x.get<int>());
      }
      return out;
    }

    nlohmann::json const& field(nlohmann::json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseFailure(0, std::string("record lacks the field '") + key + "'");
      }
      return j.at(key);
    }

  }  // namespace

  BraidWord parse_word(std::string_view text, int strands) {
    std::vector<int> letters;
    for_each_token(text, [&](std::string_view token, size_t pos) {
      int const g = read_letter(token, pos);
      if ((g < 0 ? -g : g) >= strands) {
        raise(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g) + " needs more than "
                                              + std::to_string(strands) + " strands");
      }
      letters.push_back(g);
    });
    return BraidWord(strands, std::move(letters));
  }

  std::string format_word(BraidWord const& w) {
    std::string out;
    for (int g : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(g);
    }
    return out;
  }

  StrandSet parse_strand_set(std::string_view text) {
    std::vector<int> members;
    for_each_token(text, [&](std::string_view token, size_t pos) {
      int v = 0;
      if (!read_int(token, v) || v < 1) {
        throw ParseFailure(pos, "expected a positive strand index, got '" + std::string(token) + "'");
      }
      members.push_back(v);
    });
    return StrandSet(std::move(members));
  }

  Composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    for_each_token(text, [&](std::string_view token, size_t pos) {
      int v = 0;
      if (!read_int(token, v) || v < 1) {
        throw ParseFailure(pos, "expected a positive block size, got '" + std::string(token) + "'");
      }
      parts.push_back(v);
    });
    if (parts.empty()) {
      throw ParseFailure(0, "empty composition");
    }
    return Composition(std::move(parts));
  }

  nlohmann::json to_record(BraidWord const& w) {
    return nlohmann::json(std::vector<int>(w.letters().begin(), w.letters().end()));
  }

  nlohmann::json to_record(StrandSet const& s) {
    return nlohmann::json(s.members());
  }

  nlohmann::json to_record(Composition const& n) {
    return nlohmann::json(n.parts());
  }

  nlohmann::json to_record(Decomposition const& d) {
    nlohmann::json interiors = nlohmann::json::array();
    for (auto const& w : d.interiors) {
      interiors.push_back(to_record(w));
    }
    return {{"composition", to_record(d.composition)},
            {"exterior", to_record(d.exterior)},
            {"interiors", interiors}};
  }

  nlohmann::json to_record(ReductionHint const& h) {
    return {{"composition", to_record(h.composition)}, {"standardizer", to_record(h.standardizer)}};
  }

  nlohmann::json to_record(RootProblem const& p) {
    nlohmann::json j{{"strands", p.alpha.strands()},
                     {"alpha", to_record(p.alpha)},
                     {"beta", to_record(p.beta)},
                     {"P", to_record(p.P)},
                     {"k", p.k}};
    if (p.hint) {
      j["hint"] = to_record(*p.hint);
    }
    return j;
  }

  nlohmann::json to_record(ConjugacyCertificate const& c) {
    return {{"gamma", to_record(c.gamma)},
            {"checked",
             {{"conjugates", c.checked.conjugates},
              {"P_straight", c.checked.P_straight},
              {"one_unlinked", c.checked.one_unlinked}}},
            {"lk_value", c.lk_value},
            {"route", c.route}};
  }

  Decomposition decomposition_from_record(nlohmann::json const& j) {
    Composition const n(int_list(field(j, "composition"), "composition"));
    Decomposition     d{n, BraidWord(n.size(), int_list(field(j, "exterior"), "exterior")), {}};
    auto const&       in = field(j, "interiors");
    if (!in.is_array() || static_cast<int>(in.size()) != n.size()) {
      throw ParseFailure(0, "interiors must list one word per block");
    }
    for (int i = 1; i <= n.size(); ++i) {
      d.interiors.emplace_back(n[i], int_list(in[static_cast<size_t>(i - 1)], "interior"));
    }
    d.validate();
    return d;
  }

  ReductionHint hint_from_record(nlohmann::json const& j, int strands) {
    Composition n(int_list(field(j, "composition"), "composition"));
    if (n.total() != strands) {
      raise(ErrorCode::StrandCountMismatch, "hint composition does not sum to the strand count");
    }
    return {std::move(n), BraidWord(strands, int_list(field(j, "standardizer"), "standardizer"))};
  }

  RootProblem problem_from_record(nlohmann::json const& j) {
    auto const& s = field(j, "strands");
    auto const& k = field(j, "k");
    if (!s.is_number_integer() || !k.is_number_integer()) {
      throw ParseFailure(0, "strands and k must be integers");
    }
    int const   N = s.get<int>();
    RootProblem p{BraidWord(N, int_list(field(j, "alpha"), "alpha")),
                  BraidWord(N, int_list(field(j, "beta"), "beta")),
                  StrandSet(int_list(field(j, "P"), "P")), k.get<int64_t>(), std::nullopt};
    if (j.contains("hint")) {
      p.hint = hint_from_record(j.at("hint"), N);
    }
    return p;
  }

}  // namespace braidroots
