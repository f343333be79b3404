#ifndef BRAIDROOTS_IO_HPP_
#define BRAIDROOTS_IO_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view

#include <json.hpp>

#include "braid_word.hpp"
#include "error.hpp"
#include "roots.hpp"
#include "tubular.hpp"

namespace braidroots {

  //! A ParseError that remembers the byte offset where parsing failed.
  class ParseFailure : public BraidError {
   public:
    ParseFailure(size_t position, std::string const& what);
    size_t position() const noexcept {
      return _position;
    }

   private:
    size_t _position;
  };

  //! Tokens separated by whitespace or commas: nonzero integers, or sN and
  //! sN^-1. Throws ParseFailure, or IndexOutOfRange for |g| >= strands.
  BraidWord parse_word(std::string_view text, int strands);

  //! Space-separated integers; parse_word(format_word(w)) == w.
  std::string format_word(BraidWord const& w);

  //! "1,3,4"; an empty string is the empty set.
  StrandSet   parse_strand_set(std::string_view text);
  //! "2,1,3"
  Composition parse_composition(std::string_view text);

  nlohmann::json to_record(BraidWord const& w);
  nlohmann::json to_record(StrandSet const& s);
  nlohmann::json to_record(Composition const& n);
  //! {"composition": [..], "exterior": [..], "interiors": [[..], ..]}
  nlohmann::json to_record(Decomposition const& d);
  //! {"strands", "alpha", "beta", "P", "k"} plus "hint" when present.
  nlohmann::json to_record(RootProblem const& p);
  //! {"gamma", "checked": {"conjugates", "P_straight", "one_unlinked"},
  //! "lk_value", "route"}
  nlohmann::json to_record(ConjugacyCertificate const& c);
  //! {"composition": [..], "standardizer": [..]}
  nlohmann::json to_record(ReductionHint const& h);

  //! Inverses of the record writers; throw ParseFailure on malformed input.
  Decomposition decomposition_from_record(nlohmann::json const& j);
  ReductionHint hint_from_record(nlohmann::json const& j, int strands);
  RootProblem   problem_from_record(nlohmann::json const& j);

}  // namespace braidroots

#endif  // BRAIDROOTS_IO_HPP_
