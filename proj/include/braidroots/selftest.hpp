#ifndef BRAIDROOTS_SELFTEST_HPP_
#define BRAIDROOTS_SELFTEST_HPP_

#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace braidroots {

  struct SelftestOptions {
    uint64_t seed = 1;
    //! Replaces cabling by a variant that seeds block sizes from the wrong
    //! end of the word, to show the law groups notice.
    bool mutate_cabling = false;
  };

  struct SelftestGroup {
    std::string name;
    int         checks   = 0;
    int         failures = 0;
    //! The first failing check, if any.
    std::string first_failure;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! Runs every fixture group and law suite. Deterministic for a fixed seed.
  std::vector<SelftestGroup> run_selftest(SelftestOptions const& options = {});

}  // namespace braidroots

#endif  // BRAIDROOTS_SELFTEST_HPP_
