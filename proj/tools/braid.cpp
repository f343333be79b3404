// Command-line front end for the braidroots library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidroots/braid_word.hpp"
#include "braidroots/error.hpp"
#include "braidroots/garside.hpp"
#include "braidroots/io.hpp"
#include "braidroots/periodic.hpp"
#include "braidroots/roots.hpp"
#include "braidroots/selftest.hpp"
#include "braidroots/tubular.hpp"

using namespace braidroots;
using nlohmann::json;

namespace {

  enum Exit : int {
    kOk                   = 0,
    kGeneric              = 1,
    kParse                = 2,
    kNotMember            = 3,
    kHintRequired         = 4,
    kBoundExceeded        = 5,
    kVerification         = 6,
    kNotStandardlyReduced = 7,
  };

  constexpr char const* kExitTable =
      "Exit codes:\n"
      "  0  success\n"
      "  1  any other library error (bad index, hypothesis violated, ...)\n"
      "  2  parse error or invalid command line\n"
      "  3  braid is not a member of the requested Artin group\n"
      "  4  no standard reduction system found; supply --hint\n"
      "  5  a bounded search ran out of depth\n"
      "  6  verification failed (including any failing selftest group)\n"
      "  7  braid does not preserve the given composition\n";

  int exit_code(ErrorCode code) {
    switch (code) {
      case ErrorCode::ParseError:
        return kParse;
      case ErrorCode::NotMember:
        return kNotMember;
      case ErrorCode::HintRequired:
        return kHintRequired;
      case ErrorCode::BoundExceeded:
        return kBoundExceeded;
      case ErrorCode::VerificationFailed:
      case ErrorCode::InternalIdentityViolated:
        return kVerification;
      case ErrorCode::NotStandardlyReduced:
        return kNotStandardlyReduced;
      default:
        return kGeneric;
    }
  }

  struct Common {
    int         strands = 0;
    std::string format  = "text";
    bool        record() const {
      return format == "record";
    }
  };

  void add_strands(CLI::App* sub, Common& c) {
    sub->add_option("-n,--strands", c.strands, "Number of strands")->required()->check(CLI::PositiveNumber);
  }

  void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "record"}))
        ->capture_default_str();
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  std::string join_ints(std::vector<int> const& v) {
    std::string out;
    for (int x : v) {
      out += (out.empty() ? "" : " ") + std::to_string(x);
    }
    return out;
  }

  void print_decomposition(Decomposition const& d, bool record) {
    if (record) {
      std::cout << to_record(d).dump() << "\n";
      return;
    }
    std::cout << "composition: " << d.composition.to_string() << "\n";
    std::cout << "exterior: " << format_word(d.exterior) << "\n";
    for (size_t i = 0; i < d.interiors.size(); ++i) {
      std::cout << "interior " << i + 1 << ": " << format_word(d.interiors[i]) << "\n";
    }
  }

  void print_certificate(ConjugacyCertificate const& c, bool record) {
    if (record) {
      std::cout << to_record(c).dump() << "\n";
      return;
    }
    std::cout << "gamma: " << format_word(c.gamma) << "\n";
    std::cout << "conjugates: " << yes_no(c.checked.conjugates) << "\n";
    std::cout << "P_straight: " << yes_no(c.checked.P_straight) << "\n";
    std::cout << "one_unlinked: " << yes_no(c.checked.one_unlinked) << "\n";
    std::cout << "lk: " << c.lk_value << "\n";
    std::cout << "route: " << c.route << "\n";
  }

  ArtinType::Kind artin_kind(std::string const& s) {
    if (s == "B") {
      return ArtinType::Kind::TypeB;
    }
    if (s == "A") {
      return ArtinType::Kind::AffineA;
    }
    return ArtinType::Kind::AffineC;
  }

  std::vector<int> parse_artin_letters(std::string const& text, int rank) {
    // Reuse the braid parser: generator s_i has index i <= rank.
    auto const w = parse_word(text, rank + 1);
    return {w.letters().begin(), w.letters().end()};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid words, tubular decompositions and conjugating roots."};
  app.footer(kExitTable);
  app.require_subcommand(1);

  Common common;

  // nf
  std::string w1, w2;
  auto*       nf = app.add_subcommand("nf", "Left normal form of a word");
  add_strands(nf, common);
  add_format(nf, common);
  nf->add_option("word", w1, "Braid word")->required();

  // eq
  auto* eq = app.add_subcommand("eq", "Decide whether two words are the same braid");
  add_strands(eq, common);
  add_format(eq, common);
  eq->add_option("word1", w1, "First word")->required();
  eq->add_option("word2", w2, "Second word")->required();

  // perm
  auto* perm = app.add_subcommand("perm", "Induced permutation (right-end label to left-end position)");
  add_strands(perm, common);
  add_format(perm, common);
  perm->add_option("word", w1, "Braid word")->required();

  // lk
  auto* lkc = app.add_subcommand("lk", "Linking number of strand 1 with the others (1-pure input)");
  add_strands(lkc, common);
  add_format(lkc, common);
  lkc->add_option("word", w1, "Braid word")->required();

  // lki
  int   index = 0;
  auto* lki   = app.add_subcommand("lki", "Linking numbers lk_i of strand 1 with strand i");
  add_strands(lki, common);
  add_format(lki, common);
  lki->add_option("-i,--index", index, "Only this strand (default: all i >= 2)");
  lki->add_option("word", w1, "Braid word")->required();

  // delete
  std::string keep;
  auto*       del = app.add_subcommand("delete", "Keep only the listed strands");
  add_strands(del, common);
  add_format(del, common);
  del->add_option("--keep", keep, "Comma-separated right-end strand labels")->required();
  del->add_option("word", w1, "Braid word")->required();

  // cable
  std::string comp;
  auto*       cab = app.add_subcommand("cable", "Replace strand i of an r-braid by n_i parallel strands");
  add_format(cab, common);
  cab->add_option("--comp", comp, "Composition n_1,...,n_r (right-end block sizes)")->required();
  cab->add_option("word", w1, "Exterior word on r strands")->required();

  // sum
  std::vector<std::string> words;
  auto* sum = app.add_subcommand("sum", "Block sum of interior words");
  add_format(sum, common);
  sum->add_option("--comp", comp, "Composition n_1,...,n_r")->required();
  sum->add_option("words", words, "One word per block (use \"\" for the identity)")->required();

  // extract
  auto* ext = app.add_subcommand("extract", "Tubular decomposition over a composition");
  add_strands(ext, common);
  add_format(ext, common);
  ext->add_option("--comp", comp, "Composition")->required();
  ext->add_option("word", w1, "Braid word")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Compositions whose block system the braid preserves");
  add_strands(scan, common);
  add_format(scan, common);
  scan->add_option("word", w1, "Braid word")->required();

  // classify
  auto* cls = app.add_subcommand("classify", "Centrality and periodic type");
  add_strands(cls, common);
  add_format(cls, common);
  cls->add_option("word", w1, "Braid word")->required();

  // root
  std::string alpha, beta, pset = "1", hint_file;
  int64_t     k     = 1;
  int         depth = kDefaultSearchDepth;
  auto*       root  = app.add_subcommand("root", "Conjugate alpha to beta given alpha^k = beta^k");
  add_strands(root, common);
  add_format(root, common);
  root->add_option("--alpha", alpha, "alpha")->required();
  root->add_option("--beta", beta, "beta")->required();
  root->add_option("-P", pset, "Comma-separated pure strands (\"\" for none)")->capture_default_str();
  root->add_option("-k", k, "Power with alpha^k = beta^k")->capture_default_str();
  root->add_option("--hint", hint_file, "JSON file {\"composition\": [..], \"standardizer\": [..]}");
  root->add_option("--depth", depth, "Conjugacy search bound")->capture_default_str();

  // artin
  std::string atype = "B", aop;
  int         rank  = 2;
  auto*       art   = app.add_subcommand("artin", "Artin groups of type B, affine A and affine C");
  add_format(art, common);
  art->add_option("--type", atype, "B, A (affine A) or C (affine C)")
      ->check(CLI::IsMember({"B", "A", "C"}))
      ->capture_default_str();
  art->add_option("--rank", rank, "Subscript of the type (B_m, or m for the affine types)")
      ->capture_default_str();
  art->add_option("--op", aop, "embed, member or root")
      ->check(CLI::IsMember({"embed", "member", "root"}))
      ->required();
  art->add_option("word", w1, "Word (Artin generators for embed, braid letters for member)");
  art->add_option("--alpha", alpha, "alpha (root)");
  art->add_option("--beta", beta, "beta (root)");
  art->add_option("-k", k, "Power (root)");
  art->add_option("--depth", depth, "Conjugacy search bound")->capture_default_str();

  // selftest
  bool     mutate = false;
  uint64_t seed   = 1;
  auto*    st     = app.add_subcommand("selftest", "Re-run the fixture groups and law suites");
  add_format(st, common);
  st->add_option("--seed", seed, "Random seed for generated instances")->capture_default_str();
  st->add_flag("--mutate-cabling", mutate, "Use a deliberately wrong cabling (expect failures)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kParse;
  }

  bool const record = common.record();
  int const  n      = common.strands;
  try {
    if (*nf) {
      auto const f = normal_form(parse_word(w1, n));
      if (record) {
        json factors = json::array();
        for (auto const& x : f.factors()) {
          factors.push_back(x.induced().images());
        }
        std::cout << json{{"infimum", f.infimum()}, {"factors", factors},
                          {"word", to_record(f.to_word())}}
                         .dump()
                  << "\n";
      } else {
        std::cout << f.to_string() << "\n";
      }
    } else if (*eq) {
      bool const same = equals(parse_word(w1, n), parse_word(w2, n));
      std::cout << (record ? json{{"equal", same}}.dump() : std::string(same ? "true" : "false"))
                << "\n";
    } else if (*perm) {
      auto const p = induced_permutation(parse_word(w1, n));
      std::cout << (record ? json{{"permutation", p.images()}}.dump() : join_ints(p.images()))
                << "\n";
    } else if (*lkc) {
      auto const v = lk(parse_word(w1, n));
      std::cout << (record ? json{{"lk", v}}.dump() : std::to_string(v)) << "\n";
    } else if (*lki) {
      auto const w = parse_word(w1, n);
      if (index != 0) {
        auto const v = lk_i(w, index);
        std::cout << (record ? json{{"i", index}, {"lk_i", v.to_string()}}.dump() : v.to_string())
                  << "\n";
      } else {
        std::vector<std::string> vals;
        for (auto const& v : lk_all(w)) {
          vals.push_back(v.to_string());
        }
        if (record) {
          std::cout << json{{"lk_i", vals}}.dump() << "\n";
        } else {
          for (size_t i = 0; i < vals.size(); ++i) {
            std::cout << (i ? " " : "") << vals[i];
          }
          std::cout << "\n";
        }
      }
    } else if (*del) {
      auto const w = delete_strands(parse_word(w1, n), parse_strand_set(keep));
      std::cout << (record ? json{{"strands", w.strands()}, {"word", to_record(w)}}.dump()
                           : format_word(w))
                << "\n";
    } else if (*cab) {
      auto const c = parse_composition(comp);
      auto const w = cable(parse_word(w1, c.size()), c);
      std::cout << (record ? json{{"strands", w.strands()}, {"word", to_record(w)}}.dump()
                           : format_word(w))
                << "\n";
    } else if (*sum) {
      auto const             c = parse_composition(comp);
      std::vector<BraidWord> in;
      if (static_cast<int>(words.size()) != c.size()) {
        raise(ErrorCode::ShapeMismatch, "sum needs one word per block");
      }
      for (int i = 1; i <= c.size(); ++i) {
        in.push_back(parse_word(words[static_cast<size_t>(i - 1)], c[i]));
      }
      auto const w = block_sum(in, c);
      std::cout << (record ? json{{"strands", w.strands()}, {"word", to_record(w)}}.dump()
                           : format_word(w))
                << "\n";
    } else if (*ext) {
      print_decomposition(extract(parse_word(w1, n), parse_composition(comp)), record);
    } else if (*scan) {
      auto const found = find_preserved_compositions(parse_word(w1, n));
      if (record) {
        json arr = json::array();
        for (auto const& c : found) {
          arr.push_back(to_record(c));
        }
        std::cout << json{{"compositions", arr}}.dump() << "\n";
      } else {
        for (auto const& c : found) {
          std::cout << c.to_string() << "\n";
        }
      }
    } else if (*cls) {
      auto const w    = parse_word(w1, n);
      auto const cen  = centrality(w);
      auto const kind = classify_periodic(w);
      if (record) {
        std::cout << json{{"centrality", cen.to_string()}, {"periodic", kind.to_string()}}.dump()
                  << "\n";
      } else {
        std::cout << "centrality: " << cen.to_string() << "\n";
        std::cout << "periodic: " << kind.to_string() << "\n";
      }
    } else if (*root) {
      RootProblem pr{parse_word(alpha, n), parse_word(beta, n), parse_strand_set(pset), k,
                     std::nullopt};
      if (!hint_file.empty()) {
        std::ifstream in(hint_file);
        if (!in) {
          throw ParseFailure(0, "cannot read hint file " + hint_file);
        }
        json j;
        try {
          j = json::parse(in);
        } catch (json::parse_error const& e) {
          throw ParseFailure(e.byte, "hint file is not valid JSON");
        }
        pr.hint = hint_from_record(j, n);
      }
      auto const cert = root_conjugator(pr, {depth, true, nullptr});
      // Never print a certificate that has not been re-verified here.
      print_certificate(certify(pr, cert.gamma, cert.route), record);
    } else if (*art) {
      ArtinType const type{artin_kind(atype), rank};
      int const       N = type.strands();
      if (aop == "embed") {
        auto const w = artin_embed(type, parse_artin_letters(w1, rank));
        std::cout << (record ? json{{"strands", N}, {"word", to_record(w)}}.dump() : format_word(w))
                  << "\n";
      } else if (aop == "member") {
        bool const m = artin_member(type, parse_word(w1, N));
        std::cout << (record ? json{{"member", m}}.dump() : std::string(m ? "true" : "false"))
                  << "\n";
        if (!m) {
          return kNotMember;
        }
      } else {
        auto const a    = parse_word(alpha, N);
        auto const b    = parse_word(beta, N);
        auto const cert = artin_root_conjugate(type, a, b, k, {depth, true, nullptr});
        RootProblem const pr{a, b, type.pure_set(), k, std::nullopt};
        print_certificate(certify(pr, cert.gamma, cert.route), record);
      }
    } else if (*st) {
      auto const groups = run_selftest({seed, mutate});
      bool       all    = true;
      json       arr    = json::array();
      for (auto const& g : groups) {
        all = all && g.passed();
        if (record) {
          arr.push_back({{"group", g.name}, {"checks", g.checks}, {"failures", g.failures},
                         {"passed", g.passed()}, {"first_failure", g.first_failure}});
        } else {
          std::cout << (g.passed() ? "PASS " : "FAIL ") << g.name << " (" << g.checks
                    << " checks, " << g.failures << " failures)";
          if (!g.passed()) {
            std::cout << ": " << g.first_failure;
          }
          std::cout << "\n";
        }
      }
      if (record) {
        std::cout << json{{"groups", arr}, {"passed", all}}.dump() << "\n";
      }
      return all ? kOk : kVerification;
    }
  } catch (BraidError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kOk;
}
