#pragma once

// Command-level entry points.  Each subcommand has a structured result type
// so campaigns can be driven programmatically; run() renders them in either
// a human format or deterministic line-oriented records, and maps error
// classes onto distinct exit codes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/artin.hpp"
#include "parabolic/braid.hpp"
#include "parabolic/coxeter.hpp"
#include "parabolic/salvetti.hpp"

namespace cli {

enum class Format { text, records };
enum class OracleChoice { automatic, none, free_reduction, garside };

// Exit codes: 0 success/PASS, 1 verdict FAIL, 2 parse error, 3 precondition
// violation, 4 search bound exceeded.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitBound = 4;

struct RunConfig {
  std::string subcommand;
  std::string graph_file;
  std::string graph_text; // used instead of graph_file when nonempty
  std::string word;
  std::optional<std::string> target;
  std::uint64_t seed = 1;
  int trials = 200;
  int max_len = 64;
  std::size_t max_elements = 200000;
  Format format = Format::text;
  OracleChoice oracle = OracleChoice::automatic;
  int strands = 0;
  std::string keep;
  std::optional<int> radius;
  bool skeleton = false;
};

struct GeodesicConvexityResult {
  coxeter::GenSet target;
  std::size_t elements = 0;
  unsigned long long geodesics = 0;
  std::size_t violations = 0;
  std::string witness;
  bool pass() const { return violations == 0; }
};

// Exhaustive check that every geodesic word of every element of W_T stays
// inside T.
GeodesicConvexityResult cmd_coxeter_convexity(const coxeter::CoxeterGraph& g,
                                              coxeter::GenSet t);

struct ArtinTrialRow {
  int index = 0;
  std::size_t base_length = 0;
  std::size_t scrambled_length = 0;
  std::size_t tau_length = 0;
  bool fixes_base = false;       // projection leaves the unscrambled word alone
  bool length_contract = false;  // |tau| <= |w|; equality forces letters in T
  bool theta_match = false;
  bool abelian_match = false;
  std::optional<bool> oracle_equal; // tau equals the base word in the Artin group
  std::optional<bool> brute_ok;     // exhaustive geodesic check (small type A words)
  bool pass = false;
};

struct ArtinCampaignResult {
  std::string oracle_name;
  std::vector<ArtinTrialRow> rows;
  bool pass = true;
};

// Seeded campaign: random words over the target alphabet, scrambled by
// element-preserving moves, then projected back and checked.
ArtinCampaignResult cmd_artin_convexity(const coxeter::CoxeterGraph& g, coxeter::GenSet t,
                                        int trials, std::uint64_t seed, int max_len,
                                        const artin::Oracle* oracle,
                                        bool brute_force_small = true);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace cli
