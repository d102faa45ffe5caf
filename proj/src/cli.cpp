#include "parabolic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace cli {

using coxeter::CoxeterGraph;
using coxeter::Element;
using coxeter::Generator;
using coxeter::GenSet;

namespace {

struct GeoInfo {
  bool ok = true;
  unsigned long long count = 0;
};

std::string witness_geodesic(const CoxeterGraph& g, const Element& start, GenSet t,
                             const std::unordered_map<std::string, GeoInfo>& memo) {
  coxeter::Word w;
  Element cur = start;
  while (!cur.is_identity()) {
    std::vector<Generator> ld = coxeter::left_descents(cur).elements();
    Generator chosen = ld.front();
    bool found = false;
    for (Generator s : ld) {
      if (!t.contains(s)) {
        chosen = s;
        found = true;
        break;
      }
    }
    if (!found) {
      for (Generator s : ld) {
        Element next = coxeter::multiply(coxeter::generator_element(g, s), cur);
        auto it = memo.find(next.key());
        if (it != memo.end() && !it->second.ok) {
          chosen = s;
          break;
        }
      }
    }
    w.push_back(chosen);
    cur = coxeter::multiply(coxeter::generator_element(g, chosen), cur);
  }
  return coxeter::format_word(g, start.word()) + " via " + coxeter::format_word(g, w);
}

} // namespace

GeodesicConvexityResult cmd_coxeter_convexity(const CoxeterGraph& g, GenSet t) {
  GeodesicConvexityResult r;
  r.target = t;
  std::unordered_map<std::string, GeoInfo> memo;
  std::function<GeoInfo(const Element&)> visit = [&](const Element& e) -> GeoInfo {
    if (e.is_identity()) return {true, 1};
    auto it = memo.find(e.key());
    if (it != memo.end()) return it->second;
    GeoInfo info;
    for (Generator s : coxeter::left_descents(e).elements()) {
      GeoInfo below = visit(coxeter::multiply(coxeter::generator_element(g, s), e));
      info.count += below.count;
      if (!t.contains(s) || !below.ok) info.ok = false;
    }
    memo.emplace(e.key(), info);
    return info;
  };

  for (const Element& e : coxeter::enumerate_parabolic(g, t)) {
    GeoInfo info = visit(e);
    r.elements += 1;
    r.geodesics += info.count;
    if (!info.ok) {
      r.violations += 1;
      if (r.witness.empty()) r.witness = witness_geodesic(g, e, t, memo);
    }
  }
  return r;
}

namespace {

// Exhaustive geodesic check for one Artin element given by a short word:
// find the geodesic length by searching all words over the full signed
// alphabet, then verify every geodesic uses only target letters.
bool brute_geodesics_in_target(const CoxeterGraph& g, const artin::Oracle& oracle,
                               const artin::ArtinWord& base, GenSet t) {
  const int rank = g.rank();
  for (std::size_t len = 0; len <= base.size(); ++len) {
    std::vector<artin::ArtinWord> matches;
    artin::ArtinWord word(len, artin::Letter{0, 1});
    std::function<void(std::size_t)> fill = [&](std::size_t at) {
      if (at == len) {
        if (oracle.equal(word, base)) matches.push_back(word);
        return;
      }
      for (Generator s = 0; s < rank; ++s)
        for (int sign : {1, -1}) {
          word[at] = {s, sign};
          fill(at + 1);
        }
    };
    fill(0);
    if (matches.empty()) continue;
    for (const artin::ArtinWord& m : matches)
      for (const artin::Letter& l : m)
        if (!t.contains(l.generator)) return false;
    return true;
  }
  return false; // base not found at its own length: equality oracle is broken
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
}

} // namespace

ArtinCampaignResult cmd_artin_convexity(const CoxeterGraph& g, GenSet t, int trials,
                                        std::uint64_t seed, int max_len,
                                        const artin::Oracle* oracle, bool brute_force_small) {
  if (trials < 0) throw errors::PreconditionError("trial count must be nonnegative");
  if (max_len < 1) throw errors::PreconditionError("max length must be positive");
  ArtinCampaignResult result;
  if (oracle != nullptr) result.oracle_name = oracle->name;

  const std::vector<Generator> alphabet = t.elements();
  const bool type_a = artin::type_a_path(g).has_value();
  int bruted = 0;

  for (int trial = 0; trial < trials; ++trial) {
    artin::Rng rng(trial_seed(seed, trial));
    ArtinTrialRow row;
    row.index = trial;

    artin::ArtinWord base;
    if (!alphabet.empty()) {
      const std::size_t len = 1 + rng.below(static_cast<std::size_t>(max_len));
      base.reserve(len);
      for (std::size_t i = 0; i < len; ++i) {
        Generator s = alphabet[rng.below(alphabet.size())];
        base.push_back({s, rng.below(2) == 0 ? 1 : -1});
      }
    }
    row.base_length = base.size();

    const int steps = static_cast<int>(rng.below(41)); // at most 40 moves
    artin::ArtinWord scrambled = artin::scramble(g, base, steps, rng.next());
    row.scrambled_length = scrambled.size();

    artin::ConvexityReport report = artin::check_convexity(g, scrambled, t, oracle);
    row.tau_length = report.output_length;
    row.length_contract = report.length_contract_ok;
    row.theta_match = report.theta_match;
    row.abelian_match = report.abelian_match;
    row.fixes_base = artin::project_word(g, base, t).first == base;
    if (oracle != nullptr) {
      bool ok = report.oracle_equal.value_or(false) && oracle->equal(report.tau, base);
      row.oracle_equal = ok;
    }
    if (brute_force_small && type_a && oracle != nullptr && base.size() <= 4 && bruted < 25) {
      row.brute_ok = brute_geodesics_in_target(g, *oracle, base, t);
      ++bruted;
    }

    row.pass = row.length_contract && row.theta_match && row.abelian_match && row.fixes_base &&
               row.oracle_equal.value_or(true) && row.brute_ok.value_or(true);
    if (!row.pass) result.pass = false;
    result.rows.push_back(std::move(row));
  }
  return result;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw errors::ParseError("cannot read graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterGraph load_graph(const RunConfig& cfg) {
  std::string text;
  if (!cfg.graph_text.empty())
    text = cfg.graph_text;
  else if (!cfg.graph_file.empty())
    text = read_file(cfg.graph_file);
  else
    throw errors::PreconditionError("this subcommand requires --graph");
  CoxeterGraph g = CoxeterGraph::parse(text);
  g.max_elements = cfg.max_elements;
  return g;
}

GenSet required_target(const CoxeterGraph& g, const RunConfig& cfg) {
  if (!cfg.target) throw errors::PreconditionError("this subcommand requires --target");
  return coxeter::parse_subset(g, *cfg.target);
}

const char* yn(bool v) { return v ? "1" : "0"; }

std::string opt_yn(const std::optional<bool>& v) { return v ? yn(*v) : "-"; }

std::string braces(const std::string& s) { return "{" + s + "}"; }

int do_reduce(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  Element e = coxeter::normalize(g, coxeter::parse_word(g, cfg.word));
  if (cfg.format == Format::records) {
    out << "normal_form=" << coxeter::format_word(g, e.word()) << '\n';
    out << "length=" << e.length() << '\n';
  } else {
    out << "normal form: " << coxeter::format_word(g, e.word()) << '\n';
    out << "length:      " << e.length() << '\n';
  }
  return kExitPass;
}

int do_decompose(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  GenSet t = required_target(g, cfg);
  Element e = coxeter::normalize(g, coxeter::parse_word(g, cfg.word));
  auto [u0, u1] = coxeter::parabolic_decompose(e, t);
  if (cfg.format == Format::records) {
    out << "u0=" << coxeter::format_word(g, u0.word()) << '\n';
    out << "u1=" << coxeter::format_word(g, u1.word()) << '\n';
    out << "u0_length=" << u0.length() << '\n';
    out << "u1_length=" << u1.length() << '\n';
  } else {
    out << "u0 (in W_T):    " << coxeter::format_word(g, u0.word()) << '\n';
    out << "u1 (T-minimal): " << coxeter::format_word(g, u1.word()) << '\n';
  }
  return kExitPass;
}

int do_project(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  GenSet t = required_target(g, cfg);
  artin::ArtinWord w = artin::parse_artin_word(g, cfg.word);
  auto [tau, trace] = artin::project_word(g, w, t);

  auto letter_str = [&](const artin::Letter& l) {
    std::string s = g.name(l.generator);
    if (l.sign < 0) s += "^-1";
    return s;
  };
  if (cfg.format == Format::records) {
    out << "tau=" << artin::format_artin_word(g, tau) << '\n';
    out << "input_length=" << w.size() << '\n';
    out << "output_length=" << tau.size() << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const artin::TraceStep& st = trace.steps[i];
      out << "trace." << i + 1 << ".letter=" << letter_str(st.input) << '\n';
      out << "trace." << i + 1 << ".u=" << coxeter::format_word(g, st.u.word()) << '\n';
      out << "trace." << i + 1 << ".v=" << coxeter::format_word(g, st.v.word()) << '\n';
      out << "trace." << i + 1 << ".w=" << coxeter::format_word(g, st.w.word()) << '\n';
      out << "trace." << i + 1
          << ".conjugate=" << (st.conjugate ? g.name(*st.conjugate) : std::string("-")) << '\n';
      out << "trace." << i + 1
          << ".emitted=" << (st.emitted ? letter_str(*st.emitted) : std::string("-")) << '\n';
    }
  } else {
    out << "tau: " << artin::format_artin_word(g, tau) << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const artin::TraceStep& st = trace.steps[i];
      out << "step " << i + 1 << ": letter " << letter_str(st.input)
          << "  u=" << coxeter::format_word(g, st.u.word())
          << "  v=" << coxeter::format_word(g, st.v.word())
          << "  w=" << coxeter::format_word(g, st.w.word())
          << "  conjugate=" << (st.conjugate ? g.name(*st.conjugate) : std::string("-"))
          << "  emitted=" << (st.emitted ? letter_str(*st.emitted) : std::string("-")) << '\n';
    }
  }
  return kExitPass;
}

int do_coxeter_convexity(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  std::vector<GenSet> targets;
  if (cfg.target)
    targets.push_back(coxeter::parse_subset(g, *cfg.target));
  else
    targets = coxeter::subsets(g.all());

  bool pass = true;
  for (GenSet t : targets) {
    GeodesicConvexityResult r = cmd_coxeter_convexity(g, t);
    if (!r.pass()) pass = false;
    if (cfg.format == Format::records) {
      out << "target=" << coxeter::format_subset(g, t) << " elements=" << r.elements
          << " geodesics=" << r.geodesics << " violations=" << r.violations << '\n';
    } else {
      out << "target " << braces(coxeter::format_subset(g, t)) << ": " << r.elements
          << " elements, " << r.geodesics << " geodesic words, " << r.violations
          << " violations\n";
      if (!r.witness.empty()) out << "  witness: " << r.witness << '\n';
    }
  }
  out << (cfg.format == Format::records ? "verdict=" : "verdict: ") << (pass ? "PASS" : "FAIL")
      << '\n';
  return pass ? kExitPass : kExitFail;
}

int do_artin_convexity(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  GenSet t = required_target(g, cfg);

  std::optional<artin::Oracle> oracle;
  switch (cfg.oracle) {
    case OracleChoice::automatic:
      oracle = artin::best_oracle(g);
      break;
    case OracleChoice::none:
      break;
    case OracleChoice::free_reduction:
      if (!artin::all_labels_infinite(g))
        throw errors::PreconditionError("free reduction oracle needs every label infinite");
      oracle = artin::best_oracle(g);
      break;
    case OracleChoice::garside:
      if (!artin::type_a_path(g))
        throw errors::PreconditionError("garside oracle needs a type A path graph");
      oracle = artin::best_oracle(g);
      break;
  }

  ArtinCampaignResult r = cmd_artin_convexity(g, t, cfg.trials, cfg.seed, cfg.max_len,
                                              oracle ? &*oracle : nullptr);
  if (cfg.format == Format::records) {
    out << "oracle=" << (r.oracle_name.empty() ? "-" : r.oracle_name) << '\n';
    for (const ArtinTrialRow& row : r.rows) {
      out << "trial=" << row.index << " base=" << row.base_length
          << " scrambled=" << row.scrambled_length << " tau=" << row.tau_length
          << " fixes_base=" << yn(row.fixes_base) << " length_contract=" << yn(row.length_contract)
          << " theta=" << yn(row.theta_match) << " abelian=" << yn(row.abelian_match)
          << " oracle=" << opt_yn(row.oracle_equal) << " brute=" << opt_yn(row.brute_ok)
          << " pass=" << yn(row.pass) << '\n';
    }
    out << "verdict=" << (r.pass ? "PASS" : "FAIL") << '\n';
  } else {
    out << "oracle: " << (r.oracle_name.empty() ? "none" : r.oracle_name) << '\n';
    for (const ArtinTrialRow& row : r.rows) {
      out << "trial " << row.index << ": base " << row.base_length << " -> scrambled "
          << row.scrambled_length << " -> tau " << row.tau_length << ", "
          << (row.pass ? "ok" : "FAILED") << '\n';
    }
    out << "verdict: " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return r.pass ? kExitPass : kExitFail;
}

int do_salvetti(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  const bool finite = coxeter::is_finite_type(g, g.all());
  if (!finite && !cfg.radius)
    throw errors::PreconditionError("infinite group: --radius is required");

  salvetti::ComplexSummary s =
      finite && !cfg.radius ? salvetti::build_complex(g) : salvetti::build_complex(g, *cfg.radius);
  if (cfg.format == Format::records) {
    for (std::size_t d = 0; d < s.cells_by_dim.size(); ++d)
      out << "cells." << d << "=" << s.cells_by_dim[d] << '\n';
    out << "total=" << s.total() << '\n';
    out << "euler=" << s.euler() << '\n';
  } else {
    for (std::size_t d = 0; d < s.cells_by_dim.size(); ++d)
      out << "cells of dimension " << d << ": " << s.cells_by_dim[d] << '\n';
    out << "total cells: " << s.total() << '\n';
    out << "euler characteristic: " << s.euler() << '\n';
  }
  if (cfg.skeleton) {
    if (finite && !cfg.radius)
      salvetti::write_one_skeleton(g, out);
    else
      salvetti::write_one_skeleton(g, *cfg.radius, out);
  }
  return kExitPass;
}

int do_braid_nf(const RunConfig& cfg, std::ostream& out) {
  if (cfg.strands < 1) throw errors::PreconditionError("this subcommand requires --strands");
  braid::BraidWord w = braid::parse_braid_word(cfg.strands, cfg.word);
  braid::GarsideNormalForm nf = braid::garside_nf(w);
  if (cfg.format == Format::records) {
    out << "delta=" << nf.delta_power << '\n';
    out << "factors=" << nf.factors.size() << '\n';
    for (std::size_t i = 0; i < nf.factors.size(); ++i) {
      out << "factor." << i + 1 << "=";
      std::vector<int> word = braid::simple_word(nf.factors[i]);
      for (std::size_t k = 0; k < word.size(); ++k) out << (k ? " " : "") << 's' << word[k];
      out << '\n';
    }
  } else {
    out << "normal form: " << braid::format_garside(nf) << '\n';
  }
  return kExitPass;
}

int do_braid_delete(const RunConfig& cfg, std::ostream& out) {
  if (cfg.strands < 1) throw errors::PreconditionError("this subcommand requires --strands");
  braid::BraidWord w = braid::parse_braid_word(cfg.strands, cfg.word);
  std::vector<int> keep;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      keep.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw errors::ParseError("malformed keep list entry: " + cur);
    }
    cur.clear();
  };
  for (char c : cfg.keep) {
    if (c == ',')
      flush();
    else if (c != ' ')
      cur.push_back(c);
  }
  flush();
  braid::BraidWord result = braid::delete_strands(w, keep);
  if (cfg.format == Format::records) {
    out << "strands=" << result.strands() << '\n';
    out << "word=" << braid::format_braid_word(result) << '\n';
    out << "length=" << result.size() << '\n';
  } else {
    out << "word on " << result.strands() << " strands: " << braid::format_braid_word(result)
        << '\n';
  }
  return kExitPass;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "reduce") return do_reduce(cfg, out);
  if (cfg.subcommand == "decompose") return do_decompose(cfg, out);
  if (cfg.subcommand == "project") return do_project(cfg, out);
  if (cfg.subcommand == "coxeter-convexity") return do_coxeter_convexity(cfg, out);
  if (cfg.subcommand == "artin-convexity") return do_artin_convexity(cfg, out);
  if (cfg.subcommand == "salvetti") return do_salvetti(cfg, out);
  if (cfg.subcommand == "braid-nf") return do_braid_nf(cfg, out);
  if (cfg.subcommand == "braid-delete") return do_braid_delete(cfg, out);
  throw errors::ParseError("unknown subcommand: " + cfg.subcommand);
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cfg, out);
  } catch (const errors::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const errors::PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const errors::BoundError& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  }
}

} // namespace cli
