#include "parabolic/cli.hpp"

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

namespace {

void add_common(CLI::App* sub, cli::RunConfig& cfg, bool needs_graph) {
  if (needs_graph) sub->add_option("--graph", cfg.graph_file, "graph description file");
  static const std::map<std::string, cli::Format> formats{{"text", cli::Format::text},
                                                          {"records", cli::Format::records}};
  sub->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"parabolic: Coxeter and Artin group computations"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string target;
  bool have_target = false;

  auto* reduce = app.add_subcommand("reduce", "normal form of a Coxeter group word");
  add_common(reduce, cfg, true);
  reduce->add_option("--word", cfg.word, "word in the generators")->required();

  auto* decompose = app.add_subcommand("decompose", "split a word across a parabolic subgroup");
  add_common(decompose, cfg, true);
  decompose->add_option("--word", cfg.word, "word in the generators")->required();
  decompose->add_option("--target", target, "comma separated generator subset")->required();

  auto* project = app.add_subcommand("project", "retract an Artin word onto a parabolic");
  add_common(project, cfg, true);
  project->add_option("--word", cfg.word, "signed word in the generators")->required();
  project->add_option("--target", target, "comma separated generator subset")->required();

  auto* cox = app.add_subcommand("coxeter-convexity", "exhaustive geodesic convexity check");
  add_common(cox, cfg, true);
  cox->add_option("--target", target, "subset to check (default: all subsets)");
  cox->add_option("--max-elements", cfg.max_elements, "group enumeration cap");

  auto* art = app.add_subcommand("artin-convexity", "randomized Artin convexity campaign");
  add_common(art, cfg, true);
  art->add_option("--target", target, "comma separated generator subset")->required();
  art->add_option("--trials", cfg.trials, "number of random trials");
  art->add_option("--seed", cfg.seed, "random seed");
  art->add_option("--max-len", cfg.max_len, "maximum base word length");
  static const std::map<std::string, cli::OracleChoice> oracles{
      {"auto", cli::OracleChoice::automatic},
      {"none", cli::OracleChoice::none},
      {"free", cli::OracleChoice::free_reduction},
      {"garside", cli::OracleChoice::garside}};
  art->add_option("--oracle", cfg.oracle, "equality oracle")
      ->transform(CLI::CheckedTransformer(oracles, CLI::ignore_case));

  auto* sal = app.add_subcommand("salvetti", "cell census of the Salvetti complex");
  add_common(sal, cfg, true);
  int radius = -1;
  sal->add_option("--radius", radius, "truncate at this word length (infinite groups)");
  sal->add_flag("--skeleton", cfg.skeleton, "also dump the oriented 1-skeleton");
  sal->add_option("--max-elements", cfg.max_elements, "group enumeration cap");

  auto* bnf = app.add_subcommand("braid-nf", "left greedy normal form of a braid word");
  add_common(bnf, cfg, false);
  bnf->add_option("--strands", cfg.strands, "number of strands")->required();
  bnf->add_option("--word", cfg.word, "braid word, letters s1 s2 ... s1^-1 ...")->required();

  auto* bdel = app.add_subcommand("braid-delete", "delete strands from a pure-on-kept braid");
  add_common(bdel, cfg, false);
  bdel->add_option("--strands", cfg.strands, "number of strands")->required();
  bdel->add_option("--word", cfg.word, "braid word")->required();
  bdel->add_option("--keep", cfg.keep, "comma separated strand numbers to keep")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  for (CLI::App* sub : {reduce, decompose, project, cox, art, sal, bnf, bdel}) {
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      const CLI::Option* opt = sub->get_option_no_throw("--target");
      have_target = opt != nullptr && opt->count() > 0;
    }
  }
  if (have_target) cfg.target = target;
  if (sal->parsed() && sal->count("--radius") > 0) cfg.radius = radius;

  return cli::run(cfg, std::cout, std::cerr);
}
