#pragma once

#include <iosfwd>
#include <string>

namespace exwit::app {

struct CommandArgs {
  std::string config;  // JSON manifest path
  std::string preset;  // table1 | fig4 | fig5 | fig6 | figs7-9 | trace | witness
  std::string grid;    // start:stop:count
  std::string out = ".";
  std::string engine;  // exact | pert2 | pert1
  std::string env;     // markov | nonmarkov
  std::string only;    // verify: one check group
  std::string fault;   // verify: injected fault
  int workers = 0;     // 0 picks the hardware concurrency
};

int cmd_run(const CommandArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommandArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandArgs& args, std::ostream& out, std::ostream& err);

// Parses argv with subcommands run / sweep / verify and dispatches.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace exwit::app
