#include "exwit/app/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "exwit/app/checks.hpp"
#include "exwit/app/products.hpp"

namespace exwit::app {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("--out", "cannot write '" + path.string() + "'");
  f << content;
}

// Builds the manifest from --config (or defaults) and applies flag overrides.
RunManifest resolve(const CommandArgs& a) {
  RunManifest m = a.config.empty() ? default_manifest() : load_manifest(a.config);
  if (!a.engine.empty()) m.config.engine = parse_engine(a.engine, "--engine");
  if (!a.env.empty()) m.config.environment = parse_environment(a.env, "--env");
  if (!a.grid.empty()) m.sweep = EtaGrid::parse(a.grid, "--grid");
  m.config.validate();
  return m;
}

int workers(const CommandArgs& a) { return a.workers > 0 ? a.workers : default_workers(); }

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceError& e) {
    err << "error: resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace

int cmd_run(const CommandArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunManifest m = resolve(a);
    std::vector<std::string> products = m.outputs;
    if (!a.preset.empty()) {
      const auto& known = known_products();
      if (std::find(known.begin(), known.end(), a.preset) == known.end())
        throw ValidationError("--preset", "unknown preset '" + a.preset + "'");
      products = {a.preset};
    } else if (a.config.empty()) {
      throw ValidationError("run", "needs --config or --preset");
    }
    if (products.empty()) products = {"trace", "witness"};

    const fs::path dir(a.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ValidationError("--out", "cannot create '" + dir.string() + "'");
    const EtaGrid grid = m.sweep.value_or(EtaGrid{});

    for (const auto& p : products) {
      if (p == "table1") {
        write_file(dir / "table1.csv", table1_csv(table1_rows(0.1)));
        out << "wrote " << (dir / "table1.csv").string() << "\n";
      } else if (p == "fig4" || p == "fig5" || p == "fig6") {
        write_file(dir / (p + ".csv"), series_csv(figure_series(p, grid, workers(a))));
        out << "wrote " << (dir / (p + ".csv")).string() << "\n";
      } else if (p == "figs7-9") {
        for (const char* f : {"fig7", "fig8", "fig9"}) {
          write_file(dir / (std::string(f) + ".csv"), series_csv(figure_series(f, grid, workers(a))));
          out << "wrote " << (dir / (std::string(f) + ".csv")).string() << "\n";
        }
      } else if (p == "trace") {
        write_file(dir / "trace.jsonl", trace_jsonl(run_protocol(m.config)));
        out << "wrote " << (dir / "trace.jsonl").string() << "\n";
      } else if (p == "witness") {
        const ProtocolTrace tr = run_protocol(m.config);
        const WitnessReport rep = evaluate_witness(tr);
        write_file(dir / "witness.csv", witness_csv({{m.config.eta, rep}}));
        out << "witness: coherence " << format_double(rep.coherence) << ", residual "
            << format_double(rep.conservation_residual) << ", threshold " << format_double(rep.threshold)
            << " (declared convention 1e-6 t J1), verdict " << to_string(rep.verdict) << "\n";
        out << "wrote " << (dir / "witness.csv").string() << "\n";
      }
    }
    return static_cast<int>(kOk);
  });
}

int cmd_sweep(const CommandArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunManifest m = resolve(a);
    const EtaGrid grid = m.sweep.value_or(EtaGrid{0.0, kHalfPi, 65});
    const fs::path dir(a.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ValidationError("--out", "cannot create '" + dir.string() + "'");
    const auto rows = witness_sweep(m.config, grid.points(), workers(a));
    write_file(dir / "witness.csv", witness_csv(rows));
    int achieved = 0;
    for (const auto& r : rows) achieved += r.report.verdict == Verdict::TaskAchieved;
    out << "swept " << rows.size() << " eta values (" << to_string(m.config.environment) << ", "
        << to_string(m.config.engine) << "): " << achieved << " achieved\n";
    out << "wrote " << (dir / "witness.csv").string() << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const CommandArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!a.only.empty()) {
      const auto& g = check_groups();
      if (std::find(g.begin(), g.end(), a.only) == g.end()) throw ValidationError("--only", "unknown group '" + a.only + "'");
    }
    if (!a.fault.empty()) {
      const auto& f = known_faults();
      if (std::find(f.begin(), f.end(), a.fault) == f.end())
        throw ValidationError("--inject-fault", "unknown fault '" + a.fault + "'");
    }
    const auto results = run_checks({a.only, a.fault});
    int failed = 0;
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.group << "/" << r.name << "  " << r.detail << "\n";
      failed += !r.pass;
    }
    out << results.size() << " checks, " << failed << " failed\n";
    return failed ? static_cast<int>(kVerification) : static_cast<int>(kOk);
  });
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision-model exciton transfer: coefficients, sweeps and witness checks"};
  app.require_subcommand(1);
  CommandArgs a;

  auto common = [&](CLI::App* c) {
    c->add_option("--config", a.config, "JSON run manifest");
    c->add_option("--grid", a.grid, "eta grid start:stop:count");
    c->add_option("--out", a.out, "output directory");
    c->add_option("--engine", a.engine, "exact | pert2 | pert1");
    c->add_option("--env", a.env, "markov | nonmarkov");
    c->add_option("--workers", a.workers, "worker threads for sweeps");
  };
  auto* run = app.add_subcommand("run", "run a manifest or a preset product");
  common(run);
  run->add_option("--preset", a.preset, "table1 | fig4 | fig5 | fig6 | figs7-9 | trace | witness");
  auto* sweep = app.add_subcommand("sweep", "witness verdicts over an eta grid");
  common(sweep);
  auto* verify = app.add_subcommand("verify", "run the invariant and regression checks");
  verify->add_option("--only", a.only, "conservation | oracles | table1 | analytics | witness | protocol");
  verify->add_option("--inject-fault", a.fault, "cos-exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  if (*run) return cmd_run(a, out, err);
  if (*sweep) return cmd_sweep(a, out, err);
  return cmd_verify(a, out, err);
}

}  // namespace exwit::app
