#include "exwit/app/products.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace exwit::app {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

// --- table --------------------------------------------------------------------

std::vector<Table1Row> table1_rows(double eta) {
  const FGResult fg = compute_fg_stages(eta, Environment::NonMarkov, CollisionOrder::ReservoirMajor);
  std::vector<Table1Row> rows;
  for (const auto& st : fg.stages)
    rows.push_back({std::to_string(st.l) + ":" + std::to_string(st.m), st.markov, st.F, st.G});
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "stage,markov,F_re,F_im,G_re,G_im\n";
  for (const auto& r : rows)
    out += r.stage + "," + format_double(r.markov) + "," + format_double(r.F.real()) + "," +
           format_double(r.F.imag()) + "," + format_double(r.G.real()) + "," + format_double(r.G.imag()) + "\n";
  return out;
}

// --- curves -------------------------------------------------------------------

Series figure_series(const std::string& figure, const EtaGrid& grid, int workers) {
  Series s;
  s.name = figure;
  std::array<double, 3> (*row)(double) = nullptr;
  if (figure == "fig4") {
    s.header = {"eta", "F", "cos18"};
    row = [](double e) -> std::array<double, 3> { return {e, compute_FGs(e).F.real(), std::pow(std::cos(e), 18)}; };
  } else if (figure == "fig5") {
    s.header = {"eta", "F", "G_im"};
    row = [](double e) -> std::array<double, 3> {
      const auto h = compute_FGs(e);
      return {e, h.F.real(), h.G.imag()};
    };
  } else if (figure == "fig6") {
    s.header = {"eta", "s", "cos12"};
    row = [](double e) -> std::array<double, 3> { return {e, compute_FGs(e).s, std::pow(std::cos(e), 12)}; };
  } else if (figure == "fig7") {
    s.header = {"eta", "F_re", "F_im"};
    row = [](double e) -> std::array<double, 3> {
      const auto h = compute_FGs(e);
      return {e, h.F.real(), h.F.imag()};
    };
  } else if (figure == "fig8") {
    s.header = {"eta", "G_re", "G_im"};
    row = [](double e) -> std::array<double, 3> {
      const auto h = compute_FGs(e);
      return {e, h.G.real(), h.G.imag()};
    };
  } else if (figure == "fig9") {
    s.header = {"eta", "s", "s_reference"};
    row = [](double e) -> std::array<double, 3> { return {e, compute_FGs(e).s, reference_s_closed_form(e)}; };
  } else {
    throw ValidationError("--preset", "unknown figure '" + figure + "'");
  }
  const auto etas = grid.points();
  s.rows = parallel_map<std::array<double, 3>>(etas.size(), workers, [&](size_t i) { return row(etas[i]); });
  return s;
}

std::string series_csv(const Series& s) {
  std::string out = s.header[0] + "," + s.header[1] + "," + s.header[2] + "\n";
  for (const auto& r : s.rows) out += format_double(r[0]) + "," + format_double(r[1]) + "," + format_double(r[2]) + "\n";
  return out;
}

// --- witness ------------------------------------------------------------------

std::vector<WitnessRow> witness_sweep(const ChainConfig& base, const std::vector<double>& etas, int workers) {
  base.validate();
  return parallel_map<WitnessRow>(etas.size(), workers, [&](size_t i) {
    ChainConfig c = base;
    c.eta = etas[i];
    return WitnessRow{etas[i], evaluate_witness(run_protocol(c))};
  });
}

std::string witness_csv(const std::vector<WitnessRow>& rows) {
  std::string out = "eta,coherence,residual,verdict\n";
  for (const auto& r : rows)
    out += format_double(r.eta) + "," + format_double(r.report.coherence) + "," +
           format_double(r.report.conservation_residual) + "," + to_string(r.report.verdict) + "\n";
  return out;
}

// --- trace --------------------------------------------------------------------

std::string trace_jsonl(const ProtocolTrace& trace) {
  using nlohmann::ordered_json;
  const ChainConfig& c = trace.config;
  std::string out;
  auto bloch = [](const BlochVector& b) { return ordered_json::array({b.x, b.y, b.z}); };
  auto cplx = [](Complex z) { return ordered_json::array({z.real(), z.imag()}); };

  ordered_json head;
  head["record"] = "config";
  head["n_monomers"] = c.n_monomers;
  head["n_reservoir"] = c.n_reservoir;
  head["eta"] = c.eta;
  head["t"] = c.t;
  head["couplings"] = c.spec.couplings;
  head["fields"] = c.spec.fields;
  head["environment"] = to_string(c.environment);
  head["engine"] = to_string(c.engine);
  head["collision_order"] = to_string(c.order);
  out += head.dump() + "\n";

  for (const auto& p : trace.phases) {
    ordered_json r;
    r["record"] = "phase";
    r["iteration"] = p.iteration;
    r["phase"] = to_string(p.phase);
    ordered_json coeff = ordered_json::array();
    for (const auto& [ij, h] : p.hops)
      coeff.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"A", cplx(h.antisymmetric)}, {"S", cplx(h.symmetric)}});
    r["coefficients"] = coeff;
    ordered_json chain = ordered_json::array(), res = ordered_json::array();
    for (const auto& b : p.chain_bloch) chain.push_back(bloch(b));
    for (const auto& b : p.reservoir) res.push_back(bloch(b));
    r["bloch"] = {{"chain", chain}, {"reservoir", res}};
    r["conserved_z"] = p.conserved_z;
    r["collisions"] = p.collisions.size();
    out += r.dump() + "\n";
  }

  ordered_json ph;
  ph["record"] = "photon";
  ph["populations"] = trace.photon.populations;
  ph["multi_excitation"] = trace.photon.multi_excitation;
  ordered_json coh = ordered_json::array();
  for (const auto& [ij, z] : trace.photon.coherences)
    coh.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"c", cplx(z)}});
  ph["coherences"] = coh;
  ph["conservation_drift"] = trace.conservation_drift;
  ph["generator_residual"] = trace.generator_residual;
  out += ph.dump() + "\n";
  return out;
}

}  // namespace exwit::app
