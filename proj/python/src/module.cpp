#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exwit/analytics.hpp"
#include "exwit/witness.hpp"

namespace py = pybind11;
using namespace exwit;

namespace {

py::tuple bloch_tuple(const BlochVector& v) { return py::make_tuple(v.x, v.y, v.z); }

BlochVector to_bloch(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

py::dict hopping_dict(const HoppingCoefficients& h) {
  py::dict d;
  d["F"] = h.F;
  d["G"] = h.G;
  d["s"] = h.s;
  d["markov"] = h.markov;
  d["l"] = h.l;
  d["m"] = h.m;
  return d;
}

ChainConfig make_config(int n, int m, double eta, Environment env, Engine engine, double t,
                        const std::optional<std::vector<double>>& couplings,
                        const std::optional<std::vector<double>>& fields, CollisionOrder order) {
  ChainConfig c = ChainConfig::make(n, m, eta, env, engine, t);
  if (couplings) c.spec.couplings = *couplings;
  if (fields) c.spec.fields = *fields;
  c.order = order;
  return c;
}

py::dict trace_summary(const ProtocolTrace& tr) {
  py::dict coh;
  for (const auto& [k, v] : tr.photon.coherences) coh[py::make_tuple(k.first, k.second)] = v;
  py::dict d;
  d["populations"] = tr.photon.populations;
  d["multi_excitation"] = tr.photon.multi_excitation;
  d["coherences"] = coh;
  d["register_state"] = tr.photon.register_state;
  d["iterations"] = tr.iterations();
  d["conservation_drift"] = tr.conservation_drift;
  d["generator_residual"] = tr.generator_residual;
  return d;
}

py::dict witness_dict(const WitnessReport& r) {
  py::dict d;
  d["verdict"] = to_string(r.verdict);
  d["achieved"] = r.verdict == Verdict::TaskAchieved;
  d["coherence"] = r.coherence;
  d["threshold"] = r.threshold;
  d["conservation_residual"] = r.conservation_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qubit-chain exciton transfer with collision-model decoherence";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_NotImplementedError);

  py::enum_<Environment>(m, "Environment")
      .value("MARKOV", Environment::Markov)
      .value("NON_MARKOV", Environment::NonMarkov);
  py::enum_<Engine>(m, "Engine")
      .value("EXACT", Engine::Exact)
      .value("PERTURBATIVE1", Engine::Perturbative1)
      .value("PERTURBATIVE2", Engine::Perturbative2);
  py::enum_<CollisionOrder>(m, "CollisionOrder")
      .value("MONOMER_MAJOR", CollisionOrder::MonomerMajor)
      .value("RESERVOIR_MAJOR", CollisionOrder::ReservoirMajor);

  // linear algebra and channels
  m.def("partial_trace",
        [](const ComplexMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
          return partial_trace(rho, dims, keep);
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def("pswap_unitary", &pswap_unitary, py::arg("eta"));
  m.def("bloch_pswap_update",
        [](const std::array<double, 3>& s, const std::array<double, 3>& r, double eta) {
          const CollisionOutcome o = bloch_pswap_update(to_bloch(s), to_bloch(r), eta);
          return py::make_tuple(bloch_tuple(o.system), bloch_tuple(o.reservoir));
        },
        py::arg("s"), py::arg("r"), py::arg("eta"));
  m.def("homogenize",
        [](const std::array<double, 3>& s, int n_reservoir, double eta, Environment env) {
          const auto h = homogenize_monomer(to_bloch(s), ReservoirState::maximally_mixed(n_reservoir, env, eta));
          py::list res;
          for (const auto& q : h.reservoir.qubits) res.append(bloch_tuple(q));
          return py::make_tuple(bloch_tuple(h.system), res);
        },
        py::arg("s"), py::arg("n_reservoir"), py::arg("eta"), py::arg("environment") = Environment::Markov);

  // dynamics
  m.def("xx_hamiltonian",
        [](const std::vector<double>& couplings, const std::vector<double>& fields) {
          return build_xx_hamiltonian({static_cast<int>(fields.size()), couplings, fields});
        },
        py::arg("couplings"), py::arg("fields"));

  // protocol and witness
  const auto protocol_args = [] {
    return std::make_tuple(py::arg("n_monomers") = 3, py::arg("n_reservoir") = 3, py::arg("eta") = 0.1,
                           py::arg("environment") = Environment::NonMarkov, py::arg("engine") = Engine::Perturbative2,
                           py::arg("t") = 1e-3, py::arg("couplings") = py::none(), py::arg("fields") = py::none(),
                           py::arg("order") = CollisionOrder::MonomerMajor);
  };
  std::apply(
      [&](auto... a) {
        m.def("run_protocol",
              [](int n, int mr, double eta, Environment env, Engine engine, double t,
                 std::optional<std::vector<double>> j, std::optional<std::vector<double>> b, CollisionOrder order) {
                return trace_summary(run_protocol(make_config(n, mr, eta, env, engine, t, j, b, order)));
              },
              a...);
        m.def("evaluate_witness",
              [](int n, int mr, double eta, Environment env, Engine engine, double t,
                 std::optional<std::vector<double>> j, std::optional<std::vector<double>> b, CollisionOrder order) {
                return witness_dict(evaluate_witness(run_protocol(make_config(n, mr, eta, env, engine, t, j, b, order))));
              },
              a...);
      },
      protocol_args());
  m.def("classical_nogo_sharpness",
        [](double alpha, double beta, double gamma, double t, int q_bit, int m_bit) {
          return classical_nogo_sharpness({alpha, beta, gamma}, t, q_bit, m_bit);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("t"), py::arg("q_bit") = 0,
        py::arg("m_bit") = 0);

  // analytics
  m.def("markov_damping", &markov_damping, py::arg("k_collisions"), py::arg("eta"));
  m.def("compute_fgs", [](double eta) { return hopping_dict(compute_FGs(eta)); }, py::arg("eta"));
  m.def("fg_stages",
        [](double eta, Environment env, CollisionOrder order) {
          py::list out;
          for (const auto& st : compute_fg_stages(eta, env, order).stages) out.append(hopping_dict(st));
          return out;
        },
        py::arg("eta"), py::arg("environment") = Environment::NonMarkov,
        py::arg("order") = CollisionOrder::ReservoirMajor);
  m.def("reservoir_trace",
        [](double eta) {
          const auto tr = reservoir_trace(eta);
          return py::make_tuple(tr.reservoir_z, tr.monomer_z);
        },
        py::arg("eta"));
  m.def("markov_final_state",
        [](int n, int mr, double eta, double t, const std::vector<double>& j, const std::vector<double>& b) {
          py::list out;
          for (const auto& term : markov_final_state(n, mr, eta, t, j, b)) {
            py::dict d;
            d["label"] = term.label;
            d["cos_exponent"] = term.cos_exponent;
            d["t_order"] = term.t_order;
            d["prefactor"] = term.prefactor;
            d["value"] = term.value;
            out.append(d);
          }
          return out;
        },
        py::arg("n_monomers"), py::arg("n_reservoir"), py::arg("eta"), py::arg("t"), py::arg("couplings"),
        py::arg("fields"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#endif
}
