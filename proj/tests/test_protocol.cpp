#include <doctest.h>

#include <cmath>

#include "exwit/protocol.hpp"

using namespace exwit;

TEST_CASE("photon injection excites the first monomer") {
  const ChainConfig cfg = ChainConfig::make(3, 3, 0.1, Environment::Markov);
  const auto bloch = site_bloch_vectors(inject_photon(cfg));
  REQUIRE(bloch.size() == 3);
  CHECK(bloch[0].z == -1.0);
  CHECK(bloch[1].z == 1.0);
  CHECK(bloch[2].z == 1.0);
}

TEST_CASE("first markov decoherence round damps every monomer by cos^2M") {
  const double c6 = std::pow(std::cos(0.1), 6);
  const ProtocolTrace tr = run_protocol(ChainConfig::make(3, 3, 0.1, Environment::Markov));
  const auto& b = tr.find(1, Phase::Decoherence).chain_bloch;
  CHECK(std::abs(b[0].z + c6) < 1e-14);
  CHECK(std::abs(b[1].z - c6) < 1e-14);
  CHECK(std::abs(b[2].z - c6) < 1e-14);
}

TEST_CASE("second markov round multiplies the first hop by cos^4M") {
  for (int m : {1, 2, 3}) {
    const ProtocolTrace tr = run_protocol(ChainConfig::make(3, m, 0.2, Environment::Markov));
    const Complex before = tr.find(1, Phase::Transfer).hops.at({0, 1}).antisymmetric;
    const Complex after = tr.find(2, Phase::Decoherence).hops.at({0, 1}).antisymmetric;
    CHECK(std::abs(after / before - std::pow(std::cos(0.2), 4 * m)) < 1e-12);
  }
}

TEST_CASE("recombination with no coupling and no transfer keeps the photon on site one") {
  ChainConfig cfg = ChainConfig::make(3, 2, 0.0, Environment::NonMarkov, Engine::Exact, 0.0);
  const ProtocolTrace tr = run_protocol(cfg);
  REQUIRE(tr.photon.populations.size() == 4);
  CHECK(std::abs(tr.photon.populations[1] - 1.0) < 1e-14);
  CHECK(std::abs(tr.photon.populations[0]) < 1e-14);
  CHECK(std::abs(tr.photon.total_weight() - 1.0) < 1e-12);
}

TEST_CASE("one iteration per monomer, the last one recombination only") {
  for (int n : {2, 3, 4}) {
    const ProtocolTrace tr = run_protocol(ChainConfig::make(n, 2, 0.1, Environment::NonMarkov));
    CHECK(tr.complete);
    CHECK(tr.iterations() == n);
    CHECK_NOTHROW(tr.find(n, Phase::Recombination));
    CHECK_THROWS_AS(tr.find(n, Phase::Decoherence), StructuralError);
    for (int k = 1; k < n; ++k) {
      CHECK_NOTHROW(tr.find(k, Phase::Decoherence));
      CHECK_NOTHROW(tr.find(k, Phase::Transfer));
    }
  }
}

TEST_CASE("total Z bookkeeping is conserved") {
  for (auto env : {Environment::Markov, Environment::NonMarkov})
    for (auto engine : {Engine::Exact, Engine::Perturbative2}) {
      ChainConfig cfg = ChainConfig::make(4, 2, 0.4, env, engine, 0.05);
      cfg.spec.fields = {0.3, -0.2, 0.1, 0.5};
      const ProtocolTrace tr = run_protocol(cfg);
      CHECK(tr.conservation_drift < 1e-12);
      CHECK(tr.generator_residual < 1e-12);
    }
}

TEST_CASE("exact engine keeps the chain state a density matrix") {
  const ProtocolTrace tr = run_protocol(ChainConfig::make(3, 3, 0.7, Environment::NonMarkov, Engine::Exact, 0.5));
  for (const auto& p : tr.phases) {
    CHECK(std::abs(p.chain_state.trace() - Complex(1.0)) < 1e-12);
    CHECK(hermiticity_error(p.chain_state) < 1e-12);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p.chain_state);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("collision order changes intermediate stages but not the result") {
  ChainConfig a = ChainConfig::make(3, 3, 0.3, Environment::NonMarkov, Engine::Exact, 0.2);
  ChainConfig b = a;
  b.order = CollisionOrder::ReservoirMajor;
  const ProtocolTrace ta = run_protocol(a), tb = run_protocol(b);
  CHECK(max_abs_diff(ta.photon.register_state, tb.photon.register_state) < 1e-12);
}

TEST_CASE("environments coincide at zero coupling") {
  const ProtocolTrace m = run_protocol(ChainConfig::make(3, 3, 0.0, Environment::Markov));
  const ProtocolTrace n = run_protocol(ChainConfig::make(3, 3, 0.0, Environment::NonMarkov));
  CHECK(max_abs_diff(m.photon.register_state, n.photon.register_state) < 1e-15);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(ChainConfig::make(10, 3, 0.1, Environment::Markov).validate(), ResourceError);
  CHECK_NOTHROW(ChainConfig::make(9, 3, 0.1, Environment::Markov).validate());
  CHECK_THROWS_AS(ChainConfig::make(1, 3, 0.1, Environment::Markov).validate(), StructuralError);
  CHECK_THROWS_AS(ChainConfig::make(3, 0, 0.1, Environment::Markov).validate(), StructuralError);
  ChainConfig bad = ChainConfig::make(3, 3, 0.1, Environment::Markov);
  bad.spec = XXChainSpec::uniform(4);
  CHECK_THROWS_AS(bad.validate(), StructuralError);
  CHECK_THROWS_AS(run_protocol(ChainConfig::make(12, 3, 0.1, Environment::Markov)), ResourceError);
}
