#pragma once

#include <array>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "exwit/analytics.hpp"
#include "exwit/app/manifest.hpp"
#include "exwit/witness.hpp"

namespace exwit::app {

// Shortest round-trip decimal; identical bytes for identical doubles.
std::string format_double(double x);

struct Table1Row {
  std::string stage;  // "l:m", collisions done on monomers 1 and 2
  double markov = 0.0;
  Complex F, G;
};

std::vector<Table1Row> table1_rows(double eta = 0.1);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct Series {
  std::string name;
  std::array<std::string, 3> header;
  std::vector<std::array<double, 3>> rows;
};

// fig4 | fig5 | fig6 | fig7 | fig8 | fig9
Series figure_series(const std::string& figure, const EtaGrid& grid, int workers);
std::string series_csv(const Series& s);

struct WitnessRow {
  double eta = 0.0;
  WitnessReport report;
};

std::vector<WitnessRow> witness_sweep(const ChainConfig& base, const std::vector<double>& etas, int workers);
std::string witness_csv(const std::vector<WitnessRow>& rows);

// One JSON record per phase: iteration, phase, coefficient table, Bloch table.
std::string trace_jsonl(const ProtocolTrace& trace);

int default_workers();

// Evaluates fn(i) for i in [0, n) on a small pool; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(size_t n, int workers, F&& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace exwit::app
