// Benchmark: OpenMP kernels against their serial reference implementations.
// Each row re-runs both variants, reports average wall time, and checks that
// the results agree exactly.
#include <chrono>
#include <cstdio>

#include "er/field.hpp"
#include "er/graph.hpp"
#include "er/polarity.hpp"

using namespace er;
using steady = std::chrono::steady_clock;

namespace {

double ms_since(steady::time_point t0) {
  return std::chrono::duration<double, std::milli>(steady::now() - t0).count();
}

Field make_field(std::uint64_t q) {
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned n = 0;
  for (std::uint64_t v = q; v > 1; v /= p) ++n;
  return Field(fe(p), n);
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  if (a.loops() != b.loops()) return false;
  for (std::uint32_t u = 0; u < a.n(); ++u)
    for (std::uint32_t v = u + 1; v < a.n(); ++v)
      if (a.test(u, v) != b.test(u, v)) return false;
  return true;
}

void row(const char* kernel, std::uint64_t q, std::uint32_t n, double serial_ms,
         double parallel_ms, bool equal) {
  std::printf("%-18s %6llu %8u %12.2f %12.2f %8.2fx %6s\n", kernel,
              static_cast<unsigned long long>(q), n, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "yes" : "NO");
  std::fflush(stdout);
}

constexpr int kReps = 3;

}  // namespace

int main() {
  std::printf("%-18s %6s %8s %12s %12s %9s %6s\n", "kernel", "q", "n", "serial_ms",
              "parallel_ms", "speedup", "equal");
  bool all_equal = true;

  for (std::uint64_t q : {25, 49, 81}) {
    Field F = make_field(q);
    double sm = 0, pm = 0;
    Graph s(1), p(1);
    for (int i = 0; i < kReps; ++i) {
      auto t0 = steady::now();
      s = build_er_reference(F);
      sm += ms_since(t0);
      t0 = steady::now();
      p = build_er(F);
      pm += ms_since(t0);
    }
    bool eq = graphs_equal(s, p);
    all_equal = all_equal && eq;
    row("polarity build", q, s.n(), sm / kReps, pm / kReps, eq);
  }

  for (std::uint64_t q : {25, 49, 81}) {
    Field F = make_field(q);
    double sm = 0, pm = 0;
    Graph s(1), p(1);
    for (int i = 0; i < kReps; ++i) {
      auto t0 = steady::now();
      s = build_gq_reference(F);
      sm += ms_since(t0);
      t0 = steady::now();
      p = build_gq(F);
      pm += ms_since(t0);
    }
    bool eq = graphs_equal(s, p);
    all_equal = all_equal && eq;
    row("affine build", q, s.n(), sm / kReps, pm / kReps, eq);
  }

  for (std::uint64_t q : {25, 49}) {
    Field F = make_field(q);
    Graph g = build_er(F);
    double sm = 0, pm = 0;
    bool rs = false, rp = false;
    for (int i = 0; i < kReps; ++i) {
      auto t0 = steady::now();
      rs = c4_exists_serial(g);
      sm += ms_since(t0);
      t0 = steady::now();
      rp = c4_exists(g);
      pm += ms_since(t0);
    }
    bool eq = rs == rp;
    all_equal = all_equal && eq;
    row("four-cycle scan", q, g.n(), sm / kReps, pm / kReps, eq);
  }

  std::printf("%s\n", all_equal ? "all kernels agree with their references"
                                : "KERNEL MISMATCH");
  return all_equal ? 0 : 1;
}
