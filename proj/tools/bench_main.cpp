// Timing comparison of the serial and OpenMP paths: the product predicate
// table fill (the only kernel worth parallelizing) and a generator-driven
// suite run.  The serial path is the reference; outputs must match exactly.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmt/gen.hpp"
#include "cmt/harness.hpp"
#include "cmt/product.hpp"
#include "cmt/rng.hpp"

using namespace cmt;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-28s %10.1f %12.1f %9.2fx   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %10s %12s %10s\n", "benchmark", "serial ms", "parallel ms", "speedup");

  // product fill: four factors of size 8, two binary predicates
  {
    Rng rng(41);
    auto v = std::make_shared<Vocabulary>();
    v->add_predicate("P", 2);
    v->add_predicate("Q", 2);
    v->add_function("F", 1);
    std::vector<GeneralStructure> factors;
    for (int i = 0; i < 4; ++i) factors.push_back(gen_structure(rng, v, 8, Grid(3)));
    IndexedFamily fam(std::move(factors));
    Filter f(fam.size(), {0, 2});

    ProductOptions serial{1u << 24, false};
    ProductOptions parallel{1u << 24, true};

    auto t0 = std::chrono::steady_clock::now();
    GeneralStructure a = pre_reduced_product(fam, f, serial);
    double ts = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    GeneralStructure b = pre_reduced_product(fam, f, parallel);
    double tp = ms_since(t0);

    bool same = true;
    for (size_t p = 0; p < v->predicates().size() && same; ++p)
      same = a.pred_table((int)p) == b.pred_table((int)p);
    row("product fill (4096^2 rows)", ts, tp, same);
  }

  // suite trials: independent seeded checks, embarrassingly parallel
  {
    SuiteOptions opts;
    opts.spec.trials = 20000;
    opts.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult a = run_suite("conditional-preservation", opts);
    double ts = ms_since(t0);

    opts.parallel = true;
    t0 = std::chrono::steady_clock::now();
    SuiteResult b = run_suite("conditional-preservation", opts);
    double tp = ms_since(t0);

    row("preservation suite (20000)", ts, tp, a.pass == b.pass && a.report_json == b.report_json);
  }

  {
    SuiteOptions opts;
    opts.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult a = run_suite("basic-lemma", opts);
    double ts = ms_since(t0);

    opts.parallel = true;
    t0 = std::chrono::steady_clock::now();
    SuiteResult b = run_suite("basic-lemma", opts);
    double tp = ms_since(t0);

    row("threshold scan (den 8)", ts, tp, a.pass == b.pass && a.report_json == b.report_json);
  }
  return 0;
}
