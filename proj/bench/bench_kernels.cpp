/*
 * Copyright 2026 The galois-sums Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial vs parallel timings for the brute-force sum and codebook kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include "CLI11.hpp"
#include "galois_sums/codebook.hpp"
#include "galois_sums/sums.hpp"

namespace gs = galois_sums;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, double diff) {
  std::printf("%-34s %12.2f %12.2f %8.2fx %10.2e\n", name, serial, parallel, serial / parallel, diff);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark"};
  int reps = 3;
  std::int64_t codebook_p = 5;
  app.add_option("--reps", reps, "repetitions, best time kept");
  app.add_option("--codebook-p", codebook_p, "codebook over Z_{p^2}");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads %d\n", gs::configured_threads());
  std::printf("%-34s %12s %12s %9s %10s\n", "kernel", "serial ms", "parallel ms", "speedup", "max diff");

  {
    const auto group = gs::CharacterGroup::create(gs::GaloisRing::create({3, 3, 2}));
    const auto chars = group->enumerate();
    const std::vector<gs::MultCharacter> triple{chars[7], chars[100], chars[333]};
    const gs::RingElement a = group->ring().one();
    gs::SumOptions serial{.term_cap = 10'000'000, .exec = gs::Execution::Serial};
    gs::SumOptions parallel{.term_cap = 10'000'000, .exec = gs::Execution::Parallel};
    gs::SumValue vs, vp;
    const double ts = time_ms([&] { vs = gs::jacobi_brute(triple, a, serial); }, reps);
    const double tp = time_ms([&] { vp = gs::jacobi_brute(triple, a, parallel); }, reps);
    row("jacobi m=3 over GR(27,729)", ts, tp, std::abs(vs.value - vp.value));
  }

  const auto group = gs::CharacterGroup::create(gs::GaloisRing::create({codebook_p, 2, 1}));
  gs::CodebookParams params;
  params.group = group;
  gs::Codebook cs, cp;
  params.exec = gs::Execution::Serial;
  const double bs = time_ms([&] { cs = gs::build_codebook(params); }, reps);
  params.exec = gs::Execution::Parallel;
  const double bp = time_ms([&] { cp = gs::build_codebook(params); }, reps);
  double diff = 0.0;
  for (std::size_t i = 0; i < cs.matrix.entries.size(); ++i) {
    diff = std::max(diff, std::abs(cs.matrix.entries[i] - cp.matrix.entries[i]));
  }
  char label[64];
  std::snprintf(label, sizeof label, "codebook rows over %s", group->ring().describe().c_str());
  row(label, bs, bp, diff);

  gs::EvalReport rs, rp;
  const double ss = time_ms([&] { rs = gs::imax_exhaustive(cs, gs::kDefaultPairCap, gs::Execution::Serial); }, 1);
  const double sp = time_ms([&] { rp = gs::imax_exhaustive(cs, gs::kDefaultPairCap, gs::Execution::Parallel); }, 1);
  std::snprintf(label, sizeof label, "pair scan N=%lld K=%lld", static_cast<long long>(rs.n),
                static_cast<long long>(rs.k));
  row(label, ss, sp, std::abs(rs.imax_measured - rp.imax_measured));
  return 0;
}
