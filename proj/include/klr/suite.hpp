#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <exception>
#include <iosfwd>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace klr {

struct SuiteOptions {
  int lambda_bound = 4;     // every coordinate of Lambda
  int alpha_height = 6;     // crystal / Freudenthal / PD sweep
  int gdim_height = 4;      // transpose symmetry over all pairs
  int associativity_triples = 1000;
  int lemma_samples = 2;
  std::uint64_t seed = 20240607;
  unsigned threads = 0;     // 0 picks hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  // Conjecture probes and findings. Never part of pass/fail.
  std::vector<nlohmann::json> observations;

  bool passed() const;
  // Criteria first, then observations; fixed order.
  std::vector<nlohmann::json> lines() const;
};

// The small grid: data A_2, B_2, G_2, rank 1, affine A_1 and A_2, plus the
// engine instances. progress (if given) receives one line per finished task.
SuiteReport run_small_grid(const SuiteOptions& options, std::ostream* progress = nullptr);

// results[i] = jobs[i](), computed on at most `threads` workers. The first
// exception thrown by a job is rethrown after all workers stop.
template <class R>
std::vector<R> run_pool(const std::vector<std::function<R()>>& jobs, unsigned threads,
                        const std::function<void(std::size_t)>& done = {}) {
  std::vector<R> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        results[k] = jobs[k]();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        next = jobs.size();
        return;
      }
      if (done) {
        std::lock_guard lock(mutex);
        done(k);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace klr
