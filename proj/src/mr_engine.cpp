#include "mrpos/mr_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mrpos/error.hpp"

namespace mrpos::mr {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Runs fn(task) for task in [0, num_tasks) on up to num_workers threads.
// Task exceptions are captured per slot; the lowest failing task index wins
// so error identity does not depend on scheduling.
template <typename Fn>
int run_tasks(size_t num_tasks, int num_workers, Fn&& fn, std::vector<std::exception_ptr>& errors) {
  errors.assign(num_tasks, nullptr);
  size_t workers = std::min<size_t>(std::max(num_workers, 1), num_tasks);
  if (workers <= 1) {
    for (size_t t = 0; t < num_tasks; ++t) {
      try {
        fn(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        while (true) {
          size_t t = next.fetch_add(1);
          if (t >= num_tasks) return;
          try {
            fn(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : threads) th.join();
  }
  for (size_t t = 0; t < num_tasks; ++t)
    if (errors[t]) return static_cast<int>(t);
  return -1;
}

std::string cause_of(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown error";
  }
}

struct Group {
  std::string key;
  std::vector<std::string> values;
};

// Near-equal contiguous slice boundaries: first `rem` slices get qty+1.
std::vector<std::pair<size_t, size_t>> slice_ranges(size_t n, int parts) {
  size_t k = std::min<size_t>(std::max(parts, 1), n);
  std::vector<std::pair<size_t, size_t>> ranges;
  if (k == 0) return ranges;
  size_t qty = n / k, rem = n % k, start = 0;
  for (size_t i = 0; i < k; ++i) {
    size_t len = qty + (i < rem ? 1 : 0);
    ranges.emplace_back(start, start + len);
    start += len;
  }
  return ranges;
}

}  // namespace

std::vector<std::vector<Record>> partition_input(const std::vector<Record>& records, int num_maps) {
  if (num_maps < 1) throw std::invalid_argument("num_maps must be >= 1");
  std::vector<std::vector<Record>> chunks;
  for (auto [begin, end] : slice_ranges(records.size(), num_maps))
    chunks.emplace_back(records.begin() + begin, records.begin() + end);
  return chunks;
}

JobResult run_job(const JobSpec& spec) {
  if (spec.num_maps < 1 || spec.num_reduces < 1)
    throw std::invalid_argument("num_maps and num_reduces must be >= 1");
  if (!spec.map_fn || !spec.reduce_fn) throw std::invalid_argument("map_fn and reduce_fn are required");

  JobResult result;
  JobReport& report = result.report;
  report.job_name = spec.name;
  report.num_maps = spec.num_maps;
  report.num_reduces = spec.num_reduces;
  for (const auto& part : spec.input_partitions) report.records_in += static_cast<std::int64_t>(part.size());

  auto job_start = Clock::now();
  const size_t n_tasks = spec.input_partitions.size();

  // Map phase.
  std::vector<std::vector<KeyValue>> task_out(n_tasks);
  report.map_task_ms.assign(n_tasks, 0);
  std::vector<std::exception_ptr> errors;
  auto map_start = Clock::now();
  int failed = run_tasks(n_tasks, spec.num_maps, [&](size_t task) {
    auto t0 = Clock::now();
    auto& out = task_out[task];
    for (const Record& rec : spec.input_partitions[task]) {
      auto kvs = spec.map_fn(rec);
      out.insert(out.end(), std::make_move_iterator(kvs.begin()), std::make_move_iterator(kvs.end()));
    }
    report.map_task_ms[task] = ms_since(t0);
  }, errors);
  if (failed >= 0) throw MapFnError(failed, cause_of(errors[failed]));
  report.map_ms = ms_since(map_start);

  // Shuffle: group by key; value order (map-task index, emission order).
  auto shuffle_start = Clock::now();
  struct Entry {
    std::uint32_t task;
    std::uint32_t emit;
  };
  std::vector<Entry> entries;
  size_t total = 0;
  for (const auto& out : task_out) total += out.size();
  entries.reserve(total);
  for (std::uint32_t t = 0; t < task_out.size(); ++t)
    for (std::uint32_t e = 0; e < task_out[t].size(); ++e) entries.push_back({t, e});
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    const std::string& ka = task_out[a.task][a.emit].key;
    const std::string& kb = task_out[b.task][b.emit].key;
    if (int c = ka.compare(kb); c != 0) return c < 0;
    if (a.task != b.task) return a.task < b.task;
    return a.emit < b.emit;
  });
  std::vector<Group> groups;
  for (const Entry& e : entries) {
    KeyValue& kv = task_out[e.task][e.emit];
    if (groups.empty() || groups.back().key != kv.key) groups.push_back({std::move(kv.key), {}});
    groups.back().values.push_back(std::move(kv.value));
  }
  report.shuffle_ms = ms_since(shuffle_start);

  // Reduce phase: contiguous key-range slices keep global key order without
  // a merge pass.
  auto ranges = slice_ranges(groups.size(), spec.num_reduces);
  std::vector<std::vector<KeyValue>> reduce_out(ranges.size());
  auto reduce_start = Clock::now();
  failed = run_tasks(ranges.size(), spec.num_reduces, [&](size_t task) {
    auto [begin, end] = ranges[task];
    auto& out = reduce_out[task];
    for (size_t g = begin; g < end; ++g) {
      auto kvs = spec.reduce_fn(groups[g].key, groups[g].values);
      out.insert(out.end(), std::make_move_iterator(kvs.begin()), std::make_move_iterator(kvs.end()));
    }
  }, errors);
  if (failed >= 0) throw ReduceFnError(failed, cause_of(errors[failed]));
  report.reduce_ms = ms_since(reduce_start);

  for (auto& out : reduce_out)
    result.output.insert(result.output.end(), std::make_move_iterator(out.begin()),
                         std::make_move_iterator(out.end()));
  report.records_out = static_cast<std::int64_t>(result.output.size());
  report.total_ms = ms_since(job_start);
  return result;
}

std::vector<KeyValue> run_sequential(const JobSpec& spec) {
  if (!spec.map_fn || !spec.reduce_fn) throw std::invalid_argument("map_fn and reduce_fn are required");
  // Straight-line reference: map every record in partition order, stable-sort
  // emissions by key (stability preserves (task, emission) order), reduce
  // each key group in ascending key order.
  std::vector<KeyValue> emitted;
  int task = 0;
  for (const auto& part : spec.input_partitions) {
    try {
      for (const Record& rec : part) {
        auto kvs = spec.map_fn(rec);
        emitted.insert(emitted.end(), std::make_move_iterator(kvs.begin()),
                       std::make_move_iterator(kvs.end()));
      }
    } catch (const std::exception& e) {
      throw MapFnError(task, e.what());
    }
    ++task;
  }
  std::stable_sort(emitted.begin(), emitted.end(),
                   [](const KeyValue& a, const KeyValue& b) { return a.key < b.key; });
  std::vector<KeyValue> output;
  size_t i = 0;
  while (i < emitted.size()) {
    size_t j = i;
    std::vector<std::string> values;
    while (j < emitted.size() && emitted[j].key == emitted[i].key) values.push_back(std::move(emitted[j++].value));
    try {
      auto kvs = spec.reduce_fn(emitted[i].key, values);
      output.insert(output.end(), std::make_move_iterator(kvs.begin()), std::make_move_iterator(kvs.end()));
    } catch (const std::exception& e) {
      throw ReduceFnError(0, e.what());
    }
    i = j;
  }
  return output;
}

std::string JobReport::csv_header() {
  return "job,maps,reduces,map_ms,shuffle_ms,reduce_ms,total_ms,persist_ms,records_in,records_out";
}

std::string JobReport::csv_row() const {
  std::string row = job_name;
  for (std::int64_t v : {static_cast<std::int64_t>(num_maps), static_cast<std::int64_t>(num_reduces),
                         map_ms, shuffle_ms, reduce_ms, total_ms, persist_ms, records_in, records_out}) {
    row.push_back(',');
    row += std::to_string(v);
  }
  return row;
}

}  // namespace mrpos::mr
