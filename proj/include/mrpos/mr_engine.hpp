// In-process MapReduce engine: partitioned map, deterministic shuffle with
// bytewise key order, partitioned reduce.
//
// Output contract: for each distinct intermediate key in ascending byte
// order, reduce_fn(key, values) with values ordered by (map-task index,
// emission order within the task); reduce outputs concatenated in key order.
// Because input partitions are contiguous and order-preserving, the output
// is a pure function of (input record order, map_fn, reduce_fn) and does not
// depend on num_maps or num_reduces.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mrpos::mr {

struct KeyValue {
  std::string key;    // byte-comparable
  std::string value;  // opaque serialized record
  bool operator==(const KeyValue&) const = default;
};

using Record = std::string;
using MapFn = std::function<std::vector<KeyValue>(const Record&)>;
using ReduceFn =
    std::function<std::vector<KeyValue>(const std::string& key, const std::vector<std::string>& values)>;

struct JobSpec {
  std::string name = "job";
  std::vector<std::vector<Record>> input_partitions;
  int num_maps = 1;     // concurrent map workers; tasks = input partitions
  int num_reduces = 1;  // concurrent reduce workers and key-range slices
  MapFn map_fn;
  ReduceFn reduce_fn;
};

struct JobReport {
  std::string job_name;
  int num_maps = 1;
  int num_reduces = 1;
  std::vector<std::int64_t> map_task_ms;  // per map task
  std::int64_t map_ms = 0;                // map phase wall time
  std::int64_t shuffle_ms = 0;
  std::int64_t reduce_ms = 0;
  std::int64_t total_ms = 0;
  std::int64_t persist_ms = 0;  // serialize/re-read round, when a pipeline uses one
  std::int64_t records_in = 0;
  std::int64_t records_out = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

struct JobResult {
  std::vector<KeyValue> output;
  JobReport report;
};

// Contiguous order-preserving split into min(num_maps, |records|) non-empty
// chunks whose sizes differ by at most one.
std::vector<std::vector<Record>> partition_input(const std::vector<Record>& records, int num_maps);

// Runs map tasks (one per input partition) on up to num_maps workers, the
// deterministic shuffle, then key-range reduce slices on up to num_reduces
// workers. Throws MapFnError/ReduceFnError with the failing task's index; a
// failed task yields no partial output.
JobResult run_job(const JobSpec& spec);

// Reference implementation: same output contract, executed inline on the
// calling thread. Kept independent of the parallel code path so tests can
// use it as an oracle.
std::vector<KeyValue> run_sequential(const JobSpec& spec);

}  // namespace mrpos::mr
