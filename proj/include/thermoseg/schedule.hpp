#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thermoseg/manifest.hpp"

namespace thermoseg {

enum class Phase { pretrain, finetune, mixed };
std::string to_string(Phase p);

struct ScheduledSample {
  std::string id;
  Domain domain = Domain::synthetic;

  bool operator==(const ScheduledSample&) const = default;
};

using Batch = std::vector<ScheduledSample>;

struct EpochSchedule {
  Phase phase = Phase::mixed;
  std::vector<Batch> batches;
  // How often each real id appears in this epoch; makes the balanced
  // strategy's unavoidable oversampling explicit.
  std::map<std::string, uint64_t> real_usage;

  bool operator==(const EpochSchedule&) const = default;
};

struct BatchSchedule {
  std::string strategy;
  int batch_size = 0;
  uint64_t seed = 0;
  std::vector<EpochSchedule> epochs;

  nlohmann::json to_json() const;
};

// Pools synthetic and real ids, shuffles per epoch, chunks into batches of
// batch_size (only the final batch of an epoch may be smaller).
BatchSchedule schedule_direct(const std::vector<std::string>& syn_ids,
                              const std::vector<std::string>& real_ids, int batch_size,
                              int epochs, uint64_t seed);

// Every batch carries batch_size-1 synthetic ids (last group may be smaller)
// plus one real id drawn round-robin from a per-epoch shuffled cycle; reals
// are reused when batches outnumber them, with per-id usage counts differing
// by at most 1 within an epoch.
BatchSchedule schedule_balanced(const std::vector<std::string>& syn_ids,
                                const std::vector<std::string>& real_ids, int batch_size,
                                int epochs, uint64_t seed);

// Synthetic-only pretrain epochs followed by real-only finetune epochs.
// Either phase may be skipped with 0 epochs; a requested phase with an empty
// id list is an error.
BatchSchedule schedule_finetune(const std::vector<std::string>& syn_ids,
                                const std::vector<std::string>& real_ids, int batch_size,
                                int pretrain_epochs, int finetune_epochs, uint64_t seed);

}  // namespace thermoseg
