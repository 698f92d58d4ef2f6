#include "thermoseg/schedule.hpp"

#include <set>
#include <stdexcept>

#include "thermoseg/rng.hpp"

namespace thermoseg {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::pretrain: return "pretrain";
    case Phase::finetune: return "finetune";
    case Phase::mixed: return "mixed";
  }
  return "mixed";
}

namespace {

void check_pools(const std::vector<std::string>& syn_ids,
                 const std::vector<std::string>& real_ids) {
  std::set<std::string> seen(syn_ids.begin(), syn_ids.end());
  if (seen.size() != syn_ids.size())
    throw std::invalid_argument("schedule: duplicate synthetic id");
  for (const auto& id : real_ids)
    if (!seen.insert(id).second)
      throw std::invalid_argument("schedule: id '" + id + "' duplicated or in both pools");
}

std::vector<Batch> chunk(const std::vector<ScheduledSample>& pool, int batch_size) {
  std::vector<Batch> batches;
  for (size_t i = 0; i < pool.size(); i += batch_size) {
    const size_t end = std::min(pool.size(), i + batch_size);
    batches.emplace_back(pool.begin() + i, pool.begin() + end);
  }
  return batches;
}

// Same per-epoch stream derivation for every strategy, so a degenerate
// finetune or direct schedule over the same pool produces the same batches.
SplitRng epoch_rng(uint64_t seed, int epoch_index) {
  return SplitRng(seed).split(static_cast<uint64_t>(epoch_index));
}

std::map<std::string, uint64_t> count_reals(const std::vector<Batch>& batches) {
  std::map<std::string, uint64_t> usage;
  for (const auto& batch : batches)
    for (const auto& sample : batch)
      if (sample.domain == Domain::real) usage[sample.id]++;
  return usage;
}

EpochSchedule shuffled_epoch(const std::vector<ScheduledSample>& pool, int batch_size,
                             Phase phase, SplitRng rng) {
  std::vector<ScheduledSample> shuffled = pool;
  rng.shuffle(shuffled);
  EpochSchedule epoch;
  epoch.phase = phase;
  epoch.batches = chunk(shuffled, batch_size);
  epoch.real_usage = count_reals(epoch.batches);
  return epoch;
}

}  // namespace

BatchSchedule schedule_direct(const std::vector<std::string>& syn_ids,
                              const std::vector<std::string>& real_ids, int batch_size,
                              int epochs, uint64_t seed) {
  if (batch_size < 1) throw std::invalid_argument("schedule_direct: batch_size must be >= 1");
  if (epochs < 1) throw std::invalid_argument("schedule_direct: epochs must be >= 1");
  check_pools(syn_ids, real_ids);
  if (syn_ids.empty() && real_ids.empty())
    throw std::invalid_argument("schedule_direct: empty pool");

  std::vector<ScheduledSample> pool;
  for (const auto& id : syn_ids) pool.push_back({id, Domain::synthetic});
  for (const auto& id : real_ids) pool.push_back({id, Domain::real});

  BatchSchedule schedule{"direct", batch_size, seed, {}};
  for (int e = 0; e < epochs; ++e)
    schedule.epochs.push_back(shuffled_epoch(pool, batch_size, Phase::mixed, epoch_rng(seed, e)));
  return schedule;
}

BatchSchedule schedule_balanced(const std::vector<std::string>& syn_ids,
                                const std::vector<std::string>& real_ids, int batch_size,
                                int epochs, uint64_t seed) {
  if (batch_size < 2) throw std::invalid_argument("schedule_balanced: batch_size must be >= 2");
  if (epochs < 1) throw std::invalid_argument("schedule_balanced: epochs must be >= 1");
  if (real_ids.empty()) throw std::invalid_argument("schedule_balanced: real_ids must be nonempty");
  if (syn_ids.empty()) throw std::invalid_argument("schedule_balanced: syn_ids must be nonempty");
  check_pools(syn_ids, real_ids);

  BatchSchedule schedule{"balanced", batch_size, seed, {}};
  for (int e = 0; e < epochs; ++e) {
    SplitRng rng = epoch_rng(seed, e);
    std::vector<std::string> syn = syn_ids;
    rng.shuffle(syn);
    std::vector<std::string> reals = real_ids;
    rng.shuffle(reals);

    EpochSchedule epoch;
    epoch.phase = Phase::mixed;
    const int syn_per_batch = batch_size - 1;
    size_t next_real = 0;
    for (size_t i = 0; i < syn.size(); i += syn_per_batch) {
      const size_t end = std::min(syn.size(), i + syn_per_batch);
      Batch batch;
      for (size_t j = i; j < end; ++j) batch.push_back({syn[j], Domain::synthetic});
      batch.push_back({reals[next_real % reals.size()], Domain::real});
      ++next_real;
      epoch.batches.push_back(std::move(batch));
    }
    epoch.real_usage = count_reals(epoch.batches);
    schedule.epochs.push_back(std::move(epoch));
  }
  return schedule;
}

BatchSchedule schedule_finetune(const std::vector<std::string>& syn_ids,
                                const std::vector<std::string>& real_ids, int batch_size,
                                int pretrain_epochs, int finetune_epochs, uint64_t seed) {
  if (batch_size < 1) throw std::invalid_argument("schedule_finetune: batch_size must be >= 1");
  if (pretrain_epochs < 0 || finetune_epochs < 0)
    throw std::invalid_argument("schedule_finetune: negative epoch count");
  if (pretrain_epochs == 0 && finetune_epochs == 0)
    throw std::invalid_argument("schedule_finetune: no epochs requested");
  if (pretrain_epochs > 0 && syn_ids.empty())
    throw std::invalid_argument("schedule_finetune: pretrain requested with no synthetic ids");
  if (finetune_epochs > 0 && real_ids.empty())
    throw std::invalid_argument("schedule_finetune: finetune requested with no real ids");
  check_pools(syn_ids, real_ids);

  std::vector<ScheduledSample> syn_pool, real_pool;
  for (const auto& id : syn_ids) syn_pool.push_back({id, Domain::synthetic});
  for (const auto& id : real_ids) real_pool.push_back({id, Domain::real});

  BatchSchedule schedule{"finetune", batch_size, seed, {}};
  for (int e = 0; e < pretrain_epochs; ++e)
    schedule.epochs.push_back(
        shuffled_epoch(syn_pool, batch_size, Phase::pretrain, epoch_rng(seed, e)));
  for (int e = 0; e < finetune_epochs; ++e)
    schedule.epochs.push_back(shuffled_epoch(real_pool, batch_size, Phase::finetune,
                                             epoch_rng(seed, pretrain_epochs + e)));
  return schedule;
}

nlohmann::json BatchSchedule::to_json() const {
  nlohmann::json epochs_json = nlohmann::json::array();
  for (const auto& epoch : epochs) {
    nlohmann::json batches_json = nlohmann::json::array();
    for (const auto& batch : epoch.batches) {
      nlohmann::json batch_json = nlohmann::json::array();
      for (const auto& sample : batch)
        batch_json.push_back({{"id", sample.id}, {"domain", to_string(sample.domain)}});
      batches_json.push_back(std::move(batch_json));
    }
    epochs_json.push_back({{"phase", to_string(epoch.phase)},
                           {"batches", std::move(batches_json)},
                           {"real_usage", epoch.real_usage}});
  }
  return nlohmann::json{{"strategy", strategy},
                        {"batch_size", batch_size},
                        {"seed", seed},
                        {"epochs", std::move(epochs_json)}};
}

}  // namespace thermoseg
