// Copyright 2026 The trienum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Simulated two-level memory: a virtual disk of 64-bit words moved in blocks
// of B words, an internal-memory budget of M words, and an LRU cache used to
// measure algorithms that never manage blocks themselves.

#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace trienum {

using Word = std::uint64_t;

enum class IoMode { explicit_blocks, lru };
enum class Access { read, write };

struct IOConfig {
  std::uint64_t M = 0;  // internal memory, words
  std::uint64_t B = 1;  // block size, words
  IoMode mode = IoMode::explicit_blocks;

  // Throws std::invalid_argument unless M >= B >= 1.
  void validate() const;
  bool tall_cache() const { return M >= B * B; }
  std::uint64_t frames() const { return M / B; }
};

struct IOStats {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  std::uint64_t peak_mem_words = 0;

  std::uint64_t total() const { return reads + writes; }
  friend bool operator==(const IOStats&, const IOStats&) = default;
};

// {"reads":..,"writes":..,"total":..,"peak_mem_words":..}
std::string to_json(const IOStats& s);

// Difference of two snapshots of the same engine; peak is taken from `after`.
IOStats operator-(const IOStats& after, const IOStats& before);

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file on the simulated disk. Its length is always a whole number of blocks;
// block k spans words [kB, (k+1)B). `base_address` places the file in the
// engine-wide address space used by the LRU cache.
class VirtualDisk {
 public:
  VirtualDisk(std::uint64_t block_words, Word base_address,
              std::uint64_t blocks = 0);

  std::uint64_t length() const { return words_.size(); }
  std::uint64_t block_words() const { return block_words_; }
  std::uint64_t block_count() const { return words_.size() / block_words_; }
  Word base_address() const { return base_; }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  // Grows (zero-filled) or shrinks to `blocks` whole blocks.
  void resize_blocks(std::uint64_t blocks);
  // Shrinks to `words`, rounded up to a block boundary.
  void truncate(std::uint64_t words);

 private:
  std::uint64_t block_words_;
  Word base_;
  std::vector<Word> words_;
};

struct TraceEntry {
  std::uint64_t block;
  bool write;
};

// Fully associative LRU cache over block ids with write-back eviction.
class LruCache {
 public:
  explicit LruCache(std::uint64_t frames);

  struct Outcome {
    bool hit;
    bool evicted_dirty;
  };
  Outcome access(std::uint64_t block, bool write);

  std::uint64_t frames() const { return frames_; }
  std::uint64_t misses() const { return misses_; }
  std::uint64_t dirty_evictions() const { return dirty_evictions_; }

 private:
  struct Frame {
    std::uint64_t block;
    bool dirty;
  };
  std::uint64_t frames_;
  std::list<Frame> order_;  // front = most recently used
  std::unordered_map<std::uint64_t, std::list<Frame>::iterator> where_;
  std::uint64_t misses_ = 0;
  std::uint64_t dirty_evictions_ = 0;
};

// Replays a recorded block trace through a fresh cache of `frames` frames.
// reads = misses, writes = dirty evictions.
IOStats replay_trace(std::span<const TraceEntry> trace, std::uint64_t frames);

class Engine;

// Declared resident words. Released on destruction.
class MemoryLease {
 public:
  MemoryLease() = default;
  MemoryLease(Engine& engine, std::uint64_t words);
  MemoryLease(MemoryLease&& other) noexcept;
  MemoryLease& operator=(MemoryLease&& other) noexcept;
  MemoryLease(const MemoryLease&) = delete;
  MemoryLease& operator=(const MemoryLease&) = delete;
  ~MemoryLease();

  std::uint64_t words() const { return words_; }
  void resize(std::uint64_t words);
  void release();

 private:
  Engine* engine_ = nullptr;
  std::uint64_t words_ = 0;
};

// One simulated machine. Not thread-safe; independent engines share nothing.
//
// Explicit mode: algorithms move blocks with read_block/write_block, and every
// call is one I/O. Declared resident memory above M throws BudgetError.
//
// LRU mode: algorithms touch individual words; the cache charges one read per
// miss and one write per dirty eviction. read_block/write_block are accepted
// and are charged as a touch of the block. Leases are tracked, not enforced.
class Engine {
 public:
  explicit Engine(IOConfig cfg);

  const IOConfig& config() const { return cfg_; }
  const IOStats& stats() const { return stats_; }
  bool lru_mode() const { return cfg_.mode == IoMode::lru; }

  std::shared_ptr<VirtualDisk> new_disk(std::uint64_t blocks = 0);
  // Places `data` on a new disk without charging I/O. Used to stage inputs
  // that the model assumes already live in external memory.
  std::shared_ptr<VirtualDisk> preload(std::span<const Word> data);

  void read_block(const VirtualDisk& disk, std::uint64_t block,
                  std::span<Word> out);
  void write_block(VirtualDisk& disk, std::uint64_t block,
                   std::span<const Word> data);
  void touch(const VirtualDisk& disk, std::uint64_t addr, Access kind);

  MemoryLease reserve(std::uint64_t words) { return MemoryLease(*this, words); }
  std::uint64_t resident_words() const { return resident_; }

  // Records LRU block accesses for later replay at other capacities.
  void record_trace(bool on) { tracing_ = on; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  // Shared append-only disk used for in-place recursion: callers remember the
  // length, append, and truncate back when done.
  const std::shared_ptr<VirtualDisk>& stack_disk() { return stack_; }

 private:
  friend class MemoryLease;
  void acquire(std::uint64_t words);
  void give_back(std::uint64_t words) { resident_ -= words; }
  void touch_block(std::uint64_t global_block, bool write);

  IOConfig cfg_;
  IOStats stats_;
  std::uint64_t resident_ = 0;
  std::uint64_t next_disk_ = 0;
  std::shared_ptr<std::vector<std::uint64_t>> free_slots_ =
      std::make_shared<std::vector<std::uint64_t>>();
  LruCache cache_;
  std::uint64_t last_block_ = ~std::uint64_t{0};
  bool last_dirty_ = false;
  bool tracing_ = false;
  std::vector<TraceEntry> trace_;
  std::shared_ptr<VirtualDisk> stack_;
};

// sort(n) = n*log2(n/B) / (B*log2 M) + n/B, log term clamped at zero.
double sort_bound(double n, const IOConfig& cfg);

}  // namespace trienum
