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

#include "trienum/blockio.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace trienum {

void IOConfig::validate() const {
  if (B < 1 || M < B) {
    throw std::invalid_argument("IOConfig requires M >= B >= 1 (M=" +
                                std::to_string(M) +
                                ", B=" + std::to_string(B) + ")");
  }
}

std::string to_json(const IOStats& s) {
  nlohmann::json j = {{"reads", s.reads},
                      {"writes", s.writes},
                      {"total", s.total()},
                      {"peak_mem_words", s.peak_mem_words}};
  return j.dump();
}

IOStats operator-(const IOStats& after, const IOStats& before) {
  return IOStats{after.reads - before.reads, after.writes - before.writes,
                 after.peak_mem_words};
}

VirtualDisk::VirtualDisk(std::uint64_t block_words, Word base_address,
                         std::uint64_t blocks)
    : block_words_(block_words), base_(base_address) {
  if (block_words_ == 0) throw std::invalid_argument("block size must be >= 1");
  words_.resize(blocks * block_words_);
}

void VirtualDisk::resize_blocks(std::uint64_t blocks) {
  words_.resize(blocks * block_words_);
}

void VirtualDisk::truncate(std::uint64_t words) {
  const std::uint64_t blocks = (words + block_words_ - 1) / block_words_;
  if (blocks < block_count()) resize_blocks(blocks);
}

LruCache::LruCache(std::uint64_t frames) : frames_(frames) {
  if (frames_ == 0) frames_ = 1;
}

LruCache::Outcome LruCache::access(std::uint64_t block, bool write) {
  auto it = where_.find(block);
  if (it != where_.end()) {
    it->second->dirty |= write;
    order_.splice(order_.begin(), order_, it->second);
    return {true, false};
  }
  ++misses_;
  bool evicted_dirty = false;
  if (order_.size() == frames_) {
    const Frame& victim = order_.back();
    evicted_dirty = victim.dirty;
    if (evicted_dirty) ++dirty_evictions_;
    where_.erase(victim.block);
    order_.pop_back();
  }
  order_.push_front(Frame{block, write});
  where_.emplace(block, order_.begin());
  return {false, evicted_dirty};
}

IOStats replay_trace(std::span<const TraceEntry> trace, std::uint64_t frames) {
  LruCache cache(frames);
  for (const auto& t : trace) cache.access(t.block, t.write);
  return IOStats{cache.misses(), cache.dirty_evictions(), 0};
}

MemoryLease::MemoryLease(Engine& engine, std::uint64_t words)
    : engine_(&engine), words_(0) {
  resize(words);
}

MemoryLease::MemoryLease(MemoryLease&& other) noexcept
    : engine_(other.engine_), words_(other.words_) {
  other.engine_ = nullptr;
  other.words_ = 0;
}

MemoryLease& MemoryLease::operator=(MemoryLease&& other) noexcept {
  if (this != &other) {
    release();
    engine_ = other.engine_;
    words_ = other.words_;
    other.engine_ = nullptr;
    other.words_ = 0;
  }
  return *this;
}

MemoryLease::~MemoryLease() { release(); }

void MemoryLease::resize(std::uint64_t words) {
  if (engine_ == nullptr) return;
  if (words > words_) {
    engine_->acquire(words - words_);
  } else {
    engine_->give_back(words_ - words);
  }
  words_ = words;
}

void MemoryLease::release() {
  if (engine_ != nullptr) engine_->give_back(words_);
  words_ = 0;
}

namespace {
// Disjoint address ranges per disk: 2^32 blocks each.
constexpr std::uint64_t kBlocksPerDisk = std::uint64_t{1} << 32;
}  // namespace

Engine::Engine(IOConfig cfg) : cfg_(cfg), cache_(1) {
  cfg_.validate();
  cache_ = LruCache(cfg_.frames());
  stack_ = new_disk();
}

std::shared_ptr<VirtualDisk> Engine::new_disk(std::uint64_t blocks) {
  // Address ranges of released disks are handed out again, most recently
  // released first, as a file system would reuse freed space.
  std::uint64_t slot = 0;
  if (free_slots_->empty()) {
    slot = next_disk_++;
  } else {
    slot = free_slots_->back();
    free_slots_->pop_back();
  }
  const Word base = slot * kBlocksPerDisk * cfg_.B;
  std::weak_ptr<std::vector<std::uint64_t>> slots = free_slots_;
  return std::shared_ptr<VirtualDisk>(new VirtualDisk(cfg_.B, base, blocks),
                                      [slots, slot](VirtualDisk* d) {
                                        if (auto s = slots.lock()) s->push_back(slot);
                                        delete d;
                                      });
}

std::shared_ptr<VirtualDisk> Engine::preload(std::span<const Word> data) {
  auto disk = new_disk((data.size() + cfg_.B - 1) / cfg_.B);
  std::copy(data.begin(), data.end(), disk->words().begin());
  return disk;
}

void Engine::read_block(const VirtualDisk& disk, std::uint64_t block,
                        std::span<Word> out) {
  if (block >= disk.block_count()) {
    throw IoError("read_block: block " + std::to_string(block) +
                  " out of bounds (" + std::to_string(disk.block_count()) +
                  " blocks)");
  }
  if (out.size() < cfg_.B) throw IoError("read_block: buffer shorter than B");
  const auto src = disk.words().subspan(block * cfg_.B, cfg_.B);
  std::copy(src.begin(), src.end(), out.begin());
  if (lru_mode()) {
    touch_block(disk.base_address() / cfg_.B + block, false);
  } else {
    ++stats_.reads;
  }
}

void Engine::write_block(VirtualDisk& disk, std::uint64_t block,
                         std::span<const Word> data) {
  if (data.size() != cfg_.B) {
    throw IoError("write_block: data length " + std::to_string(data.size()) +
                  " != B=" + std::to_string(cfg_.B));
  }
  if (block > disk.block_count()) {
    throw IoError("write_block: block " + std::to_string(block) +
                  " out of bounds (" + std::to_string(disk.block_count()) +
                  " blocks)");
  }
  if (block == disk.block_count()) disk.resize_blocks(block + 1);
  std::copy(data.begin(), data.end(),
            disk.words().subspan(block * cfg_.B, cfg_.B).begin());
  if (lru_mode()) {
    touch_block(disk.base_address() / cfg_.B + block, true);
  } else {
    ++stats_.writes;
  }
}

void Engine::touch(const VirtualDisk& disk, std::uint64_t addr, Access kind) {
  if (addr >= disk.length()) {
    throw IoError("touch: address " + std::to_string(addr) +
                  " out of bounds (" + std::to_string(disk.length()) +
                  " words)");
  }
  touch_block((disk.base_address() + addr) / cfg_.B, kind == Access::write);
}

void Engine::touch_block(std::uint64_t global_block, bool write) {
  // Repeated touches of the most recent block are hits at any capacity; only
  // a read->write transition needs to reach the cache.
  if (global_block == last_block_ && (!write || last_dirty_)) return;
  if (tracing_) {
    if (global_block == last_block_ && !trace_.empty()) {
      trace_.back().write = true;
    } else {
      trace_.push_back(TraceEntry{global_block, write});
    }
  }
  last_dirty_ = (global_block == last_block_ && last_dirty_) || write;
  last_block_ = global_block;
  const auto outcome = cache_.access(global_block, write);
  if (!outcome.hit) ++stats_.reads;
  if (outcome.evicted_dirty) ++stats_.writes;
}

void Engine::acquire(std::uint64_t words) {
  if (!lru_mode() && resident_ + words > cfg_.M) {
    throw BudgetError("memory budget exceeded: " +
                      std::to_string(resident_ + words) +
                      " resident words > M=" + std::to_string(cfg_.M));
  }
  resident_ += words;
  stats_.peak_mem_words = std::max(stats_.peak_mem_words, resident_);
}

double sort_bound(double n, const IOConfig& cfg) {
  if (n <= 0) return 0.0;
  const double B = static_cast<double>(cfg.B);
  const double M = static_cast<double>(cfg.M);
  const double log_term = std::max(0.0, std::log2(n / B));
  const double log_m = std::log2(std::max(M, 2.0));
  return n * log_term / (B * log_m) + n / B;
}

}  // namespace trienum
