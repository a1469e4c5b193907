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

// Typed runs of fixed-width items on a VirtualDisk, with streaming readers and
// writers that charge I/O through an Engine.

#pragma once

#include <concepts>
#include <cstring>
#include <memory>
#include <optional>
#include <type_traits>
#include <vector>

#include "trienum/blockio.hpp"

namespace trienum {

template <class T>
concept DiskItem = std::is_trivially_copyable_v<T> && (sizeof(T) % sizeof(Word) == 0);

template <DiskItem T>
constexpr std::uint64_t item_words() {
  return sizeof(T) / sizeof(Word);
}

enum class SortOrder : std::uint8_t {
  none,
  lexicographic,  // ascending by the item's natural key
  custom,         // sorted under a caller-supplied comparator
};

// A contiguous range of items on one disk. Copies share the disk.
template <DiskItem T>
struct ExtRun {
  std::shared_ptr<VirtualDisk> disk;
  std::uint64_t first_word = 0;
  std::uint64_t count = 0;
  SortOrder order = SortOrder::none;

  static constexpr std::uint64_t width = item_words<T>();

  bool empty() const { return count == 0; }
  std::uint64_t size() const { return count; }
  std::uint64_t words() const { return count * width; }

  ExtRun slice(std::uint64_t first_item, std::uint64_t n) const {
    ExtRun r = *this;
    r.first_word = first_word + first_item * width;
    r.count = n;
    return r;
  }
};

enum class Buffering {
  leased,    // the stream declares its own B-word buffer against M
  borrowed,  // the caller's lease already covers the buffer
};

// Sequential reader. Explicit mode: one read_block per block entered, through
// a B-word buffer. LRU mode: one touch per word.
template <DiskItem T>
class Reader {
 public:
  Reader(Engine& io, const ExtRun<T>& run, Buffering buffering = Buffering::leased)
      : io_(&io),
        disk_(run.disk),
        pos_(run.first_word),
        end_(run.first_word + run.words()) {
    if (!io.lru_mode()) {
      if (buffering == Buffering::leased) lease_ = io.reserve(io.config().B);
      buffer_.resize(io.config().B);
    }
  }

  bool done() const { return pos_ >= end_ && !peeked_; }

  const T& peek() {
    if (!peeked_) {
      current_ = fetch();
      peeked_ = true;
    }
    return current_;
  }

  T next() {
    if (peeked_) {
      peeked_ = false;
      return current_;
    }
    return fetch();
  }

 private:
  T fetch() {
    Word raw[item_words<T>()];
    const std::uint64_t B = io_->config().B;
    for (std::uint64_t i = 0; i < item_words<T>(); ++i, ++pos_) {
      if (io_->lru_mode()) {
        io_->touch(*disk_, pos_, Access::read);
        raw[i] = disk_->words()[pos_];
      } else {
        const std::uint64_t block = pos_ / B;
        if (block != loaded_) {
          io_->read_block(*disk_, block, buffer_);
          loaded_ = block;
        }
        raw[i] = buffer_[pos_ % B];
      }
    }
    T item;
    std::memcpy(&item, raw, sizeof(T));
    return item;
  }

  Engine* io_;
  std::shared_ptr<VirtualDisk> disk_;
  std::uint64_t pos_;
  std::uint64_t end_;
  std::vector<Word> buffer_;
  std::uint64_t loaded_ = ~std::uint64_t{0};
  MemoryLease lease_;
  T current_{};
  bool peeked_ = false;
};

// Appends items at the (block-aligned) end of a disk.
template <DiskItem T>
class Writer {
 public:
  Writer(Engine& io, std::shared_ptr<VirtualDisk> disk,
         Buffering buffering = Buffering::leased)
      : io_(&io), disk_(std::move(disk)) {
    start_ = disk_->length();
    pos_ = start_;
    if (!io.lru_mode()) {
      if (buffering == Buffering::leased) lease_ = io.reserve(io.config().B);
      buffer_.assign(io.config().B, 0);
    }
  }

  explicit Writer(Engine& io, Buffering buffering = Buffering::leased)
      : Writer(io, io.new_disk(), buffering) {}

  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;
  Writer(Writer&&) noexcept = default;
  Writer& operator=(Writer&&) noexcept = default;

  void push(const T& item) {
    Word raw[item_words<T>()];
    std::memcpy(raw, &item, sizeof(T));
    const std::uint64_t B = io_->config().B;
    for (std::uint64_t i = 0; i < item_words<T>(); ++i, ++pos_) {
      if (io_->lru_mode()) {
        if (pos_ >= disk_->length()) disk_->resize_blocks(pos_ / B + 1);
        disk_->words()[pos_] = raw[i];
        io_->touch(*disk_, pos_, Access::write);
      } else {
        buffer_[pos_ % B] = raw[i];
        if ((pos_ + 1) % B == 0) flush_block();
      }
    }
    ++count_;
  }

  std::uint64_t count() const { return count_; }

  // Flushes the partial last block (zero padded) and returns the run.
  ExtRun<T> finish(SortOrder order = SortOrder::none) {
    if (!io_->lru_mode() && pos_ % io_->config().B != 0) flush_block();
    lease_.release();
    return ExtRun<T>{disk_, start_, count_, order};
  }

 private:
  void flush_block() {
    const std::uint64_t B = io_->config().B;
    io_->write_block(*disk_, pos_ / B, buffer_);
    std::fill(buffer_.begin(), buffer_.end(), 0);
  }

  Engine* io_;
  std::shared_ptr<VirtualDisk> disk_;
  std::uint64_t start_ = 0;
  std::uint64_t pos_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Word> buffer_;
  MemoryLease lease_;
};

// Stages in-process items on a fresh disk without charging I/O.
template <DiskItem T>
ExtRun<T> preload_run(Engine& io, const std::vector<T>& items,
                      SortOrder order = SortOrder::none) {
  std::vector<Word> words(items.size() * item_words<T>());
  if (!items.empty()) std::memcpy(words.data(), items.data(), items.size() * sizeof(T));
  return ExtRun<T>{io.preload(words), 0, items.size(), order};
}

// Reads a run back into process memory without charging I/O (test helper).
template <DiskItem T>
std::vector<T> peek_run(const ExtRun<T>& run) {
  std::vector<T> out(run.count);
  if (run.count != 0) {
    std::memcpy(out.data(), run.disk->words().data() + run.first_word,
                run.count * sizeof(T));
  }
  return out;
}

}  // namespace trienum
