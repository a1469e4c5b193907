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

// Scan, stable multiway merge sort and key partitioning over ExtRuns.

#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trienum/extrun.hpp"

namespace trienum {

// Visits every item in order. Charges ceil(n*w/B) reads for aligned runs.
template <DiskItem T, class Visitor>
void ext_scan(Engine& io, const ExtRun<T>& run, Visitor&& visit) {
  if (run.empty()) return;
  Reader<T> reader(io, run);
  while (!reader.done()) visit(reader.next());
}

namespace detail {

template <DiskItem T, class Less>
ExtRun<T> merge_group(Engine& io, std::span<const ExtRun<T>> group, Less& less) {
  std::vector<Reader<T>> readers;
  readers.reserve(group.size());
  for (const auto& r : group) readers.emplace_back(io, r);
  Writer<T> out(io);

  // Min-heap of reader indices; ties go to the lower index for stability.
  std::vector<std::size_t> heap;
  for (std::size_t i = 0; i < readers.size(); ++i) {
    if (!readers[i].done()) heap.push_back(i);
  }
  auto after = [&](std::size_t a, std::size_t b) {
    const T& x = readers[a].peek();
    const T& y = readers[b].peek();
    if (less(y, x)) return true;
    if (less(x, y)) return false;
    return a > b;
  };
  std::make_heap(heap.begin(), heap.end(), after);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), after);
    const std::size_t i = heap.back();
    out.push(readers[i].next());
    if (readers[i].done()) {
      heap.pop_back();
    } else {
      std::push_heap(heap.begin(), heap.end(), after);
    }
  }
  readers.clear();
  return out.finish(SortOrder::custom);
}

}  // namespace detail

// Stable external merge sort: runs of up to M words, then
// (floor(M/B) - 1)-way merge passes. Requires M >= 3B.
template <DiskItem T, class Less = std::less<T>>
ExtRun<T> ext_sort(Engine& io, const ExtRun<T>& input, Less less = Less{},
                   SortOrder result_order = SortOrder::custom) {
  const IOConfig& cfg = io.config();
  if (cfg.M < 3 * cfg.B) {
    throw std::invalid_argument("ext_sort requires M >= 3B");
  }
  constexpr std::uint64_t w = item_words<T>();
  if (input.empty()) {
    return ExtRun<T>{io.new_disk(), 0, 0, result_order};
  }

  const std::uint64_t mcap = (cfg.M / cfg.B) * cfg.B;
  const bool aligned = io.lru_mode() || input.first_word % cfg.B == 0;
  const std::uint64_t chunk_items = (aligned ? mcap : mcap - cfg.B) / w;
  if (chunk_items == 0) throw std::invalid_argument("ext_sort: item wider than M");

  std::vector<ExtRun<T>> runs;
  {
    // The chunk buffer holds the blocks being read and written.
    MemoryLease chunk = io.reserve(mcap);
    Reader<T> reader(io, input, Buffering::borrowed);
    std::vector<T> items;
    items.reserve(std::min<std::uint64_t>(chunk_items, input.count));
    std::uint64_t remaining = input.count;
    while (remaining > 0) {
      const std::uint64_t n = std::min(chunk_items, remaining);
      items.clear();
      for (std::uint64_t i = 0; i < n; ++i) items.push_back(reader.next());
      remaining -= n;
      std::stable_sort(items.begin(), items.end(), less);
      Writer<T> out(io, Buffering::borrowed);
      for (const T& item : items) out.push(item);
      runs.push_back(out.finish(SortOrder::custom));
    }
  }

  const std::uint64_t fan_in = cfg.M / cfg.B - 1;
  while (runs.size() > 1) {
    std::vector<ExtRun<T>> next;
    for (std::size_t i = 0; i < runs.size(); i += fan_in) {
      const std::size_t n = std::min<std::size_t>(fan_in, runs.size() - i);
      if (n == 1) {
        next.push_back(runs[i]);
      } else {
        next.push_back(detail::merge_group<T>(
            io, std::span<const ExtRun<T>>(runs.data() + i, n), less));
      }
    }
    runs = std::move(next);
  }
  runs.front().order = result_order;
  return runs.front();
}

// Splits `input` into num_buckets runs by key via a stable sort on the key and
// one boundary scan. Bucket k holds exactly the items with key k, in input
// order. Throws std::out_of_range on a key >= num_buckets.
template <DiskItem T, class KeyFn>
std::vector<ExtRun<T>> ext_partition(Engine& io, const ExtRun<T>& input,
                                     KeyFn key, std::uint64_t num_buckets) {
  auto by_key = [&](const T& a, const T& b) { return key(a) < key(b); };
  const ExtRun<T> sorted = ext_sort(io, input, by_key);

  std::vector<std::uint64_t> sizes(num_buckets, 0);
  ext_scan(io, sorted, [&](const T& item) {
    const std::uint64_t k = key(item);
    if (k >= num_buckets) {
      throw std::out_of_range("ext_partition: key " + std::to_string(k) +
                              " >= " + std::to_string(num_buckets));
    }
    ++sizes[k];
  });

  std::vector<ExtRun<T>> buckets;
  buckets.reserve(num_buckets);
  std::uint64_t offset = 0;
  for (std::uint64_t k = 0; k < num_buckets; ++k) {
    ExtRun<T> b = sorted.slice(offset, sizes[k]);
    b.order = input.order;
    buckets.push_back(b);
    offset += sizes[k];
  }
  return buckets;
}

// Sort of a pushed stream within a memory budget. Items stay in memory while
// they fit; otherwise sorted runs are spilled and merged, the last merge
// pass feeding the visitor directly. Stable. Requires budget >= 3B.
template <DiskItem T, class Less = std::less<T>>
class Sorter {
 public:
  Sorter(Engine& io, std::uint64_t budget_words, Less less = Less{})
      : io_(&io), budget_(budget_words), less_(less) {
    const std::uint64_t B = io.config().B;
    if (budget_words < 3 * B) throw std::invalid_argument("Sorter requires a budget of 3B");
    capacity_ = (budget_words - B) / item_words<T>();
    if (capacity_ == 0) throw std::invalid_argument("Sorter: item wider than budget");
    chunk_lease_ = io.reserve(budget_words - B);
  }

  void push(const T& item) {
    if (chunk_.size() == capacity_) spill();
    chunk_.push_back(item);
  }

  std::uint64_t spilled_runs() const { return runs_.size(); }

  // Visits all items in sorted order. The sorter is empty afterwards.
  template <class Visitor>
  void drain(Visitor&& visit) {
    if (runs_.empty()) {
      std::stable_sort(chunk_.begin(), chunk_.end(), less_);
      for (const T& item : chunk_) visit(item);
      chunk_.clear();
      chunk_lease_.release();
      return;
    }
    if (!chunk_.empty()) spill();
    chunk_lease_.release();
    const std::uint64_t fan_in = budget_ / io_->config().B - 1;
    while (runs_.size() > fan_in) {
      std::vector<ExtRun<T>> next;
      for (std::size_t i = 0; i < runs_.size(); i += fan_in) {
        const std::size_t n = std::min<std::size_t>(fan_in, runs_.size() - i);
        if (n == 1) {
          next.push_back(runs_[i]);
        } else {
          next.push_back(detail::merge_group<T>(
              *io_, std::span<const ExtRun<T>>(runs_.data() + i, n), less_));
        }
      }
      runs_ = std::move(next);
    }
    std::vector<Reader<T>> readers;
    readers.reserve(runs_.size());
    for (const auto& r : runs_) readers.emplace_back(*io_, r);
    std::vector<std::size_t> heap;
    for (std::size_t i = 0; i < readers.size(); ++i) {
      if (!readers[i].done()) heap.push_back(i);
    }
    auto after = [&](std::size_t a, std::size_t b) {
      const T& x = readers[a].peek();
      const T& y = readers[b].peek();
      if (less_(y, x)) return true;
      if (less_(x, y)) return false;
      return a > b;
    };
    std::make_heap(heap.begin(), heap.end(), after);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), after);
      const std::size_t i = heap.back();
      visit(readers[i].next());
      if (readers[i].done()) {
        heap.pop_back();
      } else {
        std::push_heap(heap.begin(), heap.end(), after);
      }
    }
    runs_.clear();
  }

 private:
  void spill() {
    std::stable_sort(chunk_.begin(), chunk_.end(), less_);
    Writer<T> out(*io_);
    for (const T& item : chunk_) out.push(item);
    runs_.push_back(out.finish(SortOrder::custom));
    chunk_.clear();
  }

  Engine* io_;
  std::uint64_t budget_;
  Less less_;
  std::uint64_t capacity_ = 0;
  MemoryLease chunk_lease_;
  std::vector<T> chunk_;
  std::vector<ExtRun<T>> runs_;
};

}  // namespace trienum
