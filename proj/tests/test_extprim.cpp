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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "trienum/extsort.hpp"

using namespace trienum;

namespace {

struct Pair {
  Word key;
  Word tag;
};

}  // namespace

TEST_SUITE("extprim") {

TEST_CASE("scan costs one read per block") {
  Engine io(IOConfig{64, 8});
  std::vector<Word> items(80);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;
  const auto run = preload_run(io, items);
  std::vector<Word> seen;
  ext_scan(io, run, [&](Word w) { seen.push_back(w); });
  CHECK(seen == items);
  CHECK(io.stats().reads == 10);

  Engine one(IOConfig{64, 8});
  ext_scan(one, preload_run(one, std::vector<Word>(8, 1)), [](Word) {});
  CHECK(one.stats().reads == 1);

  Engine none(IOConfig{64, 8});
  ext_scan(none, preload_run(none, std::vector<Word>{}), [](Word) {});
  CHECK(none.stats().total() == 0);
}

TEST_CASE("sort of n <= M items is one read pass and one write pass") {
  Engine io(IOConfig{64, 8});
  std::vector<Word> items = {9, 3, 7, 1, 5, 2, 8, 6, 4, 0, 11, 10, 15, 14, 13, 12, 20, 19, 18, 17};
  const auto sorted = ext_sort(io, preload_run(io, items));
  auto want = items;
  std::sort(want.begin(), want.end());
  CHECK(peek_run(sorted) == want);
  CHECK(io.stats().reads == 3);
  CHECK(io.stats().writes == 3);
}

TEST_CASE("already sorted input stays identical") {
  Engine io(IOConfig{64, 8});
  std::vector<Word> items(500);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = 2 * i;
  CHECK(peek_run(ext_sort(io, preload_run(io, items))) == items);
}

TEST_CASE("reverse-sorted 4M items within 4 sort_bound") {
  for (auto [M, B] : {std::pair<std::uint64_t, std::uint64_t>{64, 8}, {1024, 32}, {256, 16}}) {
    const IOConfig cfg{M, B};
    Engine io(cfg);
    std::vector<Word> items(4 * M);
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = items.size() - i;
    const auto sorted = ext_sort(io, preload_run(io, items));
    auto want = items;
    std::sort(want.begin(), want.end());
    CHECK(peek_run(sorted) == want);
    const double ratio = static_cast<double>(io.stats().total()) / sort_bound(4.0 * M, cfg);
    MESSAGE("M=" << M << " B=" << B << " sort constant " << ratio);
    CHECK(ratio <= 4.0);
    CHECK(io.stats().peak_mem_words <= M);
  }
}

TEST_CASE("sort matches an in-memory reference and respects the budget") {
  std::mt19937_64 rng(3);
  for (std::uint64_t n : {0u, 1u, 7u, 63u, 64u, 65u, 1000u, 5000u}) {
    Engine io(IOConfig{64, 8});
    std::vector<Word> items(n);
    for (auto& x : items) x = rng() % 1000;
    const auto sorted = ext_sort(io, preload_run(io, items));
    auto want = items;
    std::sort(want.begin(), want.end());
    CHECK(peek_run(sorted) == want);
    CHECK(io.stats().peak_mem_words <= 64);
    if (n > 0) CHECK(io.stats().total() <= 4.0 * sort_bound(static_cast<double>(n), io.config()) + 2);
  }
}

TEST_CASE("sort is stable for two-word items") {
  Engine io(IOConfig{64, 8});
  std::vector<Pair> items;
  for (Word i = 0; i < 700; ++i) items.push_back(Pair{(i * 7) % 5, i});
  const auto sorted =
      ext_sort(io, preload_run(io, items), [](const Pair& a, const Pair& b) { return a.key < b.key; });
  const auto got = peek_run(sorted);
  REQUIRE(got.size() == items.size());
  for (std::size_t i = 1; i < got.size(); ++i) {
    CHECK((got[i - 1].key < got[i].key || (got[i - 1].key == got[i].key && got[i - 1].tag < got[i].tag)));
  }
}

TEST_CASE("sort requires M >= 3B") {
  Engine io(IOConfig{16, 8});
  CHECK_THROWS_AS(ext_sort(io, preload_run(io, std::vector<Word>{1, 2})), std::invalid_argument);
}

TEST_CASE("partition") {
  SUBCASE("one key") {
    Engine io(IOConfig{64, 8});
    const auto b = ext_partition(io, preload_run(io, std::vector<Word>(50, 3)), [](Word) { return 2u; }, 4);
    CHECK(b.size() == 4);
    CHECK(b[0].empty());
    CHECK(b[2].size() == 50);
  }
  SUBCASE("index mod 4") {
    Engine io(IOConfig{64, 8});
    std::vector<Word> items(400);
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;
    const auto b = ext_partition(io, preload_run(io, items), [](Word w) { return w % 4; }, 4);
    for (std::uint64_t k = 0; k < 4; ++k) {
      CHECK(b[k].size() == 100);
      for (Word w : peek_run(b[k])) CHECK(w % 4 == k);
    }
  }
  SUBCASE("conservation on random keys") {
    std::mt19937_64 rng(9);
    Engine io(IOConfig{128, 8});
    std::vector<Word> items(3000);
    for (auto& x : items) x = rng();
    const auto b = ext_partition(io, preload_run(io, items), [](Word w) { return w % 16; }, 16);
    std::vector<Word> all;
    for (const auto& r : b) {
      const auto part = peek_run(r);
      all.insert(all.end(), part.begin(), part.end());
    }
    auto want = items;
    std::sort(want.begin(), want.end());
    std::sort(all.begin(), all.end());
    CHECK(all == want);
  }
  SUBCASE("key out of range") {
    Engine io(IOConfig{64, 8});
    CHECK_THROWS_AS(ext_partition(io, preload_run(io, std::vector<Word>{1, 9}), [](Word w) { return w; }, 4),
                    std::out_of_range);
  }
}

TEST_CASE("Sorter spills and merges within its budget") {
  std::mt19937_64 rng(1);
  Engine io(IOConfig{64, 8});
  std::vector<Word> items(2000);
  for (auto& x : items) x = rng() % 500;
  std::vector<Word> got;
  {
    Sorter<Word> s(io, 48);
    for (Word x : items) s.push(x);
    CHECK(s.spilled_runs() > 0);
    s.drain([&](Word w) { got.push_back(w); });
  }
  std::sort(items.begin(), items.end());
  CHECK(got == items);
  CHECK(io.stats().peak_mem_words <= 64);
}

TEST_CASE("LRU-mode sort charges through the cache") {
  Engine io(IOConfig{64, 8, IoMode::lru});
  std::vector<Word> items(1000);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = (i * 7919) % 1000;
  const auto sorted = ext_sort(io, preload_run(io, items));
  auto want = items;
  std::sort(want.begin(), want.end());
  CHECK(peek_run(sorted) == want);
  CHECK(io.stats().reads > 0);
}

}  // TEST_SUITE
