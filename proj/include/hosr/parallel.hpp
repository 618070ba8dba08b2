// Copyright 2026 The hosr Authors.
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

#ifndef HOSR_PARALLEL_HPP_
#define HOSR_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <future>
#include <iterator>
#include <thread>
#include <type_traits>
#include <vector>

namespace hosr::detail {

/// Evaluates fn(0..count-1) and returns the results in index order. Work is
/// split into contiguous chunks, one per hardware thread; with a single
/// hardware thread everything runs inline. Exceptions propagate from the
/// lowest failing chunk.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using Result = std::invoke_result_t<Fn, std::size_t>;
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<Result> out;
  out.reserve(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(fn(i));
    }
    return out;
  }
  std::vector<std::future<std::vector<Result>>> chunks;
  const std::size_t per = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += per) {
    const std::size_t end = std::min(count, begin + per);
    chunks.push_back(std::async(std::launch::async, [&fn, begin, end] {
      std::vector<Result> part;
      part.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) {
        part.push_back(fn(i));
      }
      return part;
    }));
  }
  for (auto& c : chunks) {
    auto part = c.get();
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace hosr::detail

#endif  // HOSR_PARALLEL_HPP_
