#pragma once

// Batch kernels over word universes. Each kernel has a serial reference and
// an OpenMP version; results are written by index, so both return identical
// vectors in identical order.

#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "plactic/crystal.hpp"
#include "plactic/insertion.hpp"
#include "plactic/rewriting.hpp"

namespace plactic::kernels {

template <class Out, class F>
std::vector<Out> map_serial(std::size_t count, F&& f) {
  std::vector<Out> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

template <class Out, class F>
std::vector<Out> map_parallel(std::size_t count, F&& f) {
  std::vector<Out> out(count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto const total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

int thread_count();

/// Every word over C_n with min_len <= length <= max_len, by length and then
/// lexicographically by rank.
std::vector<Word> word_universe(int n, std::size_t min_len, std::size_t max_len);
std::vector<Word> word_universe_parallel(int n, std::size_t min_len, std::size_t max_len);

/// `count` words with lengths uniform in [min_len, max_len], from a seeded generator.
std::vector<Word> sample_words(int n, std::size_t min_len, std::size_t max_len,
                               std::size_t count, std::uint64_t seed);

std::vector<SymplecticTableau> tableaux_serial(std::span<Word const> words);
std::vector<SymplecticTableau> tableaux_parallel(std::span<Word const> words);

std::vector<Symbols> normal_forms_serial(AcolSystem const& system, std::span<Word const> words,
                                         Strategy strategy, std::uint64_t seed = 0);
std::vector<Symbols> normal_forms_parallel(AcolSystem const& system, std::span<Word const> words,
                                           Strategy strategy, std::uint64_t seed = 0);

std::vector<CrystalLabel> crystal_labels_serial(std::span<Word const> words);
std::vector<CrystalLabel> crystal_labels_parallel(std::span<Word const> words);

/// Dense class ids (first occurrence order) for a vector of keys.
template <class Key>
std::vector<std::uint32_t> partition_ids(std::vector<Key> const& keys);

}  // namespace plactic::kernels

#include <map>

namespace plactic::kernels {

template <class Key>
std::vector<std::uint32_t> partition_ids(std::vector<Key> const& keys) {
  std::map<Key, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(keys.size());
  for (auto const& k : keys) {
    auto [it, inserted] = ids.emplace(k, static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace plactic::kernels
