#include "plactic/kernels.hpp"

#include <random>

namespace plactic::kernels {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

struct UniverseIndex {
  std::vector<std::uint64_t> offsets;  // first flat index of each length
  std::size_t min_len;
  int n;

  std::uint64_t total() const { return offsets.back(); }

  Word at(std::uint64_t flat) const {
    std::size_t k = 0;
    while (offsets[k + 1] <= flat) ++k;
    return word_from_index(flat - offsets[k], min_len + k, n);
  }
};

UniverseIndex make_index(int n, std::size_t min_len, std::size_t max_len) {
  UniverseIndex idx{{0}, min_len, n};
  for (std::size_t len = min_len; len <= max_len; ++len) {
    idx.offsets.push_back(idx.offsets.back() + count_words(len, n));
  }
  return idx;
}

}  // namespace

std::vector<Word> word_universe(int n, std::size_t min_len, std::size_t max_len) {
  auto idx = make_index(n, min_len, max_len);
  return map_serial<Word>(idx.total(), [&](std::size_t i) { return idx.at(i); });
}

std::vector<Word> word_universe_parallel(int n, std::size_t min_len, std::size_t max_len) {
  auto idx = make_index(n, min_len, max_len);
  return map_parallel<Word>(idx.total(), [&](std::size_t i) { return idx.at(i); });
}

std::vector<Word> sample_words(int n, std::size_t min_len, std::size_t max_len,
                               std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::uniform_int_distribution<int> rank(1, 2 * n);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Word w(n);
    w.letters.resize(length(rng));
    for (auto& a : w.letters) a = Letter::from_rank(rank(rng), n);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<SymplecticTableau> tableaux_serial(std::span<Word const> words) {
  return map_serial<SymplecticTableau>(words.size(),
                                       [&](std::size_t i) { return tableau_of_word(words[i]); });
}

std::vector<SymplecticTableau> tableaux_parallel(std::span<Word const> words) {
  return map_parallel<SymplecticTableau>(words.size(),
                                         [&](std::size_t i) { return tableau_of_word(words[i]); });
}

std::vector<Symbols> normal_forms_serial(AcolSystem const& system, std::span<Word const> words,
                                         Strategy strategy, std::uint64_t seed) {
  return map_serial<Symbols>(words.size(), [&](std::size_t i) {
    return system.normal_form(system.embed(words[i]), strategy, seed + i);
  });
}

std::vector<Symbols> normal_forms_parallel(AcolSystem const& system, std::span<Word const> words,
                                           Strategy strategy, std::uint64_t seed) {
  return map_parallel<Symbols>(words.size(), [&](std::size_t i) {
    return system.normal_form(system.embed(words[i]), strategy, seed + i);
  });
}

std::vector<CrystalLabel> crystal_labels_serial(std::span<Word const> words) {
  return map_serial<CrystalLabel>(words.size(),
                                  [&](std::size_t i) { return crystal_label(words[i]); });
}

std::vector<CrystalLabel> crystal_labels_parallel(std::span<Word const> words) {
  return map_parallel<CrystalLabel>(words.size(),
                                    [&](std::size_t i) { return crystal_label(words[i]); });
}

}  // namespace plactic::kernels
