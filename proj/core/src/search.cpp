#include "covsys/search.hpp"

#include <bit>

#include "covsys/enumerate.hpp"
#include "covsys/error.hpp"
#include "sieve.hpp"

namespace covsys {

namespace {

using Bits = std::vector<std::uint64_t>;

class Searcher {
 public:
  Searcher(const Field& field, std::vector<Congruence> pool, std::size_t cover_degree)
      : field_(field), pool_(std::move(pool)) {
    const std::uint64_t total = checked_power(field.order(), cover_degree);
    if (total > kDefaultClassCap) throw CapExceeded("coverage bitset", BigInt(total), BigInt(kDefaultClassCap));
    words_ = static_cast<std::size_t>((total + 63) / 64);
    full_.assign(words_, ~std::uint64_t{0});
    if (total % 64 != 0) full_.back() = (std::uint64_t{1} << (total % 64)) - 1;
    for (const auto& c : pool_) {
      Bits bits(words_, 0);
      detail::for_each_member_below(c.modulus(), c.residue(), cover_degree,
                                    [&](std::uint64_t idx) { bits[idx / 64] |= std::uint64_t{1} << (idx % 64); });
      cover_.push_back(std::move(bits));
    }
  }

  void run(std::size_t size, SearchResult& result) {
    std::vector<std::size_t> chosen;
    chosen.reserve(size);
    Bits acc(words_, 0);
    recurse(0, size, acc, chosen, result);
  }

 private:
  void recurse(std::size_t start, std::size_t remaining, const Bits& acc, std::vector<std::size_t>& chosen,
               SearchResult& result) {
    if (remaining == 0) {
      ++result.systems_examined;
      if (acc != full_) return;
      ++result.premise_hits;
      CongruenceSystem system(field_);
      for (auto i : chosen) system.add(pool_[i]);
      if (!covers_everything_exact(system).complete) result.counterexamples.push_back(std::move(system));
      return;
    }
    Bits next(words_);
    for (std::size_t i = start; i < pool_.size(); ++i) {
      for (std::size_t w = 0; w < words_; ++w) next[w] = acc[w] | cover_[i][w];
      chosen.push_back(i);
      recurse(i, remaining - 1, next, chosen, result);
      chosen.pop_back();
    }
  }

  Field field_;
  std::vector<Congruence> pool_;
  std::vector<Bits> cover_;
  Bits full_;
  std::size_t words_ = 0;
};

}  // namespace

std::vector<Congruence> all_congruences(const Field& field, std::size_t max_modulus_degree) {
  std::vector<Congruence> out;
  for (std::size_t d = 1; d <= max_modulus_degree; ++d) {
    for (const Poly& modulus : monic_of_degree(field, d)) {
      for (const Poly& residue : enumerate_degree_below(field, d)) out.emplace_back(modulus, residue);
    }
  }
  return out;
}

BigInt multiset_count(std::uint64_t n, std::uint64_t k) {
  // C(n + k - 1, k)
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n + i - 1) / i;
  return result;
}

SearchResult search_counterexamples(const Field& field, std::size_t size, std::size_t max_modulus_degree,
                                    std::size_t cover_degree, const BigInt& cap) {
  if (size == 0 || max_modulus_degree == 0 || cover_degree == 0) {
    throw InvalidArgument("search needs positive size, modulus degree and cover degree");
  }
  auto pool = all_congruences(field, max_modulus_degree);
  const BigInt required = multiset_count(pool.size(), size);
  if (required > cap) throw CapExceeded("counterexample search", required, cap);
  SearchResult result;
  Searcher(field, std::move(pool), cover_degree).run(size, result);
  return result;
}

SearchResult verify_theorem(const Field& field, std::size_t max_size, std::size_t max_modulus_degree,
                            const BigInt& cap) {
  SearchResult total;
  for (std::size_t size = 1; size <= max_size; ++size) {
    auto part = search_counterexamples(field, size, max_modulus_degree, size, cap);
    total.systems_examined += part.systems_examined;
    total.premise_hits += part.premise_hits;
    for (auto& s : part.counterexamples) total.counterexamples.push_back(std::move(s));
  }
  return total;
}

std::size_t conjecture_cover_degree(std::uint64_t q, std::size_t n) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  const BigInt target = ipow(BigInt(2), n);
  std::size_t d = 0;
  for (BigInt power = 1; power < target; power *= q) ++d;
  return d;
}

std::vector<CongruenceSystem> conjecture_search(std::uint64_t q, std::size_t n, std::size_t degree_budget,
                                                const BigInt& cap) {
  const Field field = Field::of_order(q);
  return search_counterexamples(field, n, degree_budget, conjecture_cover_degree(q, n), cap).counterexamples;
}

}  // namespace covsys
