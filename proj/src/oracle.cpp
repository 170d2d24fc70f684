#include "commtuples/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

namespace commtuples {

Permutation::Permutation(unsigned degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<std::uint8_t> img(a.degree());
  for (unsigned i = 0; i < img.size(); ++i) img[i] = a.image_[b.image_[i]];
  Permutation r(0);
  r.image_ = std::move(img);
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (unsigned i = 0; i < degree(); ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::commutes_with(const Permutation& other) const {
  for (unsigned i = 0; i < degree(); ++i)
    if (image_[other.image_[i]] != other.image_[image_[i]]) return false;
  return true;
}

Partition Permutation::cycle_type() const {
  Partition type;
  std::vector<bool> seen(degree(), false);
  for (unsigned start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (unsigned i = start; !seen[i]; i = image_[i]) {
      seen[i] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::uint32_t Permutation::rank() const {
  std::uint32_t r = 0;
  const unsigned n = degree();
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) smaller += image_[j] < image_[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

std::vector<Permutation> all_permutations(unsigned n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation permutation_with_cycle_type(const Partition& type) {
  const unsigned n = std::accumulate(type.begin(), type.end(), 0u);
  std::vector<std::uint8_t> img(n);
  unsigned pos = 0;
  for (auto len : type) {
    for (unsigned i = 0; i < len; ++i)
      img[pos + i] = static_cast<std::uint8_t>(pos + (i + 1) % len);
    pos += len;
  }
  return Permutation(std::move(img));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Permutation> centralizer_in(const std::vector<Permutation>& group,
                                        const Permutation& g) {
  std::vector<Permutation> c;
  for (const auto& h : group)
    if (h.commutes_with(g)) c.push_back(h);
  return c;
}

std::uint64_t count_extensions(const std::vector<Permutation>& candidates, unsigned remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return candidates.size();
  std::uint64_t total = 0;
  for (const auto& p : candidates) total += count_extensions(centralizer_in(candidates, p), remaining - 1);
  return total;
}

// |Hom(Z^k, H)| for an explicitly listed subgroup H of S_n.
Integer hom_count(const std::vector<Permutation>& group, unsigned k, std::uint32_t n_factorial) {
  if (k == 0) return 1;
  if (k == 1) return Integer(static_cast<unsigned long>(group.size()));
  std::vector<Permutation> inverses;
  inverses.reserve(group.size());
  for (const auto& x : group) inverses.push_back(x.inverse());

  std::vector<char> seen(n_factorial, 0);
  Integer total = 0;
  for (const auto& h : group) {
    if (seen[h.rank()]) continue;
    unsigned long class_size = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      const auto conj = group[i] * h * inverses[i];
      auto& mark = seen[conj.rank()];
      if (!mark) {
        mark = 1;
        ++class_size;
      }
    }
    total += class_size * hom_count(centralizer_in(group, h), k - 1, n_factorial);
  }
  return total;
}

Integer centralizer_order(const Partition& type, unsigned n) {
  const auto mult = part_multiplicities(type, n);
  Integer z = 1;
  for (unsigned m = 1; m <= n; ++m)
    if (mult[m] > 0) z *= ipow(Integer(m), mult[m]) * factorial(mult[m]);
  return z;
}

OracleResult finish(unsigned n, unsigned ell, Integer raw, std::string method,
                    Clock::time_point start) {
  const Integer nf = factorial(n);
  if (!mpz_divisible_p(raw.get_mpz_t(), nf.get_mpz_t()) && ell > 0)
    throw std::logic_error("oracle: raw count not divisible by n!");
  OracleResult r;
  r.n = n;
  r.ell = ell;
  r.normalized = make_rational(raw, nf);
  r.raw = std::move(raw);
  r.method = std::move(method);
  r.elapsed_seconds = seconds_since(start);
  return r;
}

}  // namespace

OracleResult count_commuting_tuples(unsigned n, unsigned ell) {
  if (n > 6 || ell > 4) {
    const Integer bound = ipow(factorial(n), ell);
    throw std::invalid_argument("count_commuting_tuples: refusing n=" + std::to_string(n) +
                                ", ell=" + std::to_string(ell) + " (search space up to (n!)^ell = " +
                                bound.get_str() + " tuples; limits are n <= 6, ell <= 4)");
  }
  const auto start = Clock::now();
  const auto group = all_permutations(n);
  const std::uint64_t raw = count_extensions(group, ell);
  return finish(n, ell, Integer(static_cast<unsigned long>(raw)), "brute-force", start);
}

OracleResult count_hom_by_centralizers(unsigned n, unsigned ell) {
  if (n > 8) throw std::invalid_argument("count_hom_by_centralizers: n must be <= 8");
  const auto start = Clock::now();
  if (ell == 0) return finish(n, ell, 1, "centralizer-recursion", start);

  const auto group = all_permutations(n);
  const Integer nf = factorial(n);
  const auto n_factorial = static_cast<std::uint32_t>(group.size());
  Integer raw = 0;
  for_each_partition(n, [&](const Partition& type) {
    const auto rep = permutation_with_cycle_type(type);
    const Integer class_size = nf / centralizer_order(type, n);
    raw += class_size * hom_count(centralizer_in(group, rep), ell - 1, n_factorial);
  });
  return finish(n, ell, std::move(raw), "centralizer-recursion", start);
}

std::uint64_t conjugacy_class_count(unsigned n) {
  if (n > 8) throw std::invalid_argument("conjugacy_class_count: n must be <= 8");
  std::uint64_t classes = 0;
  Integer covered = 0;
  for_each_partition(n, [&](const Partition& type) {
    ++classes;
    covered += factorial(n) / centralizer_order(type, n);
  });
  if (covered != factorial(n)) throw std::logic_error("conjugacy_class_count: class sizes do not sum to n!");
  return classes;
}

}  // namespace commtuples
