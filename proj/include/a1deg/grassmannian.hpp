#pragma once

// Euler characteristic of Gr(r, n) as the degree of a section of the tangent
// bundle restricted to the standard affine chart.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a1deg/degree.hpp"

namespace a1deg {

/// alpha = sum_k coeffs[k] * phi_{k+1}.
template <ExactField K>
struct LinearForm {
  std::vector<typename K::value_type> coeffs;
};

template <ExactField K>
struct GrassmannSpec {
  K field;
  unsigned r = 0;
  unsigned n = 0;
  std::vector<LinearForm<K>> forms;

  unsigned dimension() const { return r * (n - r); }
};

namespace detail {

inline void check_grassmann_range(unsigned r, unsigned n) {
  if (r < 1 || r >= n) fail(ErrorKind::DimensionMismatch, "need 1 <= r < n");
}

inline void check_grassmann_shape(unsigned r, unsigned n) {
  check_grassmann_range(r, n);
  if (static_cast<std::size_t>(r) * (n - r) > kMaxVariables)
    fail(ErrorKind::DimensionMismatch, "Grassmannian chart has too many coordinates");
}

inline std::string chart_name(unsigned i, unsigned j) {
  if (i < 10 && j < 10) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

template <ExactField K, class Rng>
typename K::value_type random_coefficient(const K& k, Rng& rng) {
  std::uint64_t p = 0;
  if constexpr (requires { k.characteristic(); }) p = k.characteristic();
  if (p != 0) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(p - 1));
    return k.from_int(d(rng));
  }
  std::uniform_int_distribution<long> d(-10, 10);
  return k.from_int(d(rng));
}

}  // namespace detail

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Coordinate ring of the chart: x_{i,j} for i <= r, j <= n - r, ordered with
/// j outer and i inner, the same order as the section's coordinates. Any other
/// order changes the degree by <sign of the permutation>.
template <ExactField K>
RingPtr<K> chart_ring(const K& field, unsigned r, unsigned n) {
  detail::check_grassmann_shape(r, n);
  std::vector<std::string> names;
  for (unsigned j = 1; j <= n - r; ++j)
    for (unsigned i = 1; i <= r; ++i) names.push_back(detail::chart_name(i, j));
  return make_ring(field, std::move(names));
}

/// alpha_k = phi_{(k mod n) + 1}.
template <ExactField K>
std::vector<LinearForm<K>> cyclic_forms(const K& field, unsigned n) {
  std::vector<LinearForm<K>> out(n);
  for (unsigned k = 1; k <= n; ++k) {
    out[k - 1].coeffs.assign(n, field.zero());
    out[k - 1].coeffs[k % n] = field.one();
  }
  return out;
}

template <ExactField K, class Rng>
std::vector<LinearForm<K>> random_forms(const K& field, unsigned n, Rng& rng) {
  std::vector<LinearForm<K>> out(n);
  for (auto& form : out) {
    do {
      form.coeffs.clear();
      for (unsigned k = 0; k < n; ++k) form.coeffs.push_back(detail::random_coefficient(field, rng));
    } while (std::all_of(form.coeffs.begin(), form.coeffs.end(), [&](const auto& c) { return field.is_zero(c); }));
  }
  return out;
}

/// The section in chart coordinates. Entry (i, j), ordered with j outer and
/// i inner, is the coefficient of t_{n-r+i} in s_j - sum_l x_{l,j} s_{n-r+l}.
template <ExactField K>
EndoSystem<K> build_section(const GrassmannSpec<K>& spec) {
  const unsigned r = spec.r, n = spec.n, q = n - r;
  auto R = chart_ring(spec.field, r, n);
  if (spec.forms.size() != n) fail(ErrorKind::DimensionMismatch, "need exactly n linear forms");
  for (const auto& a : spec.forms) {
    if (a.coeffs.size() != n) fail(ErrorKind::DimensionMismatch, "linear form has the wrong length");
    if (std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](const auto& c) { return spec.field.is_zero(c); }))
      fail(ErrorKind::DimensionMismatch, "linear form is zero");
  }
  auto x = [&](unsigned i, unsigned j) { return Poly<K>::variable(R, (j - 1) * r + (i - 1)); };

  // c[k][i]: coefficient of t_{q+i} in s_k, linear in x.
  std::vector<std::vector<Poly<K>>> c(n);
  for (unsigned k = 0; k < n; ++k) {
    const auto& a = spec.forms[k].coeffs;
    for (unsigned i = 1; i <= r; ++i) {
      Poly<K> acc = Poly<K>::term(R, Monomial(R->arity()), a[q + i - 1]);
      for (unsigned j = 1; j <= q; ++j) acc += x(i, j).scaled(a[j - 1]);
      c[k].push_back(std::move(acc));
    }
  }

  std::vector<Poly<K>> out;
  for (unsigned j = 1; j <= q; ++j)
    for (unsigned i = 1; i <= r; ++i) {
      Poly<K> e = c[j - 1][i - 1];
      for (unsigned l = 1; l <= r; ++l) e -= x(l, j) * c[q + l - 1][i - 1];
      out.push_back(std::move(e));
    }
  return EndoSystem<K>(std::move(out));
}

struct EulerOptions {
  std::uint64_t seed = 0;
  unsigned retries = 8;
  bool try_cyclic = true;
};

template <ExactField K>
struct EulerResult {
  GWClass<K> degree;
  GrassmannSpec<K> spec;
  unsigned attempts = 0;
};

/// Global degree of the section for the first generic choice of forms:
/// cyclic forms, then random forms from the seed.
template <ExactField K>
EulerResult<K> euler_characteristic_report(const K& field, unsigned r, unsigned n, const EulerOptions& opt = {}) {
  detail::check_grassmann_shape(r, n);
  const std::uint64_t expected = binomial(n, r);
  std::mt19937_64 rng(opt.seed);
  std::string last = "no attempts";
  unsigned attempts = 0;
  for (unsigned attempt = 0; attempt <= opt.retries; ++attempt) {
    const bool cyclic = opt.try_cyclic && attempt == 0;
    GrassmannSpec<K> spec{field, r, n, cyclic ? cyclic_forms(field, n) : random_forms(field, n, rng)};
    ++attempts;
    try {
      auto report = global_degree_report(build_section(spec));
      if (report.algebra.dimension() == expected) return {std::move(report.degree), std::move(spec), attempts};
      last = "quotient dimension " + std::to_string(report.algebra.dimension()) + ", expected " + std::to_string(expected);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotZeroDimensional) throw;
      last = e.what();
    }
  }
  fail(ErrorKind::RetriesExhausted, "no generic section after " + std::to_string(attempts) + " attempts: " + last);
}

template <ExactField K>
GWClass<K> euler_characteristic(const K& field, unsigned r, unsigned n, std::uint64_t seed = 0) {
  return euler_characteristic_report(field, r, n, EulerOptions{seed}).degree;
}

/// ((n_C + n_R)/2) <1> + ((n_C - n_R)/2) <-1> with n_C = binom(n, r) and
/// n_R = binom(n/2, r/2); n_R = 0 when n is even and r is odd.
template <ExactField K>
GWClass<K> closed_form(const K& field, unsigned r, unsigned n) {
  if (r == 0 || r == n) return GWClass<K>::unit(field, field.one());
  detail::check_grassmann_range(r, n);
  const std::uint64_t nc = binomial(n, r);
  const std::uint64_t nr = (n % 2 == 0 && r % 2 == 1) ? 0 : binomial(n / 2, r / 2);
  // <1> + <-1> = H, so only the surplus of <1> needs simplifying.
  const std::uint64_t plus = (nc + nr) / 2, minus = (nc - nr) / 2;
  std::vector<typename K::value_type> units(plus - minus, field.one());
  return simplify(field, units, static_cast<unsigned>(minus));
}

inline GWClass<Rationals> closed_form(unsigned r, unsigned n) { return closed_form(Rationals{}, r, n); }

/// chi(r, n) = chi(r-1, n-1) + <-1>^r chi(r, n-1) on the closed form.
inline bool recurrence_check(unsigned r, unsigned n) {
  Rationals Q;
  auto twist = GWClass<Rationals>::unit(Q, r % 2 ? -1 : 1);
  return equals(closed_form(r, n), closed_form(r - 1, n - 1) + twist * closed_form(r, n - 1));
}

// --- table -----------------------------------------------------------------

struct TableCell {
  unsigned r = 0;
  unsigned n = 0;
  std::string computed;  // empty when skipped
  std::string closed;
  std::string error;
  double seconds = 0;
};

/// Cells 1 <= r < n for n in [n_min, n_max], one worker per cell.
template <ExactField K>
std::vector<TableCell> euler_table(const K& field, unsigned n_min, unsigned n_max, const EulerOptions& opt = {},
                                   bool compute = true, bool parallel = true) {
  std::vector<TableCell> cells;
  for (unsigned n = std::max(2u, n_min); n <= n_max; ++n)
    for (unsigned r = 1; r < n; ++r) cells.push_back({r, n, {}, closed_form(r, n).to_string(), {}, 0});
  if (!compute) return cells;
  auto run = [&field, opt](TableCell cell) {
    auto start = std::chrono::steady_clock::now();
    try {
      cell.computed = euler_characteristic_report(field, cell.r, cell.n, opt).degree.to_string();
    } catch (const Error& e) {
      cell.error = e.what();
    }
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cell;
  };
  if (!parallel) {
    for (auto& c : cells) c = run(c);
    return cells;
  }
  std::vector<std::future<TableCell>> jobs;
  for (const auto& c : cells) jobs.push_back(std::async(std::launch::async, run, c));
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = jobs[i].get();
  return cells;
}

inline std::string table_text(const std::vector<TableCell>& cells) {
  std::ostringstream out;
  unsigned row = 0;
  for (const auto& c : cells) {
    if (c.n != row) {
      if (row) out << "\n";
      row = c.n;
      out << "n=" << c.n << ":";
    }
    const std::string& v = c.computed.empty() ? (c.error.empty() ? c.closed : "error") : c.computed;
    out << (c.r == 1 ? " " : " | ") << v;
  }
  if (row) out << "\n";
  return out.str();
}

inline std::string table_csv(const std::vector<TableCell>& cells) {
  std::ostringstream out;
  out << "r,n,computed,closed_form,error\n";
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  for (const auto& c : cells)
    out << c.r << "," << c.n << "," << quote(c.computed) << "," << quote(c.closed) << "," << quote(c.error) << "\n";
  return out.str();
}

}  // namespace a1deg
