#include "newton_strata/isocrystal.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>

#include <boost/random/uniform_int_distribution.hpp>

#include "newton_strata/errors.hpp"
#include "newton_strata/parallel.hpp"

namespace newton_strata {

namespace {

constexpr std::int64_t kExact = LaurentPolyMatrix::kExact;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t add_cap(std::int64_t cap, std::int64_t shift) { return cap == kExact || shift == kExact ? kExact : cap + shift; }

// acc[i + j] += a[i] * b[j] for i + j < limit. The body is inlined into two
// clone sets so that the uint32 version gets full-width vector lanes.
template <typename Acc>
inline __attribute__((always_inline)) void convolve_body(Acc* acc, const std::uint32_t* a, std::size_t a_from,
                                                         std::size_t a_to, const std::uint32_t* b, std::size_t b_from,
                                                         std::size_t b_to, std::size_t limit) {
  for (std::size_t i = a_from; i < a_to && i + b_from < limit; ++i) {
    const Acc ai = a[i];
    if (ai == 0) continue;
    const std::size_t stop = std::min(b_to, limit - i);
    Acc* out = acc + i;
    for (std::size_t j = b_from; j < stop; ++j) out[j] += ai * static_cast<Acc>(b[j]);
  }
}

__attribute__((target_clones("avx2", "default"))) void convolve32(std::uint32_t* acc, const std::uint32_t* a,
                                                                  std::size_t a_from, std::size_t a_to,
                                                                  const std::uint32_t* b, std::size_t b_from,
                                                                  std::size_t b_to, std::size_t limit) {
  convolve_body(acc, a, a_from, a_to, b, b_from, b_to, limit);
}

__attribute__((target_clones("avx2", "default"))) void convolve64(std::uint64_t* acc, const std::uint32_t* a,
                                                                  std::size_t a_from, std::size_t a_to,
                                                                  const std::uint32_t* b, std::size_t b_from,
                                                                  std::size_t b_to, std::size_t limit) {
  convolve_body(acc, a, a_from, a_to, b, b_from, b_to, limit);
}

// Whether `terms` products of residues mod p can be summed in 32 bits.
bool fits32(std::uint32_t p, std::uint64_t terms) {
  const std::uint64_t square = static_cast<std::uint64_t>(p - 1) * (p - 1);
  return square == 0 || terms <= 0xFFFFFFFFull / square;
}

// Dense coefficient block over [0, length) in a common frame, with the index
// of the first non-zero coefficient (== length for zero).
struct Dense {
  std::vector<std::uint32_t> c;
  std::size_t first = 0;
  std::size_t last = 0;  // one past the last non-zero coefficient

  void scan() {
    first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    last = c.size();
    while (last > first && c[last - 1] == 0) --last;
  }
  bool zero() const { return first == last; }
};

// Signed sums of products of dense blocks, reduced mod p at the end.
class Accumulator {
 public:
  Accumulator(std::size_t length, std::uint32_t p, std::uint64_t max_terms)
      : p_(p), wide_(!fits32(p, max_terms * length)) {
    if (wide_) {
      pos64_.assign(length, 0);
      neg64_.assign(length, 0);
    } else {
      pos32_.assign(length, 0);
      neg32_.assign(length, 0);
    }
  }

  void add(bool negative, const Dense& a, const Dense& b) {
    const std::size_t limit = wide_ ? pos64_.size() : pos32_.size();
    if (a.zero() || b.zero() || a.first + b.first >= limit) return;
    if (wide_) {
      convolve64((negative ? neg64_ : pos64_).data(), a.c.data(), a.first, a.last, b.c.data(), b.first, b.last, limit);
    } else {
      convolve32((negative ? neg32_ : pos32_).data(), a.c.data(), a.first, a.last, b.c.data(), b.first, b.last, limit);
    }
  }

  Dense finish() const {
    Dense out;
    const std::size_t length = wide_ ? pos64_.size() : pos32_.size();
    out.c.resize(length);
    for (std::size_t k = 0; k < length; ++k) {
      const std::uint64_t pos = wide_ ? pos64_[k] : pos32_[k];
      const std::uint64_t neg = wide_ ? neg64_[k] : neg32_[k];
      out.c[k] = static_cast<std::uint32_t>((pos % p_ + p_ - neg % p_) % p_);
    }
    out.scan();
    return out;
  }

 private:
  std::uint32_t p_;
  bool wide_;
  std::vector<std::uint32_t> pos32_, neg32_;
  std::vector<std::uint64_t> pos64_, neg64_;
};

// Minors of an n x n block matrix of dense series, computed lazily by
// expansion along the first row and memoised on (rows, columns).
class MinorTable {
 public:
  MinorTable(std::vector<Dense> entries, int n, std::uint32_t p, std::size_t length)
      : entries_(std::move(entries)), n_(n), p_(p), length_(length),
        slot_(static_cast<std::size_t>(1) << (2 * n), -1) {}

  const Dense& minor(unsigned rows, unsigned cols) {
    const std::size_t key = (static_cast<std::size_t>(rows) << n_) | cols;
    if (slot_[key] >= 0) return store_[static_cast<std::size_t>(slot_[key])];
    Dense value;
    const int r = std::countr_zero(rows);
    if (std::popcount(rows) == 1) {
      value = entries_[static_cast<std::size_t>(r * n_ + std::countr_zero(cols))];
    } else {
      Accumulator acc(length_, p_, static_cast<std::uint64_t>(n_));
      const unsigned rest = rows & (rows - 1);
      bool negative = false;
      for (unsigned remaining = cols; remaining; remaining &= remaining - 1) {
        const int c = std::countr_zero(remaining);
        const Dense& entry = entries_[static_cast<std::size_t>(r * n_ + c)];
        if (!entry.zero()) acc.add(negative, entry, minor(rest, cols & ~(1u << c)));
        negative = !negative;
      }
      value = acc.finish();
    }
    slot_[key] = static_cast<int>(store_.size());
    store_.push_back(std::move(value));
    return store_.back();
  }

 private:
  std::vector<Dense> entries_;
  int n_;
  std::uint32_t p_;
  std::size_t length_;
  std::vector<int> slot_;
  std::deque<Dense> store_;
};

// Coefficient block of the Iwahori factor over degrees [from, to].
void fill_iwahori(LaurentPolyMatrix& m, std::vector<std::vector<std::uint32_t>>& raw, std::int64_t from, std::int64_t to,
                  std::mt19937_64& rng) {
  const int n = m.size();
  const std::uint32_t p = m.prime();
  boost::random::uniform_int_distribution<std::uint32_t> any(0, p - 1);
  boost::random::uniform_int_distribution<std::uint32_t> unit(1, p - 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      auto& coeffs = raw[static_cast<std::size_t>(r * n + c)];
      coeffs.resize(static_cast<std::size_t>(to + 1), 0);
      for (std::int64_t d = from; d <= to; ++d) {
        std::uint32_t value;
        if (d == 0 && r == c) {
          value = unit(rng);
        } else if (d == 0 && c > r) {
          value = 0;
        } else {
          value = any(rng);
        }
        coeffs[static_cast<std::size_t>(d)] = value;
      }
      m.set(r, c, LaurentPoly(0, coeffs));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<std::uint32_t> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  std::size_t end = coeffs_.size();
  while (end > lead && coeffs_[end - 1] == 0) --end;
  if (lead == end) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(end), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ += static_cast<std::int64_t>(lead);
}

LaurentPoly LaurentPoly::monomial(std::int64_t degree, std::uint32_t coeff) { return LaurentPoly(degree, {coeff}); }

std::uint32_t LaurentPoly::coefficient(std::int64_t degree) const {
  if (is_zero() || degree < low_ || degree > this->degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

LaurentPoly LaurentPoly::truncated(std::int64_t cap) const {
  if (is_zero() || cap > degree()) return *this;
  if (cap <= low_) return {};
  return LaurentPoly(low_, std::vector<std::uint32_t>(coeffs_.begin(), coeffs_.begin() + (cap - low_)));
}

// ---------------------------------------------------------------------------
// LaurentPolyMatrix

LaurentPolyMatrix::LaurentPolyMatrix(int n, std::uint32_t p, std::int64_t cap)
    : n_(n), p_(p), cap_(cap), entries_(static_cast<std::size_t>(n * n)) {
  if (n < 1 || n > 8) throw Error(ErrorCode::invalid_argument, "matrix size must be between 1 and 8");
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a prime below 65536");
  }
}

void LaurentPolyMatrix::set(int r, int c, LaurentPoly value) {
  if (r < 0 || r >= n_ || c < 0 || c >= n_) throw Error(ErrorCode::invalid_argument, "matrix index out of range");
  for (auto coeff : value.coefficients()) {
    if (coeff >= p_) throw Error(ErrorCode::invalid_argument, "coefficient not reduced mod p");
  }
  entries_[index(r, c)] = exact() ? std::move(value) : value.truncated(cap_);
}

std::int64_t LaurentPolyMatrix::min_valuation() const {
  std::int64_t low = kExact;
  for (const auto& e : entries_)
    if (!e.is_zero()) low = std::min(low, e.valuation());
  return low;
}

std::int64_t LaurentPolyMatrix::max_degree() const {
  std::int64_t high = std::numeric_limits<std::int64_t>::min();
  for (const auto& e : entries_)
    if (!e.is_zero()) high = std::max(high, e.degree());
  return high;
}

LaurentPolyMatrix LaurentPolyMatrix::truncated(std::int64_t cap) const {
  if (cap >= cap_) return *this;
  LaurentPolyMatrix out(n_, p_, cap);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].truncated(cap);
  return out;
}

LaurentPolyMatrix operator*(const LaurentPolyMatrix& a, const LaurentPolyMatrix& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw Error(ErrorCode::rank_mismatch, "matrices over different rings");
  const int n = a.n_;
  const std::int64_t va = a.min_valuation();
  const std::int64_t vb = b.min_valuation();
  if (va == kExact || vb == kExact) return LaurentPolyMatrix(n, a.p_);  // a zero factor

  const std::int64_t cap = std::min(add_cap(a.cap_, vb), add_cap(b.cap_, va));
  // Common frame: every product term has degree in [low, high].
  const std::int64_t low = va + vb;
  const std::int64_t high = std::min(a.max_degree() + b.max_degree(), cap == kExact ? kExact : cap - 1);
  LaurentPolyMatrix out(n, a.p_, cap);
  if (high < low) return out;
  const auto length = static_cast<std::size_t>(high - low + 1);

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Accumulator acc(length, a.p_, static_cast<std::uint64_t>(n));
      for (int j = 0; j < n; ++j) {
        const LaurentPoly& x = a(r, j);
        const LaurentPoly& y = b(j, c);
        if (x.is_zero() || y.is_zero()) continue;
        // Place x at offset x.val - va and y at offset y.val - vb so that
        // index i + j corresponds to degree low + i + j.
        Dense dx, dy;
        dx.c.assign(static_cast<std::size_t>(x.valuation() - va), 0);
        dx.c.insert(dx.c.end(), x.coefficients().begin(), x.coefficients().end());
        dy.c.assign(static_cast<std::size_t>(y.valuation() - vb), 0);
        dy.c.insert(dy.c.end(), y.coefficients().begin(), y.coefficients().end());
        dx.scan();
        dy.scan();
        acc.add(false, dx, dy);
      }
      Dense sum = acc.finish();
      out.set(r, c, LaurentPoly(low, std::move(sum.c)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

std::int64_t precision_floor(const AffineElement& x) {
  std::int64_t largest = 0;
  for (auto value : x.normal_form().mu) largest = std::max(largest, std::abs(value));
  const std::int64_t n = x.dim();
  return 2 * n * largest + n;
}

LaurentPolyMatrix matrix_of(const AffineElement& x, std::uint32_t p) {
  // P_v diag(t^mu) P_w = diag(t^lambda) P_u for x = t^lambda u.
  const int n = x.dim();
  LaurentPolyMatrix m(n, p);
  for (int c = 0; c < n; ++c) {
    const int r = x.finite_part()(c);
    m.set(r, c, LaurentPoly::monomial(x.lambda()[static_cast<std::size_t>(r)]));
  }
  return m;
}

LaurentPolyMatrix sample_iwahori(int n, std::uint32_t p, std::int64_t deg_cap, std::mt19937_64& rng) {
  if (deg_cap < 0) throw Error(ErrorCode::invalid_argument, "deg_cap must be non-negative");
  LaurentPolyMatrix m(n, p, deg_cap + 1);
  std::vector<std::vector<std::uint32_t>> raw(static_cast<std::size_t>(n * n));
  fill_iwahori(m, raw, 0, deg_cap, rng);
  return m;
}

IsoClass newton_point_of_matrix(const LaurentPolyMatrix& m) {
  const int n = m.size();
  const std::int64_t low = m.min_valuation();
  if (low == kExact) throw Error(ErrorCode::invalid_argument, "zero matrix has no Newton point");

  // Work with t^shift m, whose entries are power series.
  const std::int64_t shift = -low;
  std::int64_t length;  // coefficients of the shifted minors known below this
  if (m.exact()) {
    length = static_cast<std::int64_t>(n) * (m.max_degree() + shift) + 1;
  } else {
    length = m.cap() + shift;
  }
  if (length <= 0) throw Error(ErrorCode::precision_loss, "matrix carries no exact coefficients");

  std::vector<Dense> entries(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Dense& d = entries[static_cast<std::size_t>(r * n + c)];
      d.c.assign(static_cast<std::size_t>(length), 0);
      const LaurentPoly& e = m(r, c);
      for (std::int64_t k = 0; !e.is_zero() && k < static_cast<std::int64_t>(e.coefficients().size()); ++k) {
        const std::int64_t at = e.valuation() + k + shift;
        if (at < length) d.c[static_cast<std::size_t>(at)] = e.coefficients()[static_cast<std::size_t>(k)];
      }
      d.scan();
    }
  }
  MinorTable table(std::move(entries), n, m.prime(), static_cast<std::size_t>(length));

  // val(e_k(m)) = val(e_k(t^shift m)) - k shift, known below bound[k].
  std::vector<std::optional<std::int64_t>> val(static_cast<std::size_t>(n + 1));
  std::vector<std::int64_t> bound(static_cast<std::size_t>(n + 1), kExact);
  val[0] = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> total(static_cast<std::size_t>(length), 0);
    for (unsigned set = 1; set < (1u << n); ++set) {
      if (std::popcount(set) != k) continue;
      const Dense& minor = table.minor(set, set);
      for (std::size_t i = minor.first; i < minor.last; ++i) total[i] = (total[i] + minor.c[i]) % m.prime();
    }
    std::size_t first = 0;
    while (first < total.size() && total[first] == 0) ++first;
    if (!m.exact()) bound[static_cast<std::size_t>(k)] = length - static_cast<std::int64_t>(k) * shift;
    if (first < total.size()) val[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(first) - k * shift;
  }

  if (!val[static_cast<std::size_t>(n)]) {
    if (m.exact()) throw Error(ErrorCode::invalid_argument, "matrix is singular");
    throw Error(ErrorCode::precision_loss, "determinant vanishes below the truncation");
  }

  // Lower convex hull of the known points.
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (int k = 0; k <= n; ++k) {
    if (!val[static_cast<std::size_t>(k)]) continue;
    const std::pair<std::int64_t, std::int64_t> point{k, *val[static_cast<std::size_t>(k)]};
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull.back();
      // Drop the middle point unless it lies strictly below the chord.
      if ((y2 - y1) * (point.first - x1) >= (point.second - y1) * (x2 - x1)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(point);
  }

  const std::int64_t margin = n;
  for (const auto& [k, v] : hull) {
    if (bound[static_cast<std::size_t>(k)] != kExact && v >= bound[static_cast<std::size_t>(k)] - margin) {
      throw Error(ErrorCode::precision_loss, "hull vertex at k = " + std::to_string(k) + " is too close to the truncation");
    }
  }
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    const auto [x1, y1] = hull[seg];
    const auto [x2, y2] = hull[seg + 1];
    for (std::int64_t k = x1 + 1; k < x2; ++k) {
      if (val[static_cast<std::size_t>(k)]) continue;
      // Unknown: the true valuation is >= bound; it must clear the hull.
      const std::int64_t b = bound[static_cast<std::size_t>(k)];
      if (b == kExact) continue;
      const std::int64_t lhs = (b - margin) * (x2 - x1);
      const std::int64_t rhs = y1 * (x2 - k) + y2 * (k - x1);
      if (lhs <= rhs) {
        throw Error(ErrorCode::precision_loss, "coefficient e_" + std::to_string(k) + " is not determined");
      }
    }
  }

  std::vector<Rational> slopes;
  slopes.reserve(static_cast<std::size_t>(n));
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    const auto [x1, y1] = hull[seg];
    const auto [x2, y2] = hull[seg + 1];
    const Rational slope = Rational(y2 - y1) / (x2 - x1);
    slopes.insert(slopes.end(), static_cast<std::size_t>(x2 - x1), slope);
  }
  return IsoClass(NewtonPoint::dominant_from(std::move(slopes)));
}

namespace {

struct Outcome {
  std::optional<IsoClass> point;
  bool rechecked = false;
  bool mismatch = false;
};

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), tag};
  return std::mt19937_64(seq);
}

// Newton point of i1 X i2, computed with the factors cut at degree `start`
// and retried with twice the precision on loss, up to the full factors.
std::optional<IsoClass> evaluate(const LaurentPolyMatrix& i1, const LaurentPolyMatrix& x, const LaurentPolyMatrix& i2,
                                 std::int64_t start) {
  const std::int64_t full = i1.cap() - 1;
  for (std::int64_t cut = std::min(start, full);; cut = std::min(2 * cut, full)) {
    try {
      return newton_point_of_matrix(i1.truncated(cut + 1) * x * i2.truncated(cut + 1));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::precision_loss || cut == full) return std::nullopt;
    }
  }
}

}  // namespace

SampleSummary estimate_generic_newton(const AffineElement& x, const SamplerConfig& cfg) {
  if (cfg.samples == 0) throw Error(ErrorCode::invalid_argument, "sample count must be positive");
  const std::int64_t floor = precision_floor(x);
  const std::int64_t deg_cap = cfg.deg_cap == 0 ? floor : cfg.deg_cap;
  if (deg_cap < floor) {
    throw Error(ErrorCode::invalid_argument,
                "deg_cap " + std::to_string(deg_cap) + " is below the precision floor " + std::to_string(floor));
  }
  const LaurentPolyMatrix base = matrix_of(x, cfg.prime);
  const int n = x.dim();

  // Cut that suffices when the Newton polygon is as far from the truncation
  // as the Kottwitz point allows (n shift + kappa plus the margin).
  const std::int64_t shift = std::max<std::int64_t>(0, -base.min_valuation());
  const std::int64_t start = n * shift + std::max<std::int64_t>(0, x.kappa()) + n;

  std::vector<Outcome> outcomes(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](std::size_t k) {
    auto rng = stream(cfg.seed, k, 0);
    std::vector<std::vector<std::uint32_t>> raw1(static_cast<std::size_t>(n * n));
    std::vector<std::vector<std::uint32_t>> raw2(static_cast<std::size_t>(n * n));
    LaurentPolyMatrix i1(n, cfg.prime, deg_cap + 1);
    LaurentPolyMatrix i2(n, cfg.prime, deg_cap + 1);
    fill_iwahori(i1, raw1, 0, deg_cap, rng);
    fill_iwahori(i2, raw2, 0, deg_cap, rng);
    Outcome& out = outcomes[k];
    out.point = evaluate(i1, base, i2, start);

    if (cfg.stability_recheck && k % 20 == 0 && out.point) {
      auto extra = stream(cfg.seed, k, 1);
      LaurentPolyMatrix j1(n, cfg.prime, 2 * deg_cap + 1);
      LaurentPolyMatrix j2(n, cfg.prime, 2 * deg_cap + 1);
      fill_iwahori(j1, raw1, deg_cap + 1, 2 * deg_cap, extra);
      fill_iwahori(j2, raw2, deg_cap + 1, 2 * deg_cap, extra);
      // No early cut here: the whole extended product is used.
      const auto again = evaluate(j1, base, j2, 2 * deg_cap);
      out.rechecked = true;
      out.mismatch = !again || !(*again == *out.point);
    }
  });

  SampleSummary summary;
  summary.deg_cap = deg_cap;
  for (const auto& out : outcomes) {
    if (!out.point) {
      ++summary.discarded;
      continue;
    }
    ++summary.samples;
    ++summary.histogram[*out.point];
    summary.rechecked += out.rechecked;
    summary.recheck_mismatches += out.mismatch;
  }
  if (summary.discarded * 10 > cfg.samples) {
    throw Error(ErrorCode::precision_loss, std::to_string(summary.discarded) + " of " + std::to_string(cfg.samples) +
                                               " samples lost precision");
  }
  for (const auto& [point, count] : summary.histogram) {
    const bool dominated = std::any_of(summary.histogram.begin(), summary.histogram.end(), [&](const auto& other) {
      return !(other.first == point) && dominance_leq(point, other.first);
    });
    if (!dominated) summary.max_points.push_back(point);
  }
  return summary;
}

}  // namespace newton_strata
