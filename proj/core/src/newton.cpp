#include "newton_strata/newton.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "newton_strata/errors.hpp"

namespace newton_strata {

namespace {

// Walks the maximal runs of equal slopes: f(start, length, slope).
template <typename F>
void for_each_run(const std::vector<Rational>& slopes, F&& f) {
  std::size_t start = 0;
  while (start < slopes.size()) {
    std::size_t end = start + 1;
    while (end < slopes.size() && slopes[end] == slopes[start]) ++end;
    f(start, end - start, slopes[start]);
    start = end;
  }
}

void require_same_rank(const IsoClass& a, const IsoClass& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::rank_mismatch, "classes of GL_n for different n");
}

}  // namespace

// ---------------------------------------------------------------------------
// NewtonPoint

NewtonPoint::NewtonPoint(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
  if (slopes_.empty()) throw Error(ErrorCode::malformed_slopes, "empty Newton point");
  for (std::size_t k = 0; k + 1 < slopes_.size(); ++k) {
    if (slopes_[k] < slopes_[k + 1]) {
      throw Error(ErrorCode::malformed_slopes, "slopes of " + to_string() + " are not non-increasing");
    }
  }
  Rational height = 0;
  for_each_run(slopes_, [&](std::size_t, std::size_t length, const Rational& slope) {
    height += slope * static_cast<long long>(length);
    if (!is_integer(height)) {
      throw Error(ErrorCode::malformed_slopes, "break point of " + to_string() + " is not integral");
    }
  });
}

NewtonPoint NewtonPoint::dominant_from(std::vector<Rational> slopes) {
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  return NewtonPoint(std::move(slopes));
}

NewtonPoint NewtonPoint::from_coweight(const Coweight& lambda) {
  std::vector<Rational> slopes;
  slopes.reserve(lambda.size());
  for (auto value : lambda) slopes.emplace_back(value);
  return dominant_from(std::move(slopes));
}

NewtonPoint NewtonPoint::parse(std::string_view text) {
  std::vector<Rational> slopes;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    slopes.push_back(parse_rational(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return NewtonPoint(std::move(slopes));
}

Rational NewtonPoint::partial_sum(std::size_t k) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += slopes_[i];
  return sum;
}

std::vector<Rational> NewtonPoint::polygon() const {
  std::vector<Rational> values(slopes_.size() + 1);
  for (std::size_t k = 0; k < slopes_.size(); ++k) values[k + 1] = values[k] + slopes_[k];
  return values;
}

bool NewtonPoint::is_integral() const {
  return std::all_of(slopes_.begin(), slopes_.end(), [](const Rational& s) { return is_integer(s); });
}

std::string NewtonPoint::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    if (k) out += ',';
    out += format_rational(slopes_[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IsoClass

IsoClass::IsoClass(NewtonPoint nu) : nu_(std::move(nu)) {
  kappa_ = boost::multiprecision::numerator(nu_.partial_sum(nu_.rank()));
}

IsoClass::IsoClass(NewtonPoint nu, Integer kappa) : IsoClass(std::move(nu)) {
  if (kappa != kappa_) {
    throw Error(ErrorCode::invalid_argument,
                "Kottwitz point " + kappa.str() + " does not match Newton point " + nu_.to_string());
  }
}

IsoClass IsoClass::basic(std::size_t n, const Integer& kappa) {
  return IsoClass(NewtonPoint(std::vector<Rational>(n, Rational(kappa) / static_cast<long long>(n))));
}

Rational pair_rho(const NewtonPoint& nu) {
  const auto n = static_cast<long long>(nu.rank());
  Rational sum = 0;
  for (long long k = 0; k < n; ++k) sum += nu[static_cast<std::size_t>(k)] * Rational(n - 1 - 2 * k) / 2;
  return sum;
}

Rational pair_two_rho(const NewtonPoint& nu) { return 2 * pair_rho(nu); }

std::vector<Rational> difference(const NewtonPoint& a, const NewtonPoint& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::rank_mismatch, "Newton points of different length");
  std::vector<Rational> out(a.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool dominance_leq(const IsoClass& a, const IsoClass& b) {
  require_same_rank(a, b);
  if (a.kappa() != b.kappa()) return false;
  Rational sa = 0;
  Rational sb = 0;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    sa += a.nu()[k];
    sb += b.nu()[k];
    if (sa > sb) return false;
  }
  return true;
}

int defect(const IsoClass& b) {
  int blocks = 0;
  for_each_run(b.nu().slopes(), [&](std::size_t, std::size_t length, const Rational& slope) {
    const Integer q = boost::multiprecision::denominator(slope);
    if (Integer(length) % q != 0) {
      throw Error(ErrorCode::malformed_slopes,
                  "run of slope " + format_rational(slope) + " has length not divisible by its denominator");
    }
    blocks += static_cast<int>(Integer(length) / q);
  });
  return static_cast<int>(b.rank()) - blocks;
}

Integer chain_length(const IsoClass& a, const IsoClass& b) {
  if (!dominance_leq(a, b)) {
    throw Error(ErrorCode::not_comparable, "[" + a.nu().to_string() + "] is not below [" + b.nu().to_string() + "]");
  }
  const Rational length = pair_rho(b.nu()) - pair_rho(a.nu()) + Rational(defect(a) - defect(b)) / 2;
  if (!is_integer(length)) throw std::logic_error("non-integral chain length " + format_rational(length));
  return boost::multiprecision::numerator(length);
}

// ---------------------------------------------------------------------------
// Intervals

std::vector<IsoClass> interval(const IsoClass& a, const IsoClass& b, const PosetLimits& limits) {
  require_same_rank(a, b);
  if (!dominance_leq(a, b)) {
    throw Error(ErrorCode::not_comparable, "[" + a.nu().to_string() + "] is not below [" + b.nu().to_string() + "]");
  }
  const Rational gap = pair_rho(b.nu()) - pair_rho(a.nu());
  if (gap > limits.max_gap) {
    throw Error(ErrorCode::limit_exceeded,
                "interval gap " + format_rational(gap) + " exceeds limit " + format_rational(limits.max_gap));
  }

  // A class between a and b is a concave polygon with integral break points
  // pinched between the two polygons. Search over its break points, with
  // strictly decreasing slopes so that each polygon is produced once.
  const auto n = a.rank();
  const auto lower = a.nu().polygon();
  const auto upper = b.nu().polygon();
  const Integer kappa = a.kappa();

  std::vector<IsoClass> found;
  std::vector<Rational> slopes;
  std::size_t nodes = 0;

  std::function<void(std::size_t, const Integer&, const std::optional<Rational>&)> extend =
      [&](std::size_t j, const Integer& y, const std::optional<Rational>& previous) {
        if (++nodes > limits.max_nodes) {
          throw Error(ErrorCode::limit_exceeded, "interval enumeration exceeded node budget");
        }
        if (j == n) {
          found.emplace_back(NewtonPoint(slopes));
          return;
        }
        for (std::size_t next = j + 1; next <= n; ++next) {
          Integer lo = ceil_of(lower[next]);
          Integer hi = floor_of(upper[next]);
          if (next == n) lo = hi = kappa;
          const auto run = static_cast<long long>(next - j);
          for (Integer y_next = lo; y_next <= hi; ++y_next) {
            const Rational slope = Rational(Integer(y_next - y)) / run;
            if (previous && !(slope < *previous)) continue;
            bool inside = true;
            for (std::size_t i = j + 1; i < next && inside; ++i) {
              const Rational value = Rational(y) + slope * static_cast<long long>(i - j);
              inside = lower[i] <= value && value <= upper[i];
            }
            if (!inside) continue;
            slopes.insert(slopes.end(), static_cast<std::size_t>(run), slope);
            extend(next, y_next, slope);
            slopes.resize(slopes.size() - static_cast<std::size_t>(run));
          }
        }
      };
  extend(0, Integer(0), std::nullopt);

  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Chain> maximal_chains(const IsoClass& a, const IsoClass& b, const PosetLimits& limits) {
  const auto elements = interval(a, b, limits);
  const std::size_t count = elements.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      below[i][j] = i != j && dominance_leq(elements[i], elements[j]);

  std::vector<std::vector<std::size_t>> covers(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < count && direct; ++k) direct = !(below[i][k] && below[k][j]);
      if (direct) covers[i].push_back(j);
    }
  }

  const auto locate = [&](const IsoClass& c) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), c) - elements.begin());
  };
  const std::size_t start = locate(a);
  const std::size_t stop = locate(b);

  std::vector<Chain> chains;
  Chain current{elements[start]};
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == stop) {
      chains.push_back(current);
      return;
    }
    for (auto next : covers[at]) {
      if (!(next == stop || below[next][stop])) continue;
      current.push_back(elements[next]);
      walk(next);
      current.pop_back();
    }
  };
  walk(start);
  return chains;
}

}  // namespace newton_strata
