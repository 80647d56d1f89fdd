#include "newton_strata/affine.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "newton_strata/errors.hpp"

namespace newton_strata {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

const CartanData& cartan_for(int dim) { return CartanData::type_a_cached(dim - 1); }

NormalForm compute_normal_form(const Coweight& lambda, const WeylElement& u, std::int64_t length) {
  // Strip left descents s_i (l(s_i y) < l(y)) until y is the minimal
  // representative of W_0 x; v collects the stripped reflections.
  const int dim = u.dim();
  const auto& cartan = cartan_for(dim);
  Coweight y_lambda = lambda;
  WeylElement y_u = u;
  std::int64_t y_length = length;
  WeylElement v = WeylElement::identity(dim);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i = 1; i < dim; ++i) {
      const auto s = WeylElement::simple_reflection(dim, i);
      Coweight candidate_lambda = s.apply(y_lambda);
      WeylElement candidate_u = s * y_u;
      const auto candidate_length = affine_length(cartan, candidate_lambda, candidate_u);
      if (candidate_length < y_length) {
        y_lambda = std::move(candidate_lambda);
        y_u = std::move(candidate_u);
        y_length = candidate_length;
        v = v * s;
        stripped = true;
        break;
      }
    }
  }
  // y = t^{y_lambda} y_u = t^mu w.
  return NormalForm{v, y_lambda, y_u};
}

}  // namespace

std::int64_t affine_length(const CartanData& cartan, const Coweight& lambda, const WeylElement& u) {
  if (static_cast<int>(lambda.size()) != cartan.dim() || u.dim() != cartan.dim()) {
    throw Error(ErrorCode::rank_mismatch, "affine element does not match the root datum");
  }
  const auto& [point, denominator] = cartan.alcove_point();
  // Image of the interior point, scaled by the same denominator.
  Coweight image = u.apply(point);
  for (std::size_t k = 0; k < image.size(); ++k) image[k] += denominator * lambda[k];
  std::int64_t count = 0;
  for (const auto& root : cartan.positive_roots()) {
    const auto before = pairing(root.root, point);
    const auto after = pairing(root.root, image);
    count += std::llabs(floor_div(after, denominator) - floor_div(before, denominator));
  }
  return count;
}

AffineElement::AffineElement(Coweight lambda, WeylElement u) : lambda_(std::move(lambda)), finite_(std::move(u)) {
  if (static_cast<int>(lambda_.size()) != finite_.dim()) {
    throw Error(ErrorCode::rank_mismatch, "translation has " + std::to_string(lambda_.size()) +
                                              " coordinates but the finite part acts on " +
                                              std::to_string(finite_.dim()));
  }
  if (finite_.dim() < 2) throw Error(ErrorCode::invalid_argument, "affine elements need rank >= 1");
  length_ = affine_length(cartan_for(finite_.dim()), lambda_, finite_);
  normal_form_ = compute_normal_form(lambda_, finite_, length_);
}

AffineElement AffineElement::translation(Coweight lambda) {
  const int dim = static_cast<int>(lambda.size());
  return AffineElement(std::move(lambda), WeylElement::identity(dim));
}

AffineElement AffineElement::finite(const WeylElement& u) { return AffineElement(Coweight(static_cast<std::size_t>(u.dim()), 0), u); }

AffineElement AffineElement::from_normal_form(const WeylElement& v, const Coweight& mu, const WeylElement& w) {
  if (v.dim() != w.dim() || static_cast<int>(mu.size()) != v.dim()) {
    throw Error(ErrorCode::rank_mismatch, "normal form components have inconsistent ranks");
  }
  return AffineElement(v.apply(mu), v * w);
}

std::int64_t AffineElement::kappa() const { return std::accumulate(lambda_.begin(), lambda_.end(), std::int64_t{0}); }

AffineElement operator*(const AffineElement& x, const AffineElement& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::rank_mismatch, "cannot multiply affine elements of different rank");
  Coweight lambda = x.finite_.apply(y.lambda_);
  for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] += x.lambda_[k];
  return AffineElement(std::move(lambda), x.finite_ * y.finite_);
}

WeylElement eta(const AffineElement& x, const DiagramAutomorphism& sigma) {
  const auto& nf = x.normal_form();
  return sigma.inverse().apply(nf.w) * nf.v;
}

SimpleProduct mult_simple(Side side, int i, const AffineElement& x) {
  const auto s = WeylElement::simple_reflection(x.dim(), i);
  AffineElement result = side == Side::left ? AffineElement(s.apply(x.lambda()), s * x.finite_part())
                                            : AffineElement(x.lambda(), x.finite_part() * s);
  const auto delta = result.length() - x.length();
  if (delta != 1 && delta != -1) {
    throw std::logic_error("simple reflection changed the length by " + std::to_string(delta));
  }
  return SimpleProduct{std::move(result), static_cast<int>(delta)};
}

AffineElement conjugate_simple(int i, const AffineElement& x, const DiagramAutomorphism& sigma) {
  auto left = mult_simple(Side::left, i, x);
  return mult_simple(Side::right, sigma(i), left.element).element;
}

bool is_superregular(const AffineElement& x, std::int64_t threshold) {
  const auto& mu = x.normal_form().mu;
  if (!is_dominant(mu)) {
    throw Error(ErrorCode::non_dominant_translation,
                "normal form translation (" + format_coweight(mu) + ") is not dominant");
  }
  for (std::size_t k = 0; k + 1 < mu.size(); ++k) {
    if (mu[k] - mu[k + 1] <= threshold) return false;
  }
  return true;
}

std::string format_normal_form(const AffineElement& x) {
  const auto& nf = x.normal_form();
  return "v:" + format_word(nf.v.reduced_word()) + " mu:" + format_coweight(nf.mu) +
         " w:" + format_word(nf.w.reduced_word());
}

std::string format_raw(const AffineElement& x) {
  return "lambda:" + format_coweight(x.lambda()) + " u:" + format_word(x.finite_part().reduced_word());
}

namespace {

// Splits "key:value key:value ..." where values may contain spaces; keys are
// recognised only from the given list.
std::map<std::string, std::string> split_fields(std::string_view text, std::initializer_list<std::string_view> keys) {
  std::vector<std::pair<std::size_t, std::string_view>> hits;
  for (auto key : keys) {
    const std::string marker = std::string(key) + ":";
    std::size_t pos = 0;
    while ((pos = text.find(marker, pos)) != std::string_view::npos) {
      const bool at_boundary = pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1]));
      if (at_boundary) hits.emplace_back(pos, key);
      pos += marker.size();
    }
  }
  std::sort(hits.begin(), hits.end());
  std::map<std::string, std::string> fields;
  for (std::size_t k = 0; k < hits.size(); ++k) {
    const auto start = hits[k].first + hits[k].second.size() + 1;
    const auto end = k + 1 < hits.size() ? hits[k + 1].first : text.size();
    if (!fields.emplace(std::string(hits[k].second), std::string(text.substr(start, end - start))).second) {
      throw Error(ErrorCode::parse_error, "duplicate field '" + std::string(hits[k].second) + "'");
    }
  }
  if (!hits.empty() && text.substr(0, hits.front().first).find_first_not_of(" \t\n") != std::string_view::npos) {
    throw Error(ErrorCode::parse_error, "unexpected text before first field in '" + std::string(text) + "'");
  }
  return fields;
}

}  // namespace

AffineElement parse_affine(std::string_view text) {
  if (text.find("lambda:") != std::string_view::npos) {
    auto fields = split_fields(text, {"lambda", "u"});
    if (!fields.contains("lambda") || !fields.contains("u")) {
      throw Error(ErrorCode::parse_error, "raw form needs lambda: and u: fields");
    }
    auto lambda = parse_coweight(fields["lambda"]);
    const int dim = static_cast<int>(lambda.size());
    return AffineElement(std::move(lambda), WeylElement::from_word(dim, parse_word(fields["u"])));
  }
  auto fields = split_fields(text, {"v", "mu", "w"});
  if (!fields.contains("v") || !fields.contains("mu") || !fields.contains("w")) {
    throw Error(ErrorCode::parse_error, "normal form needs v:, mu: and w: fields");
  }
  const auto mu = parse_coweight(fields["mu"]);
  const int dim = static_cast<int>(mu.size());
  return AffineElement::from_normal_form(WeylElement::from_word(dim, parse_word(fields["v"])), mu,
                                         WeylElement::from_word(dim, parse_word(fields["w"])));
}

}  // namespace newton_strata
