#pragma once

// Extended affine Weyl group of GL_n: elements t^lambda u with lambda in Z^n
// and u in W_0, acting on the apartment by a -> u(a) + lambda.

#include <cstdint>
#include <string>
#include <string_view>

#include "newton_strata/weyl.hpp"

namespace newton_strata {

/// x = v t^mu w with t^mu w of minimal length in its coset W_0 t^mu w.
struct NormalForm {
  WeylElement v;
  Coweight mu;
  WeylElement w;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class Side { left, right };

class AffineElement {
 public:
  /// Raw form t^lambda u.
  AffineElement(Coweight lambda, WeylElement u);

  static AffineElement translation(Coweight lambda);
  static AffineElement finite(const WeylElement& u);
  /// Assembles v t^mu w = t^{v mu} (v w). The result's normal_form() equals
  /// (v, mu, w) exactly when t^mu w is a minimal coset representative.
  static AffineElement from_normal_form(const WeylElement& v, const Coweight& mu, const WeylElement& w);

  int dim() const { return finite_.dim(); }
  const Coweight& lambda() const { return lambda_; }
  const WeylElement& finite_part() const { return finite_; }

  /// Number of affine root hyperplanes separating the base alcove from its
  /// image under x.
  std::int64_t length() const { return length_; }
  const NormalForm& normal_form() const { return normal_form_; }
  /// Kottwitz invariant for GL_n: the sum of the translation part.
  std::int64_t kappa() const;

  friend AffineElement operator*(const AffineElement& x, const AffineElement& y);
  friend bool operator==(const AffineElement& x, const AffineElement& y) {
    return x.lambda_ == y.lambda_ && x.finite_ == y.finite_;
  }

 private:
  Coweight lambda_;
  WeylElement finite_;
  std::int64_t length_ = 0;
  NormalForm normal_form_;
};

/// Hyperplane-count length of t^lambda u for the given root datum.
std::int64_t affine_length(const CartanData& cartan, const Coweight& lambda, const WeylElement& u);

/// eta(x) = sigma^{-1}(w) v from the normal form.
WeylElement eta(const AffineElement& x, const DiagramAutomorphism& sigma);

struct SimpleProduct {
  AffineElement element;
  int length_delta;
};

/// s_i x (Side::left) or x s_i (Side::right), with l(result) - l(x).
SimpleProduct mult_simple(Side side, int i, const AffineElement& x);

/// s x sigma(s), the element obtained by one reduction step.
AffineElement conjugate_simple(int i, const AffineElement& x, const DiagramAutomorphism& sigma);

/// <alpha_i, mu> > threshold for every simple root, where mu is the
/// translation part of the normal form. Throws
/// Error(non_dominant_translation) when that mu is not dominant.
bool is_superregular(const AffineElement& x, std::int64_t threshold);

/// "v:<word> mu:<ints> w:<word>".
std::string format_normal_form(const AffineElement& x);
/// "lambda:<ints> u:<word>".
std::string format_raw(const AffineElement& x);
/// Accepts either textual form.
AffineElement parse_affine(std::string_view text);

}  // namespace newton_strata
