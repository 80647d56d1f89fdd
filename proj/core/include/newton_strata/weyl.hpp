#pragma once

// Finite Weyl group of type A_{n-1}, realized as permutations of the n
// coordinates of the coweight lattice Z^n.
//
// Conventions used throughout the library:
//   * s_i (1 <= i <= n-1) swaps coordinates i and i+1 (1-based).
//   * A word [i_1, ..., i_k] denotes the product s_{i_1} s_{i_2} ... s_{i_k},
//     multiplied left to right.
//   * (u v)(k) = u(v(k)), and u acts on coweights by (u.lambda)_{u(k)} = lambda_k.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newton_strata {

using Coweight = std::vector<std::int64_t>;
using Word = std::vector<int>;

/// Parses a whitespace separated index word ("4 2 3 1"); the empty string is
/// the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

/// Parses comma separated integers ("150,75,0,-75,-150").
Coweight parse_coweight(std::string_view text);
std::string format_coweight(const Coweight& lambda);

std::int64_t pairing(const Coweight& a, const Coweight& b);
bool is_dominant(const Coweight& lambda);

class WeylElement {
 public:
  WeylElement() = default;

  /// One-line notation with 0-based images: perm[k] = u(k).
  explicit WeylElement(std::vector<std::uint8_t> perm);

  static WeylElement identity(int dim);
  static WeylElement simple_reflection(int dim, int i);
  static WeylElement transposition(int dim, int a, int b);
  static WeylElement from_word(int dim, const Word& word);
  static WeylElement longest(int dim);
  /// Inverse of index(): the permutation of given lexicographic rank.
  static WeylElement from_index(int dim, std::size_t index);

  int dim() const { return static_cast<int>(perm_.size()); }
  int rank() const { return dim() - 1; }
  int operator()(int k) const { return perm_[static_cast<std::size_t>(k)]; }
  const std::vector<std::uint8_t>& one_line() const { return perm_; }

  /// Inversion count, i.e. the Coxeter length.
  int length() const;
  WeylElement inverse() const;
  bool is_identity() const;

  /// l(s_i u) < l(u).
  bool has_left_descent(int i) const;
  /// l(u s_i) < l(u).
  bool has_right_descent(int i) const;

  /// Lexicographically smallest reduced word, obtained by repeatedly stripping
  /// the smallest left descent.
  Word reduced_word() const;
  /// Simple reflections occurring in (any) reduced word.
  std::set<int> support() const;

  Coweight apply(const Coweight& lambda) const;

  /// Lexicographic rank of the one-line notation among all permutations.
  std::size_t index() const;

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::uint8_t> perm_;
};

/// Group product u*v; throws Error(rank_mismatch) when the ranks differ.
WeylElement compose(const WeylElement& u, const WeylElement& v);

/// All elements of W_0 ordered by index().
std::vector<WeylElement> all_elements(int dim);

std::size_t factorial(int n);

// Root datum of the finite Weyl group. Only type A is constructed, but the
// algorithms of the affine, qbg and strata modules only see this interface.
class CartanData {
 public:
  struct PositiveRoot {
    Coweight root;
    Coweight coroot;
    WeylElement reflection;
    int height = 0;
  };

  static CartanData type_a(int rank);
  /// Process-wide cached instance; the reference stays valid for the
  /// lifetime of the program.
  static const CartanData& type_a_cached(int rank);

  char type_label() const { return type_label_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::size_t order() const { return factorial(dim_); }

  const std::vector<Coweight>& simple_roots() const { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
  const Coweight& two_rho() const { return two_rho_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

  /// a(i, j) = <alpha_j, alpha_i^vee>, indices 1-based.
  int cartan_entry(int i, int j) const;

  /// Interior point of the base alcove as (numerator vector, denominator);
  /// the base alcove is {a : 0 < <alpha, a> < 1 for all positive alpha}.
  const std::pair<Coweight, std::int64_t>& alcove_point() const { return alcove_point_; }

  WeylElement identity() const { return WeylElement::identity(dim_); }
  WeylElement simple_reflection(int i) const { return WeylElement::simple_reflection(dim_, i); }

 private:
  char type_label_ = 'A';
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Coweight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  Coweight two_rho_;
  std::vector<PositiveRoot> positive_roots_;
  std::pair<Coweight, std::int64_t> alcove_point_;
};

// Diagram automorphism sigma, given by its action on simple indices.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;

  static DiagramAutomorphism identity(int rank);
  /// image[i-1] = sigma(i). Throws Error(invalid_argument) unless image is a
  /// permutation of 1..rank preserving the Cartan matrix of `cartan`.
  static DiagramAutomorphism from_image(std::vector<int> image, const CartanData& cartan);

  int rank() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  int order() const;
  DiagramAutomorphism inverse() const;

  /// sigma(u): apply sigma letterwise to a reduced word of u.
  WeylElement apply(const WeylElement& u) const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

 private:
  explicit DiagramAutomorphism(std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

/// supp_sigma(u): union of sigma^i(supp(u)) over all i.
std::set<int> sigma_support(const WeylElement& u, const DiagramAutomorphism& sigma);

}  // namespace newton_strata
