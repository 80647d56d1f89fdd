#include "newton_strata/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "newton_strata/errors.hpp"

namespace newton_strata {

namespace {

std::int64_t parse_int64(std::string_view token, std::string_view context) {
  std::int64_t value = 0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::parse_error,
                "bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    // Accept the "s4" spelling used in printed tables as well as bare indices.
    if (token.size() > 1 && (token.front() == 's' || token.front() == 'S')) token.remove_prefix(1);
    if (!token.empty() && token.front() == '_') token.remove_prefix(1);
    const auto value = parse_int64(token, text);
    if (value < 1) throw Error(ErrorCode::parse_error, "simple index must be >= 1 in '" + std::string(text) + "'");
    word.push_back(static_cast<int>(value));
    pos = end;
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(word[k]);
  }
  return out;
}

Coweight parse_coweight(std::string_view text) {
  Coweight lambda;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return lambda;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    lambda.push_back(parse_int64(token, text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return lambda;
}

std::string format_coweight(const Coweight& lambda) {
  std::string out;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(lambda[k]);
  }
  return out;
}

std::int64_t pairing(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::rank_mismatch, "pairing of vectors of different length");
  return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

bool is_dominant(const Coweight& lambda) {
  return std::is_sorted(lambda.begin(), lambda.end(), std::greater<>());
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(std::vector<std::uint8_t> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (auto image : perm_) {
    if (image >= perm_.size() || seen[image]) {
      throw Error(ErrorCode::invalid_argument, "one-line notation is not a permutation");
    }
    seen[image] = true;
  }
}

WeylElement WeylElement::identity(int dim) {
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  return WeylElement(std::move(perm));
}

WeylElement WeylElement::simple_reflection(int dim, int i) {
  if (i < 1 || i >= dim) {
    throw Error(ErrorCode::invalid_argument,
                "simple index " + std::to_string(i) + " out of range for rank " + std::to_string(dim - 1));
  }
  return transposition(dim, i - 1, i);
}

WeylElement WeylElement::transposition(int dim, int a, int b) {
  auto u = identity(dim);
  std::swap(u.perm_[static_cast<std::size_t>(a)], u.perm_[static_cast<std::size_t>(b)]);
  return u;
}

WeylElement WeylElement::from_word(int dim, const Word& word) {
  auto u = identity(dim);
  for (int i : word) {
    if (i < 1 || i >= dim) {
      throw Error(ErrorCode::invalid_argument,
                  "word letter " + std::to_string(i) + " out of range for rank " + std::to_string(dim - 1));
    }
    // Right multiplication by s_i swaps the images of positions i-1 and i.
    std::swap(u.perm_[static_cast<std::size_t>(i - 1)], u.perm_[static_cast<std::size_t>(i)]);
  }
  return u;
}

WeylElement WeylElement::longest(int dim) {
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) perm[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(dim - 1 - k);
  return WeylElement(std::move(perm));
}

WeylElement WeylElement::from_index(int dim, std::size_t index) {
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(dim));
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> perm;
  perm.reserve(pool.size());
  for (int k = dim; k >= 1; --k) {
    const std::size_t block = factorial(k - 1);
    const std::size_t pick = index / block;
    index %= block;
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return WeylElement(std::move(perm));
}

int WeylElement::length() const {
  int inversions = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a)
    for (std::size_t b = a + 1; b < perm_.size(); ++b)
      if (perm_[a] > perm_[b]) ++inversions;
  return inversions;
}

WeylElement WeylElement::inverse() const {
  std::vector<std::uint8_t> inv(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) inv[perm_[k]] = static_cast<std::uint8_t>(k);
  return WeylElement(std::move(inv));
}

bool WeylElement::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != k) return false;
  return true;
}

bool WeylElement::has_left_descent(int i) const {
  // s_i u swaps the values i-1 and i; the length drops iff value i already
  // precedes value i-1.
  const auto hi = std::find(perm_.begin(), perm_.end(), static_cast<std::uint8_t>(i));
  const auto lo = std::find(perm_.begin(), perm_.end(), static_cast<std::uint8_t>(i - 1));
  return hi < lo;
}

bool WeylElement::has_right_descent(int i) const {
  return perm_[static_cast<std::size_t>(i - 1)] > perm_[static_cast<std::size_t>(i)];
}

Word WeylElement::reduced_word() const {
  Word word;
  WeylElement rest = *this;
  while (!rest.is_identity()) {
    for (int i = 1; i < dim(); ++i) {
      if (rest.has_left_descent(i)) {
        word.push_back(i);
        rest = simple_reflection(dim(), i) * rest;
        break;
      }
    }
  }
  return word;
}

std::set<int> WeylElement::support() const {
  const Word word = reduced_word();
  return {word.begin(), word.end()};
}

Coweight WeylElement::apply(const Coweight& lambda) const {
  if (lambda.size() != perm_.size()) throw Error(ErrorCode::rank_mismatch, "coweight length does not match Weyl group");
  Coweight out(lambda.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) out[perm_[k]] = lambda[k];
  return out;
}

std::size_t WeylElement::index() const {
  std::size_t index = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    std::size_t smaller_later = 0;
    for (std::size_t b = a + 1; b < perm_.size(); ++b)
      if (perm_[b] < perm_[a]) ++smaller_later;
    index += smaller_later * factorial(static_cast<int>(perm_.size() - a - 1));
  }
  return index;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.perm_.size() != v.perm_.size()) {
    throw Error(ErrorCode::rank_mismatch, "cannot compose Weyl elements of rank " + std::to_string(u.rank()) +
                                              " and " + std::to_string(v.rank()));
  }
  std::vector<std::uint8_t> out(u.perm_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = u.perm_[v.perm_[k]];
  WeylElement w;
  w.perm_ = std::move(out);
  return w;
}

WeylElement compose(const WeylElement& u, const WeylElement& v) { return u * v; }

std::vector<WeylElement> all_elements(int dim) {
  std::vector<WeylElement> out;
  out.reserve(factorial(dim));
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// CartanData

CartanData CartanData::type_a(int rank) {
  if (rank < 1) throw Error(ErrorCode::invalid_argument, "type A rank must be positive");
  CartanData c;
  c.type_label_ = 'A';
  c.rank_ = rank;
  c.dim_ = rank + 1;
  const auto n = static_cast<std::size_t>(c.dim_);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Coweight alpha(n, 0);
    alpha[i] = 1;
    alpha[i + 1] = -1;
    c.simple_roots_.push_back(alpha);
    c.simple_coroots_.push_back(alpha);
  }
  c.two_rho_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.two_rho_[i] = static_cast<std::int64_t>(n - 1) - 2 * static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Coweight alpha(n, 0);
      alpha[i] = 1;
      alpha[j] = -1;
      c.positive_roots_.push_back(PositiveRoot{
          alpha, alpha, WeylElement::transposition(c.dim_, static_cast<int>(i), static_cast<int>(j)),
          static_cast<int>(j - i)});
    }
  }
  // Barycenter of the alcove spanned by 0 and the fundamental coweights,
  // shifted by a multiple of (1, ..., 1), scaled by n.
  Coweight point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = static_cast<std::int64_t>(n - 1 - i);
  c.alcove_point_ = {point, static_cast<std::int64_t>(n)};
  return c;
}

const CartanData& CartanData::type_a_cached(int rank) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CartanData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_unique<const CartanData>(type_a(rank));
  return *slot;
}

int CartanData::cartan_entry(int i, int j) const {
  return static_cast<int>(pairing(simple_roots_.at(static_cast<std::size_t>(j - 1)),
                                  simple_coroots_.at(static_cast<std::size_t>(i - 1))));
}

// ---------------------------------------------------------------------------
// DiagramAutomorphism

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  std::vector<int> image(static_cast<std::size_t>(rank));
  std::iota(image.begin(), image.end(), 1);
  return DiagramAutomorphism(std::move(image));
}

DiagramAutomorphism DiagramAutomorphism::from_image(std::vector<int> image, const CartanData& cartan) {
  if (static_cast<int>(image.size()) != cartan.rank()) {
    throw Error(ErrorCode::invalid_argument, "diagram automorphism must list one image per simple index");
  }
  std::vector<bool> seen(image.size() + 1, false);
  for (int i : image) {
    if (i < 1 || i > cartan.rank() || seen[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::invalid_argument, "diagram automorphism is not a permutation of the simple indices");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 1; i <= cartan.rank(); ++i) {
    for (int j = 1; j <= cartan.rank(); ++j) {
      if (cartan.cartan_entry(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]) !=
          cartan.cartan_entry(i, j)) {
        throw Error(ErrorCode::invalid_argument, "permutation does not preserve the Cartan matrix");
      }
    }
  }
  return DiagramAutomorphism(std::move(image));
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

int DiagramAutomorphism::order() const {
  int order = 1;
  std::vector<int> power = image_;
  while (true) {
    bool identity = true;
    for (std::size_t k = 0; k < power.size(); ++k) identity = identity && power[k] == static_cast<int>(k) + 1;
    if (identity) return order;
    for (auto& value : power) value = image_[static_cast<std::size_t>(value - 1)];
    ++order;
  }
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[static_cast<std::size_t>(image_[k] - 1)] = static_cast<int>(k) + 1;
  return DiagramAutomorphism(std::move(inv));
}

WeylElement DiagramAutomorphism::apply(const WeylElement& u) const {
  if (u.rank() != rank()) throw Error(ErrorCode::rank_mismatch, "automorphism and Weyl element ranks differ");
  if (is_identity()) return u;
  Word word = u.reduced_word();
  for (auto& letter : word) letter = (*this)(letter);
  return WeylElement::from_word(u.dim(), word);
}

std::set<int> sigma_support(const WeylElement& u, const DiagramAutomorphism& sigma) {
  if (u.rank() != sigma.rank()) throw Error(ErrorCode::rank_mismatch, "automorphism and Weyl element ranks differ");
  std::set<int> out;
  for (int i : u.support()) {
    int j = i;
    do {
      out.insert(j);
      j = sigma(j);
    } while (j != i);
  }
  return out;
}

}  // namespace newton_strata
