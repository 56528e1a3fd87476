// Concrete group elements: permutations on up to 64 points, or unitriangular
// matrices (unit diagonal, zero below) over Z/m with dimension up to 8.
//
// Fixed-size storage, no heap; elements are cheap to copy and hash, which is
// what the enumeration and sweep loops live on. Products compose left to
// right for permutations: (a*b)(p) = b(a(p)). Matrices multiply as matrices.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilvar {

enum class ElementKind : std::uint8_t { permutation, unitriangular };

class Element {
public:
  static constexpr int kMaxPoints = 64;
  static constexpr int kMaxDim = 8;

  Element() : kind_(ElementKind::permutation), n_(0), mod_(0), size_(0), data_{} {}

  static Element identity_permutation(int degree) {
    check(degree >= 1 && degree <= kMaxPoints, "permutation degree out of range");
    Element e;
    e.kind_ = ElementKind::permutation;
    e.n_ = static_cast<std::uint8_t>(degree);
    e.size_ = e.n_;
    for (int i = 0; i < degree; ++i) e.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return e;
  }

  // images are 1-based, as in the group file format
  static Element permutation(const std::vector<int>& images) {
    Element e = identity_permutation(static_cast<int>(images.size()));
    std::array<bool, kMaxPoints> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      check(v >= 1 && v <= static_cast<int>(images.size()), "permutation image out of range");
      check(!seen[static_cast<std::size_t>(v - 1)], "permutation images are not a bijection");
      seen[static_cast<std::size_t>(v - 1)] = true;
      e.data_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return e;
  }

  // cycle helper, 1-based points; points not mentioned are fixed
  static Element cycle(int degree, const std::vector<int>& pts) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i], to = pts[(i + 1) % pts.size()];
      check(from >= 1 && from <= degree, "cycle point out of range");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    return permutation(images);
  }

  static Element identity_unitriangular(int dim, int mod) {
    check(dim >= 1 && dim <= kMaxDim, "matrix dimension out of range");
    check(mod >= 2 && mod <= 255, "matrix modulus out of range");
    Element e;
    e.kind_ = ElementKind::unitriangular;
    e.n_ = static_cast<std::uint8_t>(dim);
    e.mod_ = static_cast<std::uint8_t>(mod);
    e.size_ = static_cast<std::uint8_t>(dim * dim);
    for (int i = 0; i < dim; ++i) e.data_[static_cast<std::size_t>(i * dim + i)] = 1;
    return e;
  }

  static Element unitriangular(int dim, int mod, const std::vector<int>& row_major) {
    Element e = identity_unitriangular(dim, mod);
    check(row_major.size() == static_cast<std::size_t>(dim * dim), "matrix entry count mismatch");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        int v = row_major[static_cast<std::size_t>(i * dim + j)];
        check(v >= 0 && v < mod, "matrix entry not reduced mod m");
        if (i == j) check(v == 1, "diagonal must be all ones");
        if (i > j) check(v == 0, "entries below the diagonal must vanish");
        e.data_[static_cast<std::size_t>(i * dim + j)] = static_cast<std::uint8_t>(v);
      }
    return e;
  }

  // elementary matrix: 1 at (i, j), i < j (1-based)
  static Element elementary(int dim, int mod, int i, int j) {
    Element e = identity_unitriangular(dim, mod);
    check(i >= 1 && j >= 1 && i < j && j <= dim, "elementary position out of range");
    e.data_[static_cast<std::size_t>((i - 1) * dim + (j - 1))] = 1;
    return e;
  }

  ElementKind kind() const { return kind_; }
  int degree() const { return n_; }
  int modulus() const { return mod_; }

  bool same_carrier(const Element& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && mod_ == o.mod_;
  }

  Element operator*(const Element& o) const {
    Element r;
    r.kind_ = kind_;
    r.n_ = n_;
    r.mod_ = mod_;
    r.size_ = size_;
    if (kind_ == ElementKind::permutation) {
      for (int i = 0; i < n_; ++i)
        r.data_[static_cast<std::size_t>(i)] = o.data_[data_[static_cast<std::size_t>(i)]];
    } else {
      int n = n_, m = mod_;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          int acc = 0;
          for (int k = i; k <= j; ++k)
            acc += data_[static_cast<std::size_t>(i * n + k)] *
                   o.data_[static_cast<std::size_t>(k * n + j)];
          r.data_[static_cast<std::size_t>(i * n + j)] = static_cast<std::uint8_t>(acc % m);
        }
    }
    return r;
  }

  Element inverse() const {
    if (kind_ == ElementKind::permutation) {
      Element r = *this;
      for (int i = 0; i < n_; ++i) r.data_[data_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
      return r;
    }
    // (I + N)^-1 = I - N + N^2 - ... with N strictly upper, nilpotent
    Element nilpart = *this;
    for (int i = 0; i < n_; ++i) nilpart.data_[static_cast<std::size_t>(i * n_ + i)] = 0;
    Element acc = identity_unitriangular(n_, mod_);
    Element pw = identity_unitriangular(n_, mod_);
    int sign = -1;
    for (int k = 1; k < n_; ++k) {
      pw = mul_raw(pw, nilpart);
      for (int i = 0; i < n_ * n_; ++i) {
        int v = acc.data_[static_cast<std::size_t>(i)] + sign * pw.data_[static_cast<std::size_t>(i)];
        v %= mod_;
        if (v < 0) v += mod_;
        acc.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
      }
      sign = -sign;
    }
    return acc;
  }

  bool is_identity() const {
    if (kind_ == ElementKind::permutation) {
      for (int i = 0; i < n_; ++i)
        if (data_[static_cast<std::size_t>(i)] != i) return false;
      return true;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (data_[static_cast<std::size_t>(i * n_ + j)] != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.kind_ != b.kind_ || a.n_ != b.n_ || a.mod_ != b.mod_) return false;
    for (int i = 0; i < a.size_; ++i)
      if (a.data_[static_cast<std::size_t>(i)] != b.data_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (static_cast<std::uint64_t>(kind_) << 56) ^
                      (static_cast<std::uint64_t>(n_) << 48) ^ (static_cast<std::uint64_t>(mod_) << 40);
    for (int i = 0; i < size_; ++i) {
      h ^= data_[static_cast<std::size_t>(i)];
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }

  // tokens as in the group file format: permutation image list (1-based) or
  // row-major matrix entries
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < size_; ++i) {
      if (i) s += ' ';
      int v = data_[static_cast<std::size_t>(i)];
      s += std::to_string(kind_ == ElementKind::permutation ? v + 1 : v);
    }
    return s;
  }

  int perm_image(int p) const { return data_[static_cast<std::size_t>(p)]; }  // 0-based
  int matrix_entry(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

private:
  static void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("Element: ") + msg);
  }

  // plain matrix product without carrier bookkeeping (used by inverse)
  static Element mul_raw(const Element& a, const Element& b) {
    Element r = a;
    int n = a.n_, m = a.mod_;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int k = 0; k < n; ++k)
          acc += a.data_[static_cast<std::size_t>(i * n + k)] *
                 b.data_[static_cast<std::size_t>(k * n + j)];
        r.data_[static_cast<std::size_t>(i * n + j)] = static_cast<std::uint8_t>(acc % m);
      }
    return r;
  }

  ElementKind kind_;
  std::uint8_t n_;
  std::uint8_t mod_;
  std::uint8_t size_;
  std::array<std::uint8_t, kMaxPoints> data_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

}  // namespace nilvar
