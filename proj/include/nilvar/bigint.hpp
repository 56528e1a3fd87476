// Arbitrary-precision signed integers.
//
// Sign-magnitude representation over 32-bit limbs, little endian. Only the
// operations the rest of the library needs: add, subtract, multiply, truncated
// divrem (used for exact division in fraction-free elimination and for decimal
// printing), comparisons.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilvar {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_longlong() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = magnitude_u64();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: to_longlong overflow");
    unsigned long long m = magnitude_u64();
    if (sign_ >= 0) return static_cast<long long>(m);
    return -static_cast<long long>(m - 1) - 1;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    return r;
  }
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    std::vector<std::uint32_t> qm, rm;
    divrem_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
      q.mag_ = std::move(qm);
      q.sign_ = a.sign_ * b.sign_;
    }
    if (!rm.empty()) {
      r.mag_ = std::move(rm);
      r.sign_ = a.sign_;
    }
  }

  // Division known to be exact; throws if a remainder appears.
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt: exact_div with remainder");
    return q;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    std::vector<std::uint32_t> m = mag_;
    // peel decimal chunks of 10^9
    std::vector<std::uint32_t> chunks;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      chunks.push_back(static_cast<std::uint32_t>(rem));
    }
    out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out += std::string(9 - part.size(), '0') + part;
    }
    if (sign_ < 0) out = "-" + out;
    return out;
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }

private:
  int sign_ = 0;  // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little endian, no leading zero limb

  unsigned long long magnitude_u64() const {
    unsigned long long m = 0;
    if (mag_.size() >= 1) m = mag_[0];
    if (mag_.size() >= 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return m;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& sml = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t s = carry + big[i] + (i < sml.size() ? sml[i] : 0);
      r[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    trim(r);
    return r;
  }

  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (s < 0) {
        s += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(s);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.size();
      while (carry != 0) {
        std::uint64_t cur = r[k] + carry;
        r[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(r);
    return r;
  }

  // shift-subtract long division on magnitudes; adequate for the sizes here
  static void divrem_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      trim(r);
      q.clear();
      return;
    }
    std::vector<std::uint32_t> rem;
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
      shl1(rem);
      if ((a[bit / 32] >> (bit % 32)) & 1u) {
        if (rem.empty())
          rem.push_back(1);
        else
          rem[0] |= 1u;
      }
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        q[bit / 32] |= 1u << (bit % 32);
      }
    }
    trim(q);
    r = std::move(rem);
    trim(r);
  }

  static void shl1(std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (auto& limb : v) {
      std::uint32_t nc = limb >> 31;
      limb = (limb << 1) | carry;
      carry = nc;
    }
    if (carry) v.push_back(carry);
  }

  static void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
};

}  // namespace nilvar
