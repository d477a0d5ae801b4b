#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromastate {

/// Malformed user input: graph files, color hints, CLI values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a resource cap (amplitude count, search size).
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(int d);

/// Prime local dimension d. All field arithmetic is exact mod d.
class PrimeDimension {
 public:
  /// Rejects non-prime d and d > 97.
  explicit PrimeDimension(int d);

  int value() const { return d_; }

  int reduce(long long v) const {
    long long r = v % d_;
    return static_cast<int>(r < 0 ? r + d_ : r);
  }
  int add(int a, int b) const {
    int s = a + b;
    return s >= d_ ? s - d_ : s;
  }
  int sub(int a, int b) const {
    int s = a - b;
    return s < 0 ? s + d_ : s;
  }
  int mul(int a, int b) const {
    return static_cast<int>(static_cast<long long>(a) * b % d_);
  }
  int neg(int a) const { return a == 0 ? 0 : d_ - a; }
  /// Multiplicative inverse; throws std::domain_error for a == 0.
  int inv(int a) const;
  int pow(int a, long long e) const;

  friend bool operator==(PrimeDimension lhs, PrimeDimension rhs) {
    return lhs.d_ == rhs.d_;
  }
  friend bool operator!=(PrimeDimension lhs, PrimeDimension rhs) {
    return lhs.d_ != rhs.d_;
  }

 private:
  int d_;
};

struct FieldVector {
  PrimeDimension dim;
  std::vector<int> entries;

  FieldVector(PrimeDimension d, std::vector<int> e)
      : dim(d), entries(std::move(e)) {}
  int size() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const FieldVector& a, const FieldVector& b) {
    return a.dim == b.dim && a.entries == b.entries;
  }
};

/// Row-major matrix over F_d; every entry kept reduced in [0, d).
struct FieldMatrix {
  PrimeDimension dim;
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;

  FieldMatrix(PrimeDimension d, int r, int c)
      : dim(d), rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

  int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  FieldMatrix transposed() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.dim == b.dim && a.rows == b.rows && a.cols == b.cols &&
           a.entries == b.entries;
  }
};

FieldMatrix identity_matrix(PrimeDimension dim, int k);

/// Rank over F_d by row reduction with first-nonzero pivots.
int mat_rank(const FieldMatrix& m);

/// Row-vector times matrix, (v*m) mod d. Requires v.size() == m.rows.
FieldVector mat_vec_mul(const FieldVector& v, const FieldMatrix& m);

/// base^exp in uint64, throwing std::overflow_error on wrap.
std::uint64_t pow_u64(int base, int exp);

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t(1) << 22;

/// Streams all d^length vectors in lexicographic order, last coordinate
/// varying fastest. Deterministic; independent per instance.
class VectorEnumerator {
 public:
  /// Throws CapError when d^length exceeds kEnumerationCap.
  VectorEnumerator(int length, PrimeDimension dim);

  std::uint64_t count() const { return count_; }

  /// Fills `out` with the next vector; returns false once exhausted.
  bool next(std::vector<int>& out);

  void reset();

 private:
  int length_;
  PrimeDimension dim_;
  std::uint64_t count_;
  std::uint64_t emitted_ = 0;
  std::vector<int> current_;
};

}  // namespace chromastate
