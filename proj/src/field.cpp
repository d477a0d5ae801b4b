#include "chromastate/field.hpp"

#include <limits>

namespace chromastate {

bool is_prime(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) return false;
  }
  return true;
}

PrimeDimension::PrimeDimension(int d) : d_(d) {
  if (!is_prime(d)) {
    throw InputError("dimension must be prime, got " + std::to_string(d));
  }
  if (d > 97) {
    throw InputError("dimension capped at 97, got " + std::to_string(d));
  }
}

int PrimeDimension::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, d_ - 2);
}

int PrimeDimension::pow(int a, long long e) const {
  long long base = a % d_;
  if (base < 0) base += d_;
  long long acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % d_;
    base = base * base % d_;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(dim, cols, rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      t.at(c, r) = at(r, c);
    }
  }
  return t;
}

FieldMatrix identity_matrix(PrimeDimension dim, int k) {
  FieldMatrix m(dim, k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

int mat_rank(const FieldMatrix& m) {
  FieldMatrix w = m;
  const PrimeDimension d = m.dim;
  int rank = 0;
  for (int col = 0; col < w.cols && rank < w.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r) {
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < w.cols; ++c) std::swap(w.at(pivot, c), w.at(rank, c));
    }
    const int scale = d.inv(w.at(rank, col));
    for (int c = 0; c < w.cols; ++c) w.at(rank, c) = d.mul(w.at(rank, c), scale);
    for (int r = 0; r < w.rows; ++r) {
      if (r == rank || w.at(r, col) == 0) continue;
      const int f = w.at(r, col);
      for (int c = 0; c < w.cols; ++c) {
        w.at(r, c) = d.sub(w.at(r, c), d.mul(f, w.at(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

FieldVector mat_vec_mul(const FieldVector& v, const FieldMatrix& m) {
  if (v.dim != m.dim) throw std::invalid_argument("field dimension mismatch");
  if (v.size() != m.rows) {
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match matrix rows " +
                                std::to_string(m.rows));
  }
  std::vector<int> out(m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    const int x = v.entries[r];
    if (x == 0) continue;
    for (int c = 0; c < m.cols; ++c) {
      out[c] = m.dim.add(out[c], m.dim.mul(x, m.at(r, c)));
    }
  }
  return FieldVector(m.dim, std::move(out));
}

std::uint64_t pow_u64(int base, int exp) {
  std::uint64_t acc = 1;
  for (int i = 0; i < exp; ++i) {
    const std::uint64_t b = static_cast<std::uint64_t>(base);
    if (acc > std::numeric_limits<std::uint64_t>::max() / b) {
      throw std::overflow_error("power overflows 64 bits");
    }
    acc *= b;
  }
  return acc;
}

VectorEnumerator::VectorEnumerator(int length, PrimeDimension dim)
    : length_(length), dim_(dim), current_(static_cast<std::size_t>(length), 0) {
  std::uint64_t c;
  try {
    c = pow_u64(dim.value(), length);
  } catch (const std::overflow_error&) {
    throw CapError("enumeration of d^" + std::to_string(length) +
                   " vectors exceeds the cap");
  }
  if (c > kEnumerationCap) {
    throw CapError("enumeration of " + std::to_string(c) +
                   " vectors exceeds the cap of " +
                   std::to_string(kEnumerationCap));
  }
  count_ = c;
}

bool VectorEnumerator::next(std::vector<int>& out) {
  if (emitted_ >= count_) return false;
  if (emitted_ > 0) {
    for (int i = length_ - 1; i >= 0; --i) {
      if (++current_[i] < dim_.value()) break;
      current_[i] = 0;
    }
  }
  out = current_;
  ++emitted_;
  return true;
}

void VectorEnumerator::reset() {
  emitted_ = 0;
  std::fill(current_.begin(), current_.end(), 0);
}

}  // namespace chromastate
