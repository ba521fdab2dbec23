#include "cmk/finite_ring.hpp"

#include <algorithm>
#include <sstream>

#include "cmk/sampling.hpp"

namespace cmk {

FiniteRing::FiniteRing(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > 2)
    throw input_error("rings are single matrix rings or pairwise products");
  for (const Factor& f : factors_) {
    if (f.n < 1 || f.n > 3)
      throw input_error("matrix size must be 1..3");
    if (f.p != 2 && f.p != 3 && f.p != 5)
      throw input_error("prime must be one of 2, 3, 5");
    digit_offset_.push_back(digit_count_);
    digit_count_ += static_cast<std::size_t>(f.n) * f.n;
    for (int i = 0; i < f.n * f.n; ++i) size_ *= static_cast<std::size_t>(f.p);
  }
  if (size_ > 100000)
    throw input_error("ring size bound exceeded (|A| <= 10^5)");

  Digits d{};
  for (std::size_t fi = 0; fi < factors_.size(); ++fi)
    for (int i = 0; i < factors_[fi].n; ++i)
      d[digit_offset_[fi] + static_cast<std::size_t>(i) * factors_[fi].n + i] =
          1;
  one_ = encode(d);
  spot_check_axioms();
}

FiniteRing FiniteRing::parse_name(const std::string& name) {
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos < name.size()) {
    int n = 1;
    if (name[pos] == 'M' || name[pos] == 'm') {
      ++pos;
      if (pos >= name.size() || !isdigit(name[pos]))
        throw parse_error("bad ring name '" + name + "'");
      n = name[pos] - '0';
      ++pos;
    }
    if (pos >= name.size() || (name[pos] != 'F' && name[pos] != 'f'))
      throw parse_error("bad ring name '" + name + "' (expect M<n>F<p>)");
    ++pos;
    if (pos >= name.size() || !isdigit(name[pos]))
      throw parse_error("bad ring name '" + name + "'");
    int p = name[pos] - '0';
    ++pos;
    factors.push_back({n, p});
    if (pos < name.size()) {
      if (name[pos] != 'x' && name[pos] != 'X')
        throw parse_error("bad ring name '" + name + "' (factors join by x)");
      ++pos;
    }
  }
  return FiniteRing(factors);
}

std::string FiniteRing::name() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << " x ";
    if (factors_[i].n == 1)
      out << "F" << factors_[i].p;
    else
      out << "M" << factors_[i].n << "(F" << factors_[i].p << ")";
  }
  return out.str();
}

void FiniteRing::decode(Elem a, Digits& d) const {
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const int p = factors_[fi].p;
    const int cells = factors_[fi].n * factors_[fi].n;
    for (int c = 0; c < cells; ++c) {
      d[digit_offset_[fi] + static_cast<std::size_t>(c)] =
          static_cast<std::uint8_t>(a % static_cast<Elem>(p));
      a /= static_cast<Elem>(p);
    }
  }
}

FiniteRing::Elem FiniteRing::encode(const Digits& d) const {
  Elem a = 0;
  for (std::size_t fi = factors_.size(); fi-- > 0;) {
    const int p = factors_[fi].p;
    const int cells = factors_[fi].n * factors_[fi].n;
    for (int c = cells - 1; c >= 0; --c)
      a = a * static_cast<Elem>(p) +
          d[digit_offset_[fi] + static_cast<std::size_t>(c)];
  }
  return a;
}

FiniteRing::Elem FiniteRing::add(Elem a, Elem b) const {
  Digits da, db;
  decode(a, da);
  decode(b, db);
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const int p = factors_[fi].p;
    const int cells = factors_[fi].n * factors_[fi].n;
    for (int c = 0; c < cells; ++c) {
      auto& x = da[digit_offset_[fi] + static_cast<std::size_t>(c)];
      x = static_cast<std::uint8_t>(
          (x + db[digit_offset_[fi] + static_cast<std::size_t>(c)]) % p);
    }
  }
  return encode(da);
}

FiniteRing::Elem FiniteRing::neg(Elem a) const {
  Digits da;
  decode(a, da);
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const int p = factors_[fi].p;
    const int cells = factors_[fi].n * factors_[fi].n;
    for (int c = 0; c < cells; ++c) {
      auto& x = da[digit_offset_[fi] + static_cast<std::size_t>(c)];
      x = static_cast<std::uint8_t>((p - x) % p);
    }
  }
  return encode(da);
}

FiniteRing::Elem FiniteRing::mul(Elem a, Elem b) const {
  Digits da, db, dr{};
  decode(a, da);
  decode(b, db);
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const int p = factors_[fi].p;
    const int n = factors_[fi].n;
    const std::size_t off = digit_offset_[fi];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int k = 0; k < n; ++k)
          acc += da[off + static_cast<std::size_t>(i * n + k)] *
                 db[off + static_cast<std::size_t>(k * n + j)];
        dr[off + static_cast<std::size_t>(i * n + j)] =
            static_cast<std::uint8_t>(acc % p);
      }
  }
  return encode(dr);
}

bool FiniteRing::try_inverse(Elem a, Elem& inv) const {
  Digits da, dr{};
  decode(a, da);
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const int p = factors_[fi].p;
    const int n = factors_[fi].n;
    const std::size_t off = digit_offset_[fi];
    // Gauss-Jordan on [M | I] over F_p.
    int m[3][6] = {};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        m[i][j] = da[off + static_cast<std::size_t>(i * n + j)];
      m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] % p != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return false;
      std::swap(m[col], m[piv]);
      // scale to 1
      int v = m[col][col] % p;
      int vinv = 1;
      while ((v * vinv) % p != 1) ++vinv;
      for (int j = 0; j < 2 * n; ++j) m[col][j] = m[col][j] * vinv % p;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] % p == 0) continue;
        const int f = m[r][col] % p;
        for (int j = 0; j < 2 * n; ++j)
          m[r][j] = ((m[r][j] - f * m[col][j]) % p + p * p) % p;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dr[off + static_cast<std::size_t>(i * n + j)] =
            static_cast<std::uint8_t>(m[i][n + j]);
  }
  inv = encode(dr);
  return true;
}

std::string FiniteRing::elem_to_string(Elem a) const {
  Digits d;
  decode(a, d);
  std::ostringstream out;
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    if (fi) out << " | ";
    const int n = factors_[fi].n;
    out << '[';
    for (int i = 0; i < n; ++i) {
      if (i) out << "; ";
      for (int j = 0; j < n; ++j) {
        if (j) out << ' ';
        out << int(d[digit_offset_[fi] + static_cast<std::size_t>(i * n + j)]);
      }
    }
    out << ']';
  }
  return out.str();
}

void FiniteRing::spot_check_axioms() const {
  Sampler s(0xabcdefULL + size_);
  for (int trial = 0; trial < 64; ++trial) {
    const Elem a = static_cast<Elem>(s.below(static_cast<std::int64_t>(size_)));
    const Elem b = static_cast<Elem>(s.below(static_cast<std::int64_t>(size_)));
    const Elem c = static_cast<Elem>(s.below(static_cast<std::int64_t>(size_)));
    if (add(add(a, b), c) != add(a, add(b, c)) ||
        mul(mul(a, b), c) != mul(a, mul(b, c)) ||
        mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) ||
        mul(add(a, b), c) != add(mul(a, c), mul(b, c)) ||
        mul(one_, a) != a || mul(a, one_) != a ||
        add(a, neg(a)) != zero())
      throw internal_error("ring axiom spot-check failed");
  }
}

FiniteGroup::FiniteGroup(const FiniteRing& ring,
                         std::vector<FiniteRing::Elem> elements)
    : ring_(ring), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!contains(ring_.one()))
    throw internal_error("group misses the identity");
  for (FiniteRing::Elem e : elements_) {
    FiniteRing::Elem inv;
    if (!ring_.try_inverse(e, inv) || !contains(inv))
      throw internal_error("group element without inverse in the set");
  }
  const std::size_t n = elements_.size();
  if (n <= 1000) {
    for (FiniteRing::Elem a : elements_)
      for (FiniteRing::Elem b : elements_)
        if (!contains(ring_.mul(a, b)))
          throw internal_error("group is not closed under the operation");
  } else {
    Sampler s(0x5eedULL + n);
    for (int trial = 0; trial < 1000000; ++trial) {
      const FiniteRing::Elem a =
          elements_[static_cast<std::size_t>(s.below(static_cast<std::int64_t>(n)))];
      const FiniteRing::Elem b =
          elements_[static_cast<std::size_t>(s.below(static_cast<std::int64_t>(n)))];
      if (!contains(ring_.mul(a, b)))
        throw internal_error("group is not closed under the operation");
    }
  }
}

bool FiniteGroup::contains(FiniteRing::Elem e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

}  // namespace cmk
