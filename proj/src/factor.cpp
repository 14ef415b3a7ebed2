#include "steiner/factor.hpp"

#include <algorithm>
#include <string>

namespace steiner {

std::string code_to_string(const Code& c) {
  if (c.hi == 0) return std::to_string(c.lo);
  char buf[36];
  std::snprintf(buf, sizeof buf, "0x%llx%016llx",
                static_cast<unsigned long long>(c.hi),
                static_cast<unsigned long long>(c.lo));
  return buf;
}

Code code_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::io_error, "empty code");
  try {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      std::string hex = s.substr(2);
      Code c;
      if (hex.size() > 16) {
        c.hi = std::stoull(hex.substr(0, hex.size() - 16), nullptr, 16);
        c.lo = std::stoull(hex.substr(hex.size() - 16), nullptr, 16);
      } else {
        c.lo = std::stoull(hex, nullptr, 16);
      }
      return c;
    }
    return Code::from_u64(std::stoull(s));
  } catch (const std::exception&) {
    fail(Errc::io_error, "bad code literal: " + s);
  }
}

FundamentalPairs fundamental_pairs(const SteinerTripleSystem& sts) {
  FundamentalPairs fp;
  fp.pairs.reserve(sts.b());
  for (const Triple& t : sts.triples()) fp.pairs.push_back({t[0], t[1]});
  return fp;
}

std::uint32_t FactorSystem::field(int i) const {
  int base = field_base(t, b, i);
  std::uint32_t out = 0;
  for (int k = 0; k < t; ++k)
    if (code.bit(base + k)) out |= 1u << k;
  return out;
}

void FactorSystem::set_field(int i, std::uint32_t value) {
  int base = field_base(t, b, i);
  for (int k = 0; k < t; ++k) {
    Code mask = Code::one_bit(base + k);
    bool want = (value >> k) & 1u;
    if (code.bit(base + k) != want) code ^= mask;
  }
}

FactorSystem encode(const std::vector<std::uint32_t>& values, int t) {
  int b = static_cast<int>(values.size());
  if (t < 1 || t > 8 || b < 1 || t * b > 128)
    fail(Errc::length_mismatch, "unsupported factor-system dimensions");
  FactorSystem fs{{}, t, b};
  for (int i = 0; i < b; ++i) {
    if (values[i] >> t)
      fail(Errc::length_mismatch, "value wider than t bits at pair " +
                                      std::to_string(i));
    fs.set_field(i, values[i]);
  }
  return fs;
}

std::vector<std::uint32_t> decode(const FactorSystem& fs) {
  std::vector<std::uint32_t> out(fs.b);
  for (int i = 0; i < fs.b; ++i) out[i] = fs.field(i);
  return out;
}

std::uint32_t evaluate(const FactorSystem& fs, const FundamentalPairs& fp,
                       const SteinerTripleSystem& quotient, int P, int Q) {
  if (fs.b != quotient.b() || fs.b != fp.b())
    fail(Errc::dimension_mismatch, "factor system does not match quotient");
  if (P < 0 || Q < 0 || P > quotient.v() || Q > quotient.v())
    fail(Errc::bad_argument, "loop element out of range");
  if (P == 0 || Q == 0 || P == Q) return 0;
  return fs.field(quotient.pair_triple(P - 1, Q - 1));
}

std::uint64_t ext_count(int t, int b) {
  if (t < 1 || b < 1) fail(Errc::bad_argument, "t and b must be positive");
  if (t * b > 63)
    fail(Errc::unsupported, "|Ext| exceeds 64 bits for t*b = " +
                                std::to_string(t * b));
  return std::uint64_t(1) << (t * b);
}

FactorSystem coboundary(const std::vector<std::uint32_t>& phi,
                        const SteinerTripleSystem& quotient, int t) {
  if (static_cast<int>(phi.size()) != quotient.v() + 1)
    fail(Errc::length_mismatch, "phi must cover all loop elements");
  if (phi[0] != 0) fail(Errc::bad_argument, "phi must vanish on the identity");
  FactorSystem fs{{}, t, quotient.b()};
  for (int i = 0; i < quotient.b(); ++i) {
    const Triple& tr = quotient.triple(i);
    std::uint32_t value = phi[tr[0] + 1] ^ phi[tr[1] + 1] ^ phi[tr[2] + 1];
    if (value >> t) fail(Errc::length_mismatch, "phi value wider than t bits");
    fs.set_field(i, value);
  }
  return fs;
}

namespace {

// Inserts g into a fully back-substituted XOR basis (pivots descending).
bool rref_insert(std::vector<Code>& basis, std::vector<int>& pivots, Code g) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (g.bit(pivots[i])) g ^= basis[i];
  if (g.is_zero()) return false;
  int p = g.top_bit();
  for (auto& row : basis)
    if (row.bit(p)) row ^= g;
  auto pos = std::upper_bound(pivots.begin(), pivots.end(), p,
                              std::greater<int>());
  size_t idx = pos - pivots.begin();
  pivots.insert(pos, p);
  basis.insert(basis.begin() + idx, g);
  return true;
}

}  // namespace

Code CoboundarySpace::reduce(Code c) const {
  for (int i = 0; i < dim; ++i)
    if (c.bit(pivots[i])) c ^= basis[i];
  return c;
}

std::uint64_t CoboundarySpace::coset_count() const {
  if (free_bits.size() > 63)
    fail(Errc::unsupported, "coset count exceeds 64 bits");
  return std::uint64_t(1) << free_bits.size();
}

Code CoboundarySpace::rep_at(std::uint64_t k) const {
  Code c;
  for (size_t j = 0; j < free_bits.size(); ++j)
    if ((k >> j) & 1u) c.set_bit(free_bits[j]);
  return c;
}

std::uint64_t CoboundarySpace::coset_index(const Code& reduced) const {
  std::uint64_t k = 0;
  for (size_t j = 0; j < free_bits.size(); ++j)
    if (reduced.bit(free_bits[j])) k |= std::uint64_t(1) << j;
  return k;
}

CoboundarySpace coboundary_space(const SteinerTripleSystem& quotient, int t) {
  if (t < 1 || t > 8 || t * quotient.b() > 128)
    fail(Errc::bad_argument, "unsupported kernel dimension");
  CoboundarySpace space;
  space.t = t;
  space.b = quotient.b();
  // Generators: the indicator maps phi_{P,e} (value e at one point, zero
  // elsewhere), whose coboundary marks every triple through P.
  for (int p = 0; p < quotient.v(); ++p) {
    for (int j = 0; j < t; ++j) {
      std::uint32_t e = 1u << (t - 1 - j);
      FactorSystem g{{}, t, space.b};
      for (int i : quotient.triples_through(p)) g.set_field(i, e);
      rref_insert(space.basis, space.pivots, g.code);
    }
  }
  space.dim = static_cast<int>(space.basis.size());
  int tb = t * space.b;
  for (int bit = 0; bit < tb; ++bit)
    if (std::find(space.pivots.begin(), space.pivots.end(), bit) ==
        space.pivots.end())
      space.free_bits.push_back(bit);
  return space;
}

CosetRepStream::CosetRepStream(const CoboundarySpace& space,
                               std::uint64_t block_size)
    : space_(&space), total_(space.coset_count()), block_(block_size) {
  if (block_size < 1) fail(Errc::bad_argument, "block size must be >= 1");
}

std::optional<Code> CosetRepStream::next() {
  if (next_ >= total_) return std::nullopt;
  return space_->rep_at(next_++);
}

bool CosetRepStream::next_block(std::vector<Code>& out) {
  if (next_ >= total_) return false;
  std::uint64_t end = std::min(total_, next_ + block_);
  for (; next_ < end; ++next_) out.push_back(space_->rep_at(next_));
  return true;
}

}  // namespace steiner
