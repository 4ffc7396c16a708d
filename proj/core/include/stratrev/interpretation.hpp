#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "stratrev/formula.hpp"

namespace stratrev {

/// A total truth assignment over a signature, packed as a bit vector:
/// bit i holds the value of the signature's atom i.
class Interpretation {
 public:
  Interpretation(Signature sig, std::uint64_t bits);

  static Interpretation from_true_atoms(const Signature& sig,
                                        const std::vector<std::string>& names);

  const Signature& signature() const noexcept { return sig_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool value(std::size_t atom_index) const;
  bool value(std::string_view atom_name) const;
  std::vector<std::string> true_atoms() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.sig_ == b.sig_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Interpretation& a, const Interpretation& b) {
    return !(a == b);
  }

 private:
  Signature sig_;
  std::uint64_t bits_;
};

/// Number of atoms on which two interpretations over the same signature
/// differ. Throws SignatureError when the signatures are not identical.
std::size_t hamming(const Interpretation& a, const Interpretation& b);

/// A finite set of interpretations sharing one signature, kept sorted by
/// bit-vector value.
class ModelSet {
 public:
  explicit ModelSet(Signature sig);
  ModelSet(Signature sig, std::vector<std::uint64_t> bits);

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool contains(std::uint64_t bits) const;
  bool contains(const Interpretation& w) const;
  Interpretation interpretation(std::size_t index) const;

  friend bool operator==(const ModelSet& a, const ModelSet& b) {
    return a.sig_ == b.sig_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ModelSet& a, const ModelSet& b) {
    return !(a == b);
  }

 private:
  Signature sig_;
  std::vector<std::uint64_t> bits_;  // sorted, unique
};

/// Set intersection; requires identical signatures.
ModelSet intersect(const ModelSet& a, const ModelSet& b);

}  // namespace stratrev
