#include "stratrev/interpretation.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace stratrev {

namespace {
std::uint64_t mask_for(const Signature& sig) {
  std::size_t n = sig.size();
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}
}  // namespace

Interpretation::Interpretation(Signature sig, std::uint64_t bits)
    : sig_(std::move(sig)), bits_(bits & mask_for(sig_)) {}

Interpretation Interpretation::from_true_atoms(
    const Signature& sig, const std::vector<std::string>& names) {
  std::uint64_t bits = 0;
  for (const auto& name : names) {
    auto idx = sig.index_of(name);
    if (!idx)
      throw SignatureError("atom '" + name + "' is not in the signature");
    bits |= std::uint64_t{1} << *idx;
  }
  return Interpretation(sig, bits);
}

bool Interpretation::value(std::size_t atom_index) const {
  if (atom_index >= sig_.size())
    throw SignatureError("atom index out of range");
  return (bits_ >> atom_index) & 1;
}

bool Interpretation::value(std::string_view atom_name) const {
  auto idx = sig_.index_of(atom_name);
  if (!idx)
    throw SignatureError("atom '" + std::string(atom_name) +
                         "' is not in the signature");
  return (bits_ >> *idx) & 1;
}

std::vector<std::string> Interpretation::true_atoms() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sig_.size(); ++i)
    if ((bits_ >> i) & 1) out.push_back(sig_.names()[i]);
  return out;
}

std::size_t hamming(const Interpretation& a, const Interpretation& b) {
  if (a.signature() != b.signature())
    throw SignatureError("hamming distance requires identical signatures");
  return static_cast<std::size_t>(std::popcount(a.bits() ^ b.bits()));
}

ModelSet::ModelSet(Signature sig) : sig_(std::move(sig)) {}

ModelSet::ModelSet(Signature sig, std::vector<std::uint64_t> bits)
    : sig_(std::move(sig)), bits_(std::move(bits)) {
  std::sort(bits_.begin(), bits_.end());
  bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
}

bool ModelSet::contains(std::uint64_t bits) const {
  return std::binary_search(bits_.begin(), bits_.end(), bits);
}

bool ModelSet::contains(const Interpretation& w) const {
  return w.signature() == sig_ && contains(w.bits());
}

Interpretation ModelSet::interpretation(std::size_t index) const {
  if (index >= bits_.size())
    throw InvalidInputError("model index out of range");
  return Interpretation(sig_, bits_[index]);
}

ModelSet intersect(const ModelSet& a, const ModelSet& b) {
  if (a.signature() != b.signature())
    throw SignatureError("model sets over different signatures");
  std::vector<std::uint64_t> out;
  std::set_intersection(a.bits().begin(), a.bits().end(), b.bits().begin(),
                        b.bits().end(), std::back_inserter(out));
  return ModelSet(a.signature(), std::move(out));
}

}  // namespace stratrev
