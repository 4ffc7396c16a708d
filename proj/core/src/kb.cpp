#include "stratrev/kb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "stratrev/parser.hpp"

namespace stratrev {

StratifiedKB::StratifiedKB(std::vector<Base> strata)
    : strata_(std::move(strata)) {
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (!is_consistent(strata_[i]))
      throw InvalidInputError("stratum " + std::to_string(i + 1) +
                              " is inconsistent");
  }
}

Base StratifiedKB::union_all() const {
  Base out;
  for (const auto& stratum : strata_)
    for (const auto& f : stratum) out.insert(f);
  return out;
}

Signature signature_of(const StratifiedKB& kb) {
  std::set<std::string> names;
  for (const auto& stratum : kb.strata()) stratum.collect_atoms(names);
  return Signature(std::move(names));
}

Signature signature_of(const StratifiedKB& kb, const Formula& extra) {
  std::set<std::string> names;
  for (const auto& stratum : kb.strata()) stratum.collect_atoms(names);
  extra.collect_atoms(names);
  return Signature(std::move(names));
}

StratifiedKB with_sure_formula(const StratifiedKB& kb, const Formula& sure) {
  if (!is_consistent(Base{sure}))
    throw InvalidInputError("the sure formula is unsatisfiable");
  std::vector<Base> strata;
  strata.reserve(kb.stratum_count() + 1);
  strata.push_back(Base{sure});
  for (const auto& s : kb.strata()) strata.push_back(s);
  return StratifiedKB(std::move(strata));
}

namespace {

// Walks index combinations of size k out of n in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (std::size_t i : idx) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

std::vector<Conflict> conflicts(const Base& b) {
  if (b.size() > 63)
    throw CapExceededError("conflict search over more than 63 formulas");
  if (is_consistent(b)) return {};

  const auto& members = b.members();
  std::vector<std::uint64_t> found_masks;
  std::vector<Conflict> out;

  for (std::size_t card = 1; card <= members.size(); ++card) {
    auto idx = first_combination(card);
    do {
      std::uint64_t mask = mask_of(idx);
      // A superset of a known conflict cannot be minimal.
      bool pruned = false;
      for (std::uint64_t fm : found_masks) {
        if ((fm & mask) == fm) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      Base candidate;
      for (std::size_t i : idx) candidate.insert(members[i]);
      if (!is_consistent(candidate)) {
        found_masks.push_back(mask);
        out.push_back(std::move(candidate));
      }
    } while (next_combination(idx, members.size()));
  }
  return out;
}

Base kernel(const Base& b) {
  Base out;
  for (const auto& c : conflicts(b))
    for (const auto& f : c) out.insert(f);
  return out;
}

Base disjunctions_of_size(const Base& source, std::size_t k) {
  if (k == 0)
    throw InvalidInputError("disjunction size must be at least 1");
  Base out;
  if (k > source.size()) return out;
  const auto& members = source.members();
  auto idx = first_combination(k);
  do {
    std::vector<Formula> picked;
    picked.reserve(k);
    for (std::size_t i : idx) picked.push_back(members[i]);
    out.insert(Formula::disjunction(std::move(picked)));
  } while (next_combination(idx, members.size()));
  return out;
}

Base Subbase::flatten() const {
  Base out = sure;
  for (const auto& s : strata)
    for (const auto& f : s) out.insert(f);
  return out;
}

std::vector<std::size_t> Subbase::cardinality_vector() const {
  std::vector<std::size_t> v;
  v.reserve(strata.size() + 1);
  v.push_back(sure.size());
  for (const auto& s : strata) v.push_back(s.size());
  return v;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (!line.empty() && is_space(line.back())) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && is_space(line[start])) ++start;
  return line.substr(start);
}

// Parses a "[stratum N]" header; returns 0 when the line is not a header.
std::size_t header_number(const std::string& line, std::size_t line_no) {
  if (line.empty() || line.front() != '[') return 0;
  std::istringstream in(line);
  char bracket = 0;
  std::string word;
  std::size_t n = 0;
  char close = 0;
  if (!(in >> bracket) || !(in >> word) || word != "stratum" || !(in >> n) ||
      !(in >> close) || close != ']' || n == 0)
    throw InvalidInputError("malformed stratum header on line " +
                            std::to_string(line_no));
  std::string rest;
  if (in >> rest)
    throw InvalidInputError("trailing input after stratum header on line " +
                            std::to_string(line_no));
  return n;
}

}  // namespace

StratifiedKB parse_stratified_kb(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Base> strata;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (std::size_t n = header_number(line, line_no); n != 0) {
      if (n != strata.size() + 1)
        throw InvalidInputError(
            "stratum headers must count up from 1; got [stratum " +
            std::to_string(n) + "] on line " + std::to_string(line_no));
      strata.emplace_back();
      continue;
    }
    if (strata.empty())
      throw InvalidInputError("formula before [stratum 1] on line " +
                              std::to_string(line_no));
    try {
      strata.back().insert(parse_formula(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  return StratifiedKB(std::move(strata));
}

StratifiedKB load_stratified_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_stratified_kb(buffer.str());
}

Base parse_base_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  Base out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.front() == '[')
      throw InvalidInputError("unexpected stratum header on line " +
                              std::to_string(line_no) +
                              " of a flat base file");
    try {
      out.insert(parse_formula(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  return out;
}

Base load_base_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_base_text(buffer.str());
}

}  // namespace stratrev
