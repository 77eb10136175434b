#include "species/labels.hpp"

#include <algorithm>
#include <cctype>

#include "species/errors.hpp"

namespace species {

namespace {

bool valid_atomic(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == '|' || c == '{' || c == '}' || c == '[' || c == ']' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

}  // namespace

Label::Label(std::string text) : text_(std::move(text)) {
  if (!valid_atomic(text_)) throw DomainError("invalid label '" + text_ + "'");
}

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw DomainError("duplicate label in label set");
}

LabelSet::LabelSet(std::initializer_list<const char*> labels) {
  std::vector<Label> v;
  for (const char* s : labels) v.emplace_back(s);
  *this = LabelSet(std::move(v));
}

LabelSet LabelSet::parse(const std::string& comma_separated) {
  std::vector<Label> v;
  std::size_t start = 0;
  if (comma_separated.empty()) return {};
  while (true) {
    auto comma = comma_separated.find(',', start);
    v.emplace_back(comma_separated.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return LabelSet(std::move(v));
}

bool LabelSet::contains(const Label& l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

bool LabelSet::subset_of(const LabelSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

bool LabelSet::disjoint_from(const LabelSet& other) const { return intersect(other).empty(); }

LabelSet LabelSet::unite(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out));
  if (out.size() != size() + other.size())
    throw DomainError("union of overlapping label sets " + to_string() + " and " +
                      other.to_string());
  return LabelSet(Sorted{}, std::move(out));
}

LabelSet LabelSet::intersect(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(out));
  return LabelSet(Sorted{}, std::move(out));
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                      std::back_inserter(out));
  return LabelSet(Sorted{}, std::move(out));
}

Label LabelSet::as_block_label() const { return Label(Label::Unchecked{}, to_string()); }

std::string LabelSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ',';
    s += labels_[i].str();
  }
  return s + "}";
}

LabelSet block_members(const Label& block_label) {
  const std::string& s = block_label.str();
  if (!block_label.is_block() || s.back() != '}')
    throw DomainError("'" + s + "' is not a block label");
  std::vector<Label> members;
  auto push = [&](std::string m) {
    if (m.empty()) throw DomainError("malformed block label '" + s + "'");
    if (m.front() == '{') {
      Label nested(Label::Unchecked{}, m);
      members.push_back(block_members(nested).as_block_label());
    } else {
      members.emplace_back(std::move(m));
    }
  };
  if (s.size() == 2) return {};
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (depth < 0) throw DomainError("malformed block label '" + s + "'");
    if (s[i] == ',' && depth == 0) {
      push(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw DomainError("malformed block label '" + s + "'");
  push(s.substr(start, s.size() - 1 - start));
  return LabelSet(std::move(members));
}

LabelSet canonical_labels(std::size_t n) {
  std::vector<Label> v;
  for (std::size_t i = 1; i <= n; ++i) v.emplace_back(std::to_string(i));
  return LabelSet(std::move(v));
}

// --- Bijection ---------------------------------------------------------------

Bijection::Bijection(std::map<Label, Label> pairs) : pairs_(std::move(pairs)) {
  std::vector<Label> image;
  for (const auto& [from, to] : pairs_) image.push_back(to);
  LabelSet check(std::move(image));  // throws on collisions
}

Bijection Bijection::identity(const LabelSet& on) {
  std::map<Label, Label> m;
  for (const auto& l : on) m.emplace(l, l);
  return Bijection(std::move(m));
}

Bijection Bijection::adjacent_transposition(const LabelSet& on, std::size_t i) {
  if (i + 1 >= on.size()) throw DomainError("transposition index out of range");
  std::map<Label, Label> m;
  for (const auto& l : on) m.emplace(l, l);
  m[on[i]] = on[i + 1];
  m[on[i + 1]] = on[i];
  return Bijection(std::move(m));
}

const Label& Bijection::operator()(const Label& l) const {
  auto it = pairs_.find(l);
  if (it == pairs_.end()) throw DomainError("label '" + l.str() + "' outside bijection domain");
  return it->second;
}

LabelSet Bijection::operator()(const LabelSet& s) const {
  std::vector<Label> out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back((*this)(l));
  return LabelSet(std::move(out));
}

LabelSet Bijection::domain() const {
  std::vector<Label> v;
  for (const auto& [from, to] : pairs_) v.push_back(from);
  return LabelSet(std::move(v));
}

LabelSet Bijection::codomain() const {
  std::vector<Label> v;
  for (const auto& [from, to] : pairs_) v.push_back(to);
  return LabelSet(std::move(v));
}

Bijection Bijection::inverse() const {
  std::map<Label, Label> m;
  for (const auto& [from, to] : pairs_) m.emplace(to, from);
  return Bijection(std::move(m));
}

Bijection Bijection::after(const Bijection& inner) const {
  std::map<Label, Label> m;
  for (const auto& [from, mid] : inner.pairs_) m.emplace(from, (*this)(mid));
  return Bijection(std::move(m));
}

Bijection Bijection::restricted_to(const LabelSet& subset) const {
  std::map<Label, Label> m;
  for (const auto& l : subset) m.emplace(l, (*this)(l));
  return Bijection(std::move(m));
}

// --- Decompositions ----------------------------------------------------------

LabelSet Decomposition::ground() const {
  LabelSet g;
  for (const auto& p : parts) g = g.unite(p);
  return g;
}

std::vector<Decomposition> enumerate_decompositions(const LabelSet& ground, std::size_t k) {
  if (k == 0) throw DomainError("decomposition needs at least one part");
  const std::size_t n = ground.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  std::vector<Decomposition> out;
  out.reserve(total);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t m = 0; m < total; ++m) {
    std::vector<std::vector<Label>> parts(k);
    for (std::size_t i = 0; i < n; ++i) parts[digit[i]].push_back(ground[i]);
    Decomposition d;
    for (auto& p : parts) d.parts.emplace_back(std::move(p));
    out.push_back(std::move(d));
    // increment, last label least significant
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < k) break;
      digit[i] = 0;
    }
  }
  return out;
}

// --- Set partitions ----------------------------------------------------------

SetPartition::SetPartition(std::vector<LabelSet> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.empty()) throw DomainError("set partition with an empty block");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const LabelSet& a, const LabelSet& b) { return a[0] < b[0]; });
  for (const auto& b : blocks_) ground_ = ground_.unite(b);  // throws on overlap
}

LabelSet SetPartition::block_labels() const {
  std::vector<Label> v;
  v.reserve(blocks_.size());
  for (const auto& b : blocks_) v.push_back(b.as_block_label());
  return LabelSet(std::move(v));
}

std::size_t SetPartition::block_index_of(const Label& l) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].contains(l)) return i;
  throw DomainError("label '" + l.str() + "' is in no block of " + to_string());
}

std::size_t SetPartition::block_index_by_label(const Label& block_label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].as_block_label() == block_label) return i;
  throw DomainError("'" + block_label.str() + "' names no block of " + to_string());
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += blocks_[i].to_string();
  }
  return s + "}";
}

std::vector<SetPartition> enumerate_partitions(const LabelSet& ground) {
  const std::size_t n = ground.size();
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<std::vector<Label>> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[a[i]].push_back(ground[i]);
    std::vector<LabelSet> bs;
    for (auto& p : parts) bs.emplace_back(std::move(p));
    out.emplace_back(std::move(bs));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

namespace {
void require_subset(const SetPartition& x, const LabelSet& t) {
  if (!t.subset_of(x.ground()))
    throw DomainError(t.to_string() + " is not a subset of the ground set of " + x.to_string());
}
}  // namespace

SetPartition partition_support_restrict(const SetPartition& x, const LabelSet& t) {
  require_subset(x, t);
  std::vector<LabelSet> out;
  for (const auto& b : x.blocks())
    if (!b.disjoint_from(t)) out.push_back(b);
  return SetPartition(std::move(out));
}

SetPartition partition_restrict(const SetPartition& x, const LabelSet& t) {
  require_subset(x, t);
  std::vector<LabelSet> out;
  for (const auto& b : x.blocks()) {
    auto cut = b.intersect(t);
    if (!cut.empty()) out.push_back(std::move(cut));
  }
  return SetPartition(std::move(out));
}

Bijection support_to_restriction(const SetPartition& x, const LabelSet& t) {
  require_subset(x, t);
  std::map<Label, Label> m;
  for (const auto& b : x.blocks()) {
    auto cut = b.intersect(t);
    if (!cut.empty()) m.emplace(b.as_block_label(), cut.as_block_label());
  }
  return Bijection(std::move(m));
}

std::vector<std::vector<LabelSet>> group_blocks_by_size(const SetPartition& x) {
  std::size_t k = 0;
  for (const auto& b : x.blocks()) k = std::max(k, b.size());
  std::vector<std::vector<LabelSet>> out(k);
  for (const auto& b : x.blocks()) out[b.size() - 1].push_back(b);
  return out;
}

LargeSmall large_small_split(const SetPartition& x, std::size_t r) {
  std::vector<LabelSet> large, small;
  for (const auto& b : x.blocks()) (b.size() >= r ? large : small).push_back(b);
  return {SetPartition(std::move(large)), SetPartition(std::move(small))};
}

}  // namespace species
