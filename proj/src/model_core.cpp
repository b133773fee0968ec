#include "hornkc/model_core.hpp"

#include <algorithm>
#include <unordered_set>

namespace hornkc {

std::vector<int> vars_of(VarSet s) {
  std::vector<int> out;
  out.reserve(std::popcount(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest_var(s));
  return out;
}

VarSet varset_of(std::initializer_list<int> vars) {
  VarSet s = 0;
  for (int v : vars) s |= var_bit(v);
  return s;
}

bool lex_less(VarSet a, VarSet b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void require_same_width(int expected, int actual, std::string_view where) {
  if (expected != actual) throw WidthMismatch(expected, actual, where);
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(int width, VarSet ones) : width_(width), ones_bits_(ones) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidArgument("assignment width must lie in 1.." + std::to_string(kMaxWidth) +
                          ", got " + std::to_string(width));
  }
  if (!is_subset(ones, full_mask(width))) {
    throw InvalidArgument("assignment bits exceed width " + std::to_string(width));
  }
}

Assignment Assignment::from_string(std::string_view bits) {
  if (bits.empty()) throw InvalidArgument("empty bitstring");
  if (bits.size() > static_cast<std::size_t>(kMaxWidth)) {
    throw InvalidArgument("bitstring longer than " + std::to_string(kMaxWidth));
  }
  VarSet ones = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      ones |= var_bit(static_cast<int>(i) + 1);
    } else if (bits[i] != '0') {
      throw InvalidArgument("invalid character '" + std::string(1, bits[i]) + "' in bitstring");
    }
  }
  return Assignment(static_cast<int>(bits.size()), ones);
}

Assignment Assignment::with(int var, bool value) const {
  if (var < 1 || var > width_) throw InvalidArgument("variable index out of range");
  return Assignment(width_, value ? (ones_bits_ | var_bit(var)) : (ones_bits_ & ~var_bit(var)));
}

std::string Assignment::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 1; i <= width_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
  if (a.width_ != b.width_) return a.width_ <=> b.width_;
  const VarSet diff = a.ones_bits_ ^ b.ones_bits_;
  if (diff == 0) return std::strong_ordering::equal;
  const VarSet first = diff & (~diff + 1);
  return (a.ones_bits_ & first) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

int weight(const Assignment& a) { return a.weight(); }

Assignment intersect(const Assignment& a, const Assignment& b) {
  require_same_width(a.width(), b.width(), "intersect");
  return Assignment(a.width(), a.ones() & b.ones());
}

bool leq(const Assignment& x, const Assignment& y) {
  require_same_width(x.width(), y.width(), "leq");
  return is_subset(x.ones(), y.ones());
}

bool leq_b(const Assignment& x, const Assignment& y, const Assignment& b) {
  require_same_width(x.width(), y.width(), "leq_b");
  require_same_width(x.width(), b.width(), "leq_b");
  return is_subset(x.ones() ^ b.ones(), y.ones() ^ b.ones());
}

// ---------------------------------------------------------------------------
// ModelSet

ModelSet::ModelSet(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidArgument("model set width must lie in 1.." + std::to_string(kMaxWidth));
  }
}

ModelSet::ModelSet(int width, std::vector<Assignment> members)
    : width_(width), members_(std::move(members)) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidArgument("model set width must lie in 1.." + std::to_string(kMaxWidth));
  }
  for (const auto& m : members_) require_same_width(width_, m.width(), "ModelSet");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ModelSet ModelSet::of(std::initializer_list<std::string_view> bits) {
  if (bits.size() == 0) throw InvalidArgument("ModelSet::of needs a width for an empty list");
  return of(static_cast<int>(bits.begin()->size()), bits);
}

ModelSet ModelSet::of(int width, std::initializer_list<std::string_view> bits) {
  std::vector<Assignment> members;
  members.reserve(bits.size());
  for (auto b : bits) members.push_back(Assignment::from_string(b));
  return ModelSet(width, std::move(members));
}

bool ModelSet::contains(const Assignment& x) const {
  require_same_width(width_, x.width(), "ModelSet::contains");
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ModelSet::insert(const Assignment& x) {
  require_same_width(width_, x.width(), "ModelSet::insert");
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it != members_.end() && *it == x) return false;
  members_.insert(it, x);
  return true;
}

bool ModelSet::erase(const Assignment& x) {
  require_same_width(width_, x.width(), "ModelSet::erase");
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return false;
  members_.erase(it);
  return true;
}

bool ModelSet::is_subset_of(const ModelSet& other) const {
  require_same_width(width_, other.width_, "ModelSet::is_subset_of");
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string ModelSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

ModelSet set_union(const ModelSet& a, const ModelSet& b) {
  require_same_width(a.width(), b.width(), "set_union");
  std::vector<Assignment> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ModelSet(a.width(), std::move(out));
}

ModelSet set_difference(const ModelSet& a, const ModelSet& b) {
  require_same_width(a.width(), b.width(), "set_difference");
  std::vector<Assignment> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ModelSet(a.width(), std::move(out));
}

ModelSet all_assignments(int width) {
  require_within_guard(width, "all_assignments");
  std::vector<Assignment> out;
  const VarSet end = VarSet{1} << width;
  out.reserve(end);
  for (VarSet m = 0; m < end; ++m) out.emplace_back(width, m);
  return ModelSet(width, std::move(out));
}

// ---------------------------------------------------------------------------
// Lattice operations

Assignment intersect(const ModelSet& s) {
  if (s.empty()) throw EmptySetError("intersect of an empty model set is undefined");
  VarSet acc = full_mask(s.width());
  for (const auto& x : s) acc &= x.ones();
  return Assignment(s.width(), acc);
}

ModelSet closure(const ModelSet& s) {
  std::unordered_set<VarSet> seen;
  std::vector<VarSet> members;
  for (const auto& x : s) {
    seen.insert(x.ones());
    members.push_back(x.ones());
  }
  // Worklist: each new element is intersected with everything found so far.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const VarSet x = members[next];
    for (std::size_t j = 0; j < next; ++j) {
      const VarSet z = x & members[j];
      if (seen.insert(z).second) members.push_back(z);
    }
  }
  std::vector<Assignment> out;
  out.reserve(members.size());
  for (VarSet m : members) out.emplace_back(s.width(), m);
  return ModelSet(s.width(), std::move(out));
}

namespace {

// Intersection of the members of g lying strictly above x (excluding x itself);
// returns false when no such member exists.
bool meet_above(VarSet x, const ModelSet& g, VarSet& meet) {
  bool any = false;
  meet = ~VarSet{0};
  for (const auto& y : g) {
    if (y.ones() != x && is_subset(x, y.ones())) {
      meet &= y.ones();
      any = true;
    }
  }
  return any;
}

}  // namespace

bool closure_member(const Assignment& x, const ModelSet& g) {
  require_same_width(g.width(), x.width(), "closure_member");
  bool any = false;
  VarSet meet = ~VarSet{0};
  for (const auto& y : g) {
    if (is_subset(x.ones(), y.ones())) {
      meet &= y.ones();
      any = true;
    }
  }
  return any && meet == x.ones();
}

bool is_redundant(const ModelSet& s) {
  for (const auto& x : s) {
    VarSet meet;
    if (meet_above(x.ones(), s, meet) && meet == x.ones()) return true;
  }
  return false;
}

ModelSet monotone_extension_point(const Assignment& z, const Assignment& b) {
  require_same_width(z.width(), b.width(), "monotone_extension_point");
  return monotone_extension(ModelSet(z.width(), {z}), b);
}

ModelSet monotone_extension(const ModelSet& f, const Assignment& b) {
  require_same_width(f.width(), b.width(), "monotone_extension");
  require_within_guard(f.width(), "monotone_extension");
  std::vector<Assignment> out;
  const VarSet end = VarSet{1} << f.width();
  for (VarSet m = 0; m < end; ++m) {
    const VarSet flipped = m ^ b.ones();
    for (const auto& z : f) {
      if (is_subset(z.ones() ^ b.ones(), flipped)) {
        out.emplace_back(f.width(), m);
        break;
      }
    }
  }
  return ModelSet(f.width(), std::move(out));
}

ModelSet min_b(const ModelSet& f, const Assignment& b) {
  require_same_width(f.width(), b.width(), "min_b");
  // In the b-order an element is non-minimal iff some minimal element lies
  // strictly below it, so scanning by distance from b only needs to compare
  // against minima already found.
  std::vector<VarSet> flipped;
  flipped.reserve(f.size());
  for (const auto& z : f) flipped.push_back(z.ones() ^ b.ones());
  std::stable_sort(flipped.begin(), flipped.end(),
                   [](VarSet x, VarSet y) { return std::popcount(x) < std::popcount(y); });
  std::vector<VarSet> minima;
  for (VarSet z : flipped) {
    bool dominated = false;
    for (VarSet m : minima) {
      if (is_subset(m, z)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minima.push_back(z);
  }
  std::vector<Assignment> out;
  out.reserve(minima.size());
  for (VarSet m : minima) out.emplace_back(f.width(), m ^ b.ones());
  return ModelSet(f.width(), std::move(out));
}

}  // namespace hornkc
