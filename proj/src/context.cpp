#include "ctxlogic/context.hpp"

#include "ctxlogic/error.hpp"

namespace ctxlogic {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::sort: return "sort";
    case ErrorKind::unsupported: return "unsupported-combination";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::range: return "range";
    case ErrorKind::invariant: return "invariant";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

const char* to_string(Sort s) { return s == Sort::s1 ? "s1" : "s2"; }

Relation::Relation(std::size_t rows, std::size_t cols)
    : cols_(cols), by_row_(rows, Bitset(cols)), by_col_(cols, Bitset(rows)) {}

void Relation::set(std::size_t g, std::size_t m, bool value) {
  by_row_[g][m] = value;
  by_col_[m][g] = value;
}

Relation Relation::complement() const {
  Relation out = *this;
  for (auto& r : out.by_row_) r.flip();
  for (auto& c : out.by_col_) c.flip();
  return out;
}

Relation Relation::operator|(const Relation& o) const {
  Relation out = *this;
  for (std::size_t g = 0; g < rows(); ++g) out.by_row_[g] |= o.by_row_[g];
  for (std::size_t m = 0; m < cols(); ++m) out.by_col_[m] |= o.by_col_[m];
  return out;
}

Relation Relation::operator&(const Relation& o) const {
  Relation out = *this;
  for (std::size_t g = 0; g < rows(); ++g) out.by_row_[g] &= o.by_row_[g];
  for (std::size_t m = 0; m < cols(); ++m) out.by_col_[m] &= o.by_col_[m];
  return out;
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (const auto& r : by_row_) n += r.count();
  return n;
}

namespace {

std::map<std::string, std::size_t> index_ids(const std::vector<std::string>& ids, const char* what) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!idx.emplace(ids[i], i).second)
      throw Error(ErrorKind::malformed_input, std::string("duplicate ") + what + " id '" + ids[i] + "'");
  }
  return idx;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             Relation incidence)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      incidence_(std::move(incidence)),
      object_index_(index_ids(objects_, "object")),
      attribute_index_(index_ids(attributes_, "attribute")) {
  if (incidence_.rows() != objects_.size() || incidence_.cols() != attributes_.size())
    throw Error(ErrorKind::malformed_input, "incidence dimensions do not match the universes");
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::pair<std::string, std::string>>& pairs)
    : FormalContext(objects, attributes, Relation(objects.size(), attributes.size())) {
  for (const auto& [g, m] : pairs) {
    auto gi = find_object(g);
    auto mi = find_attribute(m);
    if (!gi) throw Error(ErrorKind::malformed_input, "incidence references unknown object '" + g + "'");
    if (!mi) throw Error(ErrorKind::malformed_input, "incidence references unknown attribute '" + m + "'");
    incidence_.set(*gi, *mi);
  }
}

std::optional<std::size_t> FormalContext::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FormalContext::find_attribute(const std::string& id) const {
  auto it = attribute_index_.find(id);
  if (it == attribute_index_.end()) return std::nullopt;
  return it->second;
}

SortedSet FormalContext::make_set(Sort s, const std::vector<std::string>& ids) const {
  SortedSet out{s, Bitset(universe_size(s))};
  for (const auto& id : ids) {
    auto i = find(s, id);
    if (!i)
      throw Error(ErrorKind::malformed_input,
                  std::string("unknown ") + (s == Sort::s1 ? "object" : "attribute") + " id '" + id + "'");
    out.members.set(*i);
  }
  return out;
}

std::vector<std::string> FormalContext::names(const SortedSet& x) const {
  std::vector<std::string> out;
  const auto& u = universe(x.sort);
  for (auto i : ctxlogic::members(x.members)) out.push_back(u[i]);
  return out;
}

Bitset derive_objects(const Relation& r, const Bitset& objects) {
  Bitset out = full_set(r.cols());
  for (auto g = objects.find_first(); g != Bitset::npos; g = objects.find_next(g)) out &= r.row(g);
  return out;
}

Bitset derive_attributes(const Relation& r, const Bitset& attributes) {
  Bitset out = full_set(r.rows());
  for (auto m = attributes.find_first(); m != Bitset::npos; m = attributes.find_next(m)) out &= r.col(m);
  return out;
}

Bitset possibility_o(const Relation& r, const Bitset& objects) {
  Bitset out(r.cols());
  for (std::size_t m = 0; m < r.cols(); ++m) out[m] = r.col(m).intersects(objects);
  return out;
}

Bitset necessity_o(const Relation& r, const Bitset& objects) {
  Bitset out(r.cols());
  for (std::size_t m = 0; m < r.cols(); ++m) out[m] = r.col(m).is_subset_of(objects);
  return out;
}

Bitset possibility_p(const Relation& r, const Bitset& attributes) {
  Bitset out(r.rows());
  for (std::size_t g = 0; g < r.rows(); ++g) out[g] = r.row(g).intersects(attributes);
  return out;
}

Bitset necessity_p(const Relation& r, const Bitset& attributes) {
  Bitset out(r.rows());
  for (std::size_t g = 0; g < r.rows(); ++g) out[g] = r.row(g).is_subset_of(attributes);
  return out;
}

namespace {

void check_size(const FormalContext& k, const SortedSet& x) {
  if (x.members.size() != k.universe_size(x.sort))
    throw Error(ErrorKind::malformed_input, "set size does not match the context universe");
}

}  // namespace

SortedSet derive(const FormalContext& k, const SortedSet& x) {
  check_size(k, x);
  if (x.sort == Sort::s1) return {Sort::s2, derive_objects(k.incidence(), x.members)};
  return {Sort::s1, derive_attributes(k.incidence(), x.members)};
}

SortedSet approx(const FormalContext& k, ApproxKind kind, const SortedSet& x) {
  check_size(k, x);
  const bool wants_objects = kind == ApproxKind::poss_o || kind == ApproxKind::nec_o;
  if (wants_objects != (x.sort == Sort::s1))
    throw Error(ErrorKind::sort, "approximation operator applied to a set of the wrong sort");
  switch (kind) {
    case ApproxKind::poss_o: return {Sort::s2, possibility_o(k.incidence(), x.members)};
    case ApproxKind::nec_o: return {Sort::s2, necessity_o(k.incidence(), x.members)};
    case ApproxKind::poss_p: return {Sort::s1, possibility_p(k.incidence(), x.members)};
    case ApproxKind::nec_p: return {Sort::s1, necessity_p(k.incidence(), x.members)};
  }
  return {};
}

FormalContext complement_context(const FormalContext& k) {
  return FormalContext(k.objects(), k.attributes(), k.incidence().complement());
}

SortedSet neighborhoods(const FormalContext& k, World w) {
  if (w.index >= k.universe_size(w.sort)) throw Error(ErrorKind::malformed_input, "world out of range");
  if (w.sort == Sort::s1) return {Sort::s2, k.incidence().row(w.index)};
  return {Sort::s1, k.incidence().col(w.index)};
}

}  // namespace ctxlogic
