#pragma once

#include "ctxlogic/bitset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxlogic {

// s1 is the object sort, s2 the attribute sort.
enum class Sort : unsigned char { s1 = 1, s2 = 2 };

inline Sort other(Sort s) { return s == Sort::s1 ? Sort::s2 : Sort::s1; }
const char* to_string(Sort s);

struct SortedSet {
  Sort sort = Sort::s1;
  Bitset members;

  bool operator==(const SortedSet& o) const { return sort == o.sort && members == o.members; }
};

// Binary relation between `rows` objects and `cols` attributes, stored both
// row-wise and column-wise.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return by_row_.size(); }
  std::size_t cols() const { return by_col_.size(); }

  bool test(std::size_t g, std::size_t m) const { return by_row_[g][m]; }
  void set(std::size_t g, std::size_t m, bool value = true);

  const Bitset& row(std::size_t g) const { return by_row_[g]; }
  const Bitset& col(std::size_t m) const { return by_col_[m]; }
  const std::vector<Bitset>& rows_view() const { return by_row_; }
  const std::vector<Bitset>& cols_view() const { return by_col_; }

  Relation complement() const;
  Relation operator|(const Relation& o) const;
  Relation operator&(const Relation& o) const;
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool operator==(const Relation& o) const { return by_row_ == o.by_row_ && cols() == o.cols(); }

 private:
  std::size_t cols_ = 0;
  std::vector<Bitset> by_row_;
  std::vector<Bitset> by_col_;
};

class FormalContext {
 public:
  FormalContext() = default;
  // Throws Error(malformed_input) on duplicate ids or size mismatch.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                Relation incidence);
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::pair<std::string, std::string>>& pairs);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const Relation& incidence() const { return incidence_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  std::size_t universe_size(Sort s) const { return s == Sort::s1 ? num_objects() : num_attributes(); }
  const std::vector<std::string>& universe(Sort s) const {
    return s == Sort::s1 ? objects_ : attributes_;
  }

  std::optional<std::size_t> find_object(const std::string& id) const;
  std::optional<std::size_t> find_attribute(const std::string& id) const;
  std::optional<std::size_t> find(Sort s, const std::string& id) const {
    return s == Sort::s1 ? find_object(id) : find_attribute(id);
  }

  // Sorted set from ids; throws Error(malformed_input) on unknown ids.
  SortedSet make_set(Sort s, const std::vector<std::string>& ids) const;
  std::vector<std::string> names(const SortedSet& x) const;

  bool operator==(const FormalContext& o) const {
    return objects_ == o.objects_ && attributes_ == o.attributes_ && incidence_ == o.incidence_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  Relation incidence_;
  std::map<std::string, std::size_t> object_index_;
  std::map<std::string, std::size_t> attribute_index_;
};

enum class ApproxKind { poss_o, nec_o, poss_p, nec_p };

struct World {
  Sort sort = Sort::s1;
  std::size_t index = 0;
  bool operator==(const World& o) const { return sort == o.sort && index == o.index; }
};

// Derivation: s1 input A gives A+ = {m | all g in A have gIm}; s2 input B
// gives B- = {g | g has all m in B}.
SortedSet derive(const FormalContext& k, const SortedSet& x);

// Rough-set approximations. poss_o/nec_o take an object set and return an
// attribute set; poss_p/nec_p the converse.
SortedSet approx(const FormalContext& k, ApproxKind kind, const SortedSet& x);

FormalContext complement_context(const FormalContext& k);

// I_{g.} for an object, I_{.m} for an attribute.
SortedSet neighborhoods(const FormalContext& k, World w);

// Helpers shared by several modules, operating on raw bitsets over a relation.
Bitset derive_objects(const Relation& r, const Bitset& objects);      // A+
Bitset derive_attributes(const Relation& r, const Bitset& attributes); // B-
Bitset possibility_o(const Relation& r, const Bitset& objects);
Bitset necessity_o(const Relation& r, const Bitset& objects);
Bitset possibility_p(const Relation& r, const Bitset& attributes);
Bitset necessity_p(const Relation& r, const Bitset& attributes);

}  // namespace ctxlogic
