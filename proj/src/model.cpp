#include "ctxlogic/model.hpp"

#include "ctxlogic/error.hpp"

namespace ctxlogic {

void check_valuation(const Valuation& v, std::size_t num_objects, std::size_t num_attributes) {
  for (const auto& [atom, set] : v) {
    std::size_t want = atom.sort == Sort::s1 ? num_objects : num_attributes;
    if (set.size() != want)
      throw Error(ErrorKind::malformed_input, "valuation of atom '" + atom.name + "' has the wrong size");
  }
}

Valuation make_valuation(const FormalContext& k, const std::map<Atom, std::vector<std::string>>& ids) {
  Valuation v;
  for (const auto& [atom, names] : ids) v[atom] = k.make_set(atom.sort, names).members;
  return v;
}

GeneralizedModel GeneralizedModel::make_partial(FormalContext i_context, Relation j, Valuation v) {
  if (j.rows() != i_context.num_objects() || j.cols() != i_context.num_attributes())
    throw Error(ErrorKind::malformed_input, "J dimensions do not match the universes");
  check_valuation(v, i_context.num_objects(), i_context.num_attributes());
  GeneralizedModel g;
  g.total_ = (i_context.incidence() | j).count() == i_context.num_objects() * i_context.num_attributes();
  g.context_ = std::move(i_context);
  g.j_ = std::move(j);
  g.valuation_ = std::move(v);
  return g;
}

GeneralizedModel GeneralizedModel::make(FormalContext i_context, Relation j, Valuation v) {
  GeneralizedModel g = make_partial(std::move(i_context), std::move(j), std::move(v));
  if (!g.total_) throw Error(ErrorKind::malformed_input, "I union J does not cover G x M");
  return g;
}

GeneralizedModel GeneralizedModel::from_context_model(const ContextModel& m) {
  return make(m.context, m.context.incidence().complement(), m.valuation);
}

bool GeneralizedModel::disjoint() const { return (i() & j()).empty(); }

}  // namespace ctxlogic
