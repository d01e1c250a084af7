#include "rtop/space.hpp"

#include <algorithm>
#include <tuple>

#include "rtop/error.hpp"

namespace rtop {

std::vector<std::string> check_space_hypotheses(const Parametrization& c) {
  std::vector<std::string> out;
  if (c.dimension() != 3) throw Error(ErrorCode::kInvalidArgument, "space curve expected");
  if (z_asymptote_check(c) != AsymptoteCase::kNone) out.emplace_back("asymptote parallel to the z-axis");
  if (!properness_check(c.projection()).proper) out.emplace_back("projection is not proper");
  if (vertical_asymptote_check(c) != AsymptoteCase::kNone) out.emplace_back("projection has a vertical asymptote");
  return out;
}

TopologyGraph lift_vertices(const TopologyGraph& planar, const Parametrization& c, int digits, LiftRecord& record) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  const RatFunc& z = c.component(2);
  const InfinityPoint inf = point_at_infinity(c);
  TopologyGraph space;
  space.metadata = planar.metadata;
  space.metadata.dimension = 3;
  record.lifted.assign(planar.vertices.size(), {});
  for (std::size_t vi = 0; vi < planar.vertices.size(); ++vi) {
    const Vertex& pv = planar.vertices[vi];
    if (pv.id != static_cast<int>(vi)) throw Error(ErrorCode::kInternal, "planar vertex ids must be dense");
    if (pv.kind == VertexKind::kIsolated) continue;
    auto z_of = [&](const ParamValue& t) -> Enclosure {
      if (t.is_finite()) return value_of(z, t.root_ptr());
      if (!inf.exists) throw Error(ErrorCode::kInternal, "z undefined at infinity");
      return constant(inf.coords[2]);
    };
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < pv.generators.size(); ++j) {
      bool placed = false;
      for (auto& grp : groups) {
        if (compare_numeric(z_of(pv.generators[grp.front()]), z_of(pv.generators[j]), digits) == 0) {
          grp.push_back(j);
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({j});
    }
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
      return compare_numeric(z_of(pv.generators[a.front()]), z_of(pv.generators[b.front()]), digits) < 0;
    });
    record.lifted[vi].resize(pv.generators.size());
    for (const auto& grp : groups) {
      Vertex v;
      v.id = static_cast<int>(space.vertices.size());
      v.coords = pv.coords;
      v.exact = pv.exact;
      bool infinite = false;
      for (std::size_t j : grp) infinite = infinite || !pv.generators[j].is_finite();
      const ParamValue& rep = pv.generators[grp.front()];
      if (infinite) {
        v.coords.emplace_back(inf.coords[2], bits);
        v.exact.emplace_back(inf.coords[2]);
      } else if (auto t = rep.root().exact_value()) {
        const mpq_class zv = z.eval(*t);
        v.coords.emplace_back(zv, bits);
        v.exact.emplace_back(zv);
      } else {
        v.coords.push_back(z_of(rep)(bits).midpoint());
        v.exact.emplace_back();
      }
      v.kind = pv.kind;
      if (v.kind == VertexKind::kInfinity && !infinite) v.kind = VertexKind::kCritical;
      for (std::size_t k = 0; k < grp.size(); ++k) {
        v.generators.push_back(pv.generators[grp[k]]);
        record.lifted[vi][grp[k]] = {v.id, static_cast<int>(k)};
      }
      space.vertices.push_back(std::move(v));
    }
  }
  return space;
}

void lift_edges(const TopologyGraph& planar, const LiftRecord& record, TopologyGraph& space) {
  auto lookup = [&](int vertex, int gen) {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= record.lifted.size()) throw Error(ErrorCode::kInternal, "edge endpoint missing");
    const auto& gens = record.lifted[static_cast<std::size_t>(vertex)];
    if (gen < 0 || static_cast<std::size_t>(gen) >= gens.size()) throw Error(ErrorCode::kInternal, "generator not lifted");
    return gens[static_cast<std::size_t>(gen)];
  };
  for (const auto& e : planar.edges) {
    Edge s = e;
    std::tie(s.from, s.from_gen) = lookup(e.from, e.from_gen);
    if (e.to >= 0) std::tie(s.to, s.to_gen) = lookup(e.to, e.to_gen);
    space.edges.push_back(std::move(s));
  }
}

}  // namespace rtop
