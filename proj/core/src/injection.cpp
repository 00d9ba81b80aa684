#include "sqcirc/injection.hpp"

#include <set>
#include <stdexcept>

namespace sqcirc {

std::vector<Assignment> inject_class(const SquareClass& cls) {
  const std::size_t len = cls.root.size();
  const Word canonical = canonical_rotation(cls.root);
  std::vector<Assignment> out;
  out.reserve(cls.members.size());

  if (cls.index >= 2) {
    for (const auto& sq : cls.members) {
      ClassCoordinates at;
      try {
        at = square_coordinates(sq, cls);
      } catch (const std::invalid_argument& e) {
        throw std::logic_error(e.what());
      }
      out.push_back(Assignment{sq, SmallCircuit{canonical, image_order(at.i, at.j, len)}});
    }
    return out;
  }

  // Index 1: members are all conjugates of v^2; any bijection onto
  // C(v, l), ..., C(v, l + t - 1) works, members are ranked in order.
  std::size_t rank = 0;
  for (const auto& sq : cls.members) {
    if (sq.half().size() != len) {
      throw std::logic_error("square '" + sq.word().str() + "' exceeds index 1 of Class(" +
                             cls.root.str() + ")");
    }
    out.push_back(Assignment{sq, SmallCircuit{canonical, len + rank}});
    ++rank;
  }
  return out;
}

InjectionReport build_injection(const Word& w) {
  return build_injection(square_classes(w), all_small_circuits(w));
}

InjectionReport build_injection(const std::vector<SquareClass>& classes,
                                const std::set<SmallCircuit>& circuits) {
  InjectionReport report;
  report.circuit_count = circuits.size();
  std::set<SmallCircuit> images;
  for (const auto& cls : classes) {
    for (auto& a : inject_class(cls)) {
      report.all_images_exist = report.all_images_exist && circuits.contains(a.circuit);
      images.insert(a.circuit);
      report.assignments.push_back(std::move(a));
    }
  }
  report.square_count = report.assignments.size();
  report.injective = images.size() == report.assignments.size();
  return report;
}

}  // namespace sqcirc
