#include "gqt/registry.hpp"

#include <sstream>

namespace gqt {

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"w2", "w3", "q5_2", "q5_3", "t2star", "payne"};
  return names;
}

namespace {

std::string matrix_list(const QClan& clan) {
  std::ostringstream os;
  for (std::size_t i = 0; i < clan.matrices.size(); ++i) {
    const auto& m = clan.matrices[i];
    os << (i ? " " : "") << "[" << m.a().v << "," << m.b().v << ";" << m.c().v << "," << m.d().v << "]";
  }
  return os.str();
}

}  // namespace

Construction build_construction(const std::string& name, bool dual) {
  Construction c;
  c.name = name;
  c.dual = dual;
  auto& p = c.provenance;
  if (name == "w2" || name == "w3") {
    const int q = name == "w2" ? 2 : 3;
    c.gq = build_symplectic_gq(q);
    p = {{"family", "symplectic W(q)"}, {"q", std::to_string(q)},
         {"form", "x0*y1 - x1*y0 + x2*y3 - x3*y2"}, {"field_modulus", Field::make(q, 1)->modulus_string()}};
  } else if (name == "q5_2" || name == "q5_3") {
    const int q = name == "q5_2" ? 2 : 3;
    c.gq = build_elliptic_gq(q);
    const auto ext = Field::make(q, 2);
    p = {{"family", "elliptic quadric Q-(5,q)"}, {"q", std::to_string(q)},
         {"form", "x0*x1 + x2*x3 + x4^2 + c1*x4*x5 + c0*x5^2"},
         {"quadratic_[c0,c1,1]", ext->modulus_string()}};
  } else if (name == "t2star") {
    c.gq = build_t2star_gq();
    p = {{"family", "T2*(O)"}, {"q", "4"}, {"field_modulus", Field::make(2, 2)->modulus_string()},
         {"hyperoval", "{(1,t,t^2)} + (0,1,0) + (0,0,1)"}};
  } else if (name == "payne") {
    const QClan clan = payne_qclan();
    c.gq = build_flock_gq(clan);
    p = {{"family", "flock GQ from a q-clan"}, {"q", "5"},
         {"clan", "A_t = [t, 3t^2; 0, 3t^3]"}, {"matrices", matrix_list(clan)},
         {"field_modulus", clan.field->modulus_string()}};
  } else {
    throw GraphError("unknown construction: " + name);
  }
  if (dual) c.gq = dualize(c.gq);
  p.emplace_back("dual", dual ? "true" : "false");
  return c;
}

}  // namespace gqt
