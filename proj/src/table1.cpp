#include "plab/table1.hpp"

#include <sstream>
#include <stdexcept>

namespace plab {

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (int i = 0; i < 16; ++i) {
    Table1Row r;
    for (int k = 0; k < 4; ++k)
      r.pol[k] = ((i >> (3 - k)) & 1) ? Pol::P : Pol::O;
    Pol a = r.pol[0], b = r.pol[1], c = r.pol[2], d = r.pol[3];
    r.sigma_enabled = a == Pol::O && b == Pol::P;
    r.tau_enabled = b == Pol::O && c == Pol::P;
    r.theta_enabled = c == Pol::O && d == Pol::P;
    r.composite = (a == Pol::O && d == Pol::P) ? Pol::P : Pol::O;
    if (r.composite == Pol::O) {
      r.initial_mover = "O";
    } else if (r.sigma_enabled && r.theta_enabled) {
      r.initial_mover = "ambiguous";
    } else if (r.sigma_enabled) {
      r.initial_mover = "sigma";
    } else if (r.tau_enabled) {
      r.initial_mover = "tau";
    } else if (r.theta_enabled) {
      r.initial_mover = "theta";
    } else {
      throw std::logic_error("positively owned composite with nothing enabled");
    }
    rows.push_back(r);
  }
  return rows;
}

std::string print_table1_row(const Table1Row& r) {
  std::ostringstream out;
  for (Pol p : r.pol) out << pol_char(p);
  out << "  first mover: " << r.initial_mover << "  enabled:";
  if (r.sigma_enabled) out << " sigma";
  if (r.tau_enabled) out << " tau";
  if (r.theta_enabled) out << " theta";
  if (!r.sigma_enabled && !r.tau_enabled && !r.theta_enabled) out << " none";
  return out.str();
}

}  // namespace plab
