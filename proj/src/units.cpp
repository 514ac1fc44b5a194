#include "latticepol/units.hpp"

namespace latticepol {

double ev_to_angular(double energy_ev) {
  return energy_ev * kConstants.e_charge / kConstants.hbar;
}

double angular_to_ev(double omega) {
  return omega * kConstants.hbar / kConstants.e_charge;
}

double angstrom_to_m(double length_a) { return length_a * 1e-10; }

double m_to_angstrom(double length_m) { return length_m * 1e10; }

double eangstrom_to_cm(double dipole_ea) {
  return dipole_ea * kConstants.e_charge * 1e-10;
}

}  // namespace latticepol
