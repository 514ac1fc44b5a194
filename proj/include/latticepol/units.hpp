#pragma once

// Internal unit system: angular frequency in rad/s, lengths in m,
// dipole moments in C*m. Inputs quoted in eV, Angstrom and e*Angstrom
// are converted at the boundary with the helpers below.

namespace latticepol {

struct PhysicalConstants {
  double hbar;      // J*s
  double c;         // m/s
  double eps0;      // F/m
  double e_charge;  // C
};

// CODATA 2018.
inline constexpr PhysicalConstants kConstants{
    1.054571817e-34,
    2.99792458e8,
    8.8541878128e-12,
    1.602176634e-19,
};

inline constexpr double kPi = 3.14159265358979323846;

double ev_to_angular(double energy_ev);
double angular_to_ev(double omega);
double angstrom_to_m(double length_a);
double m_to_angstrom(double length_m);
/// Dipole moment given in e*Angstrom to C*m.
double eangstrom_to_cm(double dipole_ea);

}  // namespace latticepol
