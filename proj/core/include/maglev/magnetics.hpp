#pragma once

namespace maglev::magnetics {

/// Physical constants of the 4-pole hybrid electromagnet and the carried body.
/// All values SI. N and l_pm are usually recovered by calibrate() because the
/// published constant table does not list them.
struct MagnetParams {
    double mu0;      ///< vacuum permeability [H/m]
    double S;        ///< per-pole face area [m^2]
    double N;        ///< winding count [turns]
    double l_pm;     ///< permanent-magnet thickness as equivalent air length [m]
    double E_pm;     ///< permanent-magnet magnetomotive force [A-turns]
    double R;        ///< coil resistance [ohm]
    double L_table;  ///< lumped coil inductance from the constant table [H]
    double m;        ///< carried mass [kg]
    double J_alpha;  ///< roll inertia [kg m^2]
    double J_beta;   ///< pitch inertia [kg m^2]
    double g_accel;  ///< gravitational acceleration [m/s^2]
};

/// Linearization point. The nominal design point has zero tilt and zero
/// tilt currents.
struct OperatingPoint {
    double z0;            ///< nominal air gap [m]
    double i_z0 = 0.0;    ///< nominal heave current [A]
    double alpha0 = 0.0;  ///< nominal roll [rad]
    double beta0 = 0.0;   ///< nominal pitch [rad]
    double i_alpha0 = 0.0;
    double i_beta0 = 0.0;
};

/// Small-signal force/torque sensitivities. K_A and K_C enter the dynamics
/// with a destabilizing sign: a widening gap weakens the pull.
struct LinearCoeffs {
    double K_A;  ///< gap stiffness [N/m]
    double K_B;  ///< current gain [N/A]
    double K_C;  ///< tilt stiffness [N m/rad]
    double K_D;  ///< tilt current gain [N m/A]
};

/// Result of linearizing the force law along the heave axis.
struct GapLinearization {
    double K_A;  ///< -d f/d z at the operating point [N/m]
    double K_B;  ///< +d f/d i at the operating point [N/A]
};

/// Geometry recovered from a published (K_A, K_B) pair.
struct Calibration {
    double N;     ///< winding count [turns]
    double l_pm;  ///< equivalent magnet air length [m]; negative values are
                  ///< physically suspect but the model stays evaluable
};

/// Total attractive force of all four poles [N]:
///   f = 2 mu0 S (E_pm + N i)^2 / (z + l_pm)^2
/// Throws std::domain_error when the effective gap z + l_pm is not positive.
double attractive_force(const MagnetParams& p, double z, double i);

/// Analytic partial derivatives of the force law at the operating point:
///   K_A = 4 mu0 S (E_pm + N i0)^2 / (z0 + l_pm)^3
///   K_B = 4 mu0 S N (E_pm + N i0) / (z0 + l_pm)^2
GapLinearization linearize_translation(const MagnetParams& p, const OperatingPoint& op);

/// Invert the linearization to recover (N, l_pm) from a published (K_A, K_B)
/// pair at a zero-current operating point:
///   l_pm = (4 mu0 S E_pm^2 / K_A)^(1/3) - z0
///   N    = K_B (z0 + l_pm)^2 / (4 mu0 S E_pm)
/// Requires K_A > 0, K_B > 0 and i_z0 == 0 (the closed-form branch).
Calibration calibrate(double K_A, double K_B, double E_pm, double S,
                      double mu0, double z0, double i_z0);

/// Coil current that makes the attractive force balance gravity at gap z:
///   i_eq = (sqrt(m g (z + l_pm)^2 / (2 mu0 S)) - E_pm) / N
double equilibrium_current(const MagnetParams& p, double z);

/// Gap-dependent coil inductance, 4-pole flux bookkeeping included:
///   L(z) = 4 mu0 N^2 S / (z + l_pm)
double gap_inductance(const MagnetParams& p, double z);

/// di/dt of the voltage-driven coil with a moving gap:
///   di/dt = [e - R i + 4 mu0 N S (N i + E_pm) z_dot / (z + l_pm)^2] / L(z)
double coil_current_derivative(const MagnetParams& p, double z, double z_dot,
                               double i, double e);

/// Tilt acceleration of one rotational axis: (K_C theta - K_D i_ax) / J.
double rotational_accel(const LinearCoeffs& lc, double J, double theta, double i_ax);

}  // namespace maglev::magnetics
