#ifndef OPTLINK_UNITS_HPP
#define OPTLINK_UNITS_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

// Unit-safe scalar types shared by every model in the library.
//
// Canonical internal units: watts for power, dB/km for attenuation,
// micrometers for wavelength, degrees for angles, kilometers for link
// length, nanoseconds for rise times. Accessors convert on demand.

namespace optlink {

inline constexpr double kPlanckJs = 6.62607015e-34;
inline constexpr double kSpeedOfLightMps = 2.99792458e8;

// Rounded deg/rad constant used verbatim as a coefficient by the FSO
// geometric formulas. Not interchangeable with the full-precision
// conversion below.
inline constexpr double kGeomDegPerRad = 57.295;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kRadPerDeg = kPi / 180.0;

namespace detail {

[[noreturn]] inline void fail_domain(const std::string& msg) {
    throw std::domain_error(msg);
}

inline void check_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << what << " must be > 0 (got " << v << ")";
        fail_domain(os.str());
    }
}

inline void check_non_negative(double v, const char* what) {
    if (!(v >= 0.0)) {
        std::ostringstream os;
        os << what << " must be >= 0 (got " << v << ")";
        fail_domain(os.str());
    }
}

}  // namespace detail

/// 10*log10(p / 1 mW). Requires p > 0.
inline double power_dbm_from_watts(double watts) {
    detail::check_positive(watts, "power in watts");
    return 10.0 * std::log10(watts / 1e-3);
}

inline double power_watts_from_dbm(double dbm) {
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

/// dB/km from a natural-log extinction coefficient in 1/km.
inline double attenuation_db_per_km(double sigma_per_km) {
    detail::check_non_negative(sigma_per_km, "extinction coefficient in 1/km");
    return sigma_per_km * 10.0 / std::log(10.0);
}

inline double attenuation_per_km(double db_per_km) {
    detail::check_non_negative(db_per_km, "attenuation in dB/km");
    return db_per_km * std::log(10.0) / 10.0;
}

// Optical power. Canonical storage in watts, never negative.
class PowerLevel {
public:
    static PowerLevel from_watts(double w) {
        detail::check_non_negative(w, "power in watts");
        return PowerLevel(w);
    }
    static PowerLevel from_milliwatts(double mw) { return from_watts(mw * 1e-3); }
    static PowerLevel from_microwatts(double uw) { return from_watts(uw * 1e-6); }
    static PowerLevel from_dbm(double dbm) { return PowerLevel(power_watts_from_dbm(dbm)); }

    double watts() const { return watts_; }
    double milliwatts() const { return watts_ * 1e3; }
    double dbm() const { return power_dbm_from_watts(watts_); }

private:
    explicit PowerLevel(double w) : watts_(w) {}
    double watts_;
};

// Channel attenuation coefficient. Canonical storage in dB/km; the
// natural-log form in 1/km is what exponential extinction terms use.
class AttenuationCoeff {
public:
    static AttenuationCoeff from_db_per_km(double db) {
        detail::check_non_negative(db, "attenuation in dB/km");
        return AttenuationCoeff(db);
    }
    static AttenuationCoeff from_per_km(double sigma) {
        return AttenuationCoeff(attenuation_db_per_km(sigma));
    }

    double db_per_km() const { return db_per_km_; }
    double per_km() const { return db_per_km_ * std::log(10.0) / 10.0; }

private:
    explicit AttenuationCoeff(double db) : db_per_km_(db) {}
    double db_per_km_;
};

// Optical wavelength, strictly positive. Canonical storage in micrometers.
class Wavelength {
public:
    static Wavelength from_um(double um) {
        detail::check_positive(um, "wavelength in um");
        return Wavelength(um);
    }
    static Wavelength from_nm(double nm) { return from_um(nm * 1e-3); }
    static Wavelength from_m(double m) { return from_um(m * 1e6); }

    double um() const { return um_; }
    double nm() const { return um_ * 1e3; }
    double m() const { return um_ * 1e-6; }

private:
    explicit Wavelength(double um) : um_(um) {}
    double um_;
};

// Plane angle stored in degrees. radians() is the full-precision
// conversion; formulas that embed the rounded coefficient use
// kGeomDegPerRad explicitly instead.
class AngleDeg {
public:
    static AngleDeg from_degrees(double deg) { return AngleDeg(deg); }
    static AngleDeg from_radians(double rad) { return AngleDeg(rad / kRadPerDeg); }

    double degrees() const { return deg_; }
    double radians() const { return deg_ * kRadPerDeg; }

private:
    explicit AngleDeg(double deg) : deg_(deg) {}
    double deg_;
};

/// Photon energy h*c/lambda in joules.
inline double photon_energy_j(Wavelength lambda) {
    return kPlanckJs * kSpeedOfLightMps / lambda.m();
}

}  // namespace optlink

#endif  // OPTLINK_UNITS_HPP
