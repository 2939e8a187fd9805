#ifndef OPTLINK_ATMOSPHERE_HPP
#define OPTLINK_ATMOSPHERE_HPP

#include "optlink/units.hpp"

// Atmospheric loss models for the free-space optical channel: Kruse fog
// attenuation, empirical rain and snow attenuation, turbulence-induced
// scintillation, and their composition into a per-path loss breakdown.

namespace optlink::atmosphere {

// One atmospheric state. visibility_km is the meteorological range at the
// reference wavelength; cn2 is the refractive-index structure constant in
// m^(-2/3).
struct WeatherCondition {
    double visibility_km = 50.0;
    double rain_rate_mm_per_hr = 0.0;
    double snow_rate_mm_per_hr = 0.0;
    double cn2 = 0.0;
};

void validate(const WeatherCondition& w);

// Per-mechanism losses in dB over the full path. total_db is the plain sum
// of the four components, never re-derived.
struct LossBreakdown {
    double fog_db = 0.0;
    double rain_db = 0.0;
    double snow_db = 0.0;
    double scintillation_db = 0.0;
    double total_db = 0.0;
};

/// Kruse size-distribution exponent q. 1.3 for visibility >= 6 km,
/// 0.585 * V^(1/3) below. Discontinuous at 6 km, as the model defines it.
double size_distribution_exponent(double visibility_km);

/// Kruse fog extinction in 1/km: (3.912/V) * (lambda/lambda0)^(-q).
double fog_attenuation_per_km(double visibility_km, Wavelength lambda, Wavelength lambda0);

/// Empirical rain attenuation 1.076 * R^(2/3) in dB/km, R in mm/h.
double rain_attenuation_db_per_km(double rate_mm_per_hr);

/// Empirical snow attenuation A * S^1.38 in dB/km with
/// A = 5.42e-5 * lambda_nm + 5.9458, S in mm/h.
double snow_attenuation_db_per_km(double rate_mm_per_hr, Wavelength lambda);

/// Rytov-form scintillation variance
/// 4 * 23.17 * k^(7/6) * Cn2 * L^(11/6), with the optical wavenumber
/// k = 2*pi/lambda in 1/m and the path length in meters.
double scintillation_variance(Wavelength lambda, double cn2, double path_length_m);

/// Fade margin in dB assigned to a scintillation variance: 2*sqrt(variance),
/// a two-sigma log-amplitude allowance.
double scintillation_margin_db(double variance);

/// Composes the four mechanisms over a path of length_km. Fog converts from
/// 1/km to dB/km before scaling by length; rain and snow are natively dB/km;
/// the scintillation margin depends on path length through the variance and
/// is not additionally scaled.
LossBreakdown total_path_loss(const WeatherCondition& weather, Wavelength lambda,
                              Wavelength lambda0, double length_km);

}  // namespace optlink::atmosphere

#endif  // OPTLINK_ATMOSPHERE_HPP
