#ifndef OPTLINK_FSO_HPP
#define OPTLINK_FSO_HPP

#include "optlink/atmosphere.hpp"
#include "optlink/units.hpp"

// Wireless optical link computations: the range/link-budget equation,
// Gaussian-beam ray loss, lens-to-lens geometric coupling, fitted OSNR and
// RF-transmission response curves, Shannon capacity, and a bisection solver
// for the maximum closing distance.

namespace optlink::fso {

// Wireless link design parameters. Defaults are the proposed-link values:
// 100 mW transmitter, 1.55 um, 115 degree divergence, 0.1 m receiver
// aperture, 2 uW sensitivity, 50 % combined optics efficiency.
struct FsoLinkConfig {
    PowerLevel tx_power = PowerLevel::from_milliwatts(100.0);
    Wavelength lambda = Wavelength::from_um(1.55);
    AngleDeg divergence = AngleDeg::from_degrees(115.0);
    double rx_aperture_area_m2 = 7.853981633974483e-3;  // pi * (0.05 m)^2
    double tx_lens_diameter_mm = 100.0;
    double rx_lens_diameter_mm = 100.0;
    double rx_lens_radius_mm = 50.0;
    double tx_beam_waist_mm = 10.0;
    PowerLevel rx_sensitivity = PowerLevel::from_microwatts(2.0);
    double optics_efficiency = 0.5;
};

void validate(const FsoLinkConfig& cfg);

// Validated input interval of a fitted curve. Evaluation outside it is a
// domain error, not an extrapolation.
struct FitDomain {
    double low;
    double high;
    bool contains(double x) const { return x >= low && x <= high; }
};

inline constexpr FitDomain kOsnrDistanceDomainKm{0.0, 1.4};
inline constexpr FitDomain kOsnrWavelengthDomainUm{0.85, 1.55};
inline constexpr FitDomain kRfFitDomainGhz{0.0, 2.0};

/// Link-budget received power
///   P_rx = P_tx * eta * min(57.295 * A_rx / (theta_deg * L_m)^2, 1) * e^(-sigma*L)
/// with the extinction exponent taken over length_km using alpha's
/// natural-log form. The geometric factor is capped at 1 so the budget can
/// never show gain. length_km must be > 0.
PowerLevel received_power(const FsoLinkConfig& cfg, AttenuationCoeff alpha, double length_km);

/// The capped geometric factor of the link budget on its own,
/// min(57.295 * A_rx / (theta_deg * L_m)^2, 1). Lets callers compose the
/// budget in dB without re-deriving the geometry term.
double capped_geometric_factor(const FsoLinkConfig& cfg, double length_km);

/// Far-field beam radius in mm: waist + 1e6 * L_km * tan(theta/2).
double beam_radius_mm(const FsoLinkConfig& cfg, double length_km);

/// Gaussian-beam truncation loss at a circular lens,
/// 10*log10(1 - exp(-2 R^2 / w^2)) in dB. Always <= 0.
double ray_loss_db(double lens_radius_mm, double beam_radius_mm);

struct GeometricCoupling {
    double raw_ratio;  // (57.295 * D_R / (D_T + 100 * d * theta))^2 as defined
    double capped;     // min(raw_ratio, 1) for budget composition
};

/// Lens-to-lens area coupling ratio after beam divergence, with lens
/// diameters in mm, distance in km, divergence in degrees.
GeometricCoupling geometric_coupling_ratio(const FsoLinkConfig& cfg, double distance_km);

/// Fitted OSNR vs link length: 17.35 - 12.27 L + 7.05 L^2 - 5.87 L^3 dB,
/// valid on [0, 1.4] km.
double osnr_from_distance_db(double length_km);

/// Fitted OSNR vs wavelength: 3.85 - 10.73 w + 2.13 w^2 + 9.75 w^3 dB with
/// w in um, valid on [0.85, 1.55] um.
double osnr_from_wavelength_db(Wavelength lambda);

/// Fitted RF transmission response in dB over [0, 2] GHz.
/// Unamplified: 10.82 - 2.05 f + 7.42 f^2 - 4.23 f^3.
/// Amplified:    3.09 + 13.65 f - 2.56 f^2 + 1.85 f^3.
double rf_transmission_db(double freq_ghz, bool amplified);

/// Shannon capacity BW * log2(1 + osnr_linear) in bits/s; the OSNR argument
/// is in dB and converted to linear inside.
double channel_capacity_bps(double bandwidth_hz, double osnr_db);

/// Capacity of the radio-over-FSO channel at a given RF carrier and link
/// length: bandwidth = freq_ghz in Hz, effective OSNR = distance fit plus
/// the amplified-minus-unamplified RF response delta when amplified.
double capacity_vs_rf_bps(double freq_ghz, double length_km, bool amplified);

/// Received power with the weather-composed path loss applied on top of the
/// capped geometric factor.
PowerLevel received_power_with_weather(const FsoLinkConfig& cfg,
                                       const atmosphere::WeatherCondition& weather,
                                       Wavelength lambda0, double length_km);

// Bisection solutions of received power == sensitivity on [1e-4, 100] km to
// |dL| < 1e-6 km. Returns 0 when the link cannot close even at the bracket
// minimum, and the 100 km cap when it still closes there.
double max_fso_distance_km(const FsoLinkConfig& cfg, AttenuationCoeff alpha);
double max_fso_distance_km(const FsoLinkConfig& cfg, const atmosphere::WeatherCondition& weather,
                           Wavelength lambda0);

}  // namespace optlink::fso

#endif  // OPTLINK_FSO_HPP
