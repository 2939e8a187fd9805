#include "optlink/fso.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace optlink::fso {

namespace {

void check_fit_domain(double x, const FitDomain& dom, const char* what, const char* unit) {
    if (!dom.contains(x)) {
        std::ostringstream os;
        os << what << " " << x << " " << unit << " outside the fit domain [" << dom.low << ", "
           << dom.high << "] " << unit;
        detail::fail_domain(os.str());
    }
}

double solve_closing_distance(const std::function<double(double)>& received_w, double sens_w) {
    constexpr double kLo = 1e-4;
    constexpr double kHi = 100.0;
    constexpr double kTolKm = 1e-6;
    if (received_w(kLo) < sens_w) {
        return 0.0;
    }
    if (received_w(kHi) >= sens_w) {
        return kHi;
    }
    double lo = kLo;
    double hi = kHi;
    while (hi - lo > kTolKm) {
        const double mid = 0.5 * (lo + hi);
        if (received_w(mid) >= sens_w) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

void validate(const FsoLinkConfig& cfg) {
    detail::check_non_negative(cfg.divergence.degrees(), "fso.divergence_deg");
    detail::check_positive(cfg.rx_aperture_area_m2, "fso.rx_aperture_area_m2");
    detail::check_positive(cfg.tx_lens_diameter_mm, "fso.tx_lens_diameter_mm");
    detail::check_positive(cfg.rx_lens_diameter_mm, "fso.rx_lens_diameter_mm");
    detail::check_positive(cfg.rx_lens_radius_mm, "fso.rx_lens_radius_mm");
    detail::check_positive(cfg.tx_beam_waist_mm, "fso.tx_beam_waist_mm");
    if (!(cfg.optics_efficiency > 0.0 && cfg.optics_efficiency <= 1.0)) {
        std::ostringstream os;
        os << "fso.optics_efficiency must be in (0, 1] (got " << cfg.optics_efficiency << ")";
        detail::fail_domain(os.str());
    }
}

double capped_geometric_factor(const FsoLinkConfig& cfg, double length_km) {
    const double theta_l = cfg.divergence.degrees() * length_km * 1000.0;
    if (theta_l == 0.0) {
        return 1.0;  // collimated or zero-length limit, cap applies
    }
    return std::min(kGeomDegPerRad * cfg.rx_aperture_area_m2 / (theta_l * theta_l), 1.0);
}

PowerLevel received_power(const FsoLinkConfig& cfg, AttenuationCoeff alpha, double length_km) {
    detail::check_positive(length_km, "link length in km");
    const double geometric = capped_geometric_factor(cfg, length_km);
    const double extinction = std::exp(-alpha.per_km() * length_km);
    return PowerLevel::from_watts(cfg.tx_power.watts() * cfg.optics_efficiency * geometric *
                                  extinction);
}

double beam_radius_mm(const FsoLinkConfig& cfg, double length_km) {
    detail::check_non_negative(length_km, "link length in km");
    return cfg.tx_beam_waist_mm + 1e6 * length_km * std::tan(cfg.divergence.radians() / 2.0);
}

double ray_loss_db(double lens_radius_mm, double beam_radius_mm) {
    detail::check_positive(lens_radius_mm, "lens radius in mm");
    detail::check_positive(beam_radius_mm, "beam radius in mm");
    const double ratio = lens_radius_mm / beam_radius_mm;
    // log1p keeps the captured-fraction term accurate when it is near 1.
    return 10.0 * std::log1p(-std::exp(-2.0 * ratio * ratio)) / std::log(10.0);
}

GeometricCoupling geometric_coupling_ratio(const FsoLinkConfig& cfg, double distance_km) {
    detail::check_non_negative(distance_km, "distance in km");
    const double denom =
        cfg.tx_lens_diameter_mm + 100.0 * distance_km * cfg.divergence.degrees();
    if (denom == 0.0) {
        detail::fail_domain("geometric coupling denominator D_T + 100*d*theta is zero");
    }
    const double root = kGeomDegPerRad * cfg.rx_lens_diameter_mm / denom;
    GeometricCoupling out;
    out.raw_ratio = root * root;
    out.capped = std::min(out.raw_ratio, 1.0);
    return out;
}

double osnr_from_distance_db(double length_km) {
    check_fit_domain(length_km, kOsnrDistanceDomainKm, "link length", "km");
    const double l = length_km;
    return 17.35 + l * (-12.27 + l * (7.05 + l * -5.87));
}

double osnr_from_wavelength_db(Wavelength lambda) {
    check_fit_domain(lambda.um(), kOsnrWavelengthDomainUm, "wavelength", "um");
    const double w = lambda.um();
    return 3.85 + w * (-10.73 + w * (2.13 + w * 9.75));
}

double rf_transmission_db(double freq_ghz, bool amplified) {
    check_fit_domain(freq_ghz, kRfFitDomainGhz, "radio frequency", "GHz");
    const double f = freq_ghz;
    if (amplified) {
        return 3.09 + f * (13.65 + f * (-2.56 + f * 1.85));
    }
    return 10.82 + f * (-2.05 + f * (7.42 + f * -4.23));
}

double channel_capacity_bps(double bandwidth_hz, double osnr_db) {
    detail::check_non_negative(bandwidth_hz, "bandwidth in Hz");
    const double osnr_linear = std::pow(10.0, osnr_db / 10.0);
    return bandwidth_hz * std::log2(1.0 + osnr_linear);
}

double capacity_vs_rf_bps(double freq_ghz, double length_km, bool amplified) {
    double osnr_db = osnr_from_distance_db(length_km);
    if (amplified) {
        osnr_db += rf_transmission_db(freq_ghz, true) - rf_transmission_db(freq_ghz, false);
    } else {
        check_fit_domain(freq_ghz, kRfFitDomainGhz, "radio frequency", "GHz");
    }
    return channel_capacity_bps(freq_ghz * 1e9, osnr_db);
}

PowerLevel received_power_with_weather(const FsoLinkConfig& cfg,
                                       const atmosphere::WeatherCondition& weather,
                                       Wavelength lambda0, double length_km) {
    detail::check_positive(length_km, "link length in km");
    const double geometric = capped_geometric_factor(cfg, length_km);
    const auto loss = atmosphere::total_path_loss(weather, cfg.lambda, lambda0, length_km);
    return PowerLevel::from_watts(cfg.tx_power.watts() * cfg.optics_efficiency * geometric *
                                  std::pow(10.0, -loss.total_db / 10.0));
}

double max_fso_distance_km(const FsoLinkConfig& cfg, AttenuationCoeff alpha) {
    validate(cfg);
    return solve_closing_distance(
        [&](double l) { return received_power(cfg, alpha, l).watts(); },
        cfg.rx_sensitivity.watts());
}

double max_fso_distance_km(const FsoLinkConfig& cfg, const atmosphere::WeatherCondition& weather,
                           Wavelength lambda0) {
    validate(cfg);
    atmosphere::validate(weather);
    return solve_closing_distance(
        [&](double l) { return received_power_with_weather(cfg, weather, lambda0, l).watts(); },
        cfg.rx_sensitivity.watts());
}

}  // namespace optlink::fso
