#include "optlink/atmosphere.hpp"

#include <cmath>

namespace optlink::atmosphere {

void validate(const WeatherCondition& w) {
    detail::check_positive(w.visibility_km, "weather.visibility_km");
    detail::check_non_negative(w.rain_rate_mm_per_hr, "weather.rain_rate_mm_per_hr");
    detail::check_non_negative(w.snow_rate_mm_per_hr, "weather.snow_rate_mm_per_hr");
    detail::check_non_negative(w.cn2, "weather.cn2");
}

double size_distribution_exponent(double visibility_km) {
    detail::check_positive(visibility_km, "visibility in km");
    if (visibility_km >= 6.0) {
        return 1.3;
    }
    return 0.585 * std::pow(visibility_km, 1.0 / 3.0);
}

double fog_attenuation_per_km(double visibility_km, Wavelength lambda, Wavelength lambda0) {
    const double q = size_distribution_exponent(visibility_km);
    return (3.912 / visibility_km) * std::pow(lambda.um() / lambda0.um(), -q);
}

double rain_attenuation_db_per_km(double rate_mm_per_hr) {
    detail::check_non_negative(rate_mm_per_hr, "rain rate in mm/h");
    return 1.076 * std::pow(rate_mm_per_hr, 2.0 / 3.0);
}

double snow_attenuation_db_per_km(double rate_mm_per_hr, Wavelength lambda) {
    detail::check_non_negative(rate_mm_per_hr, "snow rate in mm/h");
    const double a = 5.42e-5 * lambda.nm() + 5.9458;
    return a * std::pow(rate_mm_per_hr, 1.38);
}

double scintillation_variance(Wavelength lambda, double cn2, double path_length_m) {
    detail::check_non_negative(cn2, "Cn2");
    detail::check_non_negative(path_length_m, "path length in m");
    const double k_per_m = 2.0 * kPi / lambda.m();
    return 4.0 * (23.17 * std::pow(k_per_m, 7.0 / 6.0)) * cn2 * std::pow(path_length_m, 11.0 / 6.0);
}

double scintillation_margin_db(double variance) {
    detail::check_non_negative(variance, "scintillation variance");
    return 2.0 * std::sqrt(variance);
}

LossBreakdown total_path_loss(const WeatherCondition& weather, Wavelength lambda,
                              Wavelength lambda0, double length_km) {
    detail::check_non_negative(length_km, "path length in km");
    LossBreakdown out;
    out.fog_db =
        attenuation_db_per_km(fog_attenuation_per_km(weather.visibility_km, lambda, lambda0)) *
        length_km;
    out.rain_db = rain_attenuation_db_per_km(weather.rain_rate_mm_per_hr) * length_km;
    out.snow_db = snow_attenuation_db_per_km(weather.snow_rate_mm_per_hr, lambda) * length_km;
    out.scintillation_db =
        scintillation_margin_db(scintillation_variance(lambda, weather.cn2, 1000.0 * length_km));
    out.total_db = out.fog_db + out.rain_db + out.snow_db + out.scintillation_db;
    return out;
}

}  // namespace optlink::atmosphere
