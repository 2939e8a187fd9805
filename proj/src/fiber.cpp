#include "optlink/fiber.hpp"

#include <cmath>
#include <sstream>

namespace optlink::fiber {

void validate(const FiberLinkConfig& cfg) {
    detail::check_non_negative(cfg.coupling_loss_db, "fiber.coupling_loss_db");
    detail::check_non_negative(cfg.modulator_loss_db, "fiber.modulator_loss_db");
    detail::check_non_negative(cfg.fiber_loss_db_per_km, "fiber.fiber_loss_db_per_km");
    detail::check_positive(cfg.photons_per_bit, "fiber.photons_per_bit");
    detail::check_positive(cfg.bit_rate_bps, "fiber.bit_rate_bps");
    detail::check_positive(cfg.effective_tx_bandwidth_mhz(), "fiber.tx_bandwidth_mhz");
    detail::check_positive(cfg.effective_rx_bandwidth_mhz(), "fiber.rx_bandwidth_mhz");
    detail::check_positive(cfg.modal_bw_mhz_km, "fiber.modal_bw_mhz_km");
    detail::check_non_negative(cfg.source_spectral_width_nm, "fiber.source_spectral_width_nm");
    detail::check_non_negative(cfg.pmd_coeff_ps_sqrtkm, "fiber.pmd_coeff_ps_sqrtkm");
    if (!(cfg.modal_q > 0.5 && cfg.modal_q < 1.0)) {
        std::ostringstream os;
        os << "fiber.modal_q must be in (0.5, 1) (got " << cfg.modal_q << ")";
        detail::fail_domain(os.str());
    }
}

void apply_transceiver(FiberLinkConfig& cfg, TransceiverPair pair) {
    cfg.coupling_loss_db = pair.coupling_loss_db();
    cfg.source_spectral_width_nm = pair.spectral_width_nm();
    cfg.photons_per_bit = pair.default_photons_per_bit();
}

PowerLevel receiver_sensitivity(double photons_per_bit, Wavelength lambda, double bit_rate_bps) {
    detail::check_positive(photons_per_bit, "photons per bit");
    detail::check_non_negative(bit_rate_bps, "bit rate in bits/s");
    return PowerLevel::from_watts(photon_energy_j(lambda) * photons_per_bit * bit_rate_bps);
}

AttenuationLimit attenuation_limited_length(const FiberLinkConfig& cfg) {
    detail::check_positive(cfg.fiber_loss_db_per_km, "fiber loss in dB/km");
    const double sens_dbm =
        receiver_sensitivity(cfg.photons_per_bit, cfg.lambda, cfg.bit_rate_bps).dbm();
    const double budget_db =
        cfg.source_power.dbm() - cfg.coupling_loss_db - cfg.modulator_loss_db - sens_dbm;
    AttenuationLimit out;
    if (budget_db < 0.0) {
        out.length_km = 0.0;
        out.link_closes = false;
        return out;
    }
    out.length_km = budget_db / cfg.fiber_loss_db_per_km;
    out.link_closes = true;
    return out;
}

double pmd_delay_ps(double length_km, double coeff_ps_sqrtkm) {
    detail::check_non_negative(length_km, "span length in km");
    return std::sqrt(length_km) * coeff_ps_sqrtkm;
}

double pmd_limited_length_km(double bit_rate_bps, double coeff_ps_sqrtkm) {
    detail::check_positive(bit_rate_bps, "bit rate in bits/s");
    detail::check_positive(coeff_ps_sqrtkm, "PMD coefficient in ps/sqrt(km)");
    const double b_per_ps = bit_rate_bps * 1e-12;
    return 1.0 / (100.0 * b_per_ps * b_per_ps * coeff_ps_sqrtkm * coeff_ps_sqrtkm);
}

double chromatic_dispersion_factor(Wavelength lambda, double bit_rate_bps, double length_km,
                                   double dispersion_ps_per_nm_km) {
    detail::check_non_negative(bit_rate_bps, "bit rate in bits/s");
    detail::check_non_negative(length_km, "span length in km");
    detail::check_non_negative(dispersion_ps_per_nm_km, "dispersion in ps/(nm*km)");
    const double d_s_per_m2 = dispersion_ps_per_nm_km * 1e-6;  // ps/(nm*km) -> s/m^2
    return (lambda.m() / (kPi * kSpeedOfLightMps)) * bit_rate_bps * bit_rate_bps *
           (length_km * 1e3) * d_s_per_m2;
}

double modal_bandwidth_mhz(double modal_bw_mhz_km, double length_km, double q) {
    detail::check_positive(modal_bw_mhz_km, "modal bandwidth product in MHz*km");
    detail::check_positive(length_km, "span length in km");
    if (!(q >= 0.5 && q <= 1.0)) {
        std::ostringstream os;
        os << "modal equilibrium factor must be in [0.5, 1] (got " << q << ")";
        detail::fail_domain(os.str());
    }
    return modal_bw_mhz_km / std::pow(length_km, q);
}

RiseTimeComponents rise_time_components(const FiberLinkConfig& cfg, double length_km) {
    detail::check_non_negative(length_km, "span length in km");
    detail::check_positive(cfg.effective_tx_bandwidth_mhz(), "transmitter bandwidth in MHz");
    detail::check_positive(cfg.effective_rx_bandwidth_mhz(), "receiver bandwidth in MHz");
    RiseTimeComponents c;
    c.t_tx_ns = 350.0 / cfg.effective_tx_bandwidth_mhz();
    c.t_rx_ns = 350.0 / cfg.effective_rx_bandwidth_mhz();
    if (cfg.mode == FiberMode::kMultiMode) {
        detail::check_positive(cfg.modal_bw_mhz_km, "modal bandwidth product in MHz*km");
        c.t_mod_ns = 440.0 * std::pow(length_km, cfg.modal_q) / cfg.modal_bw_mhz_km;
    }
    c.t_gvd_ns =
        std::abs(cfg.dispersion_ns_per_nm_km) * length_km * cfg.source_spectral_width_nm;
    return c;
}

RiseTimeBudget system_rise_time(const RiseTimeComponents& c, double bit_rate_bps,
                                LineCoding coding) {
    detail::check_non_negative(c.t_tx_ns, "transmitter rise time");
    detail::check_non_negative(c.t_rx_ns, "receiver rise time");
    detail::check_non_negative(c.t_mod_ns, "modal rise time");
    detail::check_non_negative(c.t_gvd_ns, "chromatic rise time");
    detail::check_positive(bit_rate_bps, "bit rate in bits/s");
    RiseTimeBudget b;
    b.t_tx_ns = c.t_tx_ns;
    b.t_rx_ns = c.t_rx_ns;
    b.t_mod_ns = c.t_mod_ns;
    b.t_gvd_ns = c.t_gvd_ns;
    b.t_sys_ns = std::sqrt(c.t_tx_ns * c.t_tx_ns + c.t_rx_ns * c.t_rx_ns +
                           c.t_mod_ns * c.t_mod_ns + c.t_gvd_ns * c.t_gvd_ns);
    const double fraction = coding == LineCoding::kNrz ? 0.7 : 0.35;
    b.budget_ns = fraction / bit_rate_bps * 1e9;
    b.passes = b.t_sys_ns <= b.budget_ns;
    return b;
}

RiseTimeLimit rise_time_limited_length(const FiberLinkConfig& cfg) {
    constexpr double kCapKm = 1e4;
    constexpr double kTolKm = 1e-6;

    const auto t_sys_at = [&](double l) {
        return system_rise_time(rise_time_components(cfg, l), cfg.bit_rate_bps, cfg.coding)
            .t_sys_ns;
    };

    const auto fixed = system_rise_time(rise_time_components(cfg, 0.0), cfg.bit_rate_bps,
                                        cfg.coding);
    if (fixed.t_sys_ns > fixed.budget_ns) {
        std::ostringstream os;
        os << "transceiver-limited: fixed rise times " << fixed.t_sys_ns
           << " ns already exceed the " << fixed.budget_ns << " ns coding budget";
        detail::fail_domain(os.str());
    }

    const bool has_gvd_term =
        std::abs(cfg.dispersion_ns_per_nm_km) * cfg.source_spectral_width_nm > 0.0;
    const bool has_modal_term = cfg.mode == FiberMode::kMultiMode;
    RiseTimeLimit out;
    if (!has_gvd_term && !has_modal_term) {
        out.length_km = kCapKm;
        out.unbounded = true;
        return out;
    }
    if (t_sys_at(kCapKm) <= fixed.budget_ns) {
        out.length_km = kCapKm;
        out.unbounded = true;
        return out;
    }

    double lo = 0.0;
    double hi = kCapKm;
    while (hi - lo > kTolKm) {
        const double mid = 0.5 * (lo + hi);
        if (t_sys_at(mid) <= fixed.budget_ns) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.length_km = 0.5 * (lo + hi);
    out.unbounded = false;
    return out;
}

FiberLimitsReport fiber_link_limits(const FiberLinkConfig& cfg) {
    FiberLimitsReport r;
    const auto att = attenuation_limited_length(cfg);
    r.attenuation_limited_km = att.length_km;
    r.attenuation_closes = att.link_closes;
    r.pmd_limited_km = pmd_limited_length_km(cfg.bit_rate_bps, cfg.pmd_coeff_ps_sqrtkm);
    const auto rt = rise_time_limited_length(cfg);
    r.rise_time_limited_km = rt.length_km;
    r.rise_time_unbounded = rt.unbounded;

    r.overall_km = r.attenuation_limited_km;
    r.limiting_factor = LimitingFactor::kAttenuation;
    if (r.pmd_limited_km < r.overall_km) {
        r.overall_km = r.pmd_limited_km;
        r.limiting_factor = LimitingFactor::kPmd;
    }
    if (r.rise_time_limited_km < r.overall_km) {
        r.overall_km = r.rise_time_limited_km;
        r.limiting_factor = LimitingFactor::kRiseTime;
    }
    return r;
}

const char* to_string(LimitingFactor f) {
    switch (f) {
        case LimitingFactor::kAttenuation:
            return "attenuation";
        case LimitingFactor::kPmd:
            return "pmd";
        case LimitingFactor::kRiseTime:
            return "rise_time";
    }
    return "unknown";
}

}  // namespace optlink::fiber
