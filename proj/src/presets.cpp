#include "optlink/presets.hpp"

#include <array>
#include <utility>

#include "optlink/atmosphere.hpp"

namespace optlink::presets {

namespace {

using sweep::SweepSpec;
using sweep::TrendExpectation;

TrendExpectation mono(std::string column, TrendExpectation::Direction dir, int fact,
                      std::string label) {
    TrendExpectation e;
    e.kind = TrendExpectation::Kind::kMonotonicInX;
    e.column = std::move(column);
    e.direction = dir;
    e.fact_id = fact;
    e.label = std::move(label);
    return e;
}

TrendExpectation order(std::string upper, std::string lower, int fact, std::string label) {
    TrendExpectation e;
    e.kind = TrendExpectation::Kind::kRowwiseOrder;
    e.column = std::move(upper);
    e.lower_column = std::move(lower);
    e.fact_id = fact;
    e.label = std::move(label);
    return e;
}

constexpr auto kIncreasing = TrendExpectation::Direction::kIncreasing;
constexpr auto kDecreasing = TrendExpectation::Direction::kDecreasing;

std::string inputs_digest(const PresetInputs& in) {
    const auto d = sweep::format_double;
    std::string s;
    s += "fso{" + d(in.fso.tx_power.watts()) + "," + d(in.fso.lambda.um()) + "," +
         d(in.fso.divergence.degrees()) + "," + d(in.fso.rx_aperture_area_m2) + "," +
         d(in.fso.tx_lens_diameter_mm) + "," + d(in.fso.rx_lens_diameter_mm) + "," +
         d(in.fso.rx_lens_radius_mm) + "," + d(in.fso.tx_beam_waist_mm) + "," +
         d(in.fso.rx_sensitivity.watts()) + "," + d(in.fso.optics_efficiency) + "}";
    s += "fiber{" + d(in.fiber.source_power.watts()) + "," + d(in.fiber.coupling_loss_db) + "," +
         d(in.fiber.modulator_loss_db) + "," + d(in.fiber.fiber_loss_db_per_km) + "," +
         d(in.fiber.lambda.um()) + "," + d(in.fiber.photons_per_bit) + "," +
         d(in.fiber.bit_rate_bps) + "," + d(in.fiber.effective_tx_bandwidth_mhz()) + "," +
         d(in.fiber.effective_rx_bandwidth_mhz()) + "," + d(in.fiber.modal_bw_mhz_km) + "," +
         d(in.fiber.modal_q) + "," + d(in.fiber.source_spectral_width_nm) + "," +
         d(in.fiber.dispersion_ns_per_nm_km) + "," + d(in.fiber.pmd_coeff_ps_sqrtkm) + "," +
         (in.fiber.coding == fiber::LineCoding::kNrz ? "nrz" : "rz") + "," +
         (in.fiber.mode == fiber::FiberMode::kSingleMode ? "single" : "multi") + "}";
    s += "weather{" + d(in.weather.visibility_km) + "," + d(in.weather.rain_rate_mm_per_hr) +
         "," + d(in.weather.snow_rate_mm_per_hr) + "," + d(in.weather.cn2) + "}";
    s += "lambda0{" + d(in.lambda0.um()) + "}";
    return sweep::digest_hex(s);
}

const std::array<double, 3> kWavelengthsUm = {0.85, 1.3, 1.55};

std::vector<std::string> wavelength_labels(const std::string& prefix) {
    std::vector<std::string> labels;
    for (double w : kWavelengthsUm) {
        labels.push_back(prefix + sweep::format_double(w) + "um");
    }
    return labels;
}

SweepSpec fig5(const PresetInputs& in) {
    SweepSpec s;
    s.preset_id = "fig5";
    s.x_name = "visibility_km";
    s.start = 0.5;
    s.stop = 50.0;
    s.steps = 101;
    s.family_labels = wavelength_labels("attenuation_db_per_km_");
    const Wavelength lambda0 = in.lambda0;
    s.eval = [lambda0](double v, std::size_t f) {
        return attenuation_db_per_km(atmosphere::fog_attenuation_per_km(
            v, Wavelength::from_um(kWavelengthsUm[f]), lambda0));
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(
            mono(col, kDecreasing, 1, "fog attenuation falls as visibility improves"));
    }
    s.expectations.push_back(order(s.family_labels[0], s.family_labels[1], 1,
                                   "shorter wavelength sees more fog attenuation"));
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[2], 1,
                                   "shorter wavelength sees more fog attenuation"));
    return s;
}

SweepSpec fig6(const PresetInputs&) {
    SweepSpec s;
    s.preset_id = "fig6";
    s.x_name = "beam_diameter_mm";
    s.start = 50.0;
    s.stop = 500.0;
    s.steps = 101;
    const std::array<double, 3> lens_mm = {50.0, 100.0, 200.0};
    for (double dia : lens_mm) {
        s.family_labels.push_back("ray_loss_db_lens_" + sweep::format_double(dia) + "mm");
    }
    s.eval = [lens_mm](double beam_dia, std::size_t f) {
        return fso::ray_loss_db(lens_mm[f] / 2.0, beam_dia / 2.0);
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(
            mono(col, kDecreasing, 2, "ray loss grows with received beam diameter"));
    }
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[0], 2,
                                   "larger lens captures more of the beam"));
    s.expectations.push_back(order(s.family_labels[2], s.family_labels[1], 2,
                                   "larger lens captures more of the beam"));
    return s;
}

SweepSpec fig7(const PresetInputs&) {
    SweepSpec s;
    s.preset_id = "fig7";
    s.x_name = "length_km";
    s.start = 0.0;
    s.stop = 1.4;
    s.steps = 101;
    s.family_labels = wavelength_labels("osnr_db_");
    // the distance fit is anchored at the top of the wavelength range; other
    // wavelengths shift it by the wavelength-fit delta
    s.eval = [](double l, std::size_t f) {
        const double anchor = fso::osnr_from_wavelength_db(Wavelength::from_um(1.55));
        return fso::osnr_from_distance_db(l) +
               fso::osnr_from_wavelength_db(Wavelength::from_um(kWavelengthsUm[f])) - anchor;
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(mono(col, kDecreasing, 3, "OSNR falls with link length"));
    }
    s.expectations.push_back(order(s.family_labels[2], s.family_labels[1], 3,
                                   "longer wavelength yields higher OSNR"));
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[0], 3,
                                   "longer wavelength yields higher OSNR"));
    return s;
}

SweepSpec fig8(const PresetInputs&) {
    SweepSpec s;
    s.preset_id = "fig8";
    s.x_name = "freq_ghz";
    // window where both fitted responses rise and the amplified one is on
    // top; outside it the cubic fits wiggle against each other
    s.start = 0.7;
    s.stop = 1.0;
    s.steps = 101;
    s.family_labels = {"transmission_db_unamplified", "transmission_db_amplified"};
    s.eval = [](double f, std::size_t fam) { return fso::rf_transmission_db(f, fam == 1); };
    s.expectations.push_back(mono(s.family_labels[0], kIncreasing, 4,
                                  "unamplified transmission rises with frequency"));
    s.expectations.push_back(mono(s.family_labels[1], kIncreasing, 4,
                                  "amplified transmission rises with frequency"));
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[0], 4,
                                   "amplification lifts the transmission response"));
    return s;
}

SweepSpec capacity_preset(const char* id, bool amplified) {
    SweepSpec s;
    s.preset_id = id;
    s.x_name = "freq_ghz";
    s.start = 0.1;
    s.stop = 2.0;
    s.steps = 101;
    const std::array<double, 3> lengths_km = {0.5, 1.0, 1.4};
    for (double l : lengths_km) {
        s.family_labels.push_back("capacity_gbps_" + sweep::format_double(l) + "km");
    }
    s.eval = [lengths_km, amplified](double f, std::size_t fam) {
        return fso::capacity_vs_rf_bps(f, lengths_km[fam], amplified) / 1e9;
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(
            mono(col, kIncreasing, 5, "capacity grows with carrier frequency"));
    }
    s.expectations.push_back(order(s.family_labels[0], s.family_labels[1], 5,
                                   "capacity falls with link distance"));
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[2], 5,
                                   "capacity falls with link distance"));
    return s;
}

SweepSpec fig11(const PresetInputs& in) {
    SweepSpec s;
    s.preset_id = "fig11";
    s.x_name = "bit_rate_gbps";
    // attenuation-limited regime for the LD/APD single-mode pairing; above
    // ~0.4 Gb/s the rise-time limit takes over and hides the wavelength term
    s.start = 0.05;
    s.stop = 0.35;
    s.steps = 101;
    s.family_labels = wavelength_labels("overall_limit_km_");
    fiber::FiberLinkConfig base = in.fiber;
    fiber::apply_transceiver(base, {fiber::TransceiverKind::kLdApd});
    base.mode = fiber::FiberMode::kSingleMode;
    base.coding = fiber::LineCoding::kNrz;
    s.eval = [base](double gbps, std::size_t f) {
        fiber::FiberLinkConfig cfg = base;
        cfg.bit_rate_bps = gbps * 1e9;
        cfg.lambda = Wavelength::from_um(kWavelengthsUm[f]);
        return fiber::fiber_link_limits(cfg).overall_km;
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(
            mono(col, kDecreasing, 6, "span limit falls as the bit rate grows"));
    }
    s.expectations.push_back(order(s.family_labels[2], s.family_labels[1], 6,
                                   "longer wavelength reaches farther"));
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[0], 6,
                                   "longer wavelength reaches farther"));
    return s;
}

SweepSpec attenuation_preset(const char* id, fiber::FiberMode mode, const PresetInputs& in) {
    SweepSpec s;
    s.preset_id = id;
    s.x_name = "bit_rate_gbps";
    s.start = 0.1;
    s.stop = 10.0;
    s.steps = 101;
    s.family_labels = {"attenuation_limit_km_ld_apd", "attenuation_limit_km_led_pin"};
    fiber::FiberLinkConfig apd = in.fiber;
    fiber::apply_transceiver(apd, {fiber::TransceiverKind::kLdApd});
    apd.mode = mode;
    fiber::FiberLinkConfig pin = in.fiber;
    fiber::apply_transceiver(pin, {fiber::TransceiverKind::kLedPin});
    pin.mode = mode;
    s.eval = [apd, pin](double gbps, std::size_t f) {
        fiber::FiberLinkConfig cfg = f == 0 ? apd : pin;
        cfg.bit_rate_bps = gbps * 1e9;
        return fiber::attenuation_limited_length(cfg).length_km;
    };
    for (const auto& col : s.family_labels) {
        s.expectations.push_back(
            mono(col, kDecreasing, 7, "span limit falls as the bit rate grows"));
    }
    s.expectations.push_back(order(s.family_labels[1], s.family_labels[0], 7,
                                   "lower coupler loss reaches farther at equal rate"));
    return s;
}

SweepSpec fig14(const PresetInputs& in) {
    SweepSpec s;
    s.preset_id = "fig14";
    s.x_name = "bit_rate_gbps";
    s.start = 0.1;
    s.stop = 2.5;
    s.steps = 101;
    s.family_labels = {"limit_km_nrz", "limit_km_rz"};
    fiber::FiberLinkConfig base = in.fiber;
    fiber::apply_transceiver(base, {fiber::TransceiverKind::kLdApd});
    base.mode = fiber::FiberMode::kSingleMode;
    s.eval = [base](double gbps, std::size_t f) {
        fiber::FiberLinkConfig cfg = base;
        cfg.bit_rate_bps = gbps * 1e9;
        // transceivers at twice the line rate, so the RZ budget has headroom
        cfg.tx_bandwidth_mhz = 2.0 * gbps * 1e3;
        cfg.rx_bandwidth_mhz = cfg.tx_bandwidth_mhz;
        cfg.coding = f == 0 ? fiber::LineCoding::kNrz : fiber::LineCoding::kRz;
        return fiber::rise_time_limited_length(cfg).length_km;
    };
    s.expectations.push_back(mono(s.family_labels[0], kDecreasing, 8,
                                  "NRZ dispersion limit falls as the bit rate grows"));
    s.expectations.push_back(mono(s.family_labels[1], kDecreasing, 8,
                                  "RZ dispersion limit falls as the bit rate grows"));
    s.expectations.push_back(
        order(s.family_labels[0], s.family_labels[1], 8, "NRZ tolerates more rise time than RZ"));
    return s;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
    for (FigureId id : all_figure_ids()) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::kFig5: return "fig5";
        case FigureId::kFig6: return "fig6";
        case FigureId::kFig7: return "fig7";
        case FigureId::kFig8: return "fig8";
        case FigureId::kFig9: return "fig9";
        case FigureId::kFig10: return "fig10";
        case FigureId::kFig11: return "fig11";
        case FigureId::kFig12: return "fig12";
        case FigureId::kFig13: return "fig13";
        case FigureId::kFig14: return "fig14";
    }
    return "unknown";
}

std::vector<FigureId> all_figure_ids() {
    return {FigureId::kFig5,  FigureId::kFig6,  FigureId::kFig7,  FigureId::kFig8,
            FigureId::kFig9,  FigureId::kFig10, FigureId::kFig11, FigureId::kFig12,
            FigureId::kFig13, FigureId::kFig14};
}

sweep::SweepSpec figure_preset(FigureId id, const PresetInputs& inputs) {
    sweep::SweepSpec s;
    switch (id) {
        case FigureId::kFig5: s = fig5(inputs); break;
        case FigureId::kFig6: s = fig6(inputs); break;
        case FigureId::kFig7: s = fig7(inputs); break;
        case FigureId::kFig8: s = fig8(inputs); break;
        case FigureId::kFig9: s = capacity_preset("fig9", false); break;
        case FigureId::kFig10: s = capacity_preset("fig10", true); break;
        case FigureId::kFig11: s = fig11(inputs); break;
        case FigureId::kFig12: s = attenuation_preset("fig12", fiber::FiberMode::kSingleMode, inputs); break;
        case FigureId::kFig13: s = attenuation_preset("fig13", fiber::FiberMode::kMultiMode, inputs); break;
        case FigureId::kFig14: s = fig14(inputs); break;
    }
    s.config_digest = inputs_digest(inputs);
    return s;
}

}  // namespace optlink::presets
