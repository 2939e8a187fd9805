#include "optlink/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace optlink::config {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::domain_error("config: " + msg);
}

void check_known_keys(const ordered_json& obj, const std::string& section,
                      const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            fail("unknown key '" + (section.empty() ? key : section + "." + key) + "'");
        }
    }
}

double number_at(const ordered_json& obj, const std::string& section, const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        fail("'" + section + "." + key + "' must be a number");
    }
    return v.get<double>();
}

std::string string_at(const ordered_json& obj, const std::string& section,
                      const std::string& key) {
    const auto& v = obj.at(key);
    if (!v.is_string()) {
        fail("'" + section + "." + key + "' must be a string");
    }
    return v.get<std::string>();
}

void require_positive(double v, const std::string& path) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << "'" << path << "' must be > 0 (got " << v << ")";
        fail(os.str());
    }
}

void require_non_negative(double v, const std::string& path) {
    if (!(v >= 0.0)) {
        std::ostringstream os;
        os << "'" << path << "' must be >= 0 (got " << v << ")";
        fail(os.str());
    }
}

void merge_fso(fso::FsoLinkConfig& cfg, const ordered_json& obj) {
    static const std::set<std::string> known = {
        "tx_power_mw",        "wavelength_um",      "divergence_deg",
        "rx_aperture_area_m2", "tx_lens_diameter_mm", "rx_lens_diameter_mm",
        "rx_lens_radius_mm",  "tx_beam_waist_mm",   "rx_sensitivity_uw",
        "optics_efficiency"};
    check_known_keys(obj, "fso", known);

    const auto num = [&](const char* key, double& out, void (*check)(double, const std::string&)) {
        if (obj.contains(key)) {
            const double v = number_at(obj, "fso", key);
            check(v, std::string("fso.") + key);
            out = v;
        }
    };

    if (obj.contains("tx_power_mw")) {
        const double v = number_at(obj, "fso", "tx_power_mw");
        require_positive(v, "fso.tx_power_mw");
        cfg.tx_power = PowerLevel::from_milliwatts(v);
    }
    if (obj.contains("wavelength_um")) {
        const double v = number_at(obj, "fso", "wavelength_um");
        require_positive(v, "fso.wavelength_um");
        cfg.lambda = Wavelength::from_um(v);
    }
    if (obj.contains("divergence_deg")) {
        const double v = number_at(obj, "fso", "divergence_deg");
        require_non_negative(v, "fso.divergence_deg");
        cfg.divergence = AngleDeg::from_degrees(v);
    }
    num("rx_aperture_area_m2", cfg.rx_aperture_area_m2, require_positive);
    num("tx_lens_diameter_mm", cfg.tx_lens_diameter_mm, require_positive);
    num("rx_lens_diameter_mm", cfg.rx_lens_diameter_mm, require_positive);
    num("rx_lens_radius_mm", cfg.rx_lens_radius_mm, require_positive);
    num("tx_beam_waist_mm", cfg.tx_beam_waist_mm, require_positive);
    if (obj.contains("rx_sensitivity_uw")) {
        const double v = number_at(obj, "fso", "rx_sensitivity_uw");
        require_positive(v, "fso.rx_sensitivity_uw");
        cfg.rx_sensitivity = PowerLevel::from_microwatts(v);
    }
    if (obj.contains("optics_efficiency")) {
        const double v = number_at(obj, "fso", "optics_efficiency");
        if (!(v > 0.0 && v <= 1.0)) {
            std::ostringstream os;
            os << "'fso.optics_efficiency' must be in (0, 1] (got " << v << ")";
            fail(os.str());
        }
        cfg.optics_efficiency = v;
    }
}

void merge_fiber(fiber::FiberLinkConfig& cfg, const ordered_json& obj) {
    static const std::set<std::string> known = {
        "source_power_mw",     "transceiver",          "coupling_loss_db",
        "modulator_loss_db",   "fiber_loss_db_per_km", "wavelength_um",
        "photons_per_bit",     "bit_rate_gbps",        "tx_bandwidth_mhz",
        "rx_bandwidth_mhz",    "modal_bw_mhz_km",      "modal_q",
        "source_spectral_width_nm", "dispersion_ns_per_nm_km", "pmd_coeff_ps_sqrtkm",
        "coding",              "mode"};
    check_known_keys(obj, "fiber", known);

    // the transceiver preset first, so explicit keys override it no matter
    // where they appear in the document
    if (obj.contains("transceiver")) {
        const std::string v = string_at(obj, "fiber", "transceiver");
        if (v == "LD_APD") {
            fiber::apply_transceiver(cfg, {fiber::TransceiverKind::kLdApd});
        } else if (v == "LED_PIN") {
            fiber::apply_transceiver(cfg, {fiber::TransceiverKind::kLedPin});
        } else {
            fail("'fiber.transceiver' must be \"LED_PIN\" or \"LD_APD\" (got \"" + v + "\")");
        }
    }

    const auto num = [&](const char* key, double& out, void (*check)(double, const std::string&)) {
        if (obj.contains(key)) {
            const double v = number_at(obj, "fiber", key);
            check(v, std::string("fiber.") + key);
            out = v;
        }
    };

    if (obj.contains("source_power_mw")) {
        const double v = number_at(obj, "fiber", "source_power_mw");
        require_positive(v, "fiber.source_power_mw");
        cfg.source_power = PowerLevel::from_milliwatts(v);
    }
    num("coupling_loss_db", cfg.coupling_loss_db, require_non_negative);
    num("modulator_loss_db", cfg.modulator_loss_db, require_non_negative);
    num("fiber_loss_db_per_km", cfg.fiber_loss_db_per_km, require_positive);
    if (obj.contains("wavelength_um")) {
        const double v = number_at(obj, "fiber", "wavelength_um");
        require_positive(v, "fiber.wavelength_um");
        cfg.lambda = Wavelength::from_um(v);
    }
    num("photons_per_bit", cfg.photons_per_bit, require_positive);
    if (obj.contains("bit_rate_gbps")) {
        const double v = number_at(obj, "fiber", "bit_rate_gbps");
        require_positive(v, "fiber.bit_rate_gbps");
        cfg.bit_rate_bps = v * 1e9;
    }
    if (obj.contains("tx_bandwidth_mhz")) {
        const double v = number_at(obj, "fiber", "tx_bandwidth_mhz");
        require_positive(v, "fiber.tx_bandwidth_mhz");
        cfg.tx_bandwidth_mhz = v;
    }
    if (obj.contains("rx_bandwidth_mhz")) {
        const double v = number_at(obj, "fiber", "rx_bandwidth_mhz");
        require_positive(v, "fiber.rx_bandwidth_mhz");
        cfg.rx_bandwidth_mhz = v;
    }
    num("modal_bw_mhz_km", cfg.modal_bw_mhz_km, require_positive);
    if (obj.contains("modal_q")) {
        const double v = number_at(obj, "fiber", "modal_q");
        if (!(v > 0.5 && v < 1.0)) {
            std::ostringstream os;
            os << "'fiber.modal_q' must be in (0.5, 1) (got " << v << ")";
            fail(os.str());
        }
        cfg.modal_q = v;
    }
    num("source_spectral_width_nm", cfg.source_spectral_width_nm, require_non_negative);
    num("dispersion_ns_per_nm_km", cfg.dispersion_ns_per_nm_km, require_non_negative);
    num("pmd_coeff_ps_sqrtkm", cfg.pmd_coeff_ps_sqrtkm, require_non_negative);
    if (obj.contains("coding")) {
        const std::string v = string_at(obj, "fiber", "coding");
        if (v == "NRZ") {
            cfg.coding = fiber::LineCoding::kNrz;
        } else if (v == "RZ") {
            cfg.coding = fiber::LineCoding::kRz;
        } else {
            fail("'fiber.coding' must be \"NRZ\" or \"RZ\" (got \"" + v + "\")");
        }
    }
    if (obj.contains("mode")) {
        const std::string v = string_at(obj, "fiber", "mode");
        if (v == "single") {
            cfg.mode = fiber::FiberMode::kSingleMode;
        } else if (v == "multi") {
            cfg.mode = fiber::FiberMode::kMultiMode;
        } else {
            fail("'fiber.mode' must be \"single\" or \"multi\" (got \"" + v + "\")");
        }
    }
}

void merge_weather(atmosphere::WeatherCondition& w, Wavelength& lambda0,
                   const ordered_json& obj) {
    static const std::set<std::string> known = {"visibility_km", "rain_rate_mm_per_hr",
                                                "snow_rate_mm_per_hr", "cn2",
                                                "visibility_reference_um"};
    check_known_keys(obj, "weather", known);

    if (obj.contains("visibility_km")) {
        const double v = number_at(obj, "weather", "visibility_km");
        require_positive(v, "weather.visibility_km");
        w.visibility_km = v;
    }
    if (obj.contains("rain_rate_mm_per_hr")) {
        const double v = number_at(obj, "weather", "rain_rate_mm_per_hr");
        require_non_negative(v, "weather.rain_rate_mm_per_hr");
        w.rain_rate_mm_per_hr = v;
    }
    if (obj.contains("snow_rate_mm_per_hr")) {
        const double v = number_at(obj, "weather", "snow_rate_mm_per_hr");
        require_non_negative(v, "weather.snow_rate_mm_per_hr");
        w.snow_rate_mm_per_hr = v;
    }
    if (obj.contains("cn2")) {
        const double v = number_at(obj, "weather", "cn2");
        require_non_negative(v, "weather.cn2");
        w.cn2 = v;
    }
    if (obj.contains("visibility_reference_um")) {
        const double v = number_at(obj, "weather", "visibility_reference_um");
        require_positive(v, "weather.visibility_reference_um");
        lambda0 = Wavelength::from_um(v);
    }
}

}  // namespace

presets::PresetInputs default_config() { return presets::PresetInputs{}; }

presets::PresetInputs parse_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("parse failure: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("document root must be an object");
    }
    check_known_keys(doc, "", {"fso", "fiber", "weather"});

    presets::PresetInputs out = default_config();
    if (doc.contains("fso")) {
        if (!doc["fso"].is_object()) {
            fail("'fso' must be an object");
        }
        merge_fso(out.fso, doc["fso"]);
    }
    if (doc.contains("fiber")) {
        if (!doc["fiber"].is_object()) {
            fail("'fiber' must be an object");
        }
        merge_fiber(out.fiber, doc["fiber"]);
    }
    if (doc.contains("weather")) {
        if (!doc["weather"].is_object()) {
            fail("'weather' must be an object");
        }
        merge_weather(out.weather, out.lambda0, doc["weather"]);
    }
    fso::validate(out.fso);
    fiber::validate(out.fiber);
    atmosphere::validate(out.weather);
    return out;
}

presets::PresetInputs load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string to_json(const presets::PresetInputs& inputs) {
    ordered_json doc;
    auto& f = doc["fso"];
    f["tx_power_mw"] = inputs.fso.tx_power.milliwatts();
    f["wavelength_um"] = inputs.fso.lambda.um();
    f["divergence_deg"] = inputs.fso.divergence.degrees();
    f["rx_aperture_area_m2"] = inputs.fso.rx_aperture_area_m2;
    f["tx_lens_diameter_mm"] = inputs.fso.tx_lens_diameter_mm;
    f["rx_lens_diameter_mm"] = inputs.fso.rx_lens_diameter_mm;
    f["rx_lens_radius_mm"] = inputs.fso.rx_lens_radius_mm;
    f["tx_beam_waist_mm"] = inputs.fso.tx_beam_waist_mm;
    f["rx_sensitivity_uw"] = inputs.fso.rx_sensitivity.watts() * 1e6;
    f["optics_efficiency"] = inputs.fso.optics_efficiency;

    auto& b = doc["fiber"];
    b["source_power_mw"] = inputs.fiber.source_power.milliwatts();
    b["coupling_loss_db"] = inputs.fiber.coupling_loss_db;
    b["modulator_loss_db"] = inputs.fiber.modulator_loss_db;
    b["fiber_loss_db_per_km"] = inputs.fiber.fiber_loss_db_per_km;
    b["wavelength_um"] = inputs.fiber.lambda.um();
    b["photons_per_bit"] = inputs.fiber.photons_per_bit;
    b["bit_rate_gbps"] = inputs.fiber.bit_rate_bps / 1e9;
    b["tx_bandwidth_mhz"] = inputs.fiber.effective_tx_bandwidth_mhz();
    b["rx_bandwidth_mhz"] = inputs.fiber.effective_rx_bandwidth_mhz();
    b["modal_bw_mhz_km"] = inputs.fiber.modal_bw_mhz_km;
    b["modal_q"] = inputs.fiber.modal_q;
    b["source_spectral_width_nm"] = inputs.fiber.source_spectral_width_nm;
    b["dispersion_ns_per_nm_km"] = inputs.fiber.dispersion_ns_per_nm_km;
    b["pmd_coeff_ps_sqrtkm"] = inputs.fiber.pmd_coeff_ps_sqrtkm;
    b["coding"] = inputs.fiber.coding == fiber::LineCoding::kNrz ? "NRZ" : "RZ";
    b["mode"] = inputs.fiber.mode == fiber::FiberMode::kSingleMode ? "single" : "multi";

    auto& w = doc["weather"];
    w["visibility_km"] = inputs.weather.visibility_km;
    w["rain_rate_mm_per_hr"] = inputs.weather.rain_rate_mm_per_hr;
    w["snow_rate_mm_per_hr"] = inputs.weather.snow_rate_mm_per_hr;
    w["cn2"] = inputs.weather.cn2;
    w["visibility_reference_um"] = inputs.lambda0.um();

    return doc.dump(2) + "\n";
}

}  // namespace optlink::config
