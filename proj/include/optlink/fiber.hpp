#ifndef OPTLINK_FIBER_HPP
#define OPTLINK_FIBER_HPP

#include <optional>

#include "optlink/units.hpp"

// Digital fiber link limits: photon-budget receiver sensitivity, the
// attenuation-limited span, the PMD-limited span, the chromatic dispersion
// factor, and the rise-time budget with NRZ/RZ criteria.

namespace optlink::fiber {

enum class LineCoding { kNrz, kRz };
enum class FiberMode { kSingleMode, kMultiMode };
enum class TransceiverKind { kLedPin, kLdApd };

// Transmitter/receiver pairing. The kind implies the coupler loss, the
// source spectral width, and the photons-per-bit sensitivity figure
// (1000 for a PIN receiver, 250 for an APD, both at BER 1e-9).
struct TransceiverPair {
    TransceiverKind kind = TransceiverKind::kLedPin;

    double coupling_loss_db() const { return kind == TransceiverKind::kLdApd ? 8.0 : 1.5; }
    double spectral_width_nm() const { return kind == TransceiverKind::kLdApd ? 1.0 : 50.0; }
    double default_photons_per_bit() const {
        return kind == TransceiverKind::kLdApd ? 250.0 : 1000.0;
    }
};

// Wire link design parameters. Defaults are the proposed-link values with
// the LED/PIN pairing on multi-mode fiber: 100 mW source, 3.5 dB/km loss,
// 1.5 dB coupler, 900 MHz*km modal bandwidth with q = 0.7, 50 nm source
// width, 0.07 ns/(nm*km) material dispersion.
//
// tx/rx bandwidth fall back to the numeric bit rate expressed in MHz when
// not set, i.e. a transceiver matched to the line rate.
struct FiberLinkConfig {
    PowerLevel source_power = PowerLevel::from_milliwatts(100.0);
    double coupling_loss_db = 1.5;
    double modulator_loss_db = 0.0;
    double fiber_loss_db_per_km = 3.5;
    Wavelength lambda = Wavelength::from_um(1.3);
    double photons_per_bit = 1000.0;
    double bit_rate_bps = 1e9;
    std::optional<double> tx_bandwidth_mhz;
    std::optional<double> rx_bandwidth_mhz;
    double modal_bw_mhz_km = 900.0;
    double modal_q = 0.7;
    double source_spectral_width_nm = 50.0;
    double dispersion_ns_per_nm_km = 0.07;
    double pmd_coeff_ps_sqrtkm = 0.5;
    LineCoding coding = LineCoding::kNrz;
    FiberMode mode = FiberMode::kMultiMode;

    double effective_tx_bandwidth_mhz() const {
        return tx_bandwidth_mhz.value_or(bit_rate_bps / 1e6);
    }
    double effective_rx_bandwidth_mhz() const {
        return rx_bandwidth_mhz.value_or(bit_rate_bps / 1e6);
    }
};

void validate(const FiberLinkConfig& cfg);

/// Overwrites the pairing-implied fields (coupler loss, spectral width,
/// photons per bit) with the given transceiver's values.
void apply_transceiver(FiberLinkConfig& cfg, TransceiverPair pair);

/// Photon-budget receiver sensitivity h*nu * n0 * B0 in watts.
PowerLevel receiver_sensitivity(double photons_per_bit, Wavelength lambda, double bit_rate_bps);

struct AttenuationLimit {
    double length_km = 0.0;
    bool link_closes = true;  // false when the budget is negative at L = 0
};

/// Saturated power-budget span:
///   L = (P_s[dBm] - P_c - P_m - sensitivity[dBm]) / alpha.
/// Negative budgets clamp to zero with link_closes = false.
AttenuationLimit attenuation_limited_length(const FiberLinkConfig& cfg);

/// Differential group delay sqrt(L) * coeff in ps.
double pmd_delay_ps(double length_km, double coeff_ps_sqrtkm);

/// Span at which the PMD delay reaches a tenth of the bit period:
///   L = 1 / (100 * B0^2 * coeff^2), B0 in 1/ps.
double pmd_limited_length_km(double bit_rate_bps, double coeff_ps_sqrtkm);

/// Dimensionless-by-convention dispersion figure (lambda / (pi c)) * B^2 L D,
/// evaluated in SI units. Reported as a diagnostic only; span limiting from
/// dispersion is carried by the rise-time budget.
double chromatic_dispersion_factor(Wavelength lambda, double bit_rate_bps, double length_km,
                                   double dispersion_ps_per_nm_km);

/// Modal-dispersion bandwidth B0 / L^q in MHz. Accepts q on the closed
/// interval [0.5, 1].
double modal_bandwidth_mhz(double modal_bw_mhz_km, double length_km, double q);

struct RiseTimeComponents {
    double t_tx_ns = 0.0;
    double t_rx_ns = 0.0;
    double t_mod_ns = 0.0;
    double t_gvd_ns = 0.0;
};

/// Component rise times at a given span: 350/B_tx and 350/B_rx ns for the
/// first-order transceiver filters, 440 * L^q / B0 ns for modal dispersion
/// (zero on single-mode fiber), |D| * L * sigma_lambda ns for chromatic
/// dispersion.
RiseTimeComponents rise_time_components(const FiberLinkConfig& cfg, double length_km);

struct RiseTimeBudget {
    double t_tx_ns = 0.0;
    double t_rx_ns = 0.0;
    double t_mod_ns = 0.0;
    double t_gvd_ns = 0.0;
    double t_sys_ns = 0.0;
    double budget_ns = 0.0;
    bool passes = false;
};

/// Root-sum-square system rise time against the coding budget: 70 % of the
/// bit period for NRZ, 35 % for RZ.
RiseTimeBudget system_rise_time(const RiseTimeComponents& c, double bit_rate_bps,
                                LineCoding coding);

struct RiseTimeLimit {
    double length_km = 0.0;
    bool unbounded = false;  // no length-dependent term, or closes at the 1e4 km cap
};

/// Longest span whose system rise time still meets the coding budget, by
/// bisection on [0, 1e4] km to |dL| < 1e-6 km. Throws when the fixed
/// transceiver rise times alone exceed the budget.
RiseTimeLimit rise_time_limited_length(const FiberLinkConfig& cfg);

enum class LimitingFactor { kAttenuation, kPmd, kRiseTime };

struct FiberLimitsReport {
    double attenuation_limited_km = 0.0;
    double pmd_limited_km = 0.0;
    double rise_time_limited_km = 0.0;
    double overall_km = 0.0;
    LimitingFactor limiting_factor = LimitingFactor::kAttenuation;
    bool attenuation_closes = true;
    bool rise_time_unbounded = false;
};

/// All three span limits for one configuration; overall is their minimum and
/// limiting_factor names the argmin.
FiberLimitsReport fiber_link_limits(const FiberLinkConfig& cfg);

const char* to_string(LimitingFactor f);

}  // namespace optlink::fiber

#endif  // OPTLINK_FIBER_HPP
