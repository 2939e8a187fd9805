#ifndef OPTLINK_PRESETS_HPP
#define OPTLINK_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optlink/fiber.hpp"
#include "optlink/fso.hpp"
#include "optlink/sweep.hpp"

// Canned sweeps fig5..fig14, one per parametric study the library
// reproduces, each bundled with the trend expectations its curves must
// satisfy. Wireless presets (fig5-fig10) run off the FSO defaults, wire
// presets (fig11-fig14) off the fiber defaults, with the per-preset pins
// described below applied on top of whatever configuration is passed in.
//
//   fig5   fog attenuation vs visibility, per wavelength
//   fig6   ray loss vs received beam diameter, per lens diameter
//   fig7   OSNR vs link length, per wavelength
//   fig8   RF transmission vs carrier frequency, unamplified vs amplified
//   fig9   capacity vs carrier frequency, per link length (unamplified)
//   fig10  capacity vs carrier frequency, per link length (amplified)
//   fig11  overall fiber span limit vs bit rate, per wavelength
//          (LD/APD, single-mode; rates kept in the attenuation-limited
//          regime so the wavelength dependence stays visible)
//   fig12  attenuation-limited span vs bit rate, LD/APD vs LED/PIN
//          (single-mode)
//   fig13  same as fig12 on multi-mode fiber
//   fig14  rise-time-limited span vs bit rate, NRZ vs RZ (LD/APD,
//          single-mode, transceivers at twice the line rate so the RZ
//          budget is not transceiver-limited)

namespace optlink::presets {

enum class FigureId {
    kFig5,
    kFig6,
    kFig7,
    kFig8,
    kFig9,
    kFig10,
    kFig11,
    kFig12,
    kFig13,
    kFig14,
};

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string to_string(FigureId id);
std::vector<FigureId> all_figure_ids();

struct PresetInputs {
    fso::FsoLinkConfig fso;
    fiber::FiberLinkConfig fiber;
    atmosphere::WeatherCondition weather;
    Wavelength lambda0 = Wavelength::from_um(0.55);
};

sweep::SweepSpec figure_preset(FigureId id, const PresetInputs& inputs = {});

}  // namespace optlink::presets

#endif  // OPTLINK_PRESETS_HPP
