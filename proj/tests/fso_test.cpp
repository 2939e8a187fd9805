#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "optlink/fso.hpp"

using namespace optlink;
using namespace optlink::fso;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// configuration of the worked link-budget example: narrow beam, 0.1 m
// aperture, nothing capped over the distances probed
FsoLinkConfig narrow_beam_config() {
    FsoLinkConfig cfg;
    cfg.divergence = AngleDeg::from_degrees(0.115);
    cfg.rx_aperture_area_m2 = 7.85e-3;
    return cfg;
}

const AttenuationCoeff kNoLoss = AttenuationCoeff::from_db_per_km(0.0);

}  // namespace

TEST_SUITE("fso") {

TEST_CASE("received power follows the inverse-square law without extinction") {
    const auto cfg = narrow_beam_config();
    for (double l : {0.3, 0.8, 2.0, 5.0}) {
        const double p1 = received_power(cfg, kNoLoss, l).watts();
        const double p2 = received_power(cfg, kNoLoss, 2.0 * l).watts();
        CHECK(rel_err(4.0 * p2, p1) < 1e-12);
    }
}

TEST_CASE("received power worked example") {
    const auto cfg = narrow_beam_config();
    CHECK(rel_err(received_power(cfg, kNoLoss, 1.0).watts(), 1.7004376181474480e-6) < 1e-12);
}

TEST_CASE("extinction dominates at high attenuation") {
    const auto cfg = narrow_beam_config();
    const auto alpha = AttenuationCoeff::from_db_per_km(1000.0);
    const double p = received_power(cfg, alpha, 1.0).watts();
    CHECK(p < 1e-40 * cfg.tx_power.watts());
}

TEST_CASE("received power rejects zero length") {
    CHECK_THROWS_AS(received_power(narrow_beam_config(), kNoLoss, 0.0), std::domain_error);
}

TEST_CASE("geometric factor caps at one") {
    FsoLinkConfig cfg = narrow_beam_config();
    cfg.divergence = AngleDeg::from_degrees(0.001);
    CHECK(capped_geometric_factor(cfg, 1e-4) == 1.0);
    CHECK(received_power(cfg, kNoLoss, 1e-4).watts() ==
          cfg.tx_power.watts() * cfg.optics_efficiency);
}

TEST_CASE("received power is monotone non-increasing in length and losses") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int c = 0; c < 20; ++c) {
        FsoLinkConfig cfg;
        cfg.divergence = AngleDeg::from_degrees(0.01 + 115.0 * u(rng));
        cfg.rx_aperture_area_m2 = 1e-3 + 0.2 * u(rng);
        cfg.optics_efficiency = 0.1 + 0.9 * u(rng);
        const auto alpha = AttenuationCoeff::from_db_per_km(20.0 * u(rng));
        double prev = received_power(cfg, alpha, 1e-3).watts();
        for (int i = 1; i < 100; ++i) {
            const double l = 1e-3 + 20.0 * i / 99.0;
            const double p = received_power(cfg, alpha, l).watts();
            CHECK(p <= prev);
            prev = p;
        }
        // more attenuation never helps
        const auto alpha2 = AttenuationCoeff::from_db_per_km(alpha.db_per_km() + 1.0);
        CHECK(received_power(cfg, alpha2, 5.0).watts() <=
              received_power(cfg, alpha, 5.0).watts());
    }
}

TEST_CASE("beam radius growth") {
    FsoLinkConfig cfg;
    cfg.tx_beam_waist_mm = 10.0;
    cfg.divergence = AngleDeg::from_degrees(0.1146);
    CHECK(beam_radius_mm(cfg, 0.0) == 10.0);
    CHECK(rel_err(beam_radius_mm(cfg, 1.0), 1010.0739947998844) < 1e-12);
    cfg.divergence = AngleDeg::from_degrees(0.0);
    for (double l : {0.0, 1.0, 50.0}) {
        CHECK(beam_radius_mm(cfg, l) == 10.0);
    }
}

TEST_CASE("ray loss values") {
    CHECK(std::abs(ray_loss_db(5.0, 1.0)) < 1e-20);
    CHECK(rel_err(ray_loss_db(1.0, 1.0), -0.63152262346916482) < 1e-12);
    CHECK(rel_err(ray_loss_db(0.5, 1.0), -4.0508910285453698) < 1e-12);
    CHECK(ray_loss_db(1e-5, 10.0) < -100.0);
    CHECK(ray_loss_db(1e-5, 10.0) < ray_loss_db(1e-3, 10.0));
    CHECK_THROWS_AS(ray_loss_db(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ray_loss_db(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ray_loss_db(1.0, 0.0), std::domain_error);
}

TEST_CASE("ray loss stays non-positive and vanishes for large lenses") {
    for (double ratio = 0.1; ratio <= 8.0; ratio += 0.1) {
        const double loss = ray_loss_db(ratio, 1.0);
        CHECK(loss <= 0.0);
    }
    CHECK(ray_loss_db(8.0, 1.0) > -1e-12);
}

TEST_CASE("geometric coupling ratio") {
    FsoLinkConfig cfg;
    cfg.tx_lens_diameter_mm = 100.0;
    cfg.rx_lens_diameter_mm = 100.0;
    const auto at0 = geometric_coupling_ratio(cfg, 0.0);
    CHECK(rel_err(at0.raw_ratio, 3282.7170250000000) < 1e-12);
    CHECK(at0.capped == 1.0);

    cfg.divergence = AngleDeg::from_degrees(115.0);
    const auto at1 = geometric_coupling_ratio(cfg, 1.0);
    CHECK(rel_err(at1.raw_ratio, 0.24395935084720571) < 1e-12);
    CHECK(at1.capped == at1.raw_ratio);

    double prev = geometric_coupling_ratio(cfg, 0.0).raw_ratio;
    for (int i = 1; i <= 40; ++i) {
        const double d = i * 0.25;
        const double r = geometric_coupling_ratio(cfg, d).raw_ratio;
        CHECK(r < prev);
        prev = r;
    }

    FsoLinkConfig degenerate;
    degenerate.tx_lens_diameter_mm = 0.0;
    CHECK_THROWS_AS(geometric_coupling_ratio(degenerate, 0.0), std::domain_error);
}

TEST_CASE("OSNR distance fit") {
    CHECK(osnr_from_distance_db(0.0) == 17.35);
    CHECK(rel_err(osnr_from_distance_db(1.0), 6.26) < 1e-12);
    CHECK(rel_err(osnr_from_distance_db(1.4), -2.11728) < 1e-12);
    CHECK(rel_err(osnr_from_distance_db(0.7), 10.20209) < 1e-12);
    CHECK_THROWS_AS(osnr_from_distance_db(2.0), std::domain_error);
    CHECK_THROWS_AS(osnr_from_distance_db(-0.1), std::domain_error);
    try {
        osnr_from_distance_db(2.0);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("1.4") != std::string::npos);
    }
}

TEST_CASE("OSNR wavelength fit") {
    CHECK(rel_err(osnr_from_wavelength_db(Wavelength::from_um(0.85)), 2.25614375) < 1e-12);
    CHECK(rel_err(osnr_from_wavelength_db(Wavelength::from_um(1.2)), 10.8892) < 1e-12);
    CHECK(rel_err(osnr_from_wavelength_db(Wavelength::from_um(1.55)), 28.64360625) < 1e-12);
    CHECK_THROWS_AS(osnr_from_wavelength_db(Wavelength::from_um(0.5)), std::domain_error);
    CHECK_THROWS_AS(osnr_from_wavelength_db(Wavelength::from_um(1.6)), std::domain_error);

    double prev = osnr_from_wavelength_db(Wavelength::from_um(0.85));
    for (int i = 1; i <= 100; ++i) {
        const double um = 0.85 + 0.7 * i / 100.0;
        const double v = osnr_from_wavelength_db(Wavelength::from_um(um));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("RF transmission fits") {
    CHECK(rf_transmission_db(0.0, false) == 10.82);
    CHECK(rf_transmission_db(0.0, true) == 3.09);
    CHECK(rel_err(rf_transmission_db(1.0, false), 11.96) < 1e-12);
    CHECK(rel_err(rf_transmission_db(1.0, true), 16.03) < 1e-12);
    CHECK(rel_err(rf_transmission_db(2.0, false), 2.56) < 1e-12);
    CHECK(rel_err(rf_transmission_db(2.0, true), 34.95) < 1e-12);
    CHECK_THROWS_AS(rf_transmission_db(2.5, false), std::domain_error);
    CHECK_THROWS_AS(rf_transmission_db(-0.1, true), std::domain_error);
}

TEST_CASE("amplified response dominates above its crossover") {
    // the two cubics cross near 0.657 GHz; above that the amplified
    // response stays on top through the end of the fit domain
    for (int i = 0; i <= 100; ++i) {
        const double f = 0.66 + (2.0 - 0.66) * i / 100.0;
        CHECK(rf_transmission_db(f, true) > rf_transmission_db(f, false));
    }
    CHECK(rf_transmission_db(0.5, true) < rf_transmission_db(0.5, false));
}

TEST_CASE("Shannon capacity") {
    CHECK(channel_capacity_bps(2.5e9, 0.0) == 2.5e9);
    CHECK(channel_capacity_bps(0.0, 20.0) == 0.0);
    CHECK(rel_err(channel_capacity_bps(1e9, 30.0), 9967226258.8359935) < 1e-12);
    CHECK_THROWS_AS(channel_capacity_bps(-1.0, 10.0), std::domain_error);
}

TEST_CASE("capacity against carrier frequency and distance") {
    CHECK(rel_err(capacity_vs_rf_bps(1.0, 1.0, false), 2385896529.4855748) < 1e-12);
    CHECK(rel_err(capacity_vs_rf_bps(1.0, 1.0, true), 3559426617.8602033) < 1e-12);
    CHECK(capacity_vs_rf_bps(1.0, 1.0, true) > capacity_vs_rf_bps(1.0, 1.0, false));

    for (bool amplified : {false, true}) {
        double prev = capacity_vs_rf_bps(0.1, 1.0, amplified);
        for (int i = 1; i <= 60; ++i) {
            const double f = 0.1 + (2.0 - 0.1) * i / 60.0;
            const double c = capacity_vs_rf_bps(f, 1.0, amplified);
            CHECK(c > prev);
            prev = c;
        }
        double prev_l = capacity_vs_rf_bps(1.0, 0.0, amplified);
        for (int i = 1; i <= 60; ++i) {
            const double l = 1.4 * i / 60.0;
            const double c = capacity_vs_rf_bps(1.0, l, amplified);
            CHECK(c < prev_l);
            prev_l = c;
        }
    }
    CHECK_THROWS_AS(capacity_vs_rf_bps(1.0, 2.0, false), std::domain_error);
}

TEST_CASE("max distance solves the budget against sensitivity") {
    FsoLinkConfig cfg = narrow_beam_config();

    SUBCASE("bisection matches the closed-form inverse-square root") {
        // sigma = 0: sensitivity = P eta * 57.295 A / (theta * L_m)^2
        const double analytic_km =
            std::sqrt(cfg.tx_power.watts() * cfg.optics_efficiency * kGeomDegPerRad *
                      cfg.rx_aperture_area_m2 / cfg.rx_sensitivity.watts()) /
            cfg.divergence.degrees() / 1000.0;
        const double solved = max_fso_distance_km(cfg, kNoLoss);
        CHECK(std::abs(solved - analytic_km) <= 1e-6);
    }

    SUBCASE("a link that can never close reports zero") {
        cfg.rx_sensitivity = PowerLevel::from_watts(1.0);  // above tx * eta
        CHECK(max_fso_distance_km(cfg, kNoLoss) == 0.0);
    }

    SUBCASE("heavy fog shortens the link") {
        atmosphere::WeatherCondition clear{50.0, 0.0, 0.0, 0.0};
        atmosphere::WeatherCondition fog{0.5, 0.0, 0.0, 0.0};
        const auto lambda0 = Wavelength::from_um(0.55);
        const double d_clear = max_fso_distance_km(cfg, clear, lambda0);
        const double d_fog = max_fso_distance_km(cfg, fog, lambda0);
        CHECK(d_fog < d_clear);
        CHECK(d_fog > 0.0);
    }
}

}  // TEST_SUITE
