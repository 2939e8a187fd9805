#!/usr/bin/env python3
"""Independent high-precision oracle for the optlink test suite.

Re-derives every frozen expected value in the C++ tests with mpmath at 50
significant digits, and regenerates fit_points.csv (random in-domain probe
points for the fitted/empirical formulas, used by the acceptance suite).

The formulas here are written from the model definitions alone and must stay
independent of the C++ implementation.

Usage:
    python3 generate_goldens.py          # rewrites fit_points.csv, prints values
"""

import csv
import os
import random

from mpmath import mp, mpf, power, exp, log, log10, sqrt, tan, pi, cbrt

mp.dps = 50

HERE = os.path.dirname(os.path.abspath(__file__))

PLANCK = mpf("6.62607015e-34")
C_LIGHT = mpf("2.99792458e8")
DEG_COEFF = mpf("57.295")  # rounded deg/rad coefficient baked into the FSO geometry formulas


# --- atmospheric models ------------------------------------------------------

def size_distribution_exponent(v):
    v = mpf(v)
    return mpf("1.3") if v >= 6 else mpf("0.585") * cbrt(v)


def fog_sigma_per_km(v, lam_um, lam0_um):
    q = size_distribution_exponent(v)
    return (mpf("3.912") / mpf(v)) * power(mpf(lam_um) / mpf(lam0_um), -q)


def rain_db_per_km(rate):
    return mpf("1.076") * power(mpf(rate), mpf(2) / 3)


def snow_db_per_km(rate, lam_nm):
    a = mpf("5.42e-5") * mpf(lam_nm) + mpf("5.9458")
    return a * power(mpf(rate), mpf("1.38"))


def scintillation_variance(lam_nm, cn2, length_m):
    k = 2 * pi / (mpf(lam_nm) * mpf("1e-9"))  # optical wavenumber, 1/m
    return 4 * (mpf("23.17") * power(k, mpf(7) / 6)) * mpf(cn2) * power(mpf(length_m), mpf(11) / 6)


def db_per_km_from_per_km(sigma):
    return mpf(sigma) * 10 / log(10)


# --- fitted polynomials ------------------------------------------------------

def osnr_distance_db(l_km):
    l = mpf(l_km)
    return mpf("17.35") - mpf("12.27") * l + mpf("7.05") * l**2 - mpf("5.87") * l**3


def osnr_wavelength_db(lam_um):
    w = mpf(lam_um)
    return mpf("3.85") - mpf("10.73") * w + mpf("2.13") * w**2 + mpf("9.75") * w**3


def rf_unamplified_db(f):
    f = mpf(f)
    return mpf("10.82") - mpf("2.05") * f + mpf("7.42") * f**2 - mpf("4.23") * f**3


def rf_amplified_db(f):
    f = mpf(f)
    return mpf("3.09") + mpf("13.65") * f - mpf("2.56") * f**2 + mpf("1.85") * f**3


# --- helpers -----------------------------------------------------------------

def dbm_from_watts(w):
    return 10 * log10(mpf(w) / mpf("1e-3"))


def photon_energy_j(lam_um):
    return PLANCK * C_LIGHT / (mpf(lam_um) * mpf("1e-6"))


def capacity_bps(bw_hz, osnr_db):
    linear = power(10, mpf(osnr_db) / 10)
    return mpf(bw_hz) * log(1 + linear) / log(2)


def fmt(x):
    return mp.nstr(mpf(x), 17, strip_zeros=False)


def show(label, value):
    print(f"{label:58s} {fmt(value)}")


# --- fit_points.csv ----------------------------------------------------------

def write_fit_points():
    rng = random.Random(20240417)
    rows = []

    def pts(name, fn, ranges):
        for _ in range(20):
            xs = [rng.uniform(lo, hi) for lo, hi in ranges]
            rows.append([name] + [repr(x) for x in xs] + [fmt(fn(*[mpf(repr(x)) for x in xs]))])

    pts("fog_sigma_per_km", lambda v, w: fog_sigma_per_km(v, w, mpf("0.55")),
        [(0.5, 50.0), (0.85, 1.55)])
    pts("rain_db_per_km", rain_db_per_km, [(0.1, 50.0)])
    pts("snow_db_per_km", snow_db_per_km, [(0.1, 30.0), (850.0, 1550.0)])
    pts("osnr_distance_db", osnr_distance_db, [(0.0, 1.4)])
    pts("osnr_wavelength_db", osnr_wavelength_db, [(0.85, 1.55)])
    pts("rf_unamplified_db", rf_unamplified_db, [(0.0, 2.0)])
    pts("rf_amplified_db", rf_amplified_db, [(0.0, 2.0)])

    out = os.path.join(HERE, "fit_points.csv")
    with open(out, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "x1", "x2", "expected"])
        for r in rows:
            if len(r) == 3:
                r = [r[0], r[1], "", r[2]]
            w.writerow(r)
    print(f"wrote {out} ({len(rows)} rows)")


# --- frozen values -----------------------------------------------------------

def print_frozen():
    print("\n== unit conversions ==")
    show("dbm(2e-6 W)", dbm_from_watts("2e-6"))
    show("db_per_km(1 /km)", db_per_km_from_per_km(1))
    show("db_per_km(3.912 /km)", db_per_km_from_per_km("3.912"))
    show("photon_energy(1.55 um) J", photon_energy_j("1.55"))
    show("photon_energy(1.3 um) J", photon_energy_j("1.3"))

    print("\n== atmosphere ==")
    show("q(3)", size_distribution_exponent(3))
    show("q(6-) = 0.585*cbrt(6)", mpf("0.585") * cbrt(6))
    show("fog(V=1, 1.55/0.55) /km", fog_sigma_per_km(1, "1.55", "0.55"))
    show("fog(V=1, 1.55/0.55) dB/km", db_per_km_from_per_km(fog_sigma_per_km(1, "1.55", "0.55")))
    show("rain(8) dB/km", rain_db_per_km(8))
    show("snow(1, 1550nm) dB/km", snow_db_per_km(1, 1550))
    show("snow(2, 850nm) dB/km", snow_db_per_km(2, 850))
    var = scintillation_variance(1550, mpf("1e-14"), 1000)
    show("scint variance(1550nm, 1e-14, 1000m)", var)
    show("scint margin of that variance dB", 2 * sqrt(var))
    show("scint margin(14.9) dB", 2 * sqrt(mpf("14.9")))
    fog1 = db_per_km_from_per_km(fog_sigma_per_km(1, "1.55", "0.55"))
    total = fog1 + rain_db_per_km(8)
    show("path loss V=1,R=8,L=1: fog+rain dB", total)

    print("\n== wireless link ==")
    geo = DEG_COEFF * mpf("7.85e-3") / power(mpf("0.115") * 1000, 2)
    show("geom factor A=7.85e-3, th=0.115deg, L=1km", geo)
    show("received 100mW*0.5*geo W", mpf("0.1") * mpf("0.5") * geo)
    half = mpf("0.1146") / 2 * pi / 180
    show("beam radius w0=10,th=0.1146deg,L=1km mm", 10 + mpf("1e6") * tan(half))
    show("ray loss R=w dB", 10 * log10(1 - exp(-2)))
    show("ray loss R=w/2 dB", 10 * log10(1 - exp(mpf("-0.5"))))
    show("coupling raw (57.295*100/100)^2", power(DEG_COEFF, 2))
    show("coupling (5729.5/11600)^2", power(mpf("5729.5") / 11600, 2))
    show("osnr_distance(1) dB", osnr_distance_db(1))
    show("osnr_wavelength(0.85) dB", osnr_wavelength_db("0.85"))
    show("osnr_wavelength(1.3) dB", osnr_wavelength_db("1.3"))
    show("osnr_wavelength(1.55) dB", osnr_wavelength_db("1.55"))
    show("rf_unamp(1) dB", rf_unamplified_db(1))
    show("rf_amp(1) dB", rf_amplified_db(1))
    show("capacity(1GHz, 30dB) bps", capacity_bps(mpf("1e9"), 30))
    cap_un = capacity_bps(mpf("1e9"), osnr_distance_db(1))
    delta = rf_amplified_db(1) - rf_unamplified_db(1)
    cap_amp = capacity_bps(mpf("1e9"), osnr_distance_db(1) + delta)
    show("capacity_vs_rf f=1,L=1 unamp bps", cap_un)
    show("capacity_vs_rf f=1,L=1 amp bps", cap_amp)
    # where the amplified fit overtakes the unamplified fit
    from mpmath import findroot
    xover = findroot(lambda f: rf_amplified_db(f) - rf_unamplified_db(f), mpf("0.65"))
    show("rf amp-vs-unamp crossover GHz", xover)
    dunamp_root = findroot(lambda f: -mpf("2.05") + 2 * mpf("7.42") * f - 3 * mpf("4.23") * f**2, mpf("1.0"))
    show("rf unamp fit peak GHz", dunamp_root)

    print("\n== wire link ==")
    sens = photon_energy_j("1.3") * 1000 * mpf("1e9")
    show("sensitivity(1000, 1.3um, 1Gb/s) W", sens)
    show("sensitivity(1000, 1.3um, 1Gb/s) dBm", dbm_from_watts(sens))
    sens_apd = photon_energy_j("1.55") * 250 * mpf("1e9")
    att_l = (20 - 8 - dbm_from_watts(sens_apd)) / mpf("3.5")
    show("attenuation-limited LD/APD 1.55um 1Gb/s km", att_l)
    show("pmd limit 10Gb/s, 0.5 ps/sqrt(km) km", 1 / (100 * power(mpf("0.01"), 2) * power(mpf("0.5"), 2)))
    gamma = (mpf("1.55e-6") / (pi * C_LIGHT)) * power(mpf("1e10"), 2) * mpf("1e5") * (17 * mpf("1e-6"))
    show("dispersion factor 1.55um,10G,100km,17ps", gamma)
    show("modal bw 900/4^0.7 MHz", 900 / power(4, mpf("0.7")))
    show("t_mod 440/900 ns", mpf(440) / 900)
    tsys = sqrt(3 * power(mpf("3.5"), 2) + power(mpf(440) / 900, 2))
    show("t_sys sqrt(3*3.5^2 + (440/900)^2) ns", tsys)
    root = sqrt(power(mpf("0.7"), 2) - 2 * power(mpf("0.245"), 2)) / mpf("0.07")
    show("rise-time root 0.245/0.245/NRZ/D=0.07 km", root)

    print("\n== preset sanity (attenuation vs rise-time binding) ==")
    for b_gbps in ("0.05", "0.35"):
        for lam in ("0.85", "1.55"):
            s = photon_energy_j(lam) * 250 * mpf(b_gbps) * mpf("1e9")
            att = (20 - 8 - dbm_from_watts(s)) / mpf("3.5")
            rt = sqrt(power(mpf("0.7") / mpf(b_gbps), 2) - 2 * power(mpf("0.35") / mpf(b_gbps), 2)) / mpf("0.07")
            print(f"  B={b_gbps} Gb/s lam={lam}: attenuation {fmt(att)} km, rise-time {fmt(rt)} km")


if __name__ == "__main__":
    write_fit_points()
    print_frozen()
