#!/usr/bin/env python3
"""Independent high-precision evaluation of the expected values frozen in tests/.

Everything here is transcribed directly from the closed-form displays into
mpmath at 40 digits, with no imports from the zerobound package, so the test
expectations do not share code with the implementation they check.  Run and
paste: python scripts/derive_oracle_values.py
"""

import mpmath as mp

mp.mp.dps = 40

B2 = mp.mpf(1) / 6
PI = mp.pi
LOG2 = mp.log(2)


def sec2(x):
    return 1 / mp.cos(x) ** 2


def show(label, value):
    print(f"{label} = {mp.nstr(value, 22)}")


# --- data ------------------------------------------------------------------

def newform_datum(n, kappa):
    return {
        "lams": [mp.mpf(1)],
        "mus": [mp.mpc((kappa - 1) / mp.mpf(2), 0)],
        "Q": mp.sqrt(n) / (2 * PI),
        "k": 0,
        "a1": mp.mpf(1),
        "a": mp.mpf(3),
        "b": mp.mpf(-4),
    }


def zeta_datum():
    return {
        "lams": [mp.mpf(1) / 2],
        "mus": [mp.mpc(0, 0)],
        "Q": 1 / mp.sqrt(PI),
        "k": 1,
        "a1": mp.mpf(1),
        "a": mp.mpf(3),
        "b": mp.mpf(-4),
    }


def degree(d):
    return 2 * mp.fsum(d["lams"])


def lambda_cap(d):
    return mp.fprod(l ** (2 * l) for l in d["lams"])


def lq2(d):
    return lambda_cap(d) * d["Q"] ** 2


def im_mu_cap(d):
    return mp.im(4 * mp.fsum(mp.mpf(1) / 2 - mu for mu in d["mus"]))


def threshold(d):
    return max(
        max(2 * abs(l + mp.conj(mu)) / l, 2 * abs(mu) / l)
        for l, mu in zip(d["lams"], d["mus"])
    )


def series_block(l, mu):
    lm = l + mp.conj(mu)
    return (
        abs(lm) ** 2
        + 2 * abs(lm * (lm - mp.mpf(1) / 2))
        + abs(mu) ** 2
        + 2 * abs(mu * (mu - mp.mpf(1) / 2))
    )


# --- per-formula oracles ----------------------------------------------------

def stirling_remainder_bound(z):
    return B2 / (2 * abs(z)) * sec2(mp.arg(z) / 2)


def remainder_pair_bound(d, j, sigma, t):
    h = threshold(d)
    l = d["lams"][j]
    return B2 / (2 * l * t) * (2 + sec2(mp.arg(mp.mpc(-abs(sigma), h)) / 2))


def ratio_error_bound(d, j, sigma, t):
    l, mu = d["lams"][j], d["mus"][j]
    return series_block(l, mu) / (l * t) + remainder_pair_bound(d, j, sigma, t)


def ratio_error_total(d, sigma, t):
    return mp.fsum(ratio_error_bound(d, j, sigma, t) for j in range(len(d["lams"])))


def ratio_error_sup(d, T):
    h = threshold(d)
    two_r = 2 * (d["a"] - d["b"])
    total = mp.mpf(0)
    for l, mu in zip(d["lams"], d["mus"]):
        ang = mp.arg(mp.mpc(-(d["a"] + two_r), h))
        total += (series_block(l, mu) + B2 / 2 * (2 + sec2(ang / 2))) / l
    return total / (T - two_r)


def reflection_log_main(d, sigma, t):
    dd = degree(d)
    s = mp.mpc(sigma, t)
    swing = mp.log(1 - mp.mpc(0, sigma) / t)
    weight = dd * (mp.mpf(1) / 2 - s) + mp.mpc(0, im_mu_cap(d) / 2)
    return (
        (mp.mpf(1) / 2 - sigma) * (dd * mp.log(t) + mp.log(lq2(d)))
        + dd * sigma
        + mp.re(swing * weight)
    )


def reflection_log_exact(d, sigma, t):
    """log|Delta| through loggamma directly (the genuinely independent route)."""
    s = mp.mpc(sigma, t)
    acc = (1 - 2 * sigma) * mp.log(d["Q"])
    for l, mu in zip(d["lams"], d["mus"]):
        acc += mp.re(mp.loggamma(l * (1 - s) + mp.conj(mu)) - mp.loggamma(l * s + mu))
    return acc


def envelope_left(d, sigma, t):
    dd = degree(d)
    s = mp.mpc(sigma, t)
    swing = mp.log(1 - mp.mpc(0, sigma) / t)
    weight = dd * (mp.mpf(1) / 2 - s) + mp.mpc(0, im_mu_cap(d) / 2)
    expo = dd * sigma + mp.re(swing * weight) + ratio_error_total(d, sigma, t)
    return (
        t ** (dd * (mp.mpf(1) / 2 - sigma))
        * d["a1"] * PI ** 2 / 6
        * abs(lq2(d)) ** (mp.mpf(1) / 2 - sigma)
        * mp.exp(expo)
    )


def envelope_mid(d, sigma, t, T):
    dd = degree(d)
    two_r = 2 * (d["a"] - d["b"])
    h = threshold(d)
    err = mp.fsum(
        (series_block(l, mu) + B2 / 2 * (2 + sec2(mp.arg(mp.mpc(-2, h)) / 2))) / l
        for l, mu in zip(d["lams"], d["mus"])
    ) / (T - two_r)
    base = 3 ** d["k"] * d["a1"] * PI ** 2 / 6
    left = base * abs(lq2(d)) ** mp.mpf("2.5") * mp.exp(
        mp.mpf("2.5") * mp.sqrt(5) * dd + abs(im_mu_cap(d)) + err
    )
    m1 = max(base, left)
    return 2 ** (mp.mpf("2.5") * dd + 1) * m1 * t ** (dd * (3 - sigma) / 2)


def ratio_error_slope(d):
    h = threshold(d)
    total = mp.mpf(0)
    for l, mu in zip(d["lams"], d["mus"]):
        blk = series_block(l, mu)
        blk += B2 / 4 * (2 + sec2(mp.arg(mp.mpc(-d["b"], h)) / 2))
        blk += B2 / 4 * (2 + sec2(mp.arg(mp.mpc(-d["b"] - 1, h)) / 2))
        total += 2 / l * blk
    return total


def log_term_slope(d):
    dd = degree(d)
    return (
        -mp.mpf(7) / 2 * dd * (2 * d["b"] + 1)
        + 2 * abs(mp.mpc(-dd * d["b"], im_mu_cap(d) / 2))
        + 2 * dd
    )


def log_integral_bound(d, T0, T):
    dd = degree(d)
    return (
        mp.log(T / T0) * (log_term_slope(d) + ratio_error_slope(d))
        + 3 * dd * (d["b"] ** 2 + d["b"]) / T0
    )


def disc_count_bound(d, T):
    dd = degree(d)
    a, b = d["a"], d["b"]
    two_r = 2 * (a - b)
    c = mp.mpf(1) / 2 - a + two_r
    im = im_mu_cap(d)
    lg = mp.log(abs(lq2(d)))
    edge = abs(mp.mpc(1, -(a + two_r) / (T - two_r)))
    reflect = (
        max(mp.mpf("2.5") * lg, c * lg)
        - 2 * dd
        + edge * dd * c
        + dd * (a + two_r)
        + (a + two_r) / (T - two_r) * abs(im / 2)
    )
    interp = (mp.mpf("2.5") * dd + 1) * LOG2 + d["k"] * mp.log(3) + max(
        mp.mpf(0), mp.mpf("2.5") * lg + mp.mpf("2.5") * mp.sqrt(5) * dd + abs(im)
    )
    return (
        dd * c * mp.log(2 * T)
        + mp.log(d["a1"] * PI ** 2 / 6)
        + ratio_error_sup(d, T)
        + max(reflect, interp)
    ) / LOG2


def trivial_window(d):
    b = d["b"]
    lmax, lmin = max(d["lams"]), min(d["lams"])
    rmin = min(mp.re(mu) for mu in d["mus"])
    rmax = max(mp.re(mu) for mu in d["mus"])
    f = len(d["lams"])
    return f * (abs((b + 1) * lmax + rmin) - b * lmax + (b + 1) * lmin - rmin + rmax)


def total_count_error(d, T0, T):
    dd = degree(d)
    r = d["a"] - d["b"]
    return (
        dd / (2 * PI) * T0 * mp.log(T0 / mp.e)
        + T0 / (2 * PI) * abs(mp.log(lq2(d)))
        + log_integral_bound(d, T0, T) / (2 * PI)
        + PI / (3 * LOG2)
        + (r - mp.mpf(1) / 2) * (disc_count_bound(d, T0) + disc_count_bound(d, T) + 4)
        + trivial_window(d)
    )


def branch_constants(d, T0):
    dd = degree(d)
    a, b = d["a"], d["b"]
    r = a - b
    two_r = 2 * r
    c = mp.mpf(1) / 2 - a + two_r
    im = im_mu_cap(d)
    lg = mp.log(abs(lq2(d)))
    h1_0 = max(mp.mpf("2.5") * lg, c * lg) + dd * (-mp.mpf(3) / 2 + 4 * r)
    h2_0 = dd * c * (a + two_r) + (a + two_r) * abs(im / 2)
    h1_1 = (mp.mpf("2.5") * dd + 1) * LOG2 + d["k"] * mp.log(3) + max(
        mp.mpf(0), mp.mpf("2.5") * lg + mp.mpf("2.5") * mp.sqrt(5) * dd + abs(im)
    )
    if h1_0 + h2_0 / (T0 - two_r) > h1_1:
        return 0, h1_0, h2_0
    return 1, h1_1, mp.mpf(0)


def window_coefficients(d, T0):
    dd = degree(d)
    a, b = d["a"], d["b"]
    r = a - b
    two_r = 2 * r
    c = mp.mpf(1) / 2 - a + two_r
    alpha, h1, h2 = branch_constants(d, T0)
    c1 = (log_term_slope(d) + ratio_error_slope(d)) / (2 * PI) + (r - mp.mpf(1) / 2) * dd * c / LOG2
    c2 = (
        dd / (2 * PI) * T0 * mp.log(T0 / mp.e)
        + T0 / (2 * PI) * abs(mp.log(lq2(d)))
        + PI / (3 * LOG2)
        + 4 * r - 2
        + 3 * dd * (b ** 2 + b) / (2 * PI * T0)
        + trivial_window(d)
        + log_integral_bound(d, T0, 1) / (2 * PI)
        + (r - mp.mpf(1) / 2) * (disc_count_bound(d, T0) + dd * c)
        + (r - mp.mpf(1) / 2) / LOG2 * (mp.log(d["a1"] * PI ** 2 / 6) + h1)
    )
    c3 = (r - mp.mpf(1) / 2) / LOG2 * T0 / (T0 - two_r) * (ratio_error_sup(d, two_r + 1) + h2)
    return c1, c2, c3


# --- printout ---------------------------------------------------------------

nf12 = newform_datum(1, 12)
zd = zeta_datum()

print("# tail sums (zeta(x) - 1)")
show("tail_sum(2, 1)", mp.zeta(2) - 1)
show("tail_sum(3, 1)", mp.zeta(3) - 1)
show("tail_sum(4, 1)", mp.zeta(4) - 1)

print("\n# stirling remainder majorant")
show("w1(-17+13i)", stirling_remainder_bound(mp.mpc(-17, 13)))

print("\n# newform N=1 kappa=12 gamma-ratio machinery")
show("pair_bound(sigma=-4, t=27)", remainder_pair_bound(nf12, 0, -4, 27))
show("ratio_bound(sigma=-2, t=27)", ratio_error_bound(nf12, 0, -2, 27))
show("ratio_sup(T=27)", ratio_error_sup(nf12, 27))
show("ratio_sup(T=15)", ratio_error_sup(nf12, 15))

print("\n# reflection log main terms")
show("zeta sigma=1/2 t=100", reflection_log_main(zd, mp.mpf(1) / 2, 100))
show("zeta exact  (loggamma)", reflection_log_exact(zd, mp.mpf(1) / 2, 100))
show("zeta ratio envelope", ratio_error_total(zd, mp.mpf(1) / 2, 100))
show("nf12 sigma=-2 t=30", reflection_log_main(nf12, -2, 30))
show("nf12 exact  (loggamma)", reflection_log_exact(nf12, -2, 30))
show("nf12 ratio envelope", ratio_error_total(nf12, -2, 30))

print("\n# envelope values, newform N=1 kappa=12")
show("left  sigma=-4 t=30 T=30", envelope_left(nf12, -4, 30))
show("mid   sigma=0  t=30 T=30", envelope_mid(nf12, 0, 30, 30))

print("\n# integrated errors and count bounds, newform N=1 kappa=12")
show("S(27,100)", mp.log(mp.mpf(100) / 27) * ratio_error_slope(nf12))
show("R1(27,100)", log_integral_bound(nf12, 27, 100))
show("R1(27,1)  (formal)", log_integral_bound(nf12, 27, 1))
show("R2(27)", disc_count_bound(nf12, 27))
show("I3(27)", PI * 7 * (disc_count_bound(nf12, 27) + 2))
show("R_total(27,100)", total_count_error(nf12, 27, 100))

print("\n# zeta-shaped pipeline at T0=16")
show("R2(16)", disc_count_bound(zd, 16))
show("R_total(16,100)", total_count_error(zd, 16, 100))
c1, c2, c3 = window_coefficients(zd, 16)
show("c1", c1)
show("c2(16)", c2)
show("c3(16)", c3)
show("main_term-like R_total(16,20)", total_count_error(zd, 16, 20))

print("\n# trivial-zero windows")
show("newform kappa=12", trivial_window(nf12))
show("zeta-shaped", trivial_window(zd))
