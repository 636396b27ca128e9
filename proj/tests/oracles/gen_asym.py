"""Reference values of the leading-order region formulas, computed with mpmath
straight from their closed forms: phi by quadrature of the density (no
closed form for the phase), the Gamma ratio D from its definition, the Airy
brackets from the direct (non-limit) expressions away from z = 2 and from
their limits at z = 2. Prints the complex log of each value (imaginary part
reduced to (-pi, pi])."""
import mpmath as mp

mp.mp.dps = 50


def psi(s):
    s = abs(s)
    if s > 2:
        return 2 / s**3
    if s < mp.mpf('1e-6'):
        return (mp.mpf(1) / 3 + s * s / 40) / mp.pi
    return (4 * mp.atan(s / mp.sqrt(4 - s * s)) / s**3 - mp.sqrt(4 - s * s) / s**2) / mp.pi


def phi(z):  # upper half-plane
    g = lambda s: (mp.log(z - s) + mp.log(z + s)) * psi(s)
    return mp.mpf(1) / 2 - mp.quad(g, [0, 1, 2, 4, mp.inf])


def w(z):
    return mp.sqrt(z - 2) * mp.sqrt(z + 2)


def pref(n, a, c):
    return mp.loggamma(a) + mp.mpf(n) / 2 - mp.log(c) - (mp.mpf(n) / 2 + a - mp.mpf(1) / 2) * mp.log(n)


def log_d(n, a, z):
    u = n / z**2
    log_mu = mp.log(n) - 2 * mp.log(z) + 1j * mp.pi
    return mp.loggamma(a - u) - u - mp.log(mp.sqrt(2 * mp.pi)) + (u - a + mp.mpf(1) / 2) * log_mu


def region_a(n, a, z):
    p = 2 * a - mp.mpf(1) / 2
    lv = mp.log((z + w(z)) / 2)
    quarter = -(mp.log(z - 2) + mp.log(z + 2)) / 4
    return pref(n, a, mp.sqrt(2 * mp.pi)) - log_d(n, a, z) + quarter + p * lv - n * phi(z) - 1j * a * mp.pi + 1j * mp.pi / 2


def region_b(n, a, z):
    p = 2 * a - mp.mpf(1) / 2
    v = (z + w(z)) / 2
    ph = phi(z)
    t1 = v**p * mp.exp(-n * ph - 1j * a * mp.pi + 1j * mp.pi / 2)
    t2 = v**(-p) * mp.exp(n * ph + 1j * a * mp.pi)
    return pref(n, a, mp.sqrt(2 * mp.pi)) - (mp.log(z - 2) + mp.log(z + 2)) / 4 + mp.log(t1 + t2)


def region_origin(n, a, z):
    p = 2 * a - mp.mpf(1) / 2
    v = (z + w(z)) / 2
    ph = phi(z)
    c = mp.loggamma(a) - mp.log(mp.sqrt(2 * mp.pi)) + (mp.mpf(1) / 2 - mp.mpf(n) / 2 - a) * mp.log(n) + mp.mpf(n) / 2
    rot = 1j * mp.pi * (mp.mpf(1) / 4 - a)
    s = mp.exp(rot - n * ph) * v**p + mp.exp(-rot + n * ph) * v**(-p)
    return c - (mp.log(2 - z) + mp.log(2 + z)) / 4 + mp.log(s)


def region_c(n, a, z):
    p = 2 * a - mp.mpf(1) / 2
    theta = a * mp.pi - n * mp.pi / z**2
    if z == 2:
        f = mp.mpf(0)
        ab = mp.sqrt(2) * p * mp.mpf(n)**(-mp.mpf(1) / 6)
        bb = mp.sqrt(2) * mp.mpf(n)**(mp.mpf(1) / 6)
    else:
        phit = phi(z) + 1j * mp.pi / z**2
        # f is analytic at 2 with f ~ n^(2/3) (z - 2): pick that cube-root branch
        f0 = (-mp.mpf(3) / 2 * n * phit)**(mp.mpf(2) / 3)
        guess = mp.mpf(n)**(mp.mpf(2) / 3) * (z - 2)
        f = min((f0 * mp.expjpi(mp.mpf(2 * k) / 3) for k in range(3)), key=lambda c: abs(c - guess))
        ww = w(z)
        v = (z + ww) / 2
        # even in w; w^2 / f is near 4 n^(-2/3), so principal roots are analytic
        q = ((z**2 - 4) / f)**(mp.mpf(1) / 4)
        ab = (v**p - v**(-p)) / ww * q
        bb = (v**p + v**(-p)) / q
    s = ab * (mp.airyai(f, 1) * mp.cos(theta) + mp.airybi(f, 1) * mp.sin(theta)) \
        + bb * (mp.airyai(f) * mp.cos(theta) + mp.airybi(f) * mp.sin(theta))
    return pref(n, a, mp.sqrt(2)) + mp.log(s)


def show(tag, n, a, z, v):
    print(f'{{Region::{tag}, {n}, "{mp.nstr(a, 5)}", "{mp.nstr(z.real, 10)}", "{mp.nstr(z.imag, 10)}", '
          f'"{mp.nstr(v.real, 35)}", "{mp.nstr(v.imag, 35)}"}},')


for n in [100, 400]:
    a = mp.mpf(1)
    show('A', n, a, mp.mpc(1, 2), region_a(n, a, mp.mpc(1, 2)))
    show('D', n, a, mp.mpc(4, '0.05'), region_a(n, a, mp.mpc(4, '0.05')))
    show('B', n, a, mp.mpc(1, '0.05'), region_b(n, a, mp.mpc(1, '0.05')))
    show('Origin', n, a, mp.mpc('0.05', '0.05'), region_origin(n, a, mp.mpc('0.05', '0.05')))
    show('C', n, a, mp.mpc('2.05', '0.02'), region_c(n, a, mp.mpc('2.05', '0.02')))
    show('C', n, a, mp.mpc(2, 0), region_c(n, a, mp.mpf(2)))
a = mp.mpf('2.5')
show('A', 60, a, mp.mpc('-0.7', '1.3'), region_a(60, a, mp.mpc('-0.7', '1.3')))
show('C', 60, a, mp.mpc('1.9', '0.1'), region_c(60, a, mp.mpc('1.9', '0.1')))
