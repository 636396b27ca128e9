"""Independent reference values for the auxiliary functions: g'(z) as the
Cauchy transform of the density and phi(z) = 1/2 - int log(z - s) psi(s) ds,
both by mpmath quadrature straight from the density formula (no closed
forms). Also D / D-tilde by direct mpmath Gamma evaluation."""
import mpmath as mp

mp.mp.dps = 40

def psi(s):
    s = abs(s)
    if s > 2:
        return 2 / s**3
    if s < mp.mpf('1e-6'):
        # the two band terms cancel near 0; Taylor form, exact to O(s^4)
        return (mp.mpf(1) / 3 + s * s / 40) / mp.pi
    return (4 * mp.atan(s / mp.sqrt(4 - s * s)) / s**3 - mp.sqrt(4 - s * s) / s**2) / mp.pi

def quad_sym(f):
    # psi is even: integrate f(s) + f(-s) over [0, inf)
    g = lambda s: (f(s) + f(-s)) * psi(s)
    return mp.quad(g, [0, 1, 2, 4, mp.inf])

def g_prime(z):
    return quad_sym(lambda s: 1 / (z - s))

def phi(z):
    return mp.mpf(1) / 2 - quad_sym(lambda s: mp.log(z - s))

for z in [mp.mpc(1, 2), mp.mpc('0.5', '0.3'), mp.mpc(3, '0.5'), mp.mpc('-1.5', '0.7'), mp.mpc('2.05', '0.02'), mp.mpc('0.3', '-0.4')]:
    gp = g_prime(z)
    ph = phi(z)
    print(f'{{"{mp.nstr(z.real, 10)}", "{mp.nstr(z.imag, 10)}", "{mp.nstr(gp.real, 30)}", "{mp.nstr(gp.imag, 30)}", "{mp.nstr(ph.real, 30)}", "{mp.nstr(ph.imag, 30)}"}},')

print("integral of psi:", mp.nstr(2 * mp.quad(psi, [0, 1, 2, mp.inf]), 30))

# D and D-tilde at z = 1 + i, n = 50, alpha = 1 by direct mpmath evaluation
n, a = 50, mp.mpf(1)
for z in [mp.mpc(1, 1), mp.mpc('0.8', '-0.3')]:
    u = n / z**2
    sgn = 1 if z.imag > 0 else -1
    log_mu = mp.log(n) - 2 * mp.log(z) + sgn * mp.pi * 1j
    lD = mp.loggamma(a - u) - u - mp.log(2 * mp.pi) / 2 + (u - a + mp.mpf(1) / 2) * log_mu
    lDt = mp.log(2 * mp.pi) / 2 - mp.loggamma(1 + u - a) - u + (u - a + mp.mpf(1) / 2) * (mp.log(n) - 2 * mp.log(z))
    D = mp.exp(lD)
    Dt = mp.exp(lDt)
    print("D", z, mp.nstr(D, 30), "Dt", mp.nstr(Dt, 30))
