"""Reference values for the recurrence tests: exact rational arithmetic for
small degrees, mpmath at 80 digits for the rescaled monic values."""
from fractions import Fraction as F
import mpmath as mp

mp.mp.dps = 80

def f_exact(n, a, x):
    prev, cur = F(1), a * x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((k + a) * x * cur - prev) / (k + 1)
    return cur

for n, a, x in [(10, F(1), F(1, 3)), (25, F(5, 2), F(-3, 4)), (3, F(1, 2), F(1, 1))]:
    v = f_exact(n, a, x)
    print(n, a, x, mp.nstr(mp.mpf(v.numerator) / v.denominator, 50))

def f_mp(n, a, x):
    prev, cur = mp.mpc(1), a * x
    for k in range(1, n):
        prev, cur = cur, ((k + a) * x * cur - prev) / (k + 1)
    return cur

for n, a, z in [(100, mp.mpf(1), mp.mpc(1, 2)), (400, mp.mpf('2.5'), mp.mpc('2.05', '0.02')), (800, mp.mpf('0.5'), mp.mpc('0.05', '0.05'))]:
    x = z / mp.sqrt(n)
    lg = mp.loggamma(n + a) - mp.loggamma(a) - mp.loggamma(n + 1)
    v = mp.log(f_mp(n, a, x)) - lg
    print(n, a, z, mp.nstr(v.real, 50), mp.nstr(v.imag, 50))

# w_d(z) at a couple of points
for a, z in [(mp.mpf(1), mp.mpc('0.7', '0.2')), (mp.mpf('1.5'), mp.mpc('-0.9', '0.1'))]:
    u = 1 / z**2
    s = z if z.real > 0 else -z
    lu = -2 * mp.log(s)
    v = (u - 1 - a) * lu - u + a - mp.loggamma(u + 1 - a)
    print(a, z, mp.nstr(v.real, 50), mp.nstr(v.imag, 50))
