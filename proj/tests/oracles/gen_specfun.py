"""Reference values for the special-function unit tests, computed with mpmath
at 80 significant digits. The output is pasted into tests/test_specfun.cpp."""
import mpmath as mp

mp.mp.dps = 80

def s(x):
    return mp.nstr(x, 60, min_fixed=-5, max_fixed=5)

print("// loggamma(z): re, im")
for z in [mp.mpc(0.5, 0), mp.mpc(3.25, 1.5), mp.mpc(-2.5, 0.75), mp.mpc(0.1, -7.0),
          mp.mpc(-40.3, 2.0), mp.mpc(1e-3, 1e-3), mp.mpc(25, -60), mp.mpc(-3.5, 0)]:
    v = mp.loggamma(z)
    print(f'{{"{s(z.real)}", "{s(z.imag)}", "{s(v.real)}", "{s(v.imag)}"}},')

print("// Airy: z, Ai, Bi, Ai', Bi'")
for z in [mp.mpc(0, 0), mp.mpc(1.5, -0.5), mp.mpc(-4.0, 1.0), mp.mpc(10.0, 3.0),
          mp.mpc(-12.0, -0.5), mp.mpc(20.0, 15.0), mp.mpc(-25.0, 2.0), mp.mpc(3, 30)]:
    vals = [mp.airyai(z), mp.airybi(z), mp.airyai(z, 1), mp.airybi(z, 1)]
    parts = ", ".join(f'"{s(v.real)}", "{s(v.imag)}"' for v in vals)
    print(f'{{"{s(z.real)}", "{s(z.imag)}", {parts}}},')
