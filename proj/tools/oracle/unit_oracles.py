# Prints the high-precision reference values frozen in the unit tests.
import mpmath as mp

mp.mp.dps = 30


def show(name, v):
    print("%-28s %s" % (name, mp.nstr(v, 20)))


show("theta(5)", mp.siegeltheta(5))
show("theta(20)", mp.siegeltheta(20))
show("theta(100)", mp.siegeltheta(100))
show("theta'(100)", mp.siegeltheta(100, derivative=1))
show("theta'(10)", mp.siegeltheta(10, derivative=1))
show("zeta(1/2)", mp.zeta(0.5))
show("zeta'(2)", mp.zeta(2, derivative=1))
show("zeta''(2)", mp.zeta(2, derivative=2))
for s in [mp.mpc(0.5, 20), mp.mpc(3, 4), mp.mpc(0.7, 1000), mp.mpc(-1.5, 2)]:
    v = mp.zeta(s)
    show("re zeta(%s)" % s, v.real)
    show("im zeta(%s)" % s, v.imag)
for d in (1, 2, 3):
    v = mp.zeta(mp.mpc(0.5, 20), derivative=d)
    show("re zeta^(%d)(1/2+20i)" % d, v.real)
    show("im zeta^(%d)(1/2+20i)" % d, v.imag)
for t in ["1000.5", "5000.25", "6000.75", "10000.1", "123456.7"]:
    show("Z(%s)" % t, mp.siegelz(mp.mpf(t)))
    show("Z'(%s)" % t, mp.siegelz(mp.mpf(t), derivative=1))
show("gram(0)", mp.grampoint(0))
show("gram(100)", mp.grampoint(100))
show("N(1000)", mp.nzeros(1000))
for x in (2, 15, 20, 40):
    show("I0(%d)" % x, mp.besseli(0, x))
for z in ("1.5", "0.7", "3.3", "4.25"):
    show("G(%s)" % z, mp.barnesg(mp.mpf(z)))
for k, p in ((0.5, 3), (1.5, 5), (2.5, 2)):
    v = (1 - mp.mpf(1) / p) ** (k * k) * mp.hyp2f1(k, k, 1, mp.mpf(1) / p)
    show("euler_factor(%s,%d)" % (k, p), v)
# weight_w(2, 1) with log log T = 10
logT = mp.e ** 10
X = logT / 100
show("w(2,1) loglogT=10", mp.e ** (-mp.log(2) / X) * (X - mp.log(2)) / X)
# E exp(2k(a cos + b cos 2))
f = lambda k, a, b: mp.quad(lambda p: mp.e ** (2 * k * (a * mp.cos(p) + b * mp.cos(2 * p))), [0, 2 * mp.pi]) / (2 * mp.pi)
show("spf(1,0.5,0.2)", f(1, 0.5, 0.2))
show("spf(2,0.9,0.4)", f(2, 0.9, 0.4))
# majorant slack at gamma_1, T = x = 100
g = mp.zetazero(1).imag
x = mp.mpf(100)
sig = 0.5 + 1 / mp.log(x)
acc = 0
for p in mp.mpf(2), 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97:
    lp = mp.log(p)
    acc += p ** (-sig) * mp.cos(g * lp) * (mp.log(x) - lp) / mp.log(x)
    if p <= mp.log(100) and p * p <= x:
        acc += 0.5 * (p * p) ** (-sig) * mp.cos(g * 2 * lp) * (mp.log(x) - 2 * lp) / mp.log(x)
lhs = mp.log(abs(mp.zeta(mp.mpc(0.5, g), derivative=1)))
show("prop1 slack gamma1", acc + mp.log(mp.log(100)) + 1 - lhs)
show("|zeta'(rho1)|^2", abs(mp.zeta(mp.mpc(0.5, g), derivative=1)) ** 2)
show("C2 closed form", 1 / (1440 * mp.pi ** 2))
