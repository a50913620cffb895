# Writes n, gamma_n, |zeta'(1/2 + i gamma_n)| for the first N zeros using mpmath.
import sys

import mpmath as mp

mp.mp.dps = 25
count = int(sys.argv[1]) if len(sys.argv) > 1 else 1600
out = sys.argv[2] if len(sys.argv) > 2 else "oracle_zeros.csv"
with open(out, "w") as f:
    for n in range(1, count + 1):
        g = mp.zetazero(n).imag
        zp = abs(mp.zeta(mp.mpc(0.5, g), derivative=1))
        f.write("%d,%s,%s\n" % (n, mp.nstr(g, 22), mp.nstr(zp, 18)))
