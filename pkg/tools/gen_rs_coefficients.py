"""Regenerate src/zcurve/_rs_coefficients.py.

The Riemann-Siegel correction functions C_0..C_4 are polynomials in the
derivatives of Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).  We take a
high-precision Taylor expansion of Psi about p = 1/2, differentiate the series
exactly and combine with Gabcke's coefficients.  Output is a power series in
u = p - 1/2 for each C_k, valid for p in [0, 1].

Run:  python tools/gen_rs_coefficients.py > src/zcurve/_rs_coefficients.py
"""
import mpmath as mp

mp.mp.dps = 80
ORDER = 90
CUTOFF = mp.mpf("1e-24")  # drop terms with |c_j| 0.5**j below this


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def deriv(c, k):
    out = list(c)
    for _ in range(k):
        out = [j * out[j] for j in range(1, len(out))]
    return out


def combine(*terms):
    n = max(len(c) for _, c in terms)
    acc = [mp.mpf(0)] * n
    for w, c in terms:
        for j, v in enumerate(c):
            acc[j] += w * v
    return acc


def main():
    c = mp.taylor(psi, mp.mpf(1) / 2, ORDER)
    d = lambda k: deriv(c, k)
    pi = mp.pi
    tables = [
        combine((1, d(0))),
        combine((-1 / (96 * pi**2), d(3))),
        combine((1 / (64 * pi**2), d(2)), (1 / (18432 * pi**4), d(6))),
        combine(
            (-1 / (64 * pi**2), d(1)),
            (-1 / (3840 * pi**4), d(5)),
            (-1 / (5308416 * pi**6), d(9)),
        ),
        combine(
            (1 / (128 * pi**2), d(0)),
            (mp.mpf(19) / (24576 * pi**4), d(4)),
            (mp.mpf(11) / (5898240 * pi**6), d(8)),
            (1 / (2038431744 * pi**8), d(12)),
        ),
    ]
    print('"""Power-series coefficients of the Riemann-Siegel correction terms.')
    print()
    print("Generated by tools/gen_rs_coefficients.py; do not edit by hand.")
    print("C_COEFFS[k][j] is the coefficient of (p - 1/2)**j in C_k(p).")
    print('"""')
    print()
    print("C_COEFFS = (")
    for table in tables:
        keep = [v for v in table]
        while keep and abs(keep[-1]) * mp.mpf(0.5) ** (len(keep) - 1) < CUTOFF:
            keep.pop()
        print("    (")
        for v in keep:
            print(f"        {float(v)!r},")
        print("    ),")
    print(")")


if __name__ == "__main__":
    main()
