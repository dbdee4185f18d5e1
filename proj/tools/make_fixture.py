#!/usr/bin/env python3
"""Regenerate data/curated_points_v1.txt.

Stand-alone on purpose: its own multiplication table and Fraction arithmetic,
so the fixture does not depend on the library it is used to check.

Every point p = (x1, x2) of the open ball written here has
  N(1 - x1) = s^2 and 1 - N(x1) - N(x2) = r^2   with s, r rational,
so e^{t0} = r / s and the AN-coordinates of p are exact.
"""
import argparse
import random
from fractions import Fraction as F

TRIPLES = [(2, 6, 1), (3, 4, 1), (5, 7, 1)]


def table():
    t = {}

    def put(i, j, k, s):
        assert t.get((i, j), (k, s)) == (k, s), (i, j)
        t[(i, j)] = (k, s)

    for a, b, c in TRIPLES:
        for sh in range(7):
            A, B, C = [(v - 1 + sh) % 7 + 1 for v in (a, b, c)]
            for x, y, z in [(A, B, C), (B, C, A), (C, A, B)]:
                put(x, y, z, 1)
                put(y, x, z, -1)
    for i in range(8):
        put(0, i, i, 1)
        put(i, 0, i, 1)
    for i in range(1, 8):
        put(i, i, 0, -1)
    assert len(t) == 64
    return t


T = table()


def mul(x, y):
    r = [F(0)] * 8
    for i in range(8):
        for j in range(8):
            if x[i] and y[j]:
                k, s = T[(i, j)]
                r[k] += s * x[i] * y[j]
    return r


def norm(x):
    return sum(a * a for a in x)


def inv(x):
    n = norm(x)
    return [x[0] / n] + [-a / n for a in x[1:]]


def one():
    return [F(1)] + [F(0)] * 7


def unit_from(q):
    """(1 - q)(1 + q)^{-1} for imaginary q: a rational unit octonion."""
    a = one()
    b = one()
    for i in range(1, 8):
        a[i] -= q[i]
        b[i] += q[i]
    return mul(a, inv(b))


def small(rng, den=4):
    return F(rng.randint(-3, 3), rng.randint(1, den))


def imaginary(rng, scale):
    q = [F(0)] * 8
    for i in range(1, 8):
        if rng.random() < 0.6:
            q[i] = small(rng) * scale
    return q


def point(rng):
    # u = unit with Re(u) = mu > 0, 1 - x1 = s u.
    while True:
        q = imaginary(rng, F(1, 2))
        if norm(q) < 1:
            break
    u = unit_from(q)
    mu = u[0]
    k = F(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice([1, -1])
    s = 2 * mu / (1 + k * k)
    sigma = abs(s * k)  # r^2 + N(x2) = sigma^2
    t = F(rng.randint(-4, 4), 5) if rng.random() < 0.8 else F(0)
    rho = sigma * 2 * t / (1 + t * t)
    r = sigma * (1 - t * t) / (1 + t * t)
    v = unit_from(imaginary(rng, F(1)))
    x1 = [(1 if i == 0 else 0) - s * u[i] for i in range(8)]
    x2 = [rho * a for a in v]
    assert norm([(1 if i == 0 else 0) - x1[i] for i in range(8)]) == s * s
    assert 1 - norm(x1) - norm(x2) == r * r and r > 0
    return x1, x2


def fmt(x):
    terms = []
    for i, c in enumerate(x):
        if c == 0:
            continue
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        body = str(mag) if i == 0 else (f"e{i}" if mag == 1 else f"{mag} e{i}")
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20261016)
    ap.add_argument("--count", type=int, default=160)
    ap.add_argument("-o", "--output", default="data/curated_points_v1.txt")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    zero = [F(0)] * 8
    fixed = [
        (zero, zero),
        ([F(1, 3)] + [F(0)] * 7, [F(0), F(0), F(2, 3)] + [F(0)] * 5),
        ([F(3, 5)] + [F(0)] * 7, zero),
    ]
    pts = fixed + [point(rng) for _ in range(args.count - len(fixed))]
    with open(args.output, "w") as fh:
        fh.write(f"# curated exact points, seed {args.seed}; regenerate with tools/make_fixture.py\n")
        fh.write("# each line: (x1, x2) with rational e^t0 and |1 - x1| r\n")
        for x1, x2 in pts:
            fh.write(f"({fmt(x1)}, {fmt(x2)})\n")


if __name__ == "__main__":
    main()
