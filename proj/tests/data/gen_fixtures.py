"""Regenerates the explicit verifier fixtures in this directory.

Each fixture is {"e", "components": [{"class": [u, v], "terms": [[[a0, a1, i, j], "c"], ...]}]}
where a term is c * t0^a0 t1^a1 s0^i s1^j. Curves are built in the chart t0 = s1 = 1
(x = t1, y = s0) and converted.
"""
import itertools
import json
import os
import random

from sympy import Poly, Rational, factor_list, oo, resultant, symbols

x, y = symbols("x y")
HERE = os.path.dirname(os.path.abspath(__file__))


def to_terms(expr, u, v, e):
    terms = []
    for (a, b), c in sorted(Poly(expr, x, y).terms()):
        a0 = v + b * e - a
        assert 0 <= b <= u and a0 >= 0, (expr, a, b)
        terms.append([[a0, a, b, u - b], str(Rational(c))])
    return terms


def write(name, e, comps):
    doc = {"e": e, "components": [{"class": [u, v], "terms": to_terms(f, u, v, e)} for f, u, v in comps]}
    with open(os.path.join(HERE, name), "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def irreducible(f):
    fs = factor_list(f)[1]
    return len(fs) == 1 and fs[0][1] == 1


def splits(p):
    p = Poly(p, x)
    return all(Poly(f, x).degree() <= 1 for f, _ in factor_list(p.as_expr())[1]) and p.degree() >= 0


def mobius(a, b, c, d, s):
    if s is oo:
        return oo if c == 0 else Rational(a, 1) / c
    den = c * s + d
    return oo if den == 0 else (a * s + b) / den


def mobius_from(src, dst):
    """(a, b, c, d) mapping the three src points to the three dst points."""
    a, b, c, d = symbols("a b c d")
    from sympy import linsolve

    eqs = []
    for s, t in zip(src, dst):
        if s is oo and t is oo:
            eqs.append(c)
        elif s is oo:
            eqs.append(a - t * c)
        elif t is oo:
            eqs.append(c * s + d)
        else:
            eqs.append(a * s + b - t * (c * s + d))
    sol = linsolve(eqs, [a, b, c, d])
    (vec,) = sol
    free = set().union(*[v.free_symbols for v in vec])
    vec = [v.subs({f: 1 for f in free}) for v in vec]
    if vec[0] * vec[3] - vec[1] * vec[2] == 0:
        return None
    return tuple(vec)


def involution_triple(S):
    """S = [p1, p2, q1, q2, r1, r2]. Involutions swapping within two of the pairs; any two of
    them agree exactly on the pair they share."""
    p, q, r = S[0:2], S[2:4], S[4:6]
    out = []
    for a, b in ((p, q), (p, r), (q, r)):
        out.append(mobius_from([a[0], a[1], b[0]], [a[1], a[0], b[1]]))
    for m1, m2 in itertools.combinations(out, 2):
        assert sum(1 for s in S if mobius(*m1, s) == mobius(*m2, s)) == 2
    return out


def f0_fixtures():
    S = [Rational(0), oo, Rational(35, 2), Rational(-561, 14), Rational(14, 1235), Rational(2, 77)]
    A = (x + 1) * (x + 2) * (x + 3)
    B = x * (x - 1) * (x - 3)
    for s in S:
        assert splits(B) if s is oo else splits(A - s * B)
    Ay, By = A.subs(x, y), B.subs(x, y)
    comps = []
    for a, b, c, d in involution_triple(S):
        f = (Ay * (c * A + d * B) - By * (a * A + b * B)).expand()
        assert irreducible(f)
        comps.append((f, 3, 3))
    write("f0_33_cubed.json", 0, comps)

    S = [Rational(0), oo, Rational(1), Rational(2), Rational(3), Rational(4)]
    comps = [((y * (c * x + d) - (a * x + b)).expand(), 1, 1) for a, b, c, d in involution_triple(S)]
    write("f0_11_cubed.json", 0, comps)


def split_distinct(p, deg):
    p = Poly(p, x)
    if p.degree() != deg:
        return None
    roots = p.ground_roots()
    if len(roots) != deg or any(m != 1 for m in roots.values()):
        return None
    return sorted(roots)


def f2_sections(rng):
    """Three (1,0) curves a_i + g_i(x) y on F2 with split pairwise intersections."""
    while True:
        cs = []
        for _ in range(3):
            a = rng.choice([-3, -2, -1, 1, 2, 3])
            g = sum(rng.randint(-4, 4) * x**k for k in range(3))
            cs.append((a, g))
        pts = []
        ok = True
        for (a1, g1), (a2, g2) in itertools.combinations(cs, 2):
            r = split_distinct((a1 * g2 - a2 * g1).expand(), 2)
            if r is None:
                ok = False
                break
            pts += [(t, Rational(-a1) / g1.subs(x, t)) if g1.subs(x, t) != 0 else None for t in r]
        if ok and None not in pts and len(set(pts)) == 6:
            return cs


def f2_fixtures():
    rng = random.Random(7)
    cs = f2_sections(rng)
    write("f2_10_cubed.json", 2, [((a + g * y).expand(), 1, 0) for a, g in cs])

    # B1, B2 of class (1,0); B3 = P + Q y of class (1,3) through four chosen points of each.
    (a1, g1), (a2, g2) = cs[0], cs[1]
    pc = symbols("p0:4")
    qc = symbols("q0:6")
    P = sum(c * x**k for k, c in enumerate(pc))
    Q = sum(c * x**k for k, c in enumerate(qc))
    from sympy import linsolve

    avoid = set(Poly((a1 * g2 - a2 * g1).expand(), x).ground_roots())
    while True:
        xs = rng.sample([k for k in range(-8, 9) if k not in avoid], 8)
        eqs = [(a1 * Q - g1 * P).subs(x, t) for t in xs[:4]] + [(a2 * Q - g2 * P).subs(x, t) for t in xs[4:]]
        (vec,) = linsolve(eqs, list(pc) + list(qc))
        free = sorted(set().union(*[v.free_symbols for v in vec]), key=str)
        vals = {f: rng.randint(-3, 3) for f in free}
        vec = [v.subs(vals) for v in vec]
        Pv = sum(c * x**k for k, c in enumerate(vec[:4]))
        Qv = sum(c * x**k for k, c in enumerate(vec[4:]))
        if Poly(Pv, x).degree() != 3 or Poly(Qv, x).degree() != 5:
            continue
        if Poly(Pv, x).gcd(Poly(Qv, x)).degree() != 0 or Poly(Pv, x).sqf_part().degree() != 3:
            continue
        b3 = (Pv + Qv * y).expand()
        if not all(split_distinct((a * Qv - g * Pv).expand(), 5) for a, g in cs[:2]):
            continue
        comps = [((a1 + g1 * y).expand(), 1, 0), ((a2 + g2 * y).expand(), 1, 0), (b3, 1, 3)]
        xs_all = []
        for (f1, _, _), (f2, _, _) in itertools.combinations(comps, 2):
            r = Poly(resultant(f1, f2, y), x).ground_roots()
            xs_all += list(r.items())
        if len(xs_all) == 12 and all(m == 1 for _, m in xs_all) and len({r for r, _ in xs_all}) == 12:
            write("f2_10_10_13.json", 2, comps)
            return


def f1_fixture():
    # Class (1,1) on F1: P(x) + Q(x) y, deg P = 1, deg Q = 2. B1, B2 by search; B3 through
    # two points of each, which forces the third root of each cubic to be rational.
    from sympy import linsolve

    rng = random.Random(11)

    def random_section():
        P = rng.randint(-3, 3) + rng.choice([-2, -1, 1, 2]) * x
        Q = rng.randint(-3, 3) + rng.randint(-3, 3) * x + rng.choice([-2, -1, 1, 2]) * x**2
        return P, Q

    while True:
        (P1, Q1), (P2, Q2) = random_section(), random_section()
        if split_distinct((P1 * Q2 - P2 * Q1).expand(), 3) is not None:
            break
    avoid = set(split_distinct((P1 * Q2 - P2 * Q1).expand(), 3))
    pc, qc = symbols("p0:2"), symbols("q0:3")
    P = sum(c * x**k for k, c in enumerate(pc))
    Q = sum(c * x**k for k, c in enumerate(qc))
    while True:
        xs = rng.sample([k for k in range(-6, 7) if k not in avoid], 4)
        eqs = [(P * Q1 - P1 * Q).subs(x, t) for t in xs[:2]] + [(P * Q2 - P2 * Q).subs(x, t) for t in xs[2:]]
        (vec,) = linsolve(eqs, list(pc) + list(qc))
        free = sorted(set().union(*[v.free_symbols for v in vec]), key=str)
        vec = [v.subs({f: 1 for f in free}) for v in vec]
        P3 = vec[0] + vec[1] * x
        Q3 = vec[2] + vec[3] * x + vec[4] * x**2
        if Poly(P3, x).degree() != 1 or Poly(Q3, x).degree() != 2:
            continue
        if Poly(P3, x).gcd(Poly(Q3, x)).degree() != 0:
            continue
        r13 = split_distinct((P1 * Q3 - P3 * Q1).expand(), 3)
        r23 = split_distinct((P2 * Q3 - P3 * Q2).expand(), 3)
        if r13 is None or r23 is None or len(avoid | set(r13) | set(r23)) != 9:
            continue
        write("f1_11_cubed.json", 1, [((Pi + Qi * y).expand(), 1, 1) for Pi, Qi in ((P1, Q1), (P2, Q2), (P3, Q3))])
        return


def small_fixtures():
    write("f0_tangential.json", 0, [(y - x, 1, 1), (y + x * y - x, 1, 1), (y + x - 5, 1, 1)])
    write("f0_irrational.json", 0, [(y - x, 1, 1), (x * y - 2, 1, 1), (y + x - 7, 1, 1)])
    write("f0_shared.json", 0, [(y - x, 1, 1), (y - x, 1, 1), (y + x - 7, 1, 1)])


if __name__ == "__main__":
    f0_fixtures()
    f2_fixtures()
    f1_fixture()
    small_fixtures()
