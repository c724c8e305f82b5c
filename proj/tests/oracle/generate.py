"""Independent oracle for the frozen values in tests/oracle_values.hpp.

Everything here is rebuilt from the explicit generator formulas with mpmath
at 40 digits, without reusing any of the C++ tables: Bowen-Series pieces are
found by searching for the side pairing of each polygon edge, the higher
Bowen-Series map is evaluated pointwise from its defining rule, and
transition matrices come from dense sampling.

Run:  python3 tests/oracle/generate.py
"""

import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def gen_Gd(d, j):
    c = mp.sec(PI / (2 * d)) * mp.expj(PI * (2 * j - 1) / (2 * d))
    r = mp.tan(PI / (2 * d))
    alpha = 1j * mp.conj(c) / r
    beta = -1j / r
    return (mp.mpc(alpha), mp.mpc(beta))


def inv(m):
    a, b = m
    return (mp.conj(a), -b)


def mul(m1, m2):
    a1, b1 = m1
    a2, b2 = m2
    return (a1 * a2 + b1 * mp.conj(b2), a1 * b2 + b1 * mp.conj(a2))


def act(m, z):
    a, b = m
    return (a * z + b) / (mp.conj(b) * z + mp.conj(a))


def turns(z):
    t = mp.arg(z) / (2 * PI)
    return t - mp.floor(t)


def pt(t):
    return mp.expj(2 * PI * t)


def trace(m):
    a, b = m
    det = abs(a) ** 2 - abs(b) ** 2
    return 2 * mp.re(a) / mp.sqrt(det)


def circ(a, b):
    d = (a - b) % 1
    return min(d, 1 - d)


def letters(d):
    gens = [gen_Gd(d, j) for j in range(1, d + 1)]
    out = []
    for j, g in enumerate(gens, start=1):
        out.append((j, g))
        out.append((-j, inv(g)))
    return out


def bowen_series(d):
    """Edge i joins vertices i/(2d), (i+1)/(2d). Its piece is the letter that
    maps the edge onto another edge with reversed orientation and sends the
    arc outward (so the arc is expanded)."""
    n = 2 * d
    verts = [mp.mpf(v) / n for v in range(n)]
    pieces = []
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        found = None
        for lab, g in letters(d):
            ia = [k for k in range(n) if circ(turns(act(g, pt(a))), verts[k]) < 1e-25]
            ib = [k for k in range(n) if circ(turns(act(g, pt(b))), verts[k]) < 1e-25]
            if not ia or not ib:
                continue
            # expanding on the arc: derivative at the midpoint > 1
            hi = verts[i + 1] if i + 1 < n else mp.mpf(1)
            mid = pt(a + (hi - a) / 2)
            al, be = g
            der = 1 / abs(mp.conj(be) * mid + mp.conj(al)) ** 2
            if der > 1:
                found = (lab, g)
                break
        assert found is not None, (d, i)
        pieces.append(found)
    return verts, pieces


def piecewise(breaks, pieces):
    def f(t):
        t = t % 1
        k = max(i for i in range(len(breaks)) if breaks[i] <= t)
        return turns(act(pieces[k][1], pt(t))), pieces[k]
    return f


def sample_matrix(breaks, f, per_arc=400):
    k = len(breaks)
    ends = list(breaks) + [mp.mpf(1)]
    M = [[0] * k for _ in range(k)]
    for l in range(k):
        lo, hi = ends[l], ends[l + 1]
        for s in range(1, per_arc):
            t = lo + (hi - lo) * s / per_arc
            y, _ = f(t)
            j = max(i for i in range(k) if breaks[i] <= y)
            M[j][l] = 1
    return M


def lift_degree(breaks, f, samples=20000):
    total = mp.mpf(0)
    prev, _ = f(mp.mpf(0))
    for s in range(1, samples + 1):
        y, _ = f(mp.mpf(s) / samples)
        total += (y - prev) % 1
        prev = y
    return int(mp.nint(total))


def hbs_pointwise(k):
    """A = BS(G_{k-1}); lower half keeps A, upper half applies A once when the
    image is in the open upper half and twice otherwise."""
    d = k - 1
    verts, pieces = bowen_series(d)
    A = piecewise(verts, pieces)

    def f(t):
        t = t % 1
        y, p = A(t)
        if t >= mp.mpf(1) / 2 or t == 0:
            return y, (p[0],)
        if 0 < y < mp.mpf(1) / 2:
            return y, (p[0],)
        y2, p2 = A(y)
        return y2, (p2[0], p[0])

    return verts, A, f


def hbs_breakpoints(k):
    """Breakpoints of the minimal map: candidate cuts are the BS vertices and
    the BS-preimages of vertices inside the upper arcs; cuts between equal
    pieces are dropped."""
    d = k - 1
    verts, pieces = bowen_series(d)
    n = 2 * d
    cand = set(verts)
    for i in range(n):
        if verts[i] >= mp.mpf(1) / 2:
            continue
        g = pieces[i][1]
        for v in verts:
            x = turns(act(inv(g), pt(v)))
            lo, hi = verts[i], verts[(i + 1) % n] if i + 1 < n else mp.mpf(1)
            if lo < x < hi and min(circ(x, c) for c in cand) > 1e-25:
                cand.add(x)
    cand = sorted(cand)
    _, _, f = hbs_pointwise(k)
    ends = cand + [mp.mpf(1)]
    words = [f(ends[i] + (ends[i + 1] - ends[i]) / 2)[1] for i in range(len(cand))]
    keep = [cand[i] for i in range(len(cand)) if words[i] != words[i - 1]]
    return keep


def ball_count(d, radius):
    elems = [((1, 0), (0, 0))]
    seen = [(mp.mpc(1), mp.mpc(0))]
    frontier = [((), (mp.mpc(1), mp.mpc(0)))]
    for _ in range(radius):
        nxt = []
        for w, m in frontier:
            for lab, g in letters(d):
                if w and w[-1] == -lab:
                    continue
                m2 = mul(m, g)
                a, b = m2
                if not any(min(abs(a - x) + abs(b - y), abs(a + x) + abs(b + y)) < 1e-20 for x, y in seen):
                    seen.append(m2)
                    nxt.append((w + (lab,), m2))
        frontier = nxt
    return len(seen)


def fixed_points(m):
    a, b = m
    # conj(b) z^2 + (conj(a) - a) z - b = 0
    A, B, C = mp.conj(b), mp.conj(a) - a, -b
    disc = mp.sqrt(B * B - 4 * A * C)
    return [(-B + disc) / (2 * A), (-B - disc) / (2 * A)]


def main():
    print("// traces")
    G3 = [gen_Gd(3, j) for j in range(1, 4)]
    G4 = [gen_Gd(4, j) for j in range(1, 5)]
    print("G3 g1 trace", mp.nstr(trace(G3[0]), 20))
    print("G4 g2 trace", mp.nstr(trace(G4[1]), 20))
    print("G4 g2^-1 g4 trace", mp.nstr(trace(mul(inv(G4[1]), G4[3])), 20))
    print("G3 g1 fixed point", [mp.nstr(turns(z), 20) for z in fixed_points(G3[0])])

    print("// ball")
    print("G2 radius 2 count", ball_count(2, 2))

    print("// BS(G_2) preimages of angle 0")
    verts, pieces = bowen_series(2)
    pre = []
    for i, (lab, g) in enumerate(pieces):
        x = turns(act(inv(g), pt(0)))
        lo, hi = verts[i], (verts[i + 1] if i + 1 < len(verts) else mp.mpf(1))
        if lo <= x < hi or (i == 0 and circ(x, 0) < 1e-25):
            pre.append(x if circ(x, 0) > 1e-25 else mp.mpf(0))
    print(sorted(mp.nstr(p, 20) for p in pre))

    for d in range(2, 7):
        verts, pieces = bowen_series(d)
        f = piecewise(verts, pieces)
        print("BS(G_%d) pieces" % d, [p[0] for p in pieces], "degree", lift_degree(verts, f, 4000))

    print("// BS(G_3) transition matrix, arcs ascending from angle 0")
    verts, pieces = bowen_series(3)
    for row in sample_matrix(verts, piecewise(verts, pieces)):
        print(row)

    print("// hBS(3)")
    br = hbs_breakpoints(3)
    print("breakpoints", [mp.nstr(b, 20) for b in br])
    _, _, f = hbs_pointwise(3)
    print("degree", lift_degree(br, f, 4000))
    for row in sample_matrix(br, f, 300):
        print(row)

    print("// non-example fixed pair for d = 3")
    verts, pieces = bowen_series(3)
    g1, g2 = G3[0], G3[1]
    m = mul(g2, g1)
    for z in fixed_points(m):
        a, b = m
        der = 1 / abs(mp.conj(b) * z + mp.conj(a)) ** 2
        if der > 1:
            p = turns(z)
            print("p", mp.nstr(p, 20), "q = g1(p)", mp.nstr(turns(act(g1, z)), 20))

    print("// boundary derivative of the real translation t = 1 at angle 0:", mp.nstr(mp.e ** -2, 20))


if __name__ == "__main__":
    main()
