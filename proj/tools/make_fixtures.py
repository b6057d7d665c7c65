#!/usr/bin/env python3
"""Regenerate the framed-link fixture corpus under fixtures/.

Each link is modelled as closed 3D polylines. We project along z after a
generic rotation, find crossings, read over/under from interpolated heights
and emit PD codes: each tuple starts at the incoming under-strand and runs
counterclockwise. Arc labels increase along each component's orientation and
components are labelled in order, crossingless ones last.

The script also recomputes every linking number from geometry and checks it
against the expected matrix, which keeps it an independent cross-check on the
C++ parser.
"""

import json
import math
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(os.path.dirname(HERE), "fixtures")


def rotate(points, ax, ay, az):
    cx, sx = math.cos(ax), math.sin(ax)
    cy, sy = math.cos(ay), math.sin(ay)
    cz, sz = math.cos(az), math.sin(az)
    out = []
    for x, y, z in points:
        y, z = cx * y - sx * z, sx * y + cx * z
        x, z = cy * x + sy * z, -sy * x + cy * z
        x, y = cz * x - sz * y, sz * x + cz * y
        out.append((x, y, z))
    return out


def sample(fn, n=240):
    return [fn(2 * math.pi * (k + 0.37) / n) for k in range(n)]


def seg_intersect(p, q, r, s):
    """Proper intersection of 2D segments pq and rs; returns (t, u) or None."""
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-14:
        return None
    w = (r[0] - p[0], r[1] - p[1])
    t = (w[0] * d2[1] - w[1] * d2[0]) / den
    u = (w[0] * d1[1] - w[1] * d1[0]) / den
    if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
        return t, u
    return None


def pd_from_polylines(comps):
    """comps: list of closed 3D polylines (already oriented)."""
    segs = []  # (comp, index, p, q)
    for ci, pts in enumerate(comps):
        n = len(pts)
        for i in range(n):
            segs.append((ci, i, pts[i], pts[(i + 1) % n]))
    crossings = []
    for a in range(len(segs)):
        ca, ia, p, q = segs[a]
        for b in range(a + 1, len(segs)):
            cb, ib, r, s = segs[b]
            if ca == cb:
                n = len(comps[ca])
                if abs(ia - ib) <= 1 or abs(ia - ib) == n - 1:
                    continue
            hit = seg_intersect(p, q, r, s)
            if hit is None:
                continue
            t, u = hit
            za = p[2] + t * (q[2] - p[2])
            zb = r[2] + u * (s[2] - r[2])
            if abs(za - zb) < 1e-6:
                raise ValueError("degenerate crossing heights")
            da = (q[0] - p[0], q[1] - p[1])
            db = (s[0] - r[0], s[1] - r[1])
            pa = (ca, ia + t)
            pb = (cb, ib + u)
            if za > zb:
                crossings.append({"over": pa, "under": pb, "do": da, "du": db})
            else:
                crossings.append({"over": pb, "under": pa, "do": db, "du": da})

    # passages along each component, sorted by position
    passages = {ci: [] for ci in range(len(comps))}
    for k, c in enumerate(crossings):
        passages[c["over"][0]].append((c["over"][1], k, "over"))
        passages[c["under"][0]].append((c["under"][1], k, "under"))
    order = [ci for ci in range(len(comps)) if passages[ci]] + [
        ci for ci in range(len(comps)) if not passages[ci]
    ]
    label = 1
    slot_in = {}
    slot_out = {}
    for ci in order:
        ps = sorted(passages[ci])
        r = len(ps)
        for j, (_, k, role) in enumerate(ps):
            # arc j leaves passage j, arc j-1 enters it
            slot_out[(k, role)] = label + j
            slot_in[(k, role)] = label + (j - 1) % r
        label += r
    pd = []
    signs = []
    for k, c in enumerate(crossings):
        du, do = c["du"], c["do"]
        rays = [
            (math.atan2(-du[1], -du[0]), slot_in[(k, "under")]),
            (math.atan2(du[1], du[0]), slot_out[(k, "under")]),
            (math.atan2(-do[1], -do[0]), slot_in[(k, "over")]),
            (math.atan2(do[1], do[0]), slot_out[(k, "over")]),
        ]
        base = rays[0][0]
        rays.sort(key=lambda ray: (ray[0] - base) % (2 * math.pi))
        pd.append([lab for _, lab in rays])
        cross = do[0] * du[1] - do[1] * du[0]
        signs.append(1 if cross > 0 else -1)
    unknots = sum(1 for ci in range(len(comps)) if not passages[ci])
    # geometric linking numbers, in output component order
    pos = {ci: i for i, ci in enumerate(order)}
    m = len(comps)
    twice = [[0] * m for _ in range(m)]
    for k, c in enumerate(crossings):
        i, j = pos[c["over"][0]], pos[c["under"][0]]
        if i != j:
            twice[i][j] += signs[k]
            twice[j][i] += signs[k]
    lk = [[v // 2 for v in row] for row in twice]
    return pd, unknots, order, lk


def circle(cx, cy, r=0.6, z=lambda x, y: 0.0, reverse=False, n=120):
    pts = []
    for k in range(n):
        th = 2 * math.pi * k / n
        x, y = cx + r * math.cos(th), cy + r * math.sin(th)
        pts.append((x, y, z(x, y)))
    return pts[::-1] if reverse else pts


def plumbing(centers, edges, want_lk):
    """Unknots at the given centres, clasped along the tree edges.

    Heights use z = s_u * ((p - c_u) . (1, 1)) with s alternating over the
    bipartition, so each overlapping pair forms one clasp. Orientations are
    then flipped along the tree until every clasp has linking number want_lk.
    """
    m = len(centers)
    adj = {i: [] for i in range(m)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [None] * m
    side[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if side[v] is None:
                side[v] = -side[u]
                stack.append(v)
    rev = [False] * m
    for _ in range(2):
        comps = []
        for i, (cx, cy) in enumerate(centers):
            s = side[i]
            comps.append(
                circle(cx, cy, z=lambda x, y, s=s, cx=cx, cy=cy: 0.5 * s * ((x - cx) + (y - cy)),
                       reverse=rev[i])
            )
        pd, unknots, order, lk = pd_from_polylines(comps)
        assert order == list(range(m)), order
        if all(lk[u][v] == want_lk for u, v in edges):
            return comps
        # fix orientations by walking the tree from the root
        rev = [False] * m
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v in seen:
                    continue
                seen.add(v)
                # lk was measured with no circle reversed; reversing exactly
                # one endpoint negates it
                rev[v] = rev[u] ^ (lk[u][v] != want_lk)
                stack.append(v)
    raise RuntimeError("could not orient plumbing")


def trefoil(t):
    return (math.sin(t) + 2 * math.sin(2 * t), math.cos(t) - 2 * math.cos(2 * t), -math.sin(3 * t))


def figure_eight(t):
    return ((2 + math.cos(2 * t)) * math.cos(3 * t), (2 + math.cos(2 * t)) * math.sin(3 * t), math.sin(4 * t))


def kinked_circle(t):
    # limacon with an inner loop: one self-crossing in projection
    r = 0.5 + math.cos(t)
    return (r * math.cos(t), r * math.sin(t), 0.4 * math.sin(t))


def torus_component(k, p=1, q=2, R=2.0, r=0.8):
    def fn(u):
        phi = q * u + math.pi * k
        return ((R + r * math.cos(phi)) * math.cos(p * u), (R + r * math.cos(phi)) * math.sin(p * u), r * math.sin(phi))
    return fn


def borromean():
    a = sample(lambda t: (2 * math.cos(t), math.sin(t), 0.0), 160)
    b = sample(lambda t: (0.0, 2 * math.cos(t), math.sin(t)), 160)
    c = sample(lambda t: (math.sin(t), 0.0, 2 * math.cos(t)), 160)
    return [rotate(comp, 0.37, 0.21, 0.13) for comp in (a, b, c)]


def translate(pts, dx, dy=0.0, dz=0.0):
    return [(x + dx, y + dy, z + dz) for x, y, z in pts]


def fixture(name, comps, framings, expect=None, note=None):
    pd, unknots, order, lk = pd_from_polylines(comps)
    fr = [framings[ci] for ci in order]
    m = len(comps)
    mat = [[fr[i] if i == j else lk[i][j] for j in range(m)] for i in range(m)]
    if expect is not None and mat != expect:
        raise AssertionError(f"{name}: linking matrix {mat} != {expect}")
    doc = {"name": name, "pd": pd, "framings": fr}
    if unknots:
        doc["unknots"] = unknots
    path = os.path.join(OUT, name + ".json")
    with open(path, "w") as fh:
        fh.write(json.dumps(doc, sort_keys=True) + "\n")
    return mat


def hopf(reverse_second=False, tilt=None):
    comps = [
        circle(0.0, 0.0, z=lambda x, y: 0.5 * ((x - 0.0) + (y - 0.0))),
        circle(1.0, 0.0, z=lambda x, y: -0.5 * ((x - 1.0) + y), reverse=reverse_second),
    ]
    if tilt:
        comps = [rotate(c, *tilt) for c in comps]
    return comps


def main():
    os.makedirs(OUT, exist_ok=True)
    unknot = [circle(0.0, 0.0)]
    ku = [sample(kinked_circle, 200)]
    tre = [sample(trefoil)]
    fig8 = [sample(figure_eight, 300)]

    fixture("unknot+1", unknot, [1], [[1]])
    fixture("unknot-1", unknot, [-1], [[-1]])
    fixture("unknot+2", unknot, [2], [[2]])
    fixture("unknot-2", unknot, [-2], [[-2]])
    fixture("kinked-unknot+1", ku, [1], [[1]])
    fixture("trefoil+1", tre, [1], [[1]])
    fixture("trefoil-1", tre, [-1], [[-1]])
    fixture("trefoil-rotated+1", [rotate(tre[0], 0.9, 0.4, 0.3)], [1], [[1]])
    fixture("figure-eight+1", fig8, [1], [[1]])
    fixture("figure-eight-rotated+1", [rotate(fig8[0], 0.5, 1.1, 0.2)], [1], [[1]])

    h = hopf()
    lk = fixture("hopf00", h, [0, 0])
    if lk[0][1] != 1:
        h = hopf(reverse_second=True)
        lk = fixture("hopf00", h, [0, 0])
    assert lk == [[0, 1], [1, 0]], lk
    hrot = [rotate(c, 1.4, 1.0, 0.2) for c in h]
    fixture("hopf00-rotated", hrot, [0, 0], [[0, 1], [1, 0]])
    fixture("hopf20", h, [2, 0], [[2, 1], [1, 0]])
    fixture("hopf10", h, [1, 0], [[1, 1], [1, 0]])
    hneg = [h[0], h[1][::-1]]
    fixture("hopf0-1-negative", hneg, [0, -1], [[0, -1], [-1, -1]])

    fixture("split-unknots+1-1", [circle(0.0, 0.0), circle(3.0, 0.0)], [1, -1], [[1, 0], [0, -1]])
    fixture("split-unknots+1+1", [circle(0.0, 0.0), circle(3.0, 0.0)], [1, 1], [[1, 0], [0, 1]])
    fixture(
        "split-unknots+1+1-1",
        [circle(0.0, 0.0), circle(3.0, 0.0), circle(6.0, 0.0)],
        [1, 1, -1],
        [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
    )
    # unknot+1 split from a Hopf link: the crossingless unknot comes last
    hs = [translate(c, 4.0) for c in h]
    fixture("hopf00-plus-unknot+1", hs + [circle(0.0, 0.0)], [0, 0, 1], [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    # linear chain of three unknots, framings (1,1,0)
    chain = plumbing([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], [(0, 1), (1, 2)], 1)
    fixture("chain110", chain, [1, 1, 0], [[1, 1, 0], [1, 1, 1], [0, 1, 0]])

    fixture("trefoil+1-trefoil+1", [tre[0], translate(tre[0], 7.0)], [1, 1], [[1, 0], [0, 1]])
    fixture("trefoil+1-unknot-1", [tre[0], circle(7.0, 0.0)], [1, -1], [[1, 0], [0, -1]])
    fixture("trefoil-1-unknot+1", [tre[0], circle(7.0, 0.0)], [-1, 1], [[-1, 0], [0, 1]])

    t24 = [sample(torus_component(0)), sample(torus_component(1))]
    m = fixture("torus24-13", t24, [1, 3])
    assert abs(m[0][1]) == 2, m

    fixture("borromean111", borromean(), [1, 1, 1], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    # E8 plumbing: chain 0-1-2-3-4-5-6, node 7 hanging off node 4
    centers = [(float(i), 0.0) for i in range(7)] + [(4.0, 1.0)]
    edges = [(i, i + 1) for i in range(6)] + [(4, 7)]
    e8 = plumbing(centers, edges, -1)
    expect = [[0] * 8 for _ in range(8)]
    for i in range(8):
        expect[i][i] = 2
    for u, v in edges:
        expect[u][v] = expect[v][u] = -1
    fixture("e8-plumbing", e8, [2] * 8, expect)
    fixture("e8-plumbing-rotated", [rotate(c, 1.3, 0.9, 0.7) for c in e8], [2] * 8, expect)


def matrix_fixture(name, rows):
    os.makedirs(os.path.join(OUT, "forms"), exist_ok=True)
    with open(os.path.join(OUT, "forms", name + ".json"), "w") as fh:
        fh.write(json.dumps({"n": len(rows), "entries": rows}, sort_keys=True) + "\n")


def direct_sum(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[k + i][k + j] = v
        k += len(b)
    return out


def forms():
    e8 = [[0] * 8 for _ in range(8)]
    for i in range(8):
        e8[i][i] = 2
    for u, v in [(i, i + 1) for i in range(6)] + [(4, 7)]:
        e8[u][v] = e8[v][u] = -1
    h = [[0, 1], [1, 0]]
    diag = lambda *d: direct_sum(*[[[x]] for x in d])
    matrix_fixture("e8", e8)
    matrix_fixture("i8", diag(*[1] * 8))
    matrix_fixture("h", h)
    matrix_fixture("diag1-1", diag(1, -1))
    matrix_fixture("one-plus-h", direct_sum([[1]], h))
    matrix_fixture("diag11-1", diag(1, 1, -1))
    matrix_fixture("e8-plus-minus-one", direct_sum(e8, [[-1]]))
    matrix_fixture("diag1x8-1", diag(*[1] * 8, -1))
    matrix_fixture("two", [[2]])
    matrix_fixture("not-symmetric", [[1, 2], [0, 1]])


if __name__ == "__main__":
    forms()
    sys.exit(main())
