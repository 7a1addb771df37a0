#!/usr/bin/env python3
"""Brute-force oracle for diagram coloring counts and 2-cocycle state sums.

Deliberately independent of the C++ implementation: its own PD reader and an
exhaustive scan of all |X|^#arcs color assignments.  Run from the repo root;
writes expected/coloring.json next to this script and the GF(4) test cocycle
into fixtures/cocycles/gf4_phi2.json.
"""
import itertools
import json
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parents[2]


# ---------------------------------------------------------------- quandles

def dihedral(n):
    return [[(2 * j - i) % n for j in range(n)] for i in range(n)]

def trivial(n):
    return [[i for _ in range(n)] for i in range(n)]

def alexander(n, t):
    return [[(t * i + (1 - t) * j) % n for j in range(n)] for i in range(n)]

def gf4():
    with open(ROOT / "fixtures/quandles/alexander_gf4.json") as f:
        return json.load(f)["table"]

QUANDLES = {
    "trivial_1": trivial(1),
    "trivial_2": trivial(2),
    "trivial_3": trivial(3),
    "dihedral_3": dihedral(3),
    "dihedral_4": dihedral(4),
    "dihedral_5": dihedral(5),
    "alexander_5_2": alexander(5, 2),
    "gf4": gf4(),
}


# ---------------------------------------------------------------- PD reader

def read_pd(text):
    text = text.strip()
    if not (text.startswith("PD[") and text.endswith("]")):
        raise ValueError("bad PD text")
    quads = [tuple(int(x) for x in m.groups())
             for m in re.finditer(r"X\[(\d+),(\d+),(\d+),(\d+)\]", text)]
    free_loops = 1 if not quads and text.replace(" ", "") == "PD[]" else 0
    return quads, free_loops

def occurrences(quads):
    occ = {}
    for ci, q in enumerate(quads):
        for s, e in enumerate(q):
            occ.setdefault(e, []).append((ci, s))
    for e, v in occ.items():
        assert len(v) == 2, f"edge {e}"
    return occ

def orient(quads):
    """head/tail slot of every edge; slot 0 is always a head, slot 2 a tail."""
    occ = occurrences(quads)
    role = {}
    for ci in range(len(quads)):
        role[(ci, 0)] = "h"
        role[(ci, 2)] = "t"

    def flip(r):
        return "t" if r == "h" else "h"

    def propagate():
        ch = True
        while ch:
            ch = False
            for e, (p1, p2) in occ.items():
                for a, b in ((p1, p2), (p2, p1)):
                    if a in role and b not in role:
                        role[b] = flip(role[a]); ch = True
            for ci in range(len(quads)):
                a, b = (ci, 1), (ci, 3)
                if a in role and b not in role:
                    role[b] = flip(role[a]); ch = True
                if b in role and a not in role:
                    role[a] = flip(role[b]); ch = True

    propagate()
    while True:
        todo = [e for e in sorted(occ) if occ[e][0] not in role]
        if not todo:
            break
        role[occ[todo[0]][0]] = "h"   # free all-over cycle; fixtures avoid ambiguity
        propagate()
    head = {}
    for e, (p1, p2) in occ.items():
        r1, r2 = role[p1], role[p2]
        assert r1 != r2, f"edge {e}"
        head[e] = p1 if r1 == "h" else p2
    return head

class Diagram:
    def __init__(self, text):
        self.quads, self.free_loops = read_pd(text)
        self.head = orient(self.quads)
        # arcs: edges joined where they pass over a crossing (slots 1 and 3)
        parent = {}
        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]; x = parent[x]
            return x
        def union(a, b):
            parent[find(a)] = find(b)
        for q in self.quads:
            for s in range(4):
                find(q[s])
            union(q[1], q[3])
        reps = sorted({find(e) for e in parent})
        self.arc_of = {e: reps.index(find(e)) for e in parent}
        self.n_arcs = len(reps) + self.free_loops
        self.crossings = []
        for ci, q in enumerate(self.quads):
            sign = +1 if self.head[q[3]] == (ci, 3) else -1
            over = self.arc_of[q[1]]
            self.crossings.append((sign, self.arc_of[q[0]], self.arc_of[q[2]], over))

    def colorings(self, table):
        n = len(table)
        out = []
        for f in itertools.product(range(n), repeat=self.n_arcs):
            ok = True
            for sign, a_in, a_out, a_over in self.crossings:
                x, z, y = f[a_in], f[a_out], f[a_over]
                if sign > 0:
                    ok = table[x][y] == z
                else:
                    ok = table[z][y] == x
                if not ok:
                    break
            if ok:
                out.append(f)
        return out

    def statesum2(self, table, phi, m):
        """phi: dict (a,b)->value.  Weight term at a crossing uses the under-arc
        on the source side of the over strand (incoming one at a positive
        crossing, outgoing at a negative one)."""
        multi = {}
        for f in self.colorings(table):
            w = 0
            for sign, a_in, a_out, a_over in self.crossings:
                a = f[a_in] if sign > 0 else f[a_out]
                b = f[a_over]
                w = (w + sign * phi.get((a, b), 0)) % m
            multi[w] = multi.get(w, 0) + 1
        return multi


# ------------------------------------------------- GF(2) cocycle search (GF4)

def boundary3_terms(table, x, y, z):
    """Signed pair targets of the degree-3 boundary applied to (x,y,z)."""
    return [(+1, (x, z)), (-1, (table[x][y], z)),
            (-1, (x, y)), (+1, (table[x][z], table[y][z]))]

def find_gf4_cocycle():
    table = gf4()
    n = 4
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    idx = {p: i for i, p in enumerate(pairs)}
    rows = []
    for x, y, z in itertools.product(range(n), repeat=3):
        if x == y or y == z:
            continue
        row = [0] * len(pairs)
        for sgn, p in boundary3_terms(table, x, y, z):
            if p[0] != p[1]:
                row[idx[p]] = (row[idx[p]] + sgn) % 2
        if any(row):
            rows.append(row)

    def rref2(rows):
        rows = [r[:] for r in rows]
        piv = []
        r = 0
        for c in range(len(rows[0]) if rows else 0):
            pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
        return rows[:r], piv

    red, piv = rref2(rows)
    free = [c for c in range(len(pairs)) if c not in piv]
    kernel = []
    for fc in free:
        v = [0] * len(pairs)
        v[fc] = 1
        for r, pc in zip(red, piv):
            if r[fc]:
                v[pc] = 1
        kernel.append(v)
    # coboundaries: psi: X -> Z2, d psi(a,b) = psi(a) - psi(a*b)
    cob = []
    for k in range(n):
        v = [0] * len(pairs)
        for i, (a, b) in enumerate(pairs):
            v[i] = ((1 if a == k else 0) - (1 if table[a][b] == k else 0)) % 2
        cob.append(v)
    cred, cpiv = rref2([v for v in cob if any(v)])

    def in_span(v, basis, piv):
        v = v[:]
        for r, pc in zip(basis, piv):
            if v[pc]:
                v = [(a + b) % 2 for a, b in zip(v, r)]
        return not any(v)

    for v in kernel:
        if not in_span(v, cred, cpiv):
            return {pairs[i]: v[i] for i in range(len(pairs)) if v[i]}, len(kernel), len(cred)
    raise RuntimeError("no non-coboundary cocycle found")


# ---------------------------------------------------------------------- main

def main():
    diagrams = {}
    for p in sorted((ROOT / "fixtures/diagrams").glob("*.pd")):
        diagrams[p.stem] = Diagram(p.read_text())
    for sub in ("r1", "r2", "r3"):
        for p in sorted((ROOT / "fixtures/moves" / sub).glob("*.pd")):
            diagrams[f"{sub}_{p.stem}"] = Diagram(p.read_text())

    counts = {}
    for dname, d in sorted(diagrams.items()):
        counts[dname] = {qname: len(d.colorings(t))
                         for qname, t in QUANDLES.items()}

    phi, kdim, cdim = find_gf4_cocycle()
    cocycle_json = {
        "degree": 2,
        "m": 2,
        "size": 4,
        "entries": sorted([a, b, v] for (a, b), v in phi.items()),
    }
    with open(ROOT / "fixtures/cocycles/gf4_phi2.json", "w") as f:
        json.dump(cocycle_json, f, indent=1)
        f.write("\n")

    statesums = {}
    for dname in ("trefoil", "trefoil_r", "figure_eight", "granny",
                  "unknot_0", "unknot_r1", "unknot_r2",
                  "r3_pair_2_a", "r3_pair_2_b", "r3_pair_3_a", "r3_pair_3_b"):
        multi = diagrams[dname].statesum2(QUANDLES["gf4"], phi, 2)
        statesums[dname] = {str(k): v for k, v in sorted(multi.items())}

    out = {
        "counts": counts,
        "gf4_mod2_kernel_dim": kdim,
        "gf4_mod2_coboundary_dim": cdim,
        "statesum2_gf4_mod2": statesums,
    }
    with open(pathlib.Path(__file__).parent / "expected" / "coloring.json", "w") as f:
        json.dump(out, f, indent=1, sort_keys=True)
        f.write("\n")
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
