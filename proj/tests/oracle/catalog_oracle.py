#!/usr/bin/env python3
"""Reference computations that freeze the catalog's expected values.

Shares no code with the C++ library. Linear algebra is plain Gaussian
elimination over fractions.Fraction; filtrations are built as kernels of
evaluation conditions; page dimensions and differential ranks come from rank
formulas on spanning sets.

    catalog_oracle.py [--out DIR]      write data/catalog/*.json
    catalog_oracle.py --check [DIR]    exit 1 if any stored file differs
"""

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

SCHEMA = "lass.catalog/1"

# ----------------------------------------------------------------- linear algebra


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def ident(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a, b, inner=None):
    if not a:
        return []
    inner = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        out[i][j] += x * bk[j]
    return out


def transpose(a, rows=None):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def rank(rows):
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(a, ncols):
    """Basis of {x : a x = 0} as a list of column vectors."""
    m = [list(r) for r in a if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def col_rank(cols):
    """Rank of a list of column vectors."""
    return rank(cols)


def apply(m, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in m]


def det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in m]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]) if a else 0, len(b), len(b[0]) if b else 0
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if a[i][j]:
                for k in range(rb):
                    for l in range(cb):
                        if b[k][l]:
                            out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def madd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mscale(s, a):
    return [[s * x for x in r] for r in a]


# ----------------------------------------------------------------- algebras


class Lie:
    def __init__(self, dim, brackets, labels):
        """brackets: {(i, j): {k: c}} for i < j."""
        self.dim = dim
        self.labels = labels
        self.c = {}
        for (i, j), coeffs in brackets.items():
            v = [Fraction(0)] * dim
            for k, x in coeffs.items():
                v[k] = Fraction(x)
            self.c[(i, j)] = v
            self.c[(j, i)] = [-x for x in v]

    def struct(self, i, j):
        return self.c.get((i, j), [Fraction(0)] * self.dim)

    def bracket(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                for k, c in enumerate(self.struct(i, j)):
                    if c:
                        out[k] += x * y * c
        return out

    def to_json(self, rep=None):
        out = {"dim": self.dim, "basis": self.labels, "brackets": []}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = {str(k): str(x) for k, x in enumerate(self.struct(i, j)) if x}
                if coeffs:
                    out["brackets"].append({"i": i, "j": j, "coeffs": coeffs})
        if rep is not None:
            out["representation"] = rep_json(rep)
        return out


def rep_json(rep):
    mats, labels = rep
    return {"dim": len(mats[0]), "matrices": [[[str(x) for x in row] for row in m] for m in mats],
            **({"basis": labels} if labels else {})}


def F(rows):
    return [[Fraction(x) for x in r] for r in rows]


def trivial_rep(dim, m=1):
    return ([zeros(m, m) for _ in range(dim)], None)


# ----------------------------------------------------------------- Koszul complexes


def koszul(rank_, mdim, action, bracket_ops):
    """Cochains on ∧^k (Q^rank)^* ⊗ M; basis (I, a) with I a sorted k-tuple.

    action[a]: matrix on M; bracket_ops(i, j): list of (d, matrix) with
    [e_i, e_j] = Σ op · e_d.
    Returns (dims, differentials) with differentials[k] : C^k -> C^{k+1}.
    """
    subs = [list(itertools.combinations(range(rank_), k)) for k in range(rank_ + 1)]
    pos = [{s: i for i, s in enumerate(ss)} for ss in subs]
    diffs = []
    for k in range(rank_):
        rows = len(subs[k + 1]) * mdim
        cols = len(subs[k]) * mdim
        d = zeros(rows, cols)
        for jt, J in enumerate(subs[k + 1]):
            for i in range(k + 1):
                rest = J[:i] + J[i + 1:]
                sgn = 1 if i % 2 == 0 else -1
                A = action[J[i]]
                c0 = pos[k][rest] * mdim
                for b in range(mdim):
                    for a in range(mdim):
                        if A[b][a]:
                            d[jt * mdim + b][c0 + a] += sgn * A[b][a]
            for i in range(k + 1):
                for l in range(i + 1, k + 1):
                    rest = [x for t, x in enumerate(J) if t not in (i, l)]
                    sgn = 1 if (i + l) % 2 == 0 else -1
                    for dd, op in bracket_ops(J[i], J[l]):
                        if dd in rest:
                            continue
                        lst = [dd] + rest
                        # sign of sorting lst
                        inv = sum(1 for x in rest if x < dd)
                        s = sgn * (1 if inv % 2 == 0 else -1)
                        c0 = pos[k][tuple(sorted(lst))] * mdim
                        for b in range(mdim):
                            for a in range(mdim):
                                if op[b][a]:
                                    d[jt * mdim + b][c0 + a] += s * op[b][a]
        diffs.append(d)
    dims = [len(s) * mdim for s in subs]
    return dims, diffs


def ce(g, rep):
    mats, _ = rep
    m = len(mats[0])
    I = ident(m)

    def ops(i, j):
        return [(d, mscale(c, I)) for d, c in enumerate(g.struct(i, j)) if c]

    return koszul(g.dim, m, mats, ops)


def betti(dims, diffs):
    out = []
    for n, dn in enumerate(dims):
        r_out = rank(diffs[n]) if n < len(diffs) else 0
        r_in = rank(diffs[n - 1]) if n > 0 else 0
        out.append(dn - r_out - r_in)
    return out


# ----------------------------------------------------------------- spectral sequence


class Filtered:
    """cond[n][p]: rows of linear conditions cutting out F^p C^n (None = no condition)."""

    def __init__(self, dims, diffs, cond, length):
        self.dims = dims
        self.diffs = diffs
        self.cond = cond
        self.length = length
        self.top = len(dims) - 1
        self._f = {}
        self._z = {}

    def d(self, n):
        if 0 <= n < len(self.diffs):
            return self.diffs[n]
        return None

    def conditions(self, p, n):
        if p <= 0:
            return []
        if p > self.length:
            return ident(self.dims[n])
        return self.cond[n][p]

    def F(self, p, n):
        key = (p, n)
        if key not in self._f:
            if n < 0 or n > self.top:
                self._f[key] = []
            else:
                c = self.conditions(p, n)
                self._f[key] = nullspace(c, self.dims[n]) if c else ident(self.dims[n])
        return self._f[key]

    def Z(self, r, p, n):
        key = (r, p, n)
        if key in self._z:
            return self._z[key]
        base = self.F(p, n)
        if r < 0 or n + 1 > self.top or not base:
            out = base
        else:
            cond = self.conditions(p + r, n + 1)
            if not cond:
                out = base
            else:
                dF = [apply(self.diffs[n], v) for v in base]
                # coefficients x with cond · (Σ x_i dF_i) = 0
                m = [[sum((c * y for c, y in zip(row, w) if c and y), Fraction(0)) for w in dF] for row in cond]
                ker = nullspace(m, len(base))
                out = [[sum((x * b[t] for x, b in zip(k, base) if x), Fraction(0)) for t in range(self.dims[n])] for k in ker]
        self._z[key] = out
        return out

    def B(self, r, p, n):
        part = list(self.Z(r - 1, p + 1, n)) if n >= 0 else []
        if n - 1 >= 0:
            part += [apply(self.diffs[n - 1], v) for v in self.Z(r - 1, p - r + 1, n - 1)]
        return part

    def dim(self, r, p, n):
        if n < 0 or n > self.top:
            return 0
        z = self.Z(r, p, n)
        b = self.B(r, p, n)
        return col_rank(z + b) - col_rank(b)

    def d_rank(self, r, p, n):
        if n < 0 or n >= self.top:
            return 0
        b = self.B(r, p, n)
        return col_rank(self.Z(r, p, n) + b) - col_rank(self.Z(r + 1, p, n) + b)

    def table(self, r):
        entries = []
        diffs = []
        for p in range(self.length + 1):
            for n in range(self.top + 1):
                entries.append({"p": p, "q": n - p, "dim": self.dim(r, p, n)})
                rk = self.d_rank(r, p, n)
                if rk:
                    diffs.append({"from": [p, n - p], "to": [p + r, n - p - r + 1], "rank": rk})
        diffs.sort(key=lambda x: x["from"])
        return {"r": r, "max_p": self.length, "top": self.top, "entries": entries, "differentials": diffs}

    def stabilization(self):
        last = 0
        for r in range(1, self.length + 2):
            if any(self.d_rank(r, p, n) for p in range(self.length + 1) for n in range(self.top + 1)):
                last = r
        return last + 1

    def cells(self, r, pmax=None):
        out = []
        for p in range(self.length + 1 if pmax is None else pmax + 1):
            for n in range(self.top + 1):
                d = self.dim(r, p, n)
                if d:
                    out.append([p, n - p, d])
        return sorted(out)

    def spectral(self):
        st = self.stabilization()
        return {
            "stabilization_page": st,
            "pages": [self.table(r) for r in range(st + 1)],
            "einf": self.cells(self.length + 1),
        }


# ----------------------------------------------------------------- Hochschild–Serre


def complement(g_dim, h_cols):
    basis = [list(c) for c in h_cols]
    comp = []
    for i in range(g_dim):
        e = [Fraction(0)] * g_dim
        e[i] = Fraction(1)
        if col_rank(basis + [e]) > len(basis):
            basis.append(e)
            comp.append(e)
    return comp


def independent(cols):
    out = []
    for c in cols:
        if col_rank(out + [c]) > len(out):
            out.append(c)
    return out


def hs_filtered(g, rep, h_cols):
    h = independent([[Fraction(x) for x in c] for c in h_cols])
    comp = complement(g.dim, h)
    frame = h + comp  # columns
    s = len(h)
    t = len(comp)
    m = len(rep[0][0])
    dims, diffs = ce(g, rep)
    cond = []
    for n in range(g.dim + 1):
        subs = list(itertools.combinations(range(g.dim), n))
        by_p = [None]
        for p in range(1, t + 1):
            rows = []
            # ω vanishes on n adapted vectors with at least n - p + 1 from h
            for S in itertools.combinations(range(g.dim), n):
                if sum(1 for x in S if x < s) < n - p + 1:
                    continue
                ev = [det([[frame[col][row] for col in S] for row in J]) for J in subs]
                for a in range(m):
                    row = [Fraction(0)] * (len(subs) * m)
                    for j, x in enumerate(ev):
                        row[j * m + a] = x
                    rows.append(row)
            by_p.append(rows)
        cond.append(by_p)
    return Filtered(dims, diffs, cond, t), s, t


def hs_expected(g, rep, h_cols, ideal):
    f, s, t = hs_filtered(g, rep, h_cols)
    dims, diffs = ce(g, rep)
    out = {"betti": betti(dims, diffs)}
    out["e1"] = f.cells(1)
    if ideal:
        out["e2"] = f.cells(2)
    out.update(f.spectral())
    return out, f


def extension_expected(g, rep, l_cols, f):
    l = independent([[Fraction(x) for x in c] for c in l_cols])
    comp = complement(g.dim, l)
    s, t = len(l), len(comp)
    frame = l + comp
    inv = transpose(inverse(transpose(frame)))  # rows: coordinates in the frame

    def coords(v):
        return apply(transpose(inv), v) if False else solve_coords(frame, v)

    # ∇_b on l and γ(b_i, b_j) in l-coordinates
    nab = []
    for b in range(t):
        m = zeros(s, s)
        for c in range(s):
            y = coords(g.bracket(comp[b], l[c]))
            for r in range(s):
                m[r][c] = y[r]
        nab.append(m)
    B = Lie(t, {}, [])
    for i in range(t):
        for j in range(i + 1, t):
            y = coords(g.bracket(comp[i], comp[j]))
            B.c[(i, j)] = y[s:]
            B.c[(j, i)] = [-x for x in y[s:]]

    def ops(i, j):
        return [(d, mscale(c, ident(s))) for d, c in enumerate(B.struct(i, j)) if c]

    dims, dd = koszul(t, s, nab, ops)
    out = {}
    if t >= 2:
        gamma = []
        for (i, j) in itertools.combinations(range(t), 2):
            raw = [x - y for x, y in zip(g.bracket(comp[i], comp[j]), [sum(B.struct(i, j)[k] * comp[k][r] for k in range(t)) for r in range(g.dim)])]
            gamma += coords(raw)[:s]
        d1 = dd[1]
        out["extension_class_zero"] = rank(transpose(d1)) == rank(transpose(d1) + [gamma]) if d1 and d1[0] else not any(gamma)
    else:
        out["extension_class_zero"] = True
    ranks = []
    for p in range(t + 1):
        for q in range(s + 1):
            rk = f.d_rank(2, p, p + q)
            if rk:
                ranks.append({"pq": [p, q], "rank": rk})
    out["d2_ranks"] = ranks
    return out


def inverse(m):
    n = len(m)
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def solve_coords(frame_cols, v):
    """x with Σ x_i frame_i = v."""
    m = transpose(frame_cols)  # rows = coordinates
    return apply(inverse(m), v)


# ----------------------------------------------------------------- jets


def monomials(m, k):
    out = []
    for deg in range(k + 1):
        degs = [e for e in itertools.product(range(deg + 1), repeat=m) if sum(e) == deg]
        out += sorted(degs, reverse=True)
    return out


def poly_mul(a, b, k):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) <= k:
                out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_diff(f, i):
    out = {}
    for e, c in f.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c * e[i]
    return out


def poly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c}


class Jet:
    def __init__(self, n, m, anchor, struct):
        """anchor[a][i]: poly dict; struct[(a, b, d)]: poly dict (both orders stored)."""
        self.n, self.m, self.anchor, self.struct = n, m, anchor, struct

    @staticmethod
    def action(g, rho):
        n, m = g.dim, len(rho[0])
        anchor = [[{} for _ in range(m)] for _ in range(n)]
        for a in range(n):
            for i in range(m):
                for j in range(m):
                    if rho[a][i][j]:
                        e = tuple(int(t == j) for t in range(m))
                        anchor[a][i][e] = -rho[a][i][j]
        struct = {}
        for a in range(n):
            for b in range(n):
                for d, c in enumerate(g.struct(a, b)):
                    if c:
                        struct[(a, b, d)] = {tuple([0] * m): c}
        return Jet(n, m, anchor, struct)

    def X(self, a, f, k):
        out = {}
        for i in range(self.m):
            out = poly_add(out, poly_mul(self.anchor[a][i], poly_diff(f, i), k))
        return out

    def to_json(self, order):
        anchor = []
        for a in range(self.n):
            field = []
            for i in range(self.m):
                for e, c in sorted(self.anchor[a][i].items()):
                    field.append({"coord": i, "monomial": list(e), "coeff": str(c)})
            anchor.append({"gen": a, "field": field})
        sf = []
        for (a, b, d), poly in sorted(self.struct.items()):
            if a < b:
                for e, c in sorted(poly.items()):
                    sf.append({"i": a, "j": b, "k": d, "monomial": list(e), "coeff": str(c)})
        return {"fiber_dim": self.n, "base_dim": self.m, "order": order, "anchor": anchor, "structure_functions": sf}


def jet_expected(jet, vmats, k):
    mons = monomials(jet.m, k)
    idx = {e: i for i, e in enumerate(mons)}
    N = len(mons)
    mv = len(vmats[0])

    def op_matrix(fn):
        out = zeros(N, N)
        for c, e in enumerate(mons):
            for e2, x in fn({e: Fraction(1)}).items():
                if e2 in idx:
                    out[idx[e2]][c] += x
        return out

    action = [madd(kron(op_matrix(lambda f, a=a: jet.X(a, f, k)), ident(mv)), kron(ident(N), vmats[a])) for a in range(jet.n)]

    def ops(i, j):
        out = []
        for d in range(jet.n):
            poly = jet.struct.get((i, j, d))
            if poly:
                out.append((d, kron(op_matrix(lambda f, poly=poly: poly_mul(poly, f, k)), ident(mv))))
        return out

    dims, diffs = koszul(jet.n, N * mv, action, ops)
    for n in range(len(diffs) - 1):
        prod = matmul(diffs[n + 1], diffs[n])
        assert not any(any(r) for r in prod), "jet differential does not square to zero"
    cond = []
    for n in range(jet.n + 1):
        forms = len(list(itertools.combinations(range(jet.n), n)))
        by_p = [None]
        for p in range(1, k + 1):
            rows = []
            for fi in range(forms):
                for mi, e in enumerate(mons):
                    if sum(e) < p:
                        for a in range(mv):
                            row = [Fraction(0)] * dims[n]
                            row[(fi * N + mi) * mv + a] = Fraction(1)
                            rows.append(row)
            by_p.append(rows)
        cond.append(by_p)
    f = Filtered(dims, diffs, cond, k)
    out = {"order": k, "betti": betti(dims, diffs), "e1": f.cells(1)}
    out.update(f.spectral())
    nz = []
    for r in range(1, f.length + 2):
        for p in range(f.length + 1):
            for n in range(f.top + 1):
                rk = f.d_rank(r, p, n)
                if rk:
                    nz.append({"r": r, "from": [p, n - p], "rank": rk})
    out["nonzero_differentials"] = nz
    return out


# ----------------------------------------------------------------- entries

SL2 = Lie(3, {(0, 1): {0: -2}, (1, 2): {2: -2}, (0, 2): {1: 1}}, ["e", "h", "f"])
SO3 = Lie(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}}, ["L1", "L2", "L3"])
AFF1 = Lie(2, {(0, 1): {1: 1}}, ["x", "y"])
HEIS3 = Lie(3, {(0, 1): {2: 1}}, ["x", "y", "z"])
HEIS5 = Lie(5, {(0, 2): {4: 1}, (1, 3): {4: 1}}, ["x1", "x2", "y1", "y2", "z"])
SL2_STD = [F([[0, 1], [0, 0]]), F([[1, 0], [0, -1]]), F([[0, 0], [1, 0]])]
SL2_SEMI = Lie(5, {(0, 1): {0: -2}, (1, 2): {2: -2}, (0, 2): {1: 1},
                   (0, 4): {3: 1}, (1, 3): {3: 1}, (1, 4): {4: -1}, (2, 3): {4: 1}},
               ["e", "h", "f", "u1", "u2"])
AFF1_X_Q = Lie(3, {(0, 1): {1: 1}}, ["x", "y", "c"])


def unit(n, i):
    return [1 if t == i else 0 for t in range(n)]


def val(value, provenance, note=None):
    out = {"value": value, "provenance": provenance}
    if note:
        out["note"] = note
    return out


def lie_entry(name, g, description, betti_prov, note=None):
    dims, diffs = ce(g, trivial_rep(g.dim))
    return {"schema": SCHEMA, "name": name, "kind": "lie", "description": description,
            "payload": {"lie_algebra": g.to_json()},
            "expected": {"betti": val(betti(dims, diffs), betti_prov, note)}}


def hs_entry(name, g, rep, h_cols, description, kind="hs", provenance=None, splitting=None):
    provenance = provenance or {}
    ideal = all(
        col_rank(independent([[Fraction(x) for x in c] for c in h_cols]) + [g.bracket(unit(g.dim, i), [Fraction(x) for x in c])])
        == len(independent([[Fraction(x) for x in c] for c in h_cols]))
        for i in range(g.dim) for c in h_cols)
    exp, f = hs_expected(g, rep, h_cols, ideal)
    payload = {"lie_algebra": g.to_json(rep if rep[1] is not None or any(any(any(r) for r in m) for m in rep[0]) or len(rep[0][0]) > 1 else None)}
    if kind == "extension":
        payload["extension"] = {"ideal": {"basis": [[str(x) for x in c] for c in h_cols]}}
        exp.update(extension_expected(g, rep, h_cols, f))
    else:
        payload["subalgebra"] = {"basis": [[str(x) for x in c] for c in h_cols]}
    expected = {}
    for key, value in exp.items():
        prov, note = provenance.get(key, ("derived", None))
        expected[key] = val(value, prov, note)
    return {"schema": SCHEMA, "name": name, "kind": kind, "description": description,
            "payload": payload, "expected": expected}


def jet_entry(name, jet, orders, description, payload_jet, vmats=None, module=None, provenance=None):
    provenance = provenance or {}
    vmats = vmats or [zeros(1, 1) for _ in range(jet.n)]
    runs = [jet_expected(jet, vmats, k) for k in orders]
    payload = {"jet": payload_jet, "orders": orders}
    if module is not None:
        payload["module"] = module
    prov, note = provenance.get("orders", ("derived", None))
    return {"schema": SCHEMA, "name": name, "kind": "jet", "description": description,
            "payload": payload, "expected": {"orders": val(runs, prov, note)}}


def entries():
    out = []
    for n in range(1, 5):
        out.append(lie_entry(f"abelian_{n}", Lie(n, {}, [f"a{i + 1}" for i in range(n)]),
                             f"abelian Lie algebra of dimension {n}", "trivial", "binomial coefficients"))
    out.append(lie_entry("aff1", AFF1, "affine line algebra [x,y]=y", "derived"))
    out.append(lie_entry("heisenberg3", HEIS3, "Heisenberg algebra [x,y]=z", "derived",
                         "rank of two explicit 3x3 differentials"))
    out.append(lie_entry("sl2", SL2, "sl(2) in the basis e, h, f", "paper",
                         "Whitehead lemma for degrees 1 and 2; ends derived"))
    out.append(lie_entry("so3", SO3, "so(3) structure constants [L_i,L_j]=eps_ijk L_k", "derived",
                         "same vanishing pattern as sl2"))

    triv3 = trivial_rep(3)
    out.append(hs_entry("sl2_cartan", SL2, triv3, [unit(3, 1)],
                        "sl(2) filtered by its Cartan subalgebra span{h}",
                        provenance={"stabilization_page": ("derived", None), "einf": ("derived", None)}))
    out.append(hs_entry("sl2_cartan_standard", SL2, (SL2_STD, ["u1", "u2"]), [unit(3, 1)],
                        "sl(2) with its standard representation, filtered by span{h}"))
    out.append(hs_entry("sl2_full", SL2, triv3, [unit(3, 0), unit(3, 1), unit(3, 2)],
                        "sl(2) filtered by h = g; E_1 is concentrated in column p = 0",
                        provenance={"e1": ("trivial", None)}))
    out.append(hs_entry("heisenberg_center", HEIS3, triv3, [unit(3, 2)],
                        "Heisenberg algebra as a central extension of Q^2 by its center",
                        kind="extension"))
    out.append(hs_entry("heisenberg5_center", HEIS5, trivial_rep(5), [unit(5, 4)],
                        "five-dimensional Heisenberg algebra over its center", kind="extension"))
    out.append(hs_entry("aff1_ideal", AFF1, trivial_rep(2), [unit(2, 1)],
                        "aff(1) with the ideal span{y}; split as modules, class zero", kind="extension"))
    out.append(hs_entry("aff1_ideal_twisted", AFF1, ([F([[1]]), F([[0]])], ["v"]), [unit(2, 1)],
                        "aff(1) over span{y} with coefficients in the character x -> 1", kind="extension"))
    out.append(hs_entry("aff1_product", AFF1_X_Q, trivial_rep(3), [unit(3, 2)],
                        "direct product aff(1) + Q over the central factor; curvature zero",
                        kind="extension", provenance={"extension_class_zero": ("trivial", None),
                                                      "d2_ranks": ("trivial", None)}))
    out.append(hs_entry("sl2_semidirect", SL2_SEMI, trivial_rep(5), [unit(5, 3), unit(5, 4)],
                        "sl(2) acting on Q^2, extension by the abelian ideal Q^2", kind="extension"))

    # jets
    sl2_rep = {"dim": 2, "matrices": [[[str(x) for x in r] for r in m] for m in SL2_STD], "basis": ["u1", "u2"]}
    sl2_action = {"action": dict(SL2.to_json(), representation=sl2_rep), "order": 3}
    out.append(jet_entry("sl2_standard_jet", Jet.action(SL2, SL2_STD), [1, 2, 3],
                         "jets at the origin of the action algebroid sl(2) x Q^2", sl2_action))
    q1 = Lie(1, {}, ["e"])
    scal = {"action": dict(q1.to_json(), representation={"dim": 1, "matrices": [[["1"]]]}), "order": 2}
    out.append(jet_entry("scaling_jet", Jet.action(q1, [F([[1]])]), [2],
                         "Q acting on Q by scaling", scal))
    triv = {"action": dict(q1.to_json(), representation={"dim": 1, "matrices": [[["0"]]]}), "order": 2}
    out.append(jet_entry("trivial_jet", Jet.action(q1, [F([[0]])]), [2],
                         "Q acting trivially on Q; d = 0", triv, provenance={"orders": ("trivial", None)}))
    out.append(jet_entry("scaling_jet_twisted", Jet.action(q1, [F([[1]])]), [1, 2],
                         "Q scaling Q, coefficients in the character e -> 1", scal,
                         vmats=[F([[1]])], module={"dim": 1, "matrices": [[["1"]]]}))
    quad = Jet(1, 1, [[{(2,): Fraction(1)}]], {})
    out.append(jet_entry("quadratic_jet", quad, [2],
                         "anchor w^2 d/dw on Q, trivial bracket; not linearisable", quad.to_json(2)))
    return out


def dump(entry):
    return json.dumps(entry, indent=1, ensure_ascii=False) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data", "catalog"))
    ap.add_argument("dir", nargs="?")
    args = ap.parse_args()
    target = args.dir or args.out
    stale = []
    for e in entries():
        path = os.path.join(target, e["name"] + ".json")
        text = dump(e)
        if args.check:
            try:
                with open(path, encoding="utf-8") as fh:
                    if json.load(fh) != json.loads(text):
                        stale.append(e["name"])
            except FileNotFoundError:
                stale.append(e["name"])
        else:
            os.makedirs(target, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
    if stale:
        print("stale catalog entries: " + ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
