#!/usr/bin/env python3
"""Regenerates data/exceptional/*.json, the generator records for the
exceptional complex reflection groups G4..G28.

Models used:
  * rank 2 (G4..G22): scalar extensions and character twists of the binary
    tetrahedral / octahedral / icosahedral groups, mapped to U(2) via the
    usual quaternion embedding q = a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]].
  * G23 (H3): reflections in three icosahedral mirror normals over Q(zeta_5).
  * G24: Klein's simple group of order 168 times -1, in the classical
    circulant model over Q(zeta_7).
  * G25/G26: the Hessian groups, unitary reflections of order 3 over Q(zeta_3).
  * G27: the Valentiner group, generated by two icosahedral mirrors plus the
    complex reflection with root (1, omega, 0) over Q(zeta_15).
  * G28 (F4): rational reflections in the standard F4 simple roots.

Generator sets are minimized by a search over the group's reflections (float
arithmetic picks candidates; every emitted matrix is exact). The engine
re-validates each record on load: the closure must reach declared_order
exactly, and the acceptance suite pins the per-class (e_H, f_H, d_H) data.

Usage: python3 tools/gen_exceptional_data.py [outdir]   (default: data/exceptional)
"""
import json
import os
import sys
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd

import numpy as np

# ---------------------------------------------------------------- cyclotomics

def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)

def _poly_div_exact(a, b):
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        f = c // lb
        q[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    assert all(x == 0 for x in a)
    return q

@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)

@lru_cache(maxsize=None)
def _reduction(n):
    phi = totient(n)
    Phi = cyclotomic_poly(n)
    rows = []
    for k in range(phi):
        v = [Fraction(0)] * phi
        v[k] = Fraction(1)
        rows.append(v)
    for k in range(phi, 2 * phi - 1):
        prev = rows[k - 1]
        v = [Fraction(0)] * phi
        for i in range(phi - 1):
            v[i + 1] = prev[i]
        top = prev[phi - 1]
        if top:
            for i in range(phi):
                v[i] -= top * Phi[i]
        rows.append(v)
    return tuple(tuple(r) for r in rows)

class Cyc:
    """Element of Q(zeta_n) in the reduced power basis."""
    __slots__ = ("n", "c")

    def __init__(self, n, c):
        self.n = n
        self.c = tuple(c)

    @staticmethod
    def zero(n):
        return Cyc(n, (Fraction(0),) * totient(n))

    @staticmethod
    def from_rat(n, q):
        v = [Fraction(0)] * totient(n)
        v[0] = Fraction(q)
        return Cyc(n, v)

    @staticmethod
    def root(n, k=1):
        k %= n
        phi = totient(n)
        cur = [Fraction(0)] * phi
        cur[0] = Fraction(1)
        Phi = cyclotomic_poly(n)
        for _ in range(k):
            top = cur[phi - 1]
            nxt = [Fraction(0)] * phi
            for i in range(phi - 1):
                nxt[i + 1] = cur[i]
            if top:
                for i in range(phi):
                    nxt[i] -= top * Phi[i]
            cur = nxt
        return Cyc(n, cur)

    def __add__(self, o):
        return Cyc(self.n, tuple(a + b for a, b in zip(self.c, o.c)))

    def __sub__(self, o):
        return Cyc(self.n, tuple(a - b for a, b in zip(self.c, o.c)))

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.c))

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Cyc(self.n, tuple(a * Fraction(o) for a in self.c))
        phi = len(self.c)
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        tab = _reduction(self.n)
        out = [Fraction(0)] * phi
        for k, p in enumerate(prod):
            if p:
                row = tab[k]
                for i in range(phi):
                    if row[i]:
                        out[i] += p * row[i]
        return Cyc(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, o):
        return self.n == o.n and self.c == o.c

    def __hash__(self):
        return hash((self.n, self.c))

    def conj(self):
        out = Cyc.zero(self.n)
        for i, a in enumerate(self.c):
            if a:
                out = out + Cyc.root(self.n, (i * (self.n - 1)) % self.n) * a
        return out

    def inv(self):
        # extended euclid against Phi_n
        def deg(p):
            d = len(p) - 1
            while d >= 0 and p[d] == 0:
                d -= 1
            return d
        r0 = [Fraction(x) for x in cyclotomic_poly(self.n)]
        r1 = [Fraction(x) for x in self.c]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while deg(r1) > 0:
            rem, s = list(r0), list(s0)
            d1 = deg(r1)
            lead = r1[d1]
            while deg(rem) >= d1:
                dr = deg(rem)
                c = rem[dr] / lead
                shift = dr - d1
                if len(s) < len(s1) + shift:
                    s += [Fraction(0)] * (len(s1) + shift - len(s))
                for i in range(d1 + 1):
                    rem[i + shift] -= c * r1[i]
                for i in range(len(s1)):
                    s[i + shift] -= c * s1[i]
            r0, s0, r1, s1 = r1, s1, rem, s
        lead = r1[deg(r1)]
        out = Cyc.zero(self.n)
        for i, a in enumerate(s1):
            if a:
                out = out + Cyc.root(self.n, i % self.n) * (a / lead)
        return out

    def embed(self, m):
        out = Cyc.zero(m)
        k = m // self.n
        for i, a in enumerate(self.c):
            if a:
                out = out + Cyc.root(m, (i * k) % m) * a
        return out

    def to_complex(self):
        z = np.exp(2j * np.pi / self.n)
        return sum(complex(a) * z ** i for i, a in enumerate(self.c))

def mat_mul(A, B):
    r = len(A)
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(1, r)), A[i][0] * B[0][j])
                       for j in range(r)) for i in range(r))

def mat_scalar(n, r, s):
    zero = Cyc.zero(n)
    return tuple(tuple(s if i == j else zero for j in range(r)) for i in range(r))

def mat_inv(A):
    n, r = A[0][0].n, len(A)
    one = Cyc.from_rat(n, 1)
    zero = Cyc.zero(n)
    M = [list(row) + [one if i == j else zero for j in range(r)] for i, row in enumerate(A)]
    for col in range(r):
        piv = next(i for i in range(col, r) if any(M[i][col].c))
        M[col], M[piv] = M[piv], M[col]
        pinv = M[col][col].inv()
        M[col] = [x * pinv for x in M[col]]
        for i in range(r):
            if i != col and any(M[i][col].c):
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return tuple(tuple(row[r:]) for row in M)

# ------------------------------------------------------------ quaternion part

def quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

def quat_list_2T():
    q = []
    for i in range(4):
        for s in (1, -1):
            v = [Fraction(0)] * 4
            v[i] = Fraction(s)
            q.append(tuple(v))
    h = Fraction(1, 2)
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    q.append((s0 * h, s1 * h, s2 * h, s3 * h))
    return q

def quat_list_2O_extra():
    out = []
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append((i, j, si, sj))
    return out

def _perm_parity(p):
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if not seen[i]:
            j, cl = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                cl += 1
            parity ^= (cl - 1) & 1
    return parity

def quat_list_2I_extra():
    out = []
    for p in (p for p in permutations(range(4)) if _perm_parity(p) == 0):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    v = [None] * 4
                    v[p[0]] = ("0", 1)
                    v[p[1]] = ("1", s1)
                    v[p[2]] = ("it", s2)
                    v[p[3]] = ("t", s3)
                    out.append(tuple(v))
    return out

def ii(n):
    return Cyc.root(n, n // 4)

def sqrt2_inv(n):
    return (Cyc.root(n, n // 8) + Cyc.root(n, n - n // 8)) * Fraction(1, 2)

def tau(n):
    s5 = Cyc.from_rat(n, 1) + (Cyc.root(n, n // 5) + Cyc.root(n, n - n // 5)) * 2
    return (Cyc.from_rat(n, 1) + s5) * Fraction(1, 2)

def quat_to_mat(q, n):
    a, b, c, d = (Cyc.from_rat(n, x) for x in q)
    i = ii(n)
    return ((a + b * i, c + d * i), (-c + d * i, a - b * i))

def quat2O_extra_to_mat(sym, n):
    i_, j_, si, sj = sym
    s2 = sqrt2_inv(n)
    vals = [Cyc.zero(n)] * 4
    vals[i_] = s2 * si
    vals[j_] = s2 * sj
    a, b, c, d = vals
    i = ii(n)
    return ((a + b * i, c + d * i), (-c + d * i, a - b * i))

def quat2I_extra_to_mat(sym, n):
    vals = []
    t = tau(n)
    tinv = t - Cyc.from_rat(n, 1)
    for tag, s in sym:
        if tag == "0":
            vals.append(Cyc.zero(n))
        elif tag == "1":
            vals.append(Cyc.from_rat(n, Fraction(s, 2)))
        elif tag == "it":
            vals.append(tinv * Fraction(s, 2))
        else:
            vals.append(t * Fraction(s, 2))
    a, b, c, d = vals
    i = ii(n)
    return ((a + b * i, c + d * i), (-c + d * i, a - b * i))

CONDUCTOR = {"G4": 12, "G5": 12, "G6": 12, "G7": 12,
             "G8": 8, "G9": 8, "G10": 24, "G11": 24, "G12": 8, "G13": 8, "G14": 24, "G15": 24,
             "G16": 20, "G17": 20, "G18": 60, "G19": 60, "G20": 60, "G21": 60, "G22": 20}

ORDER = {"G4": 24, "G5": 72, "G6": 48, "G7": 144, "G8": 96, "G9": 192, "G10": 288,
         "G11": 576, "G12": 48, "G13": 96, "G14": 144, "G15": 288,
         "G16": 600, "G17": 1200, "G18": 1800, "G19": 3600, "G20": 360, "G21": 720,
         "G22": 240, "G23": 120, "G24": 336, "G25": 648, "G26": 1296, "G27": 2160,
         "G28": 1152}

def rank2_elements(name):
    """Full element set of the rank-2 group, exactly."""
    n = CONDUCTOR[name]
    mu = lambda m: [Cyc.root(n, (n // m) * k) for k in range(m)]
    if name in ("G4", "G5", "G6", "G7"):
        w = (Fraction(-1, 2),) * 4
        winv = (Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
        omega = Cyc.root(n, n // 3)
        one = Cyc.from_rat(n, 1)
        def chi(q):
            if sum(1 for x in q if x != 0) == 1:
                return one
            return omega if sum(1 for x in quat_mul(q, winv) if x != 0) == 1 else omega * omega
        base = [mat_mul(mat_scalar(n, 2, chi(q)), quat_to_mat(q, n)) for q in quat_list_2T()]
        scal = {"G4": 1, "G5": 3, "G6": 4, "G7": 12}[name]
    elif name in ("G8", "G9", "G10", "G11", "G12", "G13", "G14", "G15"):
        twist = {"G8": Cyc.root(n, n // 8), "G10": Cyc.root(n, n // 8),
                 "G12": ii(n), "G14": ii(n)}.get(name, Cyc.from_rat(n, 1))
        base = [quat_to_mat(q, n) for q in quat_list_2T()]
        base += [mat_mul(mat_scalar(n, 2, twist), quat2O_extra_to_mat(s, n))
                 for s in quat_list_2O_extra()]
        scal = {"G8": 4, "G9": 8, "G10": 12, "G11": 24, "G12": 1, "G13": 4,
                "G14": 6, "G15": 12}[name]
    else:
        base = [quat_to_mat(q, n) for q in quat_list_2T()]
        base += [quat2I_extra_to_mat(s, n) for s in quat_list_2I_extra()]
        scal = {"G16": 10, "G17": 20, "G18": 30, "G19": 60, "G20": 6, "G21": 12,
                "G22": 4}[name]
    out = set()
    for z in mu(scal):
        Z = mat_scalar(n, 2, z)
        for M in base:
            out.add(mat_mul(Z, M))
    assert len(out) == ORDER[name], (name, len(out))
    return list(out)

# ---------------------------------------------------------------- rank 3 and 4

def reflection_order2_real(normal, n):
    r = len(normal)
    aa = sum((normal[k] * normal[k] for k in range(1, r)), normal[0] * normal[0])
    aainv = aa.inv()
    return tuple(tuple((Cyc.from_rat(n, 1 if i == j else 0)) - normal[i] * normal[j] * aainv * 2
                       for j in range(r)) for i in range(r))

def reflection_unitary(root, eig, n):
    r = len(root)
    conj = [a.conj() for a in root]
    aa = sum((root[k] * conj[k] for k in range(1, r)), root[0] * conj[0])
    c = (Cyc.from_rat(n, 1) - eig) * aa.inv()
    return tuple(tuple((Cyc.from_rat(n, 1 if i == j else 0)) - c * root[i] * conj[j]
                       for j in range(r)) for i in range(r))

def g23_gens(n=5):
    t = tau(n)
    one, zero = Cyc.from_rat(n, 1), Cyc.zero(n)
    h = Fraction(1, 2)
    normals = [(one, zero, zero),
               (t * h, one * h, (t - one) * h),
               (zero, one, zero)]
    return [reflection_order2_real(v, n) for v in normals]

def g28_gens(n=1):
    one, zero = Cyc.from_rat(n, 1), Cyc.zero(n)
    h = Cyc.from_rat(n, Fraction(1, 2))
    roots = [(zero, one, -one, zero), (zero, zero, one, -one),
             (zero, zero, zero, one), (h, -h, -h, -h)]
    return [reflection_order2_real(v, n) for v in roots]

def g25_g26_gens(which, n=3):
    om = Cyc.root(n, 1)
    one, zero = Cyc.from_rat(n, 1), Cyc.zero(n)
    r1 = reflection_unitary((zero, zero, one), om, n)
    r2 = reflection_unitary((one, one, one), om, n)
    if which == "G25":
        r3 = reflection_unitary((one, om, one), om, n)
        return [r1, r2, r3]
    s23 = ((one, zero, zero), (zero, zero, one), (zero, one, zero))
    return [r1, r2, s23]

def g24_gens(n=7):
    z = lambda k: Cyc.root(n, k % n)
    a, b, c = z(1) - z(6), z(2) - z(5), z(4) - z(3)
    sqm7 = Cyc.from_rat(n, 1) + (z(1) + z(2) + z(4)) * 2
    inv = sqm7 * Fraction(-1, 7)
    S = tuple(tuple(x * inv for x in row) for row in ((a, b, c), (b, c, a), (c, a, b)))
    T = ((z(4), Cyc.zero(n), Cyc.zero(n)),
         (Cyc.zero(n), z(2), Cyc.zero(n)),
         (Cyc.zero(n), Cyc.zero(n), z(1)))
    Ti = mat_inv(T)
    c1 = mat_mul(mat_mul(T, S), Ti)
    c2 = mat_mul(mat_mul(T, c1), Ti)
    return [S, c1, c2]

def g27_gens(n=15):
    g23 = [tuple(tuple(x.embed(n) for x in row) for row in M) for M in g23_gens(5)]
    om = Cyc.root(n, 5)
    one, zero = Cyc.from_rat(n, 1), Cyc.zero(n)
    rho = reflection_unitary((one, om, zero), Cyc.from_rat(n, -1), n)
    return [g23[0], g23[1], rho]

# -------------------------------------------------------------- emitter logic

def tonp(M):
    return np.array([[x.to_complex() for x in row] for row in M])

def float_closure_size(gens_np, limit):
    r = gens_np[0].shape[0]
    key = lambda M: tuple(np.round(M, 5).ravel().view(float))
    idm = np.eye(r, dtype=complex)
    seen = {key(idm)}
    frontier = [idm]
    while frontier:
        nxt = []
        for M in frontier:
            for g in gens_np:
                P = M @ g
                k = key(P)
                if k not in seen:
                    if len(seen) >= limit:
                        return None
                    seen.add(k)
                    nxt.append(P)
        frontier = nxt
    return len(seen)

def is_reflection_np(M):
    vals = np.linalg.eigvals(M)
    return sum(1 for v in vals if abs(v - 1) < 1e-8) == M.shape[0] - 1

def elem_order_np(M, maxo=130):
    P = M.copy()
    for k in range(1, maxo + 1):
        if np.allclose(P, np.eye(M.shape[0]), atol=1e-8):
            return k
        P = P @ M
    return maxo + 1

def mat_key(M):
    return tuple((c.numerator, c.denominator) for row in M for x in row for c in x.c)

def pick_generators(els, order):
    """Deterministic search for 2..4 reflections generating the group."""
    refl = sorted((M for M in els if is_reflection_np(tonp(M))), key=mat_key)
    byord = {}
    for M in refl:
        byord.setdefault(elem_order_np(tonp(M)), []).append(M)
    strat = []
    for take in range(6):
        for o in sorted(byord):
            if take < len(byord[o]):
                strat.append(byord[o][take])
    npr = [tonp(M) for M in strat]
    K = min(len(strat), 14)
    for size in (2, 3, 4):
        from itertools import combinations
        for idx in combinations(range(K), size):
            if float_closure_size([npr[i] for i in idx], order + 40) == order:
                return [strat[i] for i in idx]
    raise RuntimeError("no generating reflections found")

def rat_str(q):
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)

def emit(outdir, name, conductor, rank, order, gens):
    rec = {
        "name": name,
        "declared_order": order,
        "conductor": conductor,
        "rank": rank,
        "generators": [
            [[[rat_str(c) for c in entry.c] for entry in row] for row in M] for M in gens
        ],
    }
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, f"{name}.json"), "w") as f:
        json.dump(rec, f, indent=1)
    print(f"wrote {name}: rank={rank} cond={conductor} order={order} gens={len(gens)}")

def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "data/exceptional"
    emit(outdir, "G23", 5, 3, 120, g23_gens())
    emit(outdir, "G28", 1, 4, 1152, g28_gens())
    emit(outdir, "G25", 3, 3, 648, g25_g26_gens("G25"))
    emit(outdir, "G26", 3, 3, 1296, g25_g26_gens("G26"))
    emit(outdir, "G24", 7, 3, 336, g24_gens())
    emit(outdir, "G27", 15, 3, 2160, g27_gens())
    for name in sorted(CONDUCTOR, key=lambda s: int(s[1:])):
        els = rank2_elements(name)
        gens = pick_generators(els, ORDER[name])
        emit(outdir, name, CONDUCTOR[name], 2, ORDER[name], gens)

if __name__ == "__main__":
    main()
