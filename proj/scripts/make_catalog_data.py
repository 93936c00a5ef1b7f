#!/usr/bin/env python3
"""Regenerate the structure-constant files under data/catalog.

Every algebra is built from a textbook construction over GF(2):

  W(m; n)   divided-power Witt algebra, elements x^(a) d_i
  P(n), H(n) Poisson algebra on divided powers modulo constants, bracket
            {f, g} = sum_pq w_pq d_p(f) d_q(g); P uses the identity form,
            H the standard symplectic one
  V_8       traceless skew-Hermitian 3x3 matrices over GF(4) seen as GF(2)-matrices

Derived algebras are taken where the construction has a codimension-one ideal.
The output is checked here only for the Jacobi identity and the dimension; the
C++ catalog loader re-validates simplicity, and the acceptance suite compares
grading signatures and superization dimensions with the reference tables.

Usage: scripts/make_catalog_data.py [output-dir]
"""

import itertools
import json
import sys
from math import comb
from pathlib import Path


class Algebra:
    def __init__(self, n, table):
        self.n = n
        self.table = table  # table[i][j] = bitmask of [b_i, b_j]

    def bracket(self, x, y):
        r = 0
        for i in range(self.n):
            if x >> i & 1:
                row = self.table[i]
                for j in range(self.n):
                    if y >> j & 1:
                        r ^= row[j]
        return r

    def jacobi_ok(self):
        n = self.n
        for i in range(n):
            if self.table[i][i]:
                return False
            for j in range(n):
                if self.table[i][j] != self.table[j][i]:
                    return False
        for i, j, k in itertools.combinations(range(n), 3):
            x, y, z = 1 << i, 1 << j, 1 << k
            s = (self.bracket(self.bracket(x, y), z) ^ self.bracket(self.bracket(y, z), x)
                 ^ self.bracket(self.bracket(z, x), y))
            if s:
                return False
        return True


def rref(vectors):
    """Reduced echelon basis, pivot = lowest set bit, sorted by pivot."""
    rows = []
    for v in vectors:
        for p, r in rows:
            if v >> p & 1:
                v ^= r
        if v:
            p = (v & -v).bit_length() - 1
            rows = [(q, r ^ v if r >> p & 1 else r) for q, r in rows]
            rows.append((p, v))
    return sorted(rows)


def coordinates(rows, v):
    c = 0
    for idx, (p, r) in enumerate(rows):
        if v >> p & 1:
            v ^= r
            c |= 1 << idx
    if v:
        raise ValueError("vector outside the span")
    return c


def restrict(alg, vectors):
    rows = rref(vectors)
    basis = [r for _, r in rows]
    m = len(basis)
    table = [[coordinates(rows, alg.bracket(basis[a], basis[b])) for b in range(m)] for a in range(m)]
    return Algebra(m, table)


def quotient(alg, ideal_vectors):
    ideal = rref(ideal_vectors)

    def reduce(v):
        for p, r in ideal:
            if v >> p & 1:
                v ^= r
        return v

    pivots = {p for p, _ in ideal}
    free = [i for i in range(alg.n) if i not in pivots]
    index = {f: k for k, f in enumerate(free)}

    def coords(v):
        v = reduce(v)
        c = 0
        for i in range(alg.n):
            if v >> i & 1:
                c |= 1 << index[i]
        return c

    table = [[coords(alg.bracket(1 << a, 1 << b)) for b in free] for a in free]
    return Algebra(len(free), table)


def derived(alg):
    vs = [alg.table[i][j] for i in range(alg.n) for j in range(i + 1, alg.n)]
    return restrict(alg, vs)


def center(alg):
    z = []
    for x in range(1, 1 << alg.n):
        if all(alg.bracket(x, 1 << j) == 0 for j in range(alg.n)):
            z.append(x)
    return rref(z)


# divided powers ------------------------------------------------------------

def monomials(ns):
    return list(itertools.product(*[range(2 ** k) for k in ns]))


def dp_product(a, b, ns):
    c = tuple(x + y for x, y in zip(a, b))
    if any(ci >= 2 ** k for ci, k in zip(c, ns)):
        return None
    coeff = 1
    for x, y in zip(a, b):
        coeff *= comb(x + y, x)
    return c if coeff % 2 else None


def lower(a, p):
    if a[p] == 0:
        return None
    b = list(a)
    b[p] -= 1
    return tuple(b)


def witt(ns):
    m = len(ns)
    elems = [(a, i) for a in monomials(ns) for i in range(m)]
    index = {e: k for k, e in enumerate(elems)}
    n = len(elems)

    def apply(a, i, b):  # x^(a) d_i applied to x^(b)
        db = lower(b, i)
        return None if db is None else dp_product(a, db, ns)

    table = [[0] * n for _ in range(n)]
    for k1, (a, i) in enumerate(elems):
        for k2, (b, j) in enumerate(elems):
            r = 0
            c = apply(a, i, b)
            if c is not None:
                r ^= 1 << index[(c, j)]
            c = apply(b, j, a)
            if c is not None:
                r ^= 1 << index[(c, i)]
            table[k1][k2] = r
    return Algebra(n, table)


def poisson(ns, omega):
    m = len(ns)
    elems = [a for a in monomials(ns) if any(a)]
    index = {a: k for k, a in enumerate(elems)}
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            r = 0
            for p in range(m):
                for q in range(m):
                    if not omega[p][q]:
                        continue
                    da, db = lower(a, p), lower(b, q)
                    if da is None or db is None:
                        continue
                    c = dp_product(da, db, ns)
                    if c is not None and c in index:
                        r ^= 1 << index[c]
            table[i][j] = r
    return Algebra(n, table)


def identity_form(m):
    return [[int(p == q) for q in range(m)] for p in range(m)]


def symplectic_form(m):
    half = m // 2
    return [[int(q == p + half or p == q + half) for q in range(m)] for p in range(m)]


def simple_part(alg):
    """Iterate derived algebras and divide out the center until stable."""
    while True:
        d = derived(alg)
        if d.n < alg.n:
            alg = d
            continue
        z = center(alg)
        if z:
            alg = quotient(alg, [r for _, r in z])
            continue
        return alg


# matrices ------------------------------------------------------------------

def mat_mul(x, y, k):
    out = 0
    for i in range(k):
        for j in range(k):
            s = 0
            for t in range(k):
                s ^= (x >> (i * k + t) & 1) & (y >> (t * k + j) & 1)
            out |= s << (i * k + j)
    return out


def matrix_closure(mats, k):
    rows = rref(mats)
    changed = True
    while changed:
        changed = False
        basis = [r for _, r in rows]
        for x in basis:
            for y in basis:
                z = mat_mul(x, y, k) ^ mat_mul(y, x, k)
                for p, r in rows:
                    if z >> p & 1:
                        z ^= r
                if z:
                    rows = rref([r for _, r in rows] + [z])
                    changed = True
        basis = [r for _, r in rows]
    basis = [r for _, r in rows]
    m = len(basis)
    table = [[coordinates(rows, mat_mul(basis[a], basis[b], k) ^ mat_mul(basis[b], basis[a], k))
              for b in range(m)] for a in range(m)]
    return Algebra(m, table)


def su3_over_f4():
    # GF(4) = GF(2)[w]/(w^2+w+1), element a + b w; Frobenius a + b w -> (a+b) + b w
    def mult(a, b):  # multiplication matrix on the basis 1, w
        return [[a, b], [b, a ^ b]]

    def conj(a, b):
        return (a ^ b, b)

    def embed(f):
        v = 0
        for i in range(3):
            for j in range(3):
                blk = mult(*f[i][j])
                for r in range(2):
                    for c in range(2):
                        if blk[r][c]:
                            v |= 1 << ((2 * i + r) * 6 + 2 * j + c)
        return v

    zero, one, w = (0, 0), (1, 0), (0, 1)

    def herm(entries):
        f = [[zero] * 3 for _ in range(3)]
        for (i, j), x in entries.items():
            f[i][j] = x
            if i != j:
                f[j][i] = conj(*x)
        return f

    basis = [herm({(0, 0): one, (1, 1): one}), herm({(1, 1): one, (2, 2): one})]
    for ij in [(0, 1), (0, 2), (1, 2)]:
        basis.append(herm({ij: one}))
        basis.append(herm({ij: w}))
    return matrix_closure([embed(f) for f in basis], 6)


# output --------------------------------------------------------------------

ENTRIES = [
    # id, names, builder, source note
    ("L_7_1", ["W(3)"], lambda: simple_part(witt((3,))),
     "derived algebra of the divided-power Witt algebra W(1;3)"),
    ("L_7_2", ["V_7", "P(1,2)"], lambda: simple_part(poisson((1, 2), identity_form(2))),
     "Poisson algebra P(1,2), identity form, modulo constants"),
    ("L_8_1", ["A_2", "W(1,1)", "Q(1,1,1)"], lambda: simple_part(witt((1, 1))),
     "divided-power Witt algebra W(2;(1,1))"),
    ("L_8_2", ["V_8"], su3_over_f4,
     "Lie closure of the skew-Hermitian traceless 3x3 matrices over GF(4)"),
    ("L_14_3", ["S(2,2)"], lambda: simple_part(poisson((2, 2), symplectic_form(2))),
     "Hamiltonian algebra H(2;(2,2)), derived modulo center"),
    ("L_14_4", ["P(1,1,1,1)", "Kap_1(4)"], lambda: simple_part(poisson((1, 1, 1, 1), identity_form(4))),
     "Poisson algebra P(1,1,1,1), identity form, derived modulo center"),
    ("L_14_5", ["A_3", "B_3", "C_3", "G_2", "S(1,1,1)", "H(1,1,1,1)"],
     lambda: simple_part(poisson((1, 1, 1, 1), symplectic_form(4))),
     "Hamiltonian algebra H(4;(1,1,1,1)), derived modulo center"),
    ("L_15_2", ["W(4)"], lambda: simple_part(witt((4,))),
     "derived algebra of the divided-power Witt algebra W(1;4)"),
    ("L_15_4", ["P(2,1,1)"], lambda: simple_part(poisson((2, 1, 1), identity_form(3))),
     "Poisson algebra P(2,1,1), identity form, modulo constants"),
    ("L_15_5", ["P(3,1)"], lambda: simple_part(poisson((3, 1), identity_form(2))),
     "Poisson algebra P(3,1), identity form, modulo constants"),
    ("L_15_6", ["P(2,2)"], lambda: simple_part(poisson((2, 2), identity_form(2))),
     "Poisson algebra P(2,2), identity form, modulo constants"),
    ("L_16_2", ["W(2,1)", "Q(2,1,1)"], lambda: simple_part(witt((2, 1))),
     "divided-power Witt algebra W(2;(2,1))"),
]

TENSORS = [
    ("L_14_1", ["W(3) (x) F_4"], "L_7_1", 2),
    ("L_14_2", ["V_7 (x) F_4"], "L_7_2", 2),
    ("L_16_1", ["W(1,1) (x) F_4", "A_2 (x) F_4", "V_8 (x) F_4"], "L_8_1", 2),
]


def to_document(alg, label):
    brackets = []
    for i in range(alg.n):
        for j in range(i + 1, alg.n):
            r = alg.table[i][j]
            if r:
                brackets.append([i, j, [k for k in range(alg.n) if r >> k & 1]])
    return {"dim": alg.n, "label": label, "brackets": brackets}


def write_document(doc, path):
    lines = ["{", f'  "dim": {doc["dim"]},', f'  "label": {json.dumps(doc["label"])},', '  "brackets": [']
    items = [f"    [{i}, {j}, [{', '.join(map(str, ks))}]]" for i, j, ks in doc["brackets"]]
    lines.append(",\n".join(items))
    lines += ["  ]", "}"]
    path.write_text("\n".join(lines) + "\n")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog"
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for ident, names, build, note in ENTRIES:
        alg = build()
        want = int(ident.split("_")[1])
        if alg.n != want or not alg.jacobi_ok():
            print(f"skip {ident}: got dimension {alg.n}", file=sys.stderr)
            continue
        write_document(to_document(alg, ident), out / f"{ident}.json")
        index.append({"id": ident, "names": names, "provenance": "user-file",
                      "file": f"{ident}.json", "source": note})
        print(f"{ident}: dim {alg.n}", file=sys.stderr)
    for ident, names, base, degree in TENSORS:
        index.append({"id": ident, "names": names, "provenance": "tensor-construction",
                      "tensor_of": base, "degree": degree,
                      "source": f"{base} tensored with GF(2^{degree})"})
    (out / "index.json").write_text(json.dumps({"entries": index}, indent=2) + "\n")


if __name__ == "__main__":
    main()
