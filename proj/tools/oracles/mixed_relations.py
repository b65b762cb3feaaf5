#!/usr/bin/env python3
"""Independent oracle for the mixed-Jacobi linear system of 3D Manin triples.

For each Bianchi algebra (standard structure constants f), the mixed Jacobi
identities of the double are linear in the nine dual components ft^{ij}_k
(i<j).  This script builds that 27x9 system over exact rationals, reduces it,
and checks the resulting solution space against the known per-algebra linear
relation sets that the C++ test suite freezes as regression data.

Two sign variants of the final term of the identity are compared:

    variant A (used by the implementation):  + ft^{kl}_i f_{ml}^j
    variant B:                               + ft^{kl}_i f_{lm}^j

Only variant A reproduces the known solution spaces and the dimension table
{I:9, II:6, III:4, IV:4, V:6, VI0:4, VIa:4, VII0:4, VIIa:4, VIII:3, IX:3};
variant B is shown to fail, which is why the implementation fixes variant A.

Everything here is brute force over Fractions - no shared code with the C++
implementation.
"""
from fractions import Fraction as Fr
import itertools

# Unknown order: ft^{12}_1, ft^{12}_2, ft^{12}_3, ft^{13}_1, ft^{13}_2,
# ft^{13}_3, ft^{23}_1, ft^{23}_2, ft^{23}_3   (0-based index pairs below).
COLS = [(0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 2, 0), (0, 2, 1), (0, 2, 2),
        (1, 2, 0), (1, 2, 1), (1, 2, 2)]
CIDX = {c: i for i, c in enumerate(COLS)}
NAMES = ["ft^12_1", "ft^12_2", "ft^12_3", "ft^13_1", "ft^13_2", "ft^13_3",
         "ft^23_1", "ft^23_2", "ft^23_3"]

EXPECTED_DIMS = {"I": 9, "II": 6, "III": 4, "IV": 4, "V": 6, "VI0": 4,
                 "VIa": 4, "VII0": 4, "VIIa": 4, "VIII": 3, "IX": 3}


def from_bianchi(a, n1, n2, n3):
    f = [[[Fr(0)] * 3 for _ in range(3)] for _ in range(3)]

    def setf(i, j, k, v):
        f[i][j][k] = Fr(v)
        f[j][i][k] = -Fr(v)

    setf(0, 1, 1, -a)
    setf(0, 1, 2, n3)
    setf(1, 2, 0, n1)
    setf(2, 0, 1, n2)
    setf(2, 0, 2, a)
    return f


def bianchi_params(name, a=Fr(2)):
    table = {"I": (0, 0, 0, 0), "II": (0, 1, 0, 0), "VII0": (0, 1, 1, 0),
             "VI0": (0, 1, -1, 0), "IX": (0, 1, 1, 1), "VIII": (0, 1, 1, -1),
             "V": (1, 0, 0, 0), "IV": (1, 0, 0, 1), "VIIa": (a, 0, 1, 1),
             "III": (1, 0, 1, -1), "VIa": (a, 0, 1, -1)}
    return table[name]


def ft_row(j, k, l):
    """Coefficient row (over the 9 unknowns) of the symbol ft^{jk}_l."""
    row = [Fr(0)] * 9
    if j != k:
        if j < k:
            row[CIDX[(j, k, l)]] += 1
        else:
            row[CIDX[(k, j, l)]] -= 1
    return row


def mixed_system(f, variant_a=True):
    """Rows of the linear system, one per identity instance (j<k, m, i)."""
    rows, ids = [], []
    for (j, k) in [(0, 1), (0, 2), (1, 2)]:
        for m in range(3):
            for i in range(3):
                r = [Fr(0)] * 9
                for l in range(3):
                    for row, c in (
                            (ft_row(j, k, l), f[m][i][l]),
                            (ft_row(k, l, m), f[l][i][j]),
                            (ft_row(j, l, i), f[l][m][k]),
                            (ft_row(j, l, m), f[i][l][k]),
                            (ft_row(k, l, i),
                             f[m][l][j] if variant_a else f[l][m][j])):
                        if c != 0:
                            for t in range(9):
                                r[t] += c * row[t]
                if any(x != 0 for x in r):
                    rows.append(r)
                    ids.append((j, k, m, i))
    return rows, ids


def rref(rows, ncols):
    m = [r[:] for r in rows]
    pivots = []
    lead = 0
    for col in range(ncols):
        piv = next((r for r in range(lead, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        inv = Fr(1) / m[lead][col]
        m[lead] = [x * inv for x in m[lead]]
        for r in range(len(m)):
            if r != lead and m[r][col] != 0:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m[:lead], pivots


def nullspace(rows, ncols=9):
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fr(0)] * ncols
        v[fc] = Fr(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis, pivots, free


def in_space(v, rows):
    return all(sum(c * x for c, x in zip(r, v)) == 0 for r in rows)


# Known linear relation sets, written as homogeneous equations over the nine
# unknowns (dict column -> coefficient).  `a` enters the VIa/VIIa rows.
def known_relations(name, a=Fr(2)):
    a = Fr(a)
    rel = {
        "I": [],
        "II": [{3: 1, 7: -1}, {6: 1}, {0: 1, 8: 1}],
        "III": [{5: 1, 1: -1}, {0: 1, 3: -1}, {2: 1, 1: -1},
                {4: 1, 1: -1}, {8: 1, 7: -1}],
        "IV": [{2: 1}, {1: 1}, {7: 1, 3: 1, 0: 2}, {8: 1, 0: -1}, {5: 1}],
        "V": [{0: 1, 8: -1}, {5: 1, 1: 1}, {7: 1, 3: 1}],
        "VI0": [{5: 1, 1: -1}, {3: 1, 7: -1}, {0: 1, 8: 1}, {4: 1}, {6: 1}],
        "VII0": [{0: 1, 8: 1}, {1: 1, 5: -1}, {7: 1, 3: -1}, {4: 1}, {6: 1}],
        "VIII": [{0: 1, 8: 1}, {3: 1, 7: -1}, {1: 1, 5: -1},
                 {6: 1}, {4: 1}, {2: 1}],
        "IX": [{8: 1, 0: 1}, {7: 1, 3: -1}, {5: 1, 1: -1},
               {6: 1}, {2: 1}, {4: 1}],
        "VIa": [{3: 2 * a, 0: -(a * a + 1), 8: (a * a - 1)},
                {2: 1, 1: -a}, {4: 1, 1: -a}, {5: 1, 1: -1},
                {7: 2 * a, 0: (a * a - 1), 8: -(a * a + 1)}],
        "VIIa": [{4: 1, 5: -a}, {2: 1, 5: a},
                 {8: 2 * a, 7: (a * a - 1), 3: (a * a + 1)},
                 {0: 2 * a, 7: (a * a + 1), 3: (a * a - 1)},
                 {1: 1, 5: -1}],
    }
    out = []
    for eq in rel[name]:
        row = [Fr(0)] * 9
        for c, v in eq.items():
            row[c] = Fr(v)
        out.append(row)
    return out


def spaces_equal(rows1, rows2):
    b1, _, _ = nullspace(rows1)
    b2, _, _ = nullspace(rows2)
    return (len(b1) == len(b2)
            and all(in_space(v, rows2) for v in b1)
            and all(in_space(v, rows1) for v in b2))


def main():
    ok = True
    a_samples = [Fr(2), Fr(3), Fr(5), Fr(1, 2)]
    for name in ["I", "II", "III", "IV", "V", "VI0", "VIa", "VII0", "VIIa",
                 "VIII", "IX"]:
        avals = a_samples if name in ("VIa", "VIIa") else [Fr(2)]
        for a in avals:
            f = from_bianchi(*bianchi_params(name, a))
            rows_a, _ = mixed_system(f, variant_a=True)
            rows_b, _ = mixed_system(f, variant_a=False)
            basis, pivots, free = nullspace(rows_a)
            dim_a = len(basis)
            dim_b = len(nullspace(rows_b)[0])
            match = spaces_equal(rows_a, known_relations(name, a))
            tag = f"{name}" + (f"@a={a}" if name in ("VIa", "VIIa") else "")
            print(f"{tag:12s} dimA={dim_a} dimB={dim_b} "
                  f"expected={EXPECTED_DIMS[name]} knownspace={'OK' if match else 'MISMATCH'} "
                  f"free={[NAMES[c] for c in free]}")
            if dim_a != EXPECTED_DIMS[name] or not match:
                ok = False

    # The three-parameter solution family for VIII used by the end-to-end
    # worked example:  ft^12_1=-al, ft^12_2=be, ft^23_2=ga, ft^23_3=al,
    # ft^13_1=ga, ft^13_3=be.  It must solve variant A identically and
    # violate variant B at a generic point.
    f8 = from_bianchi(*bianchi_params("VIII"))
    rows_a, _ = mixed_system(f8, variant_a=True)
    rows_b, _ = mixed_system(f8, variant_a=False)
    for (al, be, ga) in [(1, 1, 1), (2, -3, 5), (0, 1, 0)]:
        v = [Fr(0)] * 9
        v[0], v[1], v[7], v[8], v[3], v[5] = (Fr(-al), Fr(be), Fr(ga),
                                              Fr(al), Fr(ga), Fr(be))
        if not in_space(v, rows_a):
            print(f"VIII family point {(al, be, ga)}: NOT in variant-A space")
            ok = False
    v = [Fr(0)] * 9
    v[0], v[1], v[7], v[8], v[3], v[5] = (Fr(-1), Fr(1), Fr(1), Fr(1),
                                          Fr(1), Fr(1))
    if in_space(v, rows_b):
        print("variant B unexpectedly admits the VIII family")
        ok = False
    else:
        print("VIII family: solves variant A identically, violates variant B (as expected)")

    print("RESULT:", "OK" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
