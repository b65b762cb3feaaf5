#!/usr/bin/env python3
"""Independent oracle for bounded equivalence-witness searches between
3D Manin triples.

A triple is a pair (f, g) of 3x3x3 antisymmetric tensors: f = brackets of the
first subalgebra (lower indices), g[i][j][k] = ft^{ij}_k = brackets of the
dual.  A basis change A acts by

    f'_ij^k = A^m_i A^n_j f_mn^p (A^-1)^k_p,      g' = L(g, (A^-1)^T)

where L is the same lower-index transformation applied to g.  The search
enumerates invertible A with entries in {p/q : |p| <= bound, q in {1,2}} and
returns a first exact witness mapping triple1 to triple2, pruning candidates
column-by-column via the target bracket relations.

Run as a script, this freezes the existence answers used by the C++ tests:
which self-duality and worked-example reductions admit witnesses at which
bound.  Results are re-verified exactly before being reported.
"""
from fractions import Fraction as Fr
import itertools

# ---------------------------------------------------------------- tensors


def zero3():
    return [[[Fr(0)] * 3 for _ in range(3)] for _ in range(3)]


def tensor(entries):
    """entries: dict (i,j,k) -> value with i<j, 0-based; antisym completion."""
    f = zero3()
    for (i, j, k), v in entries.items():
        assert i < j
        f[i][j][k] = Fr(v)
        f[j][i][k] = -Fr(v)
    return f


def bianchi(a, n1, n2, n3):
    return tensor({(0, 1, 1): -Fr(a), (0, 1, 2): Fr(n3), (1, 2, 0): Fr(n1),
                   (0, 2, 1): -Fr(n2), (0, 2, 2): -Fr(a)})


def t_eq(x, y):
    return x == y


def det3(A):
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


def inv3(A):
    d = det3(A)
    assert d != 0
    c = [[(A[(j + 1) % 3][(i + 1) % 3] * A[(j + 2) % 3][(i + 2) % 3]
           - A[(j + 1) % 3][(i + 2) % 3] * A[(j + 2) % 3][(i + 1) % 3]) / d
          for j in range(3)] for i in range(3)]
    return c


def transpose(A):
    return [[A[j][i] for j in range(3)] for i in range(3)]


def change_basis(f, A):
    Ai = inv3(A)
    out = zero3()
    for i in range(3):
        for j in range(3):
            for k in range(3):
                s = Fr(0)
                for m in range(3):
                    for n in range(3):
                        if A[m][i] == 0 or A[n][j] == 0:
                            continue
                        for p in range(3):
                            if f[m][n][p] != 0:
                                s += A[m][i] * A[n][j] * f[m][n][p] * Ai[k][p]
                out[i][j][k] = s
    return out


def transform(triple, A):
    f, g = triple
    B = transpose(inv3(A))
    return (change_basis(f, A), change_basis(g, B))


def dual(triple):
    f, g = triple
    return ([[list(col) for col in row] for row in g],
            [[list(col) for col in row] for row in f])


# ---------------------------------------------------------------- search


def values(bound):
    vals = [Fr(0)]
    for m in range(1, bound + 1):
        vals += [Fr(m), Fr(-m)]
    for p in range(1, bound + 1, 2):
        vals += [Fr(p, 2), Fr(-p, 2)]
    return vals


def bracket(f, u, v):
    w = [Fr(0)] * 3
    for i in range(3):
        if u[i] == 0:
            continue
        for j in range(3):
            if v[j] == 0:
                continue
            for k in range(3):
                if f[i][j][k] != 0:
                    w[k] += u[i] * v[j] * f[i][j][k]
    return w


def search_witness(t1, t2, bound):
    """First invertible A (in the documented enumeration) with
    transform(t1, A) == t2, or None."""
    if t1 == t2:
        return [[Fr(1 if i == j else 0) for j in range(3)] for i in range(3)]
    f1, g1 = t1
    f2, g2 = t2
    z1 = f1 == zero3()
    z2 = f2 == zero3()
    if z1 != z2:
        return None
    if z1:  # both first subalgebras abelian: search the dual side via M=A^T
        M = search_columns(g2, g1, bound, lambda M: True)
        if M is None:
            return None
        A = transpose(M)
        return A if transform(t1, A) == t2 else None

    def dual_ok(A):
        return change_basis(g1, transpose(inv3(A))) == g2

    return search_columns(f1, f2, bound, dual_ok)


def search_columns(f_src, f_dst, bound, extra):
    """Enumerate A column-by-column with [u_i,u_j]_src = sum_k dst_ij^k u_k."""
    vals = values(bound)
    vecs = [v for v in itertools.product(vals, repeat=3)
            if any(x != 0 for x in v)]
    vset = set(vals)

    # A determining bracket: pair (i,j) whose target coefficient on the
    # remaining column k is nonzero, so u_k follows from (u_i, u_j).
    det_pair = None
    for (i, j) in [(0, 1), (1, 2), (2, 0)]:
        k = 3 - i - j
        if f_dst[i][j][k] != 0:
            det_pair = (i, j, k)
            break

    def assemble(cols):
        A = [[cols[j][i] for j in range(3)] for i in range(3)]
        if det3(A) == 0:
            return None
        f_new = change_basis(f_src, A)
        if f_new != f_dst:
            return None
        if not extra(A):
            return None
        return A

    if det_pair is not None:
        i, j, k = det_pair
        c = f_dst[i][j][k]
        for ui in vecs:
            for uj in vecs:
                w = bracket(f_src, list(ui), list(uj))
                uk = [(w[t] - f_dst[i][j][i] * ui[t] - f_dst[i][j][j] * uj[t]) / c
                      for t in range(3)]
                if any(x not in vset for x in uk):
                    continue
                if all(x == 0 for x in uk):
                    continue
                cols = [None] * 3
                cols[i], cols[j], cols[k] = list(ui), list(uj), uk
                A = assemble(cols)
                if A is not None:
                    return A
        return None

    # Fallback: no determining bracket; filter (u_0,u_1) by the (0,1)
    # bracket, then enumerate u_2.
    for u0 in vecs:
        for u1 in vecs:
            w = bracket(f_src, list(u0), list(u1))
            if any(w[t] != f_dst[0][1][0] * u0[t] + f_dst[0][1][1] * u1[t]
                   for t in range(3)):
                continue
            for u2 in vecs:
                A = assemble([list(u0), list(u1), list(u2)])
                if A is not None:
                    return A
    return None


# ---------------------------------------------------------------- cases

VIII_STD = bianchi(0, 1, 1, -1)
II_STD = bianchi(0, 1, 0, 0)
III_STD = bianchi(1, 0, 1, -1)


def via_std(a):
    return bianchi(Fr(a), 0, 1, -1)


def viia_std(a):
    return bianchi(Fr(a), 0, 1, 1)


def family_VIII(al, be, ga):
    al, be, ga = Fr(al), Fr(be), Fr(ga)
    return tensor({(0, 1, 0): -al, (0, 1, 1): be, (1, 2, 1): ga,
                   (1, 2, 2): al, (0, 2, 0): ga, (0, 2, 2): be})


def ft_VIII_b(variant, b=Fr(1)):
    b = Fr(b)
    return {"i": tensor({(0, 1, 1): -b, (0, 2, 2): -b}),
            "ii": tensor({(1, 2, 1): b, (0, 2, 0): b}),
            "iii": tensor({(0, 1, 1): 1, (1, 2, 1): 1, (0, 2, 0): 1,
                           (0, 2, 2): 1})}[variant]


def entry_II_b(sign):
    return (II_STD, tensor({(0, 1, 2): sign}))


def entry_III_c(which, b=Fr(1)):
    b = Fr(b)
    g = {"i": tensor({(0, 1, 1): -b, (0, 1, 2): -b, (0, 2, 1): -b,
                      (0, 2, 2): -b}),
         "ii": tensor({(1, 2, 1): 1, (1, 2, 2): 1}),
         "iii": tensor({(0, 1, 0): 1, (0, 2, 0): 1})}[which]
    return (III_STD, g)


def entry_VIa_c(which, a, b=Fr(1)):
    a, b = Fr(a), Fr(b)
    r = (a + 1) / (a - 1)
    s = (a - 1) / (a + 1)
    g = {"i": tensor({(0, 1, 1): -b / a, (0, 1, 2): -b, (0, 2, 1): -b,
                      (0, 2, 2): -b / a}),
         "ii": tensor({(0, 1, 0): 1, (1, 2, 1): r, (1, 2, 2): r,
                       (0, 2, 0): -1}),
         "iii": tensor({(0, 1, 0): 1, (1, 2, 1): -s, (1, 2, 2): s,
                        (0, 2, 0): 1})}[which]
    return (via_std(a), g)


def entry_VIIa_c(a, b=Fr(1)):
    a, b = Fr(a), Fr(b)
    return (viia_std(a), tensor({(0, 1, 1): -b / a, (0, 1, 2): b,
                                 (0, 2, 1): -b, (0, 2, 2): -b / a}))


def witness_VIa_cii(a):
    """Analytic witness for dual(VIa.c.ii @ a) -> VIa.c.ii @ 1/a.

    Classifying all isomorphisms of the pair shows every witness has
    second-row first-column entry (1/a - 1)/2 (denominator 4 at a = 2), so
    the bounded search over {p/q : q in {1,2}} can never find one.
    Columns below: u1 = (0, (a'-1)/2, -(a'-1)/2), u2 = ((a-1)/2, 1/2, 1/2),
    u3 = (-(a-1)/2, 1/2, 1/2) with a' = 1/a.
    """
    a = Fr(a)
    ap = 1 / a
    u1 = [Fr(0), (ap - 1) / 2, -(ap - 1) / 2]
    u2 = [(a - 1) / 2, Fr(1, 2), Fr(1, 2)]
    u3 = [-(a - 1) / 2, Fr(1, 2), Fr(1, 2)]
    return [[u1[i], u2[i], u3[i]] for i in range(3)]


def witness_VIa_ciii(a):
    """Analytic witness for dual(VIa.c.iii @ a) -> VIa.c.iii @ 1/a."""
    a = Fr(a)
    ap = 1 / a
    u1 = [Fr(0), (ap + 1) / 2, (ap + 1) / 2]
    u2 = [(a + 1) / 2, Fr(-1, 2), Fr(1, 2)]
    u3 = [(a + 1) / 2, Fr(1, 2), Fr(-1, 2)]
    return [[u1[i], u2[i], u3[i]] for i in range(3)]


def run_frozen(name, t1, t2, A):
    good = det3(A) != 0 and transform(t1, A) == t2
    print(f"{name:46s} frozen A verified={good} {'OK' if good else 'FAIL'}")
    return good


def run(name, t1, t2, bound, expect_found):
    A = search_witness(t1, t2, bound)
    if A is None:
        ok = not expect_found
        print(f"{name:46s} bound={bound} -> none"
              f" {'OK' if ok else 'FAIL (expected a witness)'}")
        return ok
    good = transform(t1, A) == t2 and det3(A) != 0
    ok = expect_found and good
    print(f"{name:46s} bound={bound} -> A={A} verified={good}"
          f" {'OK' if ok else 'FAIL'}")
    return ok


def main():
    ok = True
    # sl(2,R) worked example: family points onto the three listed forms.
    ok &= run("VIII family(1,0,0) ->VIII.b.i b=1",
              (VIII_STD, family_VIII(1, 0, 0)),
              (VIII_STD, ft_VIII_b("i")), 2, True)
    ok &= run("VIII family(0,0,1) -> VIII.b.ii b=1",
              (VIII_STD, family_VIII(0, 0, 1)),
              (VIII_STD, ft_VIII_b("ii")), 2, True)
    ok &= run("VIII family(1,0,1) -> VIII.b.iii",
              (VIII_STD, family_VIII(1, 0, 1)),
              (VIII_STD, ft_VIII_b("iii")), 2, True)
    # negative control: the three listed forms are pairwise inequivalent.
    ok &= run("VIII.b.i vs VIII.b.ii (expect none)",
              (VIII_STD, ft_VIII_b("i")), (VIII_STD, ft_VIII_b("ii")),
              1, False)
    # pairwise inequivalence of the three forms at the full search bound
    for x, y in [("i", "ii"), ("i", "iii"), ("ii", "iii")]:
        ok &= run(f"VIII.b.{x} vs VIII.b.{y} bound 2 (expect none)",
                  (VIII_STD, ft_VIII_b(x)), (VIII_STD, ft_VIII_b(y)),
                  2, False)
    # self-duality candidates
    ok &= run("dual(II.b.i) -> II.b.i",
              dual(entry_II_b(1)), entry_II_b(1), 2, True)
    ok &= run("dual(II.b.ii) -> II.b.ii",
              dual(entry_II_b(-1)), entry_II_b(-1), 2, True)
    ok &= run("dual(III.c.i b=2) -> III.c.i b=2",
              dual(entry_III_c("i", 2)), entry_III_c("i", 2), 1, True)
    ok &= run("dual(III.c.ii) -> III.c.ii",
              dual(entry_III_c("ii")), entry_III_c("ii"), 2, True)
    ok &= run("dual(III.c.iii) -> III.c.iii",
              dual(entry_III_c("iii")), entry_III_c("iii"), 2, True)
    ok &= run("dual(VIa.c.i a=2,b=1) -> VIa.c.i a=1/2,b=1",
              dual(entry_VIa_c("i", 2)), entry_VIa_c("i", Fr(1, 2)), 2, True)
    # c.ii / c.iii duality witnesses require denominator-4 entries, so the
    # bounded search (denominators 1 and 2 only) must come up empty; the
    # analytic matrices are checked exactly instead.
    ok &= run("dual(VIa.c.ii a=2) -> VIa.c.ii a=1/2",
              dual(entry_VIa_c("ii", 2)), entry_VIa_c("ii", Fr(1, 2)), 2,
              False)
    ok &= run("dual(VIa.c.iii a=2) -> VIa.c.iii a=1/2",
              dual(entry_VIa_c("iii", 2)), entry_VIa_c("iii", Fr(1, 2)), 2,
              False)
    for av in [Fr(2), Fr(3), Fr(5), Fr(1, 2)]:
        ok &= run_frozen(f"dual(VIa.c.ii a={av}) analytic witness",
                         dual(entry_VIa_c("ii", av)),
                         entry_VIa_c("ii", 1 / av), witness_VIa_cii(av))
        ok &= run_frozen(f"dual(VIa.c.iii a={av}) analytic witness",
                         dual(entry_VIa_c("iii", av)),
                         entry_VIa_c("iii", 1 / av), witness_VIa_ciii(av))
    ok &= run("dual(VIIa.c a=2,b=1) -> VIIa.c a=1/2,b=1",
              dual(entry_VIIa_c(2)), entry_VIIa_c(Fr(1, 2)), 2, True)
    print("RESULT:", "OK" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
