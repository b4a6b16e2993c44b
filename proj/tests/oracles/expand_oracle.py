#!/usr/bin/env python3
"""Independent oracle for frozen test values.

Expands the Bell polynomials symbolically with sympy (commuting symbols
a_k, b_k standing for unprimed and primed outcomes) and brute-forces the
counterexample Bell values with a numpy statevector. Nothing here shares
code with the C++ library.
"""
import itertools
import math

import numpy as np
import sympy as sp


def syms(n):
    a = sp.symbols(f"a1:{n + 1}")
    b = sp.symbols(f"b1:{n + 1}")
    return a, b


def swap(expr, n):
    a, b = syms(n)
    sub = {**{a[k]: b[k] for k in range(n)}, **{b[k]: a[k] for k in range(n)}}
    return expr.xreplace(sub)


def mk(n):
    a, b = syms(n)
    if n == 2:
        return sp.Rational(1, 2) * (a[0] * a[1] + b[0] * a[1] + a[0] * b[1] - b[0] * b[1])
    prev = mk(n - 1)
    prev_swapped = swap(prev, n - 1)
    return sp.expand(sp.Rational(1, 2) * prev * (a[n - 1] + b[n - 1])
                     + sp.Rational(1, 2) * prev_swapped * (a[n - 1] - b[n - 1]))


def mermin_generator(n):
    a, b = syms(n)
    I = sp.I
    p1 = sp.prod([a[k] + I * b[k] for k in range(n)])
    p2 = sp.prod([a[k] - I * b[k] for k in range(n)])
    if n % 2 == 0:
        pref = 1 / (sp.Integer(2) ** sp.Rational(n + 2, 2) * I)
    else:
        # odd-n normalisation 2^{-(n-1)/2} applied to the same generator
        pref = 1 / (sp.Integer(2) ** sp.Rational(n + 1, 2) * I)
    return sp.expand(pref * (p1 - p2))


def svetlichny(n):
    if n % 2 == 0:
        return mk(n)
    return sp.expand(sp.Rational(1, 2) * (mk(n) + swap(mk(n), n)))


def terms(expr, n):
    a, b = syms(n)
    out = {}
    poly = sp.Poly(expr, *a, *b)
    for monom, coeff in poly.terms():
        mask = tuple(monom[n + k] for k in range(n))
        out[mask] = coeff
    return dict(sorted(out.items()))


def fmt(t):
    return {"".join(map(str, m)): str(c) for m, c in t.items()}


# --- numeric brute force -------------------------------------------------
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


def rot(theta, axis):
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    return (math.cos(theta / 2) * np.eye(2)
            - 1j * math.sin(theta / 2) * (axis[0] * X + axis[1] * Y + axis[2] * Z))


def ghz(n):
    v = np.zeros(2 ** n, dtype=complex)
    v[0] = v[-1] = 1 / math.sqrt(2)
    return v


def kron_all(ms):
    out = np.array([[1]], dtype=complex)
    for m in ms:
        out = np.kron(out, m)
    return out


def brute_max(poly_terms, n, rotations, directions, sign_flips=True):
    psi = kron_all(rotations) @ ghz(n)
    obs = [d[0] * X + d[1] * Y + d[2] * Z for d in directions]
    options = []
    for i, j in itertools.permutations(range(len(obs)), 2):
        for s in ((1, -1) if sign_flips else (1,)):
            options.append((obs[i], s * obs[j]))
    masks = list(poly_terms.keys())
    best = -1.0
    cache = {}
    for choice in itertools.product(range(len(options)), repeat=n):
        total = 0.0
        for mask in masks:
            ops = [options[choice[k]][mask[k]] for k in range(n)]
            key = (choice, mask)
            e = np.real(np.vdot(psi, kron_all(ops) @ psi))
            total += float(poly_terms[mask]) * e
        best = max(best, abs(total))
    return best


if __name__ == "__main__":
    for n in (2, 3, 4):
        print(f"MK_{n}", len(terms(mk(n), n)), fmt(terms(mk(n), n)))
    print("MK_5 count", len(terms(mk(5), 5)), set(terms(mk(5), 5).values()))
    for n in (3, 4, 5):
        t = terms(mermin_generator(n), n)
        print(f"M_{n}", len(t), fmt(t))
    print("M_3 == MK_3:", terms(mermin_generator(3), 3) == terms(mk(3), 3))
    print("M_5 == MK_5:", terms(mermin_generator(5), 5) == terms(mk(5), 5))
    for n in (3, 5):
        t = terms(svetlichny(n), n)
        print(f"S_{n}", len(t), set(t.values()))
    print("S_3", fmt(terms(svetlichny(3), 3)))

    pauli = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    s3 = 1 / math.sqrt(3)
    tet = [(s3, s3, s3), (s3, -s3, -s3), (-s3, s3, -s3), (-s3, -s3, s3)]
    m3 = terms(mk(3), 3)
    rt = rot(math.atan(math.sqrt(2)), (1, 1, 0))
    print("R_t M_3 pauli:", brute_max(m3, 3, [rt, rt, rt], pauli))
    print("R_t M_3 pauli (no flips):", brute_max(m3, 3, [rt, rt, rt], pauli, False))
    rs = rot(2 * 3 * math.pi / 20, (1, 0, 0))
    eye = np.eye(2, dtype=complex)
    print("R_s M_3 tet:", brute_max(m3, 3, [eye, eye, rs], tet))
    print("R_s M_3 tet (no flips):", brute_max(m3, 3, [eye, eye, rs], tet, False))
    print("M_3 identity pauli:", brute_max(m3, 3, [eye] * 3, pauli))
    plane = [(1, 0, 0), (0, 1, 0), (math.sqrt(0.5), math.sqrt(0.5), 0),
             (math.sqrt(0.5), -math.sqrt(0.5), 0)]
    print("S_3 identity plane:", brute_max(terms(svetlichny(3), 3), 3, [eye] * 3, plane))
