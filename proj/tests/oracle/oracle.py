"""Independent brute-force oracle for frozen test values.

Uses the root-system definitions directly (no inv/nsp shortcuts) and sympy
for polynomial algebra. Run: python3 tests/oracle/oracle.py
"""
import itertools
import sympy as sp

x = sp.symbols("x")


def positive_roots(family, n):
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[j], v[i] = 1, -1
            roots.append(tuple(v))
            if family in "BD":
                w = [0] * n
                w[i] = w[j] = 1
                roots.append(tuple(w))
    if family == "B":
        for i in range(n):
            v = [0] * n
            v[i] = 1
            roots.append(tuple(v))
    return roots


def simple_roots(family, n):
    s = []
    if family == "D" and n >= 2:
        v = [0] * n
        v[0] = v[1] = 1
        s.append(v)
    if family == "B":
        v = [0] * n
        v[0] = 1
        s.append(v)
    for i in range(n - 1):
        v = [0] * n
        v[i + 1], v[i] = 1, -1
        s.append(v)
    return s


def heights(family, n):
    roots = positive_roots(family, n)
    simple = simple_roots(family, n)
    if not simple:
        return {}
    M = sp.Matrix(simple).T
    out = {}
    for r in roots:
        c = M.solve_least_squares(sp.Matrix(r)) if M.shape[0] != M.shape[1] else M.solve(sp.Matrix(r))
        out[r] = int(sum(c))
    return out


_H = {}


def act(sigma, root):
    n = len(sigma)
    out = [0] * n
    for i, c in enumerate(root):
        if c:
            t = abs(sigma[i]) - 1
            out[t] += c * (1 if sigma[i] > 0 else -1)
    return tuple(out)


def lengths(family, sigma):
    n = len(sigma)
    key = (family, n)
    if key not in _H:
        _H[key] = heights(family, n)
    H = _H[key]
    pos = set(H)
    ell = L = 0
    for r, h in H.items():
        img = act(sigma, r)
        if img not in pos:
            ell += 1
            L += h % 2
    return ell, L


def group(family, n):
    for p in itertools.permutations(range(1, n + 1)):
        if family == "A":
            yield p
            continue
        for signs in itertools.product([1, -1], repeat=n):
            if family == "D" and signs.count(-1) % 2:
                continue
            yield tuple(a * s for a, s in zip(p, signs))


def right_mult_gen(family, sigma, i):
    s = list(sigma)
    if i == 0:
        if family == "D":
            s[0], s[1] = -sigma[1], -sigma[0]
        else:
            s[0] = -s[0]
    else:
        s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


def descents(family, sigma):
    ell = lengths(family, sigma)[0]
    gens = range(1, len(sigma)) if family == "A" else range(len(sigma))
    if family == "D" and len(sigma) == 1:
        gens = []
    return {i for i in gens if lengths(family, right_mult_gen(family, sigma, i))[0] < ell}


def genfun(family, n, I, pred=None):
    tot = 0
    for s in group(family, n):
        if descents(family, s) & set(I):
            continue
        if pred and not pred(s):
            continue
        ell, L = lengths(family, s)
        tot += (-1) ** ell * x ** L
    return sp.expand(tot)


if __name__ == "__main__":
    print("heights B2", sorted(heights("B", 2).values()))
    print("ht A3 e3-e1", heights("A", 3)[(-1, 0, 1)])
    print("D 3-25 1-4", lengths("D", (3, -2, 5, 1, -4)))
    print("A 321", lengths("A", (3, 2, 1)))
    print("B 1bar", lengths("B", (-1,)))
    print("Des D 3-2 5 1 -4", descents("D", (3, -2, 5, 1, -4)))
    print("Des D -2-134", descents("D", (-2, -1, 3, 4)))
    print("D 123 -> -1 2 -3", lengths("D", (1, 2, 3)), lengths("D", (-1, 2, -3)))
    print("D3 {1,2}", genfun("D", 3, {1, 2}))
    print("D3 [0,2]", genfun("D", 3, {0, 1, 2}))
    print("A3 empty", genfun("A", 3, set()))
    print("A4 {2}", genfun("A", 4, {2}))
    print("B1 empty", genfun("B", 1, set()))
    print("B2 empty", sp.factor(genfun("B", 2, set())))
    print("D2 buckets", [(s, lengths("D", s), descents("D", s)) for s in group("D", 2)])
    print("B1 buckets", [(s, lengths("B", s), descents("B", s)) for s in group("B", 1)])
    print("D4 {0,1,3}", genfun("D", 4, {0, 1, 3}))
    print("D4 {0,2}", sp.factor(genfun("D", 4, {0, 2})))
    print("D4 {0,3}", sp.factor(genfun("D", 4, {0, 3})))
    print("D4 empty sigma4=4", sp.factor(genfun("D", 4, set(), lambda s: s[3] == 4)))
    print("D5 {0,3}", sp.factor(genfun("D", 5, {0, 3})))
    print("-1-324 L", lengths("D", (-1, -3, 2, 4)), lengths("D", (-3, -1, 2, 4)), lengths("D", (2, 1, 3, 4)))
    print("B3 {0,2}", sp.expand(genfun("B", 3, {0, 2})))
    print("A5 {1,3}", sp.expand(genfun("A", 5, {1, 3})))
    print("D5 {0,1,3}", sp.expand(genfun("D", 5, {0, 1, 3})))
    print("D6 {0,1,3,5}", sp.expand(genfun("D", 6, {0, 1, 3, 5})))
    print("D4 {0,3} sigma3=-4", sp.expand(genfun("D", 4, {0, 3}, lambda s: s[2] == -4)))
    print("D3 empty", sp.expand(genfun("D", 3, set())))
