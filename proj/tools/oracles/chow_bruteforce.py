#!/usr/bin/env python3
"""Brute-force integrals in the Chow ring of the permutohedral toric variety.

Regenerates the expected values frozen into the C++ unit tests.  The ring on
ground set {0..m-1} is presented as Q[x_S : S proper nonempty] modulo

  * x_S * x_T whenever S and T are incomparable under inclusion, and
  * sum_{S : a in S} x_S - sum_{S : b in S} x_S for all pairs a, b.

Degree-k classes live on the basis of monomials supported on chains of
subsets; the top degree is m-1 and the integral is normalized so that every
complete-flag square-free monomial integrates to 1.  Everything below is
graded linear algebra over exact rationals: no recursions, no closed forms,
so the numbers it produces are independent of the algorithms under test.

Run with no arguments; prints the frozen tables and exits nonzero if any
internal cross-check fails.
"""

import itertools
import sys
from fractions import Fraction
from math import comb, factorial


def popcount(x):
    return bin(x).count("1")


def subsets(m):
    return [s for s in range(1, (1 << m) - 1)]


def comparable(a, b):
    c = a & b
    return c == a or c == b


class ChowRing:
    """Graded pieces of the presented ring for one ground-set size."""

    def __init__(self, m):
        self.m = m
        self.n = m - 1
        self.subs = subsets(m)
        self.sups = {s: [t for t in self.subs if s != t and (s & t) == s] for s in self.subs}
        self._pivots = None

    def chains(self):
        # strictly increasing sequences of proper nonempty subsets
        out = []

        def extend(chain):
            out.append(tuple(chain))
            for t in self.sups[chain[-1]]:
                chain.append(t)
                extend(chain)
                chain.pop()

        for s in self.subs:
            extend([s])
        return out

    def chain_monomials(self, k):
        # multisets of size k supported on a chain, as sorted mask tuples
        out = []
        for chain in self.chains():
            j = len(chain)
            if j > k:
                continue
            for cuts in itertools.combinations(range(1, k), j - 1):
                mults = []
                prev = 0
                for c in list(cuts) + [k]:
                    mults.append(c - prev)
                    prev = c
                mono = []
                for mask, e in zip(chain, mults):
                    mono.extend([mask] * e)
                out.append(tuple(sorted(mono)))
        return out

    def multiply(self, vec, divisor):
        out = {}
        for mono, coef in vec.items():
            distinct = set(mono)
            for f, c in divisor.items():
                if all(comparable(f, g) for g in distinct):
                    key = tuple(sorted(mono + (f,)))
                    v = out.get(key, Fraction(0)) + coef * c
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return out

    def _reduce(self, vec, pivots):
        vec = dict(vec)
        while True:
            hit = None
            for k in vec:
                if k in pivots:
                    if hit is None or k > hit:
                        hit = k
            if hit is None:
                return vec
            coef = vec.pop(hit)
            for k2, v2 in pivots[hit].items():
                if k2 == hit:
                    continue
                nv = vec.get(k2, Fraction(0)) - coef * v2
                if nv:
                    vec[k2] = nv
                else:
                    vec.pop(k2, None)
        return vec

    def top_pivots(self):
        # echelonized linear relations in the top graded piece
        if self._pivots is not None:
            return self._pivots
        pivots = {}
        for mono in self.chain_monomials(self.n - 1) if self.n > 1 else [()]:
            base = {mono: Fraction(1)}
            for a in range(self.m - 1):
                da = {f: Fraction(1) for f in self.subs if f >> a & 1}
                db = {f: Fraction(1) for f in self.subs if f >> (self.m - 1) & 1}
                row = self.multiply(base, da)
                for k, v in self.multiply(base, db).items():
                    nv = row.get(k, Fraction(0)) - v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                row = self._reduce(row, pivots)
                if row:
                    piv = max(row)
                    c = row[piv]
                    pivots[piv] = {k: v / c for k, v in row.items()}
        dim = len(self.chain_monomials(self.n)) - len(pivots)
        assert dim == 1, (self.m, dim)
        self._pivots = pivots
        return pivots

    def integral(self, divisors):
        if len(divisors) != self.n:
            raise ValueError("degree mismatch")
        vec = {(): Fraction(1)}
        for d in divisors:
            vec = self.multiply(vec, d)
        if self.n == 0:
            return vec.get((), Fraction(0))
        pivots = self.top_pivots()
        vec = self._reduce(vec, pivots)
        flag = tuple((1 << i) - 1 for i in range(1, self.m))
        ref = self._reduce({flag: Fraction(1)}, pivots)
        assert ref, "reference flag reduced to zero"
        keys = set(vec) | set(ref)
        ratios = set()
        for k in keys:
            ratios.add(vec.get(k, Fraction(0)) / ref[k] if k in ref else None)
            if k not in ref and vec.get(k):
                raise AssertionError("quotient dimension > 1")
        ratios.discard(None)
        if not ratios:
            return Fraction(0)
        assert len(ratios) == 1, ratios
        return ratios.pop()


# divisor constructors, literal coefficient tables

def divisor_L(m, i):
    n = m - 1
    top = m - 1
    out = {}
    for s in subsets(m):
        v = min(n + 1 - i, popcount(s))
        if s >> top & 1:
            v -= n + 1 - i
        if v:
            out[s] = Fraction(v)
    return out


def divisor_S(m, i):
    return {s: Fraction(1) for s in subsets(m) if popcount(s) == m - i}


def divisor_M_factor(rank, m, i):
    # distinguished element 0
    out = {}
    for s in subsets(m):
        nul = popcount(s) - rank(s)
        if s & 1:
            if nul < i:
                out[s] = Fraction(1)
        elif nul >= i:
            out[s] = Fraction(-1)
    return out


def matroid_class_factors(rank, m):
    corank = m - rank((1 << m) - 1)
    return [divisor_M_factor(rank, m, i) for i in range(1, corank + 1)]


# rank functions

def uniform_rank(r):
    return lambda s: min(popcount(s), r)


def bases_rank(bases):
    masks = [sum(1 << e for e in b) for b in bases]
    return lambda s: max(popcount(s & b) for b in masks)


def matroid_integral(ring, rank, divisors):
    return ring.integral(matroid_class_factors(rank, ring.m) + list(divisors))


def compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def men_table(ring, rank):
    m = ring.m
    r = rank((1 << m) - 1)
    out = {}
    for a in compositions(r - 1, m - 1):
        divs = []
        for i, e in enumerate(a, start=1):
            divs.extend([divisor_L(m, i)] * e)
        out[a] = matroid_integral(ring, rank, divs)
    return out


def s_monomials(n, degree):
    # all (b, c) with 1 <= b_1 < ... < b_k <= n, c_i >= 1, sum c = degree
    out = []
    for k in range(1, min(n, degree) + 1):
        for b in itertools.combinations(range(1, n + 1), k):
            for cuts in itertools.combinations(range(1, degree), k - 1):
                c = []
                prev = 0
                for x in list(cuts) + [degree]:
                    c.append(x - prev)
                    prev = x
                out.append((b, tuple(c)))
    return out


def s_integral_closed(n, b, c, corrected=True):
    # closed form for the integral of S_{b_1}^{c_1}...S_{b_k}^{c_k}, sum c = n
    k = len(b)
    parts = [b[0]] + [b[i] - b[i - 1] for i in range(1, k)] + [n + 1 - b[k - 1]]
    val = factorial(n + 1)
    for p in parts:
        val //= factorial(p)
    for i in range(1, k):
        lo = sum(c[:i]) - b[i - 1]
        val *= comb(b[i] - b[i - 1] - 1, lo) if 0 <= lo <= b[i] - b[i - 1] - 1 else 0
    if corrected:
        for i in range(k):
            beta = b[i] - 1 - sum(c[:i])
            val *= comb(c[i] - 1, beta) if 0 <= beta <= c[i] - 1 else 0
    return (-1) ** (n - k) * val


def flats_of(rank, m):
    full = (1 << m) - 1
    out = []
    for s in range(1 << m):
        r = rank(s)
        if all(rank(s | (1 << e)) > r for e in range(m) if not s >> e & 1):
            out.append(s)
    return out


def gamma_table(rank, m):
    # absolute coefficients of the reduced characteristic polynomial
    full = (1 << m) - 1
    rk = rank(full)
    chi = [0] * (rk + 1)
    for s in range(1 << m):
        chi[rk - rank(s)] += (-1) ** popcount(s)
    # divide by q-1 (char poly of loopless matroid is divisible)
    if all(v == 0 for v in chi):
        return [0] * rk
    red = [0] * rk
    carry = 0
    for d in range(rk, 0, -1):
        red[d - 1] = chi[d] + carry
        carry = red[d - 1]
    assert carry + chi[0] == 0, "char poly not divisible by q-1"
    return [abs(red[l]) for l in range(rk)]


def matroid_s_integral_flags(rank, m, b, c, corrected=True):
    # flag-sum formula for the integral of [X_M] S_b^c, sum c = rank-1
    n = m - 1
    full = (1 << m) - 1
    rk = rank(full)
    k = len(b)
    flats = flats_of(rank, m)
    by_size = {}
    for f in flats:
        by_size.setdefault(popcount(f), []).append(f)
    sizes = [n + 1 - b[k - i] for i in range(1, k + 1)]  # |F_1|, ..., |F_k|
    total = 0

    def minors_gamma(fsub, fsup):
        # gamma table of (M|fsup)/fsub
        elems = [e for e in range(m) if fsup >> e & 1 and not fsub >> e & 1]
        mm = len(elems)
        def rk2(s):
            t = fsub
            for idx in range(mm):
                if s >> idx & 1:
                    t |= 1 << elems[idx]
            return rank(t) - rank(fsub)
        return gamma_table(rk2, mm), rk2((1 << mm) - 1)

    def rec2(pos, chain):
        nonlocal total
        if pos == k:
            flag = [0] + chain + [full]
            term = 1
            for i in range(1, k + 1):
                gtab, _ = minors_gamma(flag[i], flag[i + 1])
                csum = sum(c[k - l] for l in range(1, i + 1))
                gi = rank(flag[i + 1]) - 1 - csum
                gam = gtab[gi] if 0 <= gi < len(gtab) else 0
                if corrected:
                    beta = csum - rank(flag[i])
                    ci = c[k - i]
                    gam *= comb(ci - 1, beta) if 0 <= beta <= ci - 1 else 0
                term *= gam
                if term == 0:
                    break
            total += term
            return
        for f in by_size.get(sizes[pos], []):
            if f == 0 or f == full:
                continue
            if pos > 0 and ((f & chain[-1]) != chain[-1] or f == chain[-1]):
                continue
            rec2(pos + 1, chain + [f])

    rec2(0, [])
    return (-1) ** (rk - 1 - k) * total


def matrix_B(n):
    return [[Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1)
             for j in range(1, n + 1)] for i in range(1, n + 1)]


def expand_L_monomial(n, a):
    # coefficients of prod_i (sum_j B_ij S_j)^{a_i} on the S-monomial basis
    B = matrix_B(n)
    poly = {tuple([0] * n): Fraction(1)}
    for i in range(n):
        for _ in range(a[i]):
            nxt = {}
            for mono, coef in poly.items():
                for j in range(n):
                    if B[i][j]:
                        key = list(mono)
                        key[j] += 1
                        key = tuple(key)
                        nxt[key] = nxt.get(key, Fraction(0)) + coef * B[i][j]
            poly = nxt
    return poly


def exponents_to_bc(e):
    b = tuple(i + 1 for i, v in enumerate(e) if v)
    c = tuple(v for v in e if v)
    return b, c


def tutte_enum(rank, m):
    # corank-nullity sum, as a dict (i, j) -> coefficient of x^i y^j
    full = rank((1 << m) - 1)
    poly = {}
    for s in range(1 << m):
        a = full - rank(s)
        b = popcount(s) - rank(s)
        for i in range(a + 1):
            for j in range(b + 1):
                c = comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                key = (i, j)
                poly[key] = poly.get(key, 0) + c
    return {k: v for k, v in poly.items() if v}


def tutte_via_chow(ring, rank, descending_blocks=True):
    # three-part intersection formula; blocks are consecutive L-index runs
    m, n = ring.m, ring.n
    rk = rank((1 << m) - 1)
    r = rk - 1
    poly = {}

    def add(key, val):
        v = poly.get(key, Fraction(0)) + val
        if v:
            poly[key] = v
        else:
            poly.pop(key, None)

    def block(length, d):
        if descending_blocks:
            idx = [n + 1 - k - d for k in range(1, length + 1)]
        else:
            idx = [k + d for k in range(1, length + 1)]
        return [divisor_L(m, i) for i in idx]

    for i in range(1, n + 1):
        for l in range(1, r + 1):
            for d in range(0, i - 1 - r + l + 1):
                divs = [divisor_S(m, n + 1 - i)]
                divs += [divisor_L(m, 1)] * (l - 1)
                divs += block(r - l, d)
                val = matroid_integral(ring, rank, divs) / factorial(r - l)
                if not val:
                    continue
                # (x-1)^l y^d expanded
                for t in range(l + 1):
                    add((t, d), val * comb(l, t) * (-1) ** (l - t))
    for t in range(rk + 1):
        add((t, 0), Fraction(comb(rk, t) * (-1) ** (rk - t)))
    for d in range(0, n - r + 1):
        val = matroid_integral(ring, rank, block(r, d)) / factorial(r)
        if val:
            add((0, d), val)
    return {k: v for k, v in poly.items()}


def fmt_poly(p):
    items = sorted(p.items())
    return "{" + ", ".join(f"x^{i}y^{j}: {v}" for (i, j), v in items) + "}"


def main():
    ok = True

    # closed-form anchors for integrals of pure S-divisor products
    print("== s-divisor integrals (ground size m, product of S_i's) ==")
    s_cases = [
        (2, [1], 2),
        (3, [1, 1], -3),
        (3, [2, 2], -3),
        (3, [1, 2], 6),
        (4, [1, 1, 1], 4),
        (4, [2, 2, 2], 12),
        (4, [3, 3, 3], 4),
        (4, [1, 1, 2], 0),
        (4, [1, 2, 2], -12),
        (4, [1, 1, 3], -12),
        (4, [1, 3, 3], -12),
        (4, [2, 2, 3], -12),
        (4, [2, 3, 3], 0),
        (4, [1, 2, 3], 24),
    ]
    for m, idx, expect in s_cases:
        ring = ChowRing(m)
        val = ring.integral([divisor_S(m, i) for i in idx])
        tag = ""
        if expect is not None:
            tag = " ok" if val == expect else " MISMATCH"
            ok &= val == expect
        print(f"  m={m} S{idx} -> {val}{tag}")

    # mixed Eulerian numbers as integrals of L-monomials
    print("== mixed Eulerian A(a) = integral of prod L_i^{a_i}, n <= 4 ==")
    classical = {}  # (n, k): permutations of n letters with k-1 ascents
    for n in range(1, 8):
        for p in itertools.permutations(range(n)):
            asc = sum(1 for i in range(n - 1) if p[i] < p[i + 1])
            classical[(n, asc + 1)] = classical.get((n, asc + 1), 0) + 1
    for n in range(1, 5):
        ring = ChowRing(n + 1)
        table = {}
        for a in compositions(n, n):
            divs = []
            for i, e in enumerate(a, start=1):
                divs.extend([divisor_L(n + 1, i)] * e)
            table[a] = ring.integral(divs)
        line = ", ".join(f"{a}:{v}" for a, v in sorted(table.items()))
        print(f"  n={n}: {line}")
        for k in range(1, n + 1):
            a = tuple(n if i == k else 0 for i in range(1, n + 1))
            if table[a] != classical[(n, k)]:
                print(f"  MISMATCH eulerian n={n} k={k}: {table[a]} vs {classical[(n, k)]}")
                ok = False
        ones = tuple([1] * n)
        if table[ones] != factorial(n):
            print(f"  MISMATCH n! at n={n}")
            ok = False

    # matroidal mixed Eulerian vectors; spot expectations come from the
    # reduced characteristic polynomial (gamma identification) and from the
    # classical table for boolean matroids
    print("== men vectors (composition of rank-1 -> integral) ==")
    named = [
        ("U_{1,2}", 2, uniform_rank(1), {(0,): 1}),
        ("U_{1,3}", 3, uniform_rank(1), {(0, 0): 1}),
        ("U_{2,3}", 3, uniform_rank(2), {(1, 0): 1, (0, 1): 2}),
        ("U_{2,4}", 4, uniform_rank(2), {(1, 0, 0): 1, (0, 0, 1): 3}),
        ("U_{3,4}", 4, uniform_rank(3),
         {(2, 0, 0): 1, (1, 0, 1): 3, (0, 0, 2): 3}),
        ("U_{2,5}", 5, uniform_rank(2), {(1, 0, 0, 0): 1, (0, 0, 0, 1): 4}),
        ("U_{3,5}", 5, uniform_rank(3),
         {(2, 0, 0, 0): 1, (1, 0, 0, 1): 4, (0, 0, 0, 2): 6}),
        ("U_{4,5}", 5, uniform_rank(4),
         {(3, 0, 0, 0): 1, (0, 0, 0, 3): 4}),
        ("rank2-parallel23", 4,
         bases_rank([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]),
         {(1, 0, 0): 1, (0, 0, 1): 2}),
        ("U_{2,3}+U_{1,2}", 5,
         bases_rank([[0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4], [1, 2, 3], [1, 2, 4]]),
         {(2, 0, 0, 0): 1, (1, 0, 0, 1): 3, (0, 0, 0, 2): 2}),
        ("partition-2-2-1-rank2", 5,
         bases_rank([[0, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4], [2, 4], [3, 4]]),
         {(1, 0, 0, 0): 1, (0, 0, 0, 1): 2}),
    ]
    for name, m, rank, expects in named:
        ring = ChowRing(m)
        table = men_table(ring, rank)
        line = ", ".join(f"{a}:{v}" for a, v in sorted(table.items()))
        print(f"  {name} (m={m}): {line}")
        for a, v in expects.items():
            if table[a] != v:
                print(f"  MISMATCH {name} A{a}: {table[a]} vs {v}")
                ok = False

    # gamma identification spot checks: A(l,0,...,0,r-l) vs |char poly coeffs|
    print("== catenary-style S integrals ==")
    cat_cases = [
        ("U_{2,3}", 3, uniform_rank(2), [1], 3),
        ("U_{2,3}", 3, uniform_rank(2), [2], 0),
        ("U_{3,3}", 3, uniform_rank(3), [1, 1], 6),
        ("U_{2,4}", 4, uniform_rank(2), [1], 4),
        ("U_{2,4}", 4, uniform_rank(2), [2], 0),
        ("U_{2,4}", 4, uniform_rank(2), [3], 0),
        ("U_{3,4}", 4, uniform_rank(3), [1, 1], 12),
        ("U_{3,4}", 4, uniform_rank(3), [1, 2], 0),
        ("U_{3,4}", 4, uniform_rank(3), [2, 1], 0),
    ]
    for name, m, rank, bs, expect in cat_cases:
        ring = ChowRing(m)
        divs = []
        acc = 0
        for b in bs:
            acc += b
            divs.append(divisor_S(m, m - acc))
        val = matroid_integral(ring, rank, divs)
        tag = " ok" if val == expect else " MISMATCH"
        ok &= val == expect
        print(f"  {name} b={bs} -> {val}{tag}")

    # closed form for pure S-integrals against brute force, every monomial
    print("== closed form vs brute force, all S-monomials ==")
    for m in (4, 5):
        n = m - 1
        ring = ChowRing(m)
        bad = 0
        uncorrected_bad = 0
        for b, c in s_monomials(n, n):
            divs = []
            for bi, ci in zip(b, c):
                divs.extend([divisor_S(m, bi)] * ci)
            brute = ring.integral(divs)
            closed = s_integral_closed(n, b, c)
            plain = s_integral_closed(n, b, c, corrected=False)
            if closed != brute:
                print(f"  MISMATCH m={m} b={b} c={c}: closed {closed} vs brute {brute}")
                ok = False
                bad += 1
            if plain != brute:
                uncorrected_bad += 1
        total = len(s_monomials(n, n))
        print(f"  m={m}: {total} monomials, closed-form mismatches {bad}, "
              f"uncorrected-form mismatches {uncorrected_bad}")

    # mixed Eulerian numbers by substituting L = B.S into the closed form
    print("== A(a) from L-expansion + closed form vs brute force ==")
    for n in (3, 4):
        ring = ChowRing(n + 1)
        bad = 0
        for a in compositions(n, n):
            acc = Fraction(0)
            for e, coef in expand_L_monomial(n, a).items():
                b, c = exponents_to_bc(e)
                acc += coef * s_integral_closed(n, b, c)
            divs = []
            for i, v in enumerate(a, start=1):
                divs.extend([divisor_L(n + 1, i)] * v)
            brute = ring.integral(divs)
            if acc != brute:
                print(f"  MISMATCH n={n} a={a}: {acc} vs {brute}")
                ok = False
                bad += 1
        print(f"  n={n}: mismatches {bad}")

    # flag-sum formula for matroidal S-integrals against brute force
    print("== flag formula vs brute force, all S-monomials, all matroids ==")
    for name, m, rank, _ in named:
        rk = rank((1 << m) - 1)
        if rk < 2:
            continue
        n = m - 1
        ring = ChowRing(m)
        bad = 0
        uncorrected_bad = 0
        monos = s_monomials(n, rk - 1)
        for b, c in monos:
            divs = []
            for bi, ci in zip(b, c):
                divs.extend([divisor_S(m, bi)] * ci)
            brute = matroid_integral(ring, rank, divs)
            flag = matroid_s_integral_flags(rank, m, b, c)
            plain = matroid_s_integral_flags(rank, m, b, c, corrected=False)
            if flag != brute:
                print(f"  MISMATCH {name} b={b} c={c}: flag {flag} vs brute {brute}")
                ok = False
                bad += 1
            if plain != brute:
                uncorrected_bad += 1
        print(f"  {name}: {len(monos)} monomials, flag mismatches {bad}, "
              f"uncorrected mismatches {uncorrected_bad}")

    # full matroidal mixed Eulerian numbers out of the flag formula
    print("== men table from L-expansion + flag formula vs brute force ==")
    for name, m, rank, _ in named:
        rk = rank((1 << m) - 1)
        if rk < 2:
            continue
        n = m - 1
        ring = ChowRing(m)
        table = men_table(ring, rank)
        bad = 0
        for a, brute in table.items():
            acc = Fraction(0)
            for e, coef in expand_L_monomial(n, a).items():
                b, c = exponents_to_bc(e)
                acc += coef * matroid_s_integral_flags(rank, m, b, c)
            if acc != brute:
                print(f"  MISMATCH {name} a={a}: {acc} vs {brute}")
                ok = False
                bad += 1
        print(f"  {name}: mismatches {bad}")

    # intersection-theoretic Tutte formula, both block orientations
    print("== Tutte via intersections ==")
    tutte_cases = [(nm, m, rk) for nm, m, rk, _ in named]
    tutte_cases += [("U_{3,3}", 3, uniform_rank(3)), ("U_{4,4}", 4, uniform_rank(4))]
    for name, m, rank in tutte_cases:
        ring = ChowRing(m)
        want = {k: Fraction(v) for k, v in tutte_enum(rank, m).items()}
        got_desc = tutte_via_chow(ring, rank, descending_blocks=True)
        got_asc = tutte_via_chow(ring, rank, descending_blocks=False)
        d_ok = got_desc == want
        a_ok = got_asc == want
        ok &= d_ok
        print(f"  {name}: descending {'ok' if d_ok else 'MISMATCH'}, "
              f"ascending {'matches too' if a_ok else 'differs (expected)'}")
        if not d_ok:
            print(f"    want {fmt_poly(want)}")
            print(f"    got  {fmt_poly(got_desc)}")

    print("ALL OK" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
