"""Exact integer polynomials and the q-formulas around the Baxter numbers.

Everything here is exact: integer coefficients, ``fractions.Fraction`` where a
rational intermediate is unavoidable, and polynomial division that refuses to
leave a remainder.

>>> theta_q(2, 1).coeffs
(1, 1, 2, 2, 2, 1, 1)
>>> gamma_expansion(baxter_poly(4))
(1, 7)
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import NonExactDivision, NonIntegerResult, NotPalindromic


class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplying x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _lift(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, e: int) -> "IntPolynomial":
        """Multiply by x**e."""
        return IntPolynomial((0,) * e + self.coeffs) if self.coeffs else self

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division; raises NonExactDivision if a quotient coefficient is not an integer."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            top = rem[i + len(other.coeffs) - 1]
            if top % lead:
                raise NonExactDivision("quotient has a non-integer coefficient")
            c = top // lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonExactDivision(f"remainder {r} dividing {self} by {other}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, obj: Sequence) -> "IntPolynomial":
        return cls(int(x) for x in obj)

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            body = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            coef = str(mag) if (mag != 1 or not body) else ""
            terms.append(("-" if c < 0 else "+", coef + body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format()


def _lift(x) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial.const(x)


ONE = IntPolynomial.const(1)
Q = IntPolynomial.monomial(1)

# coefficient of t**k is an IntPolynomial in q
BiPolynomial = tuple[IntPolynomial, ...]


def bi_mul(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    out = [IntPolynomial()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def bi_add(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    n = max(len(a), len(b))
    zero = IntPolynomial()
    return _trim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])


def _trim(c: list) -> BiPolynomial:
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


def bi_at_q(a: BiPolynomial, q) -> IntPolynomial:
    return IntPolynomial(c(q) for c in a)


# --- q-integers and q-binomials --------------------------------------------

def qint(m: int) -> IntPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    return IntPolynomial([1] * m)


@functools.lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> IntPolynomial:
    if k < 0 or n < 0 or k > n:
        return IntPolynomial()
    if k == 0 or k == n:
        return ONE
    return qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shift(k)


def qpochhammer(a_exp: int, length: int) -> IntPolynomial:
    """(q^a; q)_length = prod_{j < length} (1 - q^(a+j))."""
    out = ONE
    for j in range(length):
        out = out * (ONE - IntPolynomial.monomial(a_exp + j))
    return out


# --- Theta and MacMahon -----------------------------------------------------

@functools.lru_cache(maxsize=None)
def theta_q(k: int, l: int) -> IntPolynomial:
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    m = k + l + 2
    num = qbinomial(m, k) * qbinomial(m, k + 1) * qbinomial(m, k + 2)
    return num.exact_div(qbinomial(m, 1) * qbinomial(m, 2))


def theta(k: int, l: int) -> int:
    m = k + l + 2
    num = comb(m, k) * comb(m, k + 1) * comb(m, k + 2)
    den = comb(m, 1) * comb(m, 2)
    if num % den:
        raise NonExactDivision(f"Theta({k},{l}) is not an integer")
    return num // den


def baxter_number(n: int) -> int:
    return sum(theta(k, n - 1 - k) for k in range(n)) if n >= 1 else 0


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def macmahon_q(a: int, b: int, c: int) -> IntPolynomial:
    """Generating function of plane partitions in an a x b x c box by size."""
    exps: dict[int, int] = {}
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                exps[i + j + k - 1] = exps.get(i + j + k - 1, 0) + 1
                exps[i + j + k - 2] = exps.get(i + j + k - 2, 0) - 1
    num, den = ONE, ONE
    for m, e in sorted(exps.items()):
        if e > 0:
            num = num * qint(m) ** e
        elif e < 0:
            den = den * qint(m) ** (-e)
    return num.exact_div(den)


def macmahon_number(m: int, k: int, l: int) -> int:
    """Plane partitions in a k x l x m box, from the binomial product."""
    if m == 0:
        return 1
    top = k + l + m - 1
    num = 1
    for i in range(m):
        num *= comb(top, k + i)
    den = 1
    for j in range(1, m):
        den *= comb(top, j)
    if num % den:
        raise NonExactDivision(f"H({m},{k},{l}) is not an integer")
    return num // den


def fixed_count(k: int, l: int) -> int:
    return theta_q(k, l)(-1)


# --- closed and summation formulas for the fixed points ---------------------

def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to {x}")
    return x.numerator


def _even_even(kappa: int, lam: int) -> Fraction:
    N = kappa + lam
    total = Fraction(0)
    for r in range(0, kappa + 2):
        term = comb(N + 2, kappa + 1) * comb(N + 2, kappa - r + 1) * comb(N + 2, kappa + r + 1) if kappa - r + 1 >= 0 else 0
        total += Fraction(2 * r ** 3, (N + 1) * (N + 2) ** 2) * term
    return total


def _odd_even(kappa: int, lam: int) -> Fraction:
    N = kappa + lam
    total = _even_even(kappa, lam)
    for r in range(1, kappa + 2):
        term = comb(N + 2, kappa + 1) * comb(N + 2, kappa - r + 1) * comb(N + 2, kappa + r + 1)
        total += Fraction((lam - r + 1) * r * (r + 1) * (2 * r + 1),
                          (kappa + 2 + r) * (N + 1) * (N + 2) ** 2) * term
    return total


def ffon_fixed(k: int, l: int) -> int:
    """Rotation-fixed count from the summation formulas, split by the parities of k and l."""
    if k % 2 and l % 2:
        return 0
    if k % 2 == 0 and l % 2 == 0:
        return _as_int(_even_even(k // 2, l // 2), f"even/even sum at ({k},{l})")
    if k % 2:
        return _as_int(_odd_even(k // 2, l // 2), f"odd/even sum at ({k},{l})")
    return _as_int(_odd_even(l // 2, k // 2), f"odd/even sum at ({l},{k})")


def ffon_closed(k: int, l: int, corrected: bool = True) -> Fraction:
    """Closed forms of the fixed-point count.

    For k odd and l even the default is the repaired product
    C(N+1,kappa) C(N+1,lambda) C(N+1,kappa+1) / (N+1); ``corrected=False``
    gives the product with C(N+1,kappa) squared, which is wrong at (1, 2).
    """
    if k % 2 and l % 2:
        return Fraction(0)
    if k % 2 == 0 and l % 2 == 0:
        kappa, lam = k // 2, l // 2
        N = kappa + lam
        return Fraction(comb(N + 1, kappa) * comb(N + 1, kappa + 1) * comb(N, kappa), N + 1)
    if k % 2 == 0:
        k, l = l, k
    kappa, lam = k // 2, l // 2
    N = kappa + lam
    second = comb(N + 1, lam) if corrected else comb(N + 1, kappa)
    return Fraction(comb(N + 1, kappa) * second * comb(N + 1, kappa + 1), N + 1)


# --- Hoggatt sums --------------------------------------------------------------

def hoggatt(m: int, k: int, l: int) -> int:
    return macmahon_number(m, k, l)


def hoggatt_q(m: int, k: int, l: int) -> IntPolynomial:
    return macmahon_q(k, l, m).shift(m * comb(k + 1, 2))


def hoggatt_sum(n: int, m: int) -> int:
    return sum(hoggatt(m, k, n - k) for k in range(n + 1))


def hoggatt_sum_q(n: int, m: int) -> IntPolynomial:
    out = IntPolynomial()
    for k in range(n + 1):
        out = out + hoggatt_q(m, k, n - k)
    return out


def q_catalan(n: int) -> IntPolynomial:
    return qbinomial(2 * n, n).exact_div(qint(n + 1))


# --- descent polynomial, gamma vectors, real roots ----------------------------

def baxter_poly(n: int) -> IntPolynomial:
    """B(n, t): Baxter permutations of size n counted by ascents (equivalently descents)."""
    return IntPolynomial(theta(k, n - 1 - k) for k in range(n))


def baxter_poly_tq(n: int) -> BiPolynomial:
    """B(n, t, q) with t^k coefficient q^(3 C(k,2)) Theta_{k, n-1-k}(q)."""
    return tuple(theta_q(k, n - 1 - k).shift(3 * comb(k, 2)) for k in range(n))


def gamma_expansion(p: IntPolynomial, degree: int | None = None) -> tuple[int, ...]:
    """Coefficients gamma_i with p = sum gamma_i t^i (1+t)^(d-2i)."""
    d = p.degree if degree is None else degree
    c = list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))
    if len(c) != d + 1 or c != c[::-1]:
        raise NotPalindromic(f"{p} is not palindromic of degree {d}")
    rest = IntPolynomial(c)
    gammas = []
    for i in range(d // 2 + 1):
        g = rest.coeffs[i] if i < len(rest.coeffs) else 0
        gammas.append(g)
        rest = rest - (IntPolynomial([1, 1]) ** (d - 2 * i)).shift(i) * g
    if not rest.is_zero():
        raise NotPalindromic(f"{p} left remainder {rest}")
    return tuple(gammas)


def _rising(x: int, i: int) -> int:
    out = 1
    for j in range(i):
        out *= x + j
    return out


def gamma_closed(n: int, i: int) -> Fraction:
    return Fraction(_rising(n + 3, i) * _rising(1 - n, 2 * i),
                    _rising(1, i) * _rising(2, i) * _rising(3, i))


def gamma_q(n: int, i: int) -> IntPolynomial:
    num = qpochhammer(n - 2 * i, 2 * i) * qpochhammer(n + 3, i)
    den = qpochhammer(3, i) * qpochhammer(2, i) * qpochhammer(1, i)
    return num.exact_div(den).shift(3 * comb(i, 2))


def gamma_q_sum(n: int) -> BiPolynomial:
    """sum_i gamma_i(q) t^i prod_{m=n-2+i}^{2n-4-i} (1 + t q^m); equals B(n, t, q)."""
    total: BiPolynomial = ()
    for i in range((n - 1) // 2 + 1):
        term: BiPolynomial = tuple([IntPolynomial()] * i + [gamma_q(n, i)])
        for m in range(n - 2 + i, 2 * n - 3 - i):
            term = bi_mul(term, (ONE, IntPolynomial.monomial(m)))
        total = bi_add(total, term)
    return total


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for j, x in enumerate(b):
            a[shift + j] -= c * x
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _frac_rem(a, b)
    return a


def _frac_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        out[i] = c
        for j, x in enumerate(b):
            a[i + j] -= c * x
    if any(a):
        raise NonExactDivision("square-free reduction left a remainder")
    return out


def real_root_count(p: IntPolynomial) -> int:
    """Number of distinct real roots, by a Sturm sequence over the rationals."""
    if p.degree < 1:
        return 0
    f = [Fraction(c) for c in p.coeffs]
    df = [Fraction(i * c) for i, c in enumerate(p.coeffs)][1:]
    g = _frac_gcd(f, df)
    if len(g) > 1:
        f = _frac_div(f, g)
    seq = [f, [Fraction(i * c) for i, c in enumerate(f)][1:]]
    while True:
        r = _frac_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])

    def changes(signs: list[int]) -> int:
        s = [x for x in signs if x]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    at_neg = [(1 if s[-1] > 0 else -1) * (-1) ** (len(s) - 1) for s in seq]
    return changes(at_neg) - changes(at_pos)


def is_real_rooted(p: IntPolynomial) -> bool:
    """True if every complex root of p is real (constants count as real-rooted)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    if p.degree < 1:
        return True
    f = [Fraction(c) for c in p.coeffs]
    df = [Fraction(i * c) for i, c in enumerate(p.coeffs)][1:]
    g = _frac_gcd(f, df)
    squarefree_degree = p.degree - (len(g) - 1)
    return real_root_count(p) == squarefree_degree
