"""Semigroups generated by arithmetic progressions <a, a+d, ..., a+kd>.

Everything here is exact integer arithmetic: O(1) membership through the
unique decomposition M = a*x + d*y with 0 <= y < a, the closed-form Frobenius
number, and the machinery behind the square upper bound B(a, d, k): the
per-residue corrections lambda_i, their maximum lambda_star, the residues
alpha_1 < ... < alpha_n attaining it, and the grid cell (mu, j) bracketing
sqrt((k*d - lambda_star) * (a + k*d)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, isqrt

from .core import NegativeInput, NonCoprime, SemigroupError


class DTooSmall(SemigroupError):
    """The operation needs common difference d >= 3."""


@dataclass(frozen=True)
class ApSemigroup:
    """<a, a+d, a+2d, ..., a+kd> with a >= 2 and gcd(a, d) = 1."""

    a: int
    d: int
    k: int

    def __post_init__(self):
        if self.a < 2:
            raise SemigroupError(f"first term must be >= 2, got {self.a}")
        if self.d < 1:
            raise SemigroupError(f"common difference must be >= 1, got {self.d}")
        if self.k < 1:
            raise SemigroupError(f"progression length parameter must be >= 1, got {self.k}")
        if gcd(self.a, self.d) != 1:
            raise NonCoprime(f"gcd({self.a}, {self.d}) != 1")
        # inverse of d mod a, fixed once: membership queries reuse it
        object.__setattr__(self, "_dinv", pow(self.d % self.a, -1, self.a))

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(self.a + i * self.d for i in range(self.k + 1))

    def to_json(self) -> str:
        return json.dumps({"a": self.a, "d": self.d, "k": self.k}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ApSemigroup":
        obj = json.loads(text)
        return cls(obj["a"], obj["d"], obj["k"])


def decompose(S: ApSemigroup, value: int) -> tuple[int, int]:
    """The unique (x, y) with value = a*x + d*y and 0 <= y <= a - 1."""
    y = (value * S._dinv) % S.a
    x = (value - S.d * y) // S.a
    return x, y


def ap_contains(S: ApSemigroup, value: int) -> bool:
    """Membership in O(1): value is in S iff its decomposition has x >= 0 and y <= k*x."""
    if value < 0:
        raise NegativeInput(f"membership is defined for non-negative integers, got {value}")
    x, y = decompose(S, value)
    return x >= 0 and y <= S.k * x


def ap_frobenius(S: ApSemigroup) -> int:
    """Largest integer outside S, in closed form."""
    a, d, k = S.a, S.d, S.k
    return ((a - 2) // k + 1) * a + (d - 1) * (a - 1) - 1


def _inverse_mod(a, d):
    # gcd(a, d) == 1; for d == 1 the inverse is taken to be 0
    return 0 if d == 1 else pow(a % d, -1, d)


@dataclass(frozen=True)
class LambdaProfile:
    """Corrections lambda_i in [0, d) with lambda_i * a + i^2 divisible by d.

    lambda_star is max(lambdas); alphas lists the residues attaining it in
    increasing order, and alpha_next = d + alphas[0] closes the alpha grid
    cyclically.
    """

    d: int
    lambdas: tuple[int, ...]
    lambda_star: int
    alphas: tuple[int, ...]
    alpha_next: int

    def to_dict(self):
        return {
            "d": self.d,
            "lambdas": list(self.lambdas),
            "lambda_star": self.lambda_star,
            "alphas": list(self.alphas),
            "alpha_next": self.alpha_next,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def lambda_profile(a: int, d: int) -> LambdaProfile:
    """Profile of the residue corrections for the pair (a, d)."""
    if d < 1:
        raise SemigroupError(f"d must be >= 1, got {d}")
    if gcd(a, d) != 1:
        raise NonCoprime(f"gcd({a}, {d}) != 1")
    inv = _inverse_mod(a, d)
    lambdas = tuple((-inv * i * i) % d for i in range(d))
    star = max(lambdas)
    alphas = tuple(i for i, v in enumerate(lambdas) if v == star)
    return LambdaProfile(d=d, lambdas=lambdas, lambda_star=star,
                         alphas=alphas, alpha_next=d + alphas[0])


def square_in_ap(S: ApSemigroup, i: int) -> bool:
    """Exact integer test deciding whether (a - i)^2 lies in S.

    Valid for any integer i (positive or negative); the square is compared
    against the least progression element in its residue class mod d.
    """
    a, d, k = S.a, S.d, S.k
    lam = (-_inverse_mod(a, d) * i * i) % d
    q = (i * i + lam * a) // (a * d)
    return (i + k * d) ** 2 <= ((q + k) * d - lam) * (a + k * d)


@dataclass(frozen=True)
class MuJ:
    """Grid cell with grid(mu, j) <= sqrt(target) < grid(mu, j+1).

    grid(mu, j) = mu*d + alphas[j-1] (j is 1-based), and the comparison with
    sqrt(target) is read linearly: a non-positive grid point is always below,
    otherwise squares are compared.  mu can be -1 for small first terms.
    """

    mu: int
    j: int
    target: int


def mu_j(S: ApSemigroup) -> MuJ:
    """Locate the alpha-grid cell bracketing sqrt((kd - lambda_star)(a + kd))."""
    if S.d < 3:
        raise DTooSmall(f"alpha bracketing needs d >= 3, got {S.d}")
    return _mu_j(S, lambda_profile(S.a, S.d))


def _mu_j(S, prof):
    d = S.d
    alphas = prof.alphas
    n = len(alphas)
    target = (S.k * d - prof.lambda_star) * (S.a + S.k * d)
    # start strictly above sqrt(target), walk the grid downward to the bracket
    mu, j = isqrt(target) // d + 1, n
    while True:
        g = mu * d + alphas[j - 1]
        if g <= 0 or g * g <= target:
            return MuJ(mu=mu, j=j, target=target)
        if j > 1:
            j -= 1
        else:
            mu, j = mu - 1, n


def bound_edge(S: ApSemigroup) -> int:
    """The index (mu - k)*d + alpha_{j+1} entering the square upper bound."""
    if S.d < 3:
        raise DTooSmall(f"the square bound needs d >= 3, got {S.d}")
    prof = lambda_profile(S.a, S.d)
    cell = _mu_j(S, prof)
    n = len(prof.alphas)
    alpha_next = prof.alphas[cell.j] if cell.j < n else prof.alpha_next
    return (cell.mu - S.k) * S.d + alpha_next


def bound_B(S: ApSemigroup) -> int:
    """Closed-form upper bound (a - bound_edge(S))^2 for the square Frobenius number."""
    return (S.a - bound_edge(S)) ** 2
