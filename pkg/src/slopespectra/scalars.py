"""Scalar backends: exact rationals and tolerance-governed floats.

All geometry in this library is generic over a scalar *backend*.  The exact
backend stores coordinates as ``fractions.Fraction`` (always gcd-reduced with
positive denominator) and compares them exactly; the float backend stores
plain ``float`` values and treats two values as equal when

    |a - b| <= eps_rel * max(1, |a|, |b|).

Backends are small immutable objects carried by configurations, conics and
reports, so every predicate states explicitly which comparison rule it uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RATIONAL = "rational"
FLOAT = "float"

DEFAULT_EPS_REL = 1e-9
DEFAULT_EPS_ANGLE = 1e-9


@dataclass(frozen=True)
class Backend:
    """Comparison rules for one scalar representation.

    kind      -- "rational" (exact) or "float" (tolerance-governed)
    eps_rel   -- relative tolerance for float equality (unused when exact)
    eps_angle -- angular merge tolerance, radians, for float slope classing
    """

    kind: str
    eps_rel: float = DEFAULT_EPS_REL
    eps_angle: float = DEFAULT_EPS_ANGLE

    def __post_init__(self):
        if self.kind not in (RATIONAL, FLOAT):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.eps_rel <= 0 or self.eps_angle <= 0:
            raise ValueError("tolerances must be positive")

    @property
    def exact(self) -> bool:
        return self.kind == RATIONAL

    def coerce(self, value):
        """Convert a raw coordinate to this backend's scalar type.

        Floats are refused by the exact backend: decimal input is never
        silently rationalized.
        """
        from .errors import BackendMismatch

        if self.exact:
            if isinstance(value, bool):
                raise BackendMismatch(f"not a coordinate: {value!r}")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise BackendMismatch(
                f"exact backend cannot take {type(value).__name__} value {value!r}"
            )
        if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
            return float(value)
        raise BackendMismatch(f"not a coordinate: {value!r}")

    def eq(self, a, b) -> bool:
        """Backend equality of two scalars."""
        if self.exact:
            return a == b
        return abs(a - b) <= self.eps_rel * max(1.0, abs(a), abs(b))

    def cmp(self, a, b) -> int:
        """Three-way comparison honouring the equality rule: -1, 0 or +1."""
        if self.eq(a, b):
            return 0
        return 1 if a > b else -1

    def sum_is_zero(self, terms) -> bool:
        """Whether a sum of terms is (tolerance-)zero.

        The float rule compares |sum| against eps_rel * max(1, |term_i|),
        so cancellation of large terms is judged relative to their size.
        """
        terms = list(terms)
        total = sum(terms)
        if self.exact:
            return total == 0
        scale = max([1.0] + [abs(t) for t in terms])
        return abs(total) <= self.eps_rel * scale


EXACT = Backend(RATIONAL)


def exact_backend() -> Backend:
    """The exact-rational backend (stateless; shared instance)."""
    return EXACT


def float_backend(eps_rel: float = DEFAULT_EPS_REL,
                  eps_angle: float | None = None) -> Backend:
    """A float backend with the given relative tolerance."""
    return Backend(FLOAT, eps_rel, eps_angle if eps_angle is not None else DEFAULT_EPS_ANGLE)
