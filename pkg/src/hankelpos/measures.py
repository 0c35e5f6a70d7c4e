"""Finitely presented positive measures on the half-line and on (-1, 1).

Two pictures are supported, mirroring the two Hardy-space realizations of a
positive Hankel operator:

* half-line measures (``domain="halfplane"``) live on (0, oo) and represent
  the operator through its Laplace transform / Pick function; boundedness is
  governed by the Widom-type head/tail conditions on
  ``d rho = d mu / (1 + lambda^2)``;
* disc measures (``domain="disc"``) live on (-1, 1) and represent the
  operator through its Hamburger moment sequence ``c_j = int x^j d mu``.

The model is deliberately small — point masses plus power-law density pieces —
so that every moment, tail mass and transform either has an auditable closed
form or reduces to a one-dimensional adaptive quadrature.  Closed forms used:

* atoms: ``int x^j d(m delta_p) = m p^j``;
* ``coeff * x^e`` pieces: power rule
  ``int_a^b x^(e+j) dx = (b^(e+j+1) - a^(e+j+1)) / (e+j+1)``;
* ``coeff * (1-x)^e`` pieces on [a, b] within [0, 1]: regularized incomplete
  beta, ``int_a^b x^j (1-x)^e dx = B(j+1, e+1) (I_b - I_a)`` with
  ``I_x = betainc(j+1, e+1, x)`` and ``B`` evaluated through ``gammaln`` so the
  formula is stable up to the moment cap;
* ``coeff * (1+x)^e`` pieces by the reflection ``x -> -x`` onto the previous
  case;
* Laplace transforms of ``lambda^e`` pieces with ``e > -1``: lower incomplete
  gamma, ``int_l^r lambda^e exp(-lambda t) dlambda
  = t^-(e+1) Gamma(e+1) (P(e+1, rt) - P(e+1, lt))``.

Everything else (pieces straddling an awkward point, the Moebius-power pieces
produced by the Cayley pushforward, rho-integrals of general exponents) goes
through :mod:`hankelpos.quadrature`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Union

import numpy as np
from scipy.special import betainc, gammainc, gammaln

from .quadrature import (
    DEFAULT_ABS_TOL,
    DEFAULT_REL_TOL,
    integrate,
    integrate_halfline,
)

__all__ = [
    "MeasureSpecError",
    "Atom",
    "PowerPiece",
    "CayleyPiece",
    "Measure",
    "halfplane_measure",
    "disc_measure",
    "atom",
    "power_piece",
    "lebesgue_piece",
    "measure_from_spec",
    "measure_to_spec",
    "load_measure",
    "MOMENT_CAP",
    "moment",
    "moments",
    "piece_integral",
    "total_mass",
    "mass_interval",
    "laplace_transform",
    "rho_interval",
    "rho_total",
    "GridSpec",
    "WidomReport",
    "widom_check",
    "cayley_pushforward",
]

#: Largest moment order served before the overflow guard trips.
MOMENT_CAP = 4096

_POWER_BASES = ("x", "one_minus_x", "one_plus_x", "lambda")


class MeasureSpecError(ValueError):
    """A measure description violates the schema or a positivity/finiteness rule."""


@dataclass(frozen=True)
class Atom:
    """Point mass ``mass * delta_position``."""

    position: float
    mass: float


@dataclass(frozen=True)
class PowerPiece:
    """Density piece ``coeff * base(x)^exponent`` on ``support``.

    ``base`` is one of ``"x"``, ``"one_minus_x"``, ``"one_plus_x"`` (disc) or
    ``"lambda"`` (half-line, same functional form as ``"x"``).  The upper
    support endpoint may be ``math.inf`` on the half-line.
    """

    coeff: float
    exponent: float
    base: str
    support: tuple[float, float]

    def density(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.base in ("x", "lambda"):
            core = np.power(x, self.exponent)
        elif self.base == "one_minus_x":
            core = np.power(1.0 - x, self.exponent)
        else:  # one_plus_x
            core = np.power(1.0 + x, self.exponent)
        return self.coeff * core


@dataclass(frozen=True)
class CayleyPiece:
    """Density piece ``coeff * (1+t)^plus_exponent * (1-t)^minus_exponent``.

    This family arises as the image of half-line power densities under the
    Cayley change of variables; it is not part of the JSON schema's ``power``
    kind but round-trips through the internal ``cayley_power`` kind.
    """

    coeff: float
    plus_exponent: float
    minus_exponent: float
    support: tuple[float, float]

    def density(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return (
            self.coeff
            * np.power(1.0 + x, self.plus_exponent)
            * np.power(1.0 - x, self.minus_exponent)
        )


Piece = Union[PowerPiece, CayleyPiece]


@dataclass(frozen=True)
class Measure:
    """A positive measure: point masses plus power-law density pieces.

    Instances are immutable and hashable; construct them through
    :func:`halfplane_measure` / :func:`disc_measure` (or the JSON loaders),
    which validate the domain rules.
    """

    domain: str
    atoms: tuple[Atom, ...] = ()
    pieces: tuple[Piece, ...] = ()

    def is_empty(self) -> bool:
        return not self.atoms and not self.pieces


def atom(position: float, mass: float) -> Atom:
    return Atom(float(position), float(mass))


def power_piece(
    coeff: float,
    exponent: float,
    base: str,
    support: tuple[float, float],
) -> PowerPiece:
    lo, hi = support
    return PowerPiece(float(coeff), float(exponent), base, (float(lo), float(hi)))


def lebesgue_piece(lo: float, hi: float, *, domain: str = "halfplane") -> PowerPiece:
    """Constant density 1 on [lo, hi] (Lebesgue measure restricted there)."""
    base = "lambda" if domain == "halfplane" else "x"
    return power_piece(1.0, 0.0, base, (lo, hi))


def _validate(measure: Measure) -> Measure:
    if measure.domain not in ("halfplane", "disc"):
        raise MeasureSpecError(f"unknown domain {measure.domain!r}")
    for a in measure.atoms:
        if not (math.isfinite(a.position) and math.isfinite(a.mass)):
            raise MeasureSpecError("atom position/mass must be finite")
        if a.mass <= 0:
            raise MeasureSpecError(f"atom mass must be positive, got {a.mass}")
        if measure.domain == "halfplane" and a.position <= 0:
            raise MeasureSpecError(
                f"half-line atoms need position > 0, got {a.position} "
                "(no mass at 0 is representable)"
            )
        if measure.domain == "disc" and not -1.0 < a.position < 1.0:
            raise MeasureSpecError(
                f"disc atoms need position in (-1, 1), got {a.position} "
                "(no mass at the endpoints is representable)"
            )
    for p in measure.pieces:
        _validate_piece(measure.domain, p)
    return measure


def _validate_piece(domain: str, p: Piece) -> None:
    lo, hi = p.support
    if not (p.coeff > 0 and math.isfinite(p.coeff)):
        raise MeasureSpecError(f"density coefficient must be positive, got {p.coeff}")
    if isinstance(p, CayleyPiece):
        if domain != "disc":
            raise MeasureSpecError("cayley_power pieces live on the disc domain")
        if not -1.0 <= lo < hi <= 1.0:
            raise MeasureSpecError(f"disc support must satisfy -1 <= lo < hi <= 1, got {p.support}")
        if lo == -1.0 and p.plus_exponent <= -1.0:
            raise MeasureSpecError("(1+x) exponent must exceed -1 at the endpoint -1")
        if hi == 1.0 and p.minus_exponent <= -1.0:
            raise MeasureSpecError("(1-x) exponent must exceed -1 at the endpoint 1")
        return
    if p.base not in _POWER_BASES:
        raise MeasureSpecError(f"unknown density base {p.base!r}")
    if domain == "halfplane":
        if p.base != "lambda":
            raise MeasureSpecError("half-line densities use base 'lambda'")
        if not (0.0 <= lo < hi):
            raise MeasureSpecError(f"half-line support must satisfy 0 <= lo < hi, got {p.support}")
        if lo == 0.0 and p.exponent <= -1.0:
            raise MeasureSpecError(
                "exponent must exceed -1 at the endpoint 0 (rho-integral diverges)"
            )
        if math.isinf(hi) and p.exponent >= 1.0:
            raise MeasureSpecError(
                "exponent must be below 1 on an unbounded support (rho-integral diverges)"
            )
    else:
        if p.base == "lambda":
            raise MeasureSpecError("disc densities use bases 'x', 'one_minus_x', 'one_plus_x'")
        if not (-1.0 <= lo < hi <= 1.0):
            raise MeasureSpecError(f"disc support must satisfy -1 <= lo < hi <= 1, got {p.support}")
        if p.base == "x":
            if lo < 0.0 and p.exponent != int(p.exponent):
                raise MeasureSpecError(
                    "base 'x' with fractional exponent needs support in [0, 1]"
                )
            if lo <= 0.0 <= hi and p.exponent <= -1.0:
                raise MeasureSpecError("exponent must exceed -1 at the endpoint 0")
        if p.base == "one_minus_x" and hi == 1.0 and p.exponent <= -1.0:
            raise MeasureSpecError("(1-x) exponent must exceed -1 at the endpoint 1")
        if p.base == "one_plus_x" and lo == -1.0 and p.exponent <= -1.0:
            raise MeasureSpecError("(1+x) exponent must exceed -1 at the endpoint -1")


def halfplane_measure(
    atoms: Iterable[tuple[float, float] | Atom] = (),
    pieces: Iterable[Piece] = (),
) -> Measure:
    """Positive measure on (0, oo) with finite rho-integral."""
    return _validate(Measure("halfplane", _as_atoms(atoms), tuple(pieces)))


def disc_measure(
    atoms: Iterable[tuple[float, float] | Atom] = (),
    pieces: Iterable[Piece] = (),
) -> Measure:
    """Finite positive measure on (-1, 1)."""
    return _validate(Measure("disc", _as_atoms(atoms), tuple(pieces)))


def _as_atoms(atoms: Iterable[tuple[float, float] | Atom]) -> tuple[Atom, ...]:
    out = []
    for a in atoms:
        out.append(a if isinstance(a, Atom) else atom(*a))
    return tuple(out)


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------

def measure_from_spec(obj: dict) -> Measure:
    """Build a measure from its JSON description.

    Schema::

        {"domain": "halfplane" | "disc",
         "atoms": [{"pos": number, "mass": number}, ...],
         "densities": [{"kind": "power", "coeff": number, "exponent": number,
                        "base": "x"|"one_minus_x"|"one_plus_x"|"lambda",
                        "support": [number, number | "inf"]}, ...]}

    ``"inf"`` (the string) denotes an unbounded upper endpoint.  The internal
    ``"cayley_power"`` kind (fields ``plus_exponent``/``minus_exponent``) is
    accepted for round-tripping pushforward measures.
    """
    if not isinstance(obj, dict):
        raise MeasureSpecError("measure spec must be a JSON object")
    unknown = set(obj) - {"domain", "atoms", "densities"}
    if unknown:
        raise MeasureSpecError(f"unknown keys in measure spec: {sorted(unknown)}")
    try:
        domain = obj["domain"]
    except KeyError:
        raise MeasureSpecError("measure spec needs a 'domain' key") from None
    atoms = []
    for entry in obj.get("atoms", []):
        if not isinstance(entry, dict) or set(entry) != {"pos", "mass"}:
            raise MeasureSpecError(f"bad atom entry {entry!r}; expected pos/mass")
        atoms.append(atom(_as_number(entry["pos"]), _as_number(entry["mass"])))
    pieces: list[Piece] = []
    for entry in obj.get("densities", []):
        if not isinstance(entry, dict):
            raise MeasureSpecError(f"bad density entry {entry!r}")
        kind = entry.get("kind")
        if kind == "power":
            expected = {"kind", "coeff", "exponent", "base", "support"}
            if set(entry) != expected:
                raise MeasureSpecError(
                    f"power density needs exactly keys {sorted(expected)}, got {sorted(entry)}"
                )
            pieces.append(
                PowerPiece(
                    _as_number(entry["coeff"]),
                    _as_number(entry["exponent"]),
                    entry["base"],
                    _as_support(entry["support"]),
                )
            )
        elif kind == "cayley_power":
            expected = {"kind", "coeff", "plus_exponent", "minus_exponent", "support"}
            if set(entry) != expected:
                raise MeasureSpecError(
                    f"cayley_power density needs exactly keys {sorted(expected)}"
                )
            pieces.append(
                CayleyPiece(
                    _as_number(entry["coeff"]),
                    _as_number(entry["plus_exponent"]),
                    _as_number(entry["minus_exponent"]),
                    _as_support(entry["support"]),
                )
            )
        else:
            raise MeasureSpecError(f"unknown density kind {kind!r}")
    return _validate(Measure(domain, tuple(atoms), tuple(pieces)))


def _as_number(value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MeasureSpecError(f"expected a number, got {value!r}")
    return float(value)


def _as_support(value) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise MeasureSpecError(f"support must be a two-element list, got {value!r}")
    lo = _as_number(value[0])
    hi = math.inf if value[1] == "inf" else _as_number(value[1])
    return (lo, hi)


def measure_to_spec(mu: Measure) -> dict:
    """Inverse of :func:`measure_from_spec`."""
    densities = []
    for p in mu.pieces:
        support = [p.support[0], "inf" if math.isinf(p.support[1]) else p.support[1]]
        if isinstance(p, PowerPiece):
            densities.append(
                {"kind": "power", "coeff": p.coeff, "exponent": p.exponent,
                 "base": p.base, "support": support}
            )
        else:
            densities.append(
                {"kind": "cayley_power", "coeff": p.coeff,
                 "plus_exponent": p.plus_exponent,
                 "minus_exponent": p.minus_exponent, "support": support}
            )
    return {
        "domain": mu.domain,
        "atoms": [{"pos": a.position, "mass": a.mass} for a in mu.atoms],
        "densities": densities,
    }


def load_measure(path: str | Path) -> Measure:
    """Load a measure spec from a JSON file."""
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MeasureSpecError(f"cannot read measure spec {path}: {exc}") from exc
    return measure_from_spec(obj)


# ---------------------------------------------------------------------------
# Moments (disc domain)
# ---------------------------------------------------------------------------

def moment(mu: Measure, j: int, *, cap: int = MOMENT_CAP) -> float:
    """j-th moment ``int x^j d mu`` of a disc measure (exact per piece)."""
    if mu.domain != "disc":
        raise ValueError("moments are defined for disc measures; push the "
                         "measure forward first")
    if j < 0:
        raise ValueError(f"moment order must be nonnegative, got {j}")
    if j > cap:
        raise ValueError(f"moment order {j} exceeds the cap {cap}")
    out = 0.0
    for a in mu.atoms:
        out += a.mass * a.position**j
    for p in mu.pieces:
        out += _piece_moment(p, j)
    return out


def moments(mu: Measure, count: int, *, cap: int = MOMENT_CAP) -> np.ndarray:
    """Moment vector ``c_0 .. c_{count-1}``."""
    return np.array([moment(mu, j, cap=cap) for j in range(count)])


def _piece_moment(p: Piece, j: int) -> float:
    lo, hi = p.support
    if isinstance(p, CayleyPiece):
        return _quad_moment(p, j, lo, hi)
    if p.base in ("x", "lambda"):
        return p.coeff * _power_primitive_diff(p.exponent + j, lo, hi)
    if p.base == "one_minus_x":
        total = 0.0
        if lo < 0.0:
            total += _quad_moment(p, j, lo, min(hi, 0.0))
        if hi > 0.0:
            total += p.coeff * _beta_moment(j, p.exponent, max(lo, 0.0), hi)
        return total
    # one_plus_x: reflect x -> -x, landing on the one_minus_x closed form.
    total = 0.0
    if hi > 0.0:
        total += _quad_moment(p, j, max(lo, 0.0), hi)
    if lo < 0.0:
        sign = -1.0 if j % 2 else 1.0
        total += sign * p.coeff * _beta_moment(j, p.exponent, max(-hi, 0.0), -lo)
    return total


def _power_primitive_diff(power: float, lo: float, hi: float) -> float:
    """``int_lo^hi x^power dx`` by the power rule (log for power == -1)."""
    if power == -1.0:
        return math.log(hi / lo)
    s = power + 1.0
    return (_signed_pow(hi, s) - _signed_pow(lo, s)) / s


def _signed_pow(x: float, s: float) -> float:
    """x**s for the supported cases (x >= 0, or integral s)."""
    if x < 0.0:
        return math.copysign(abs(x) ** s, (-1.0) ** int(round(s)))
    if x == 0.0:
        return 1.0 if s == 0.0 else (0.0 if s > 0.0 else math.inf)
    return x**s


def _beta_moment(j: int, e: float, a: float, b: float) -> float:
    """``int_a^b x^j (1-x)^e dx`` for 0 <= a < b <= 1 via incomplete beta."""
    log_beta = gammaln(j + 1.0) + gammaln(e + 1.0) - gammaln(j + e + 2.0)
    return math.exp(log_beta) * (betainc(j + 1.0, e + 1.0, b) - betainc(j + 1.0, e + 1.0, a))


def _quad_moment(p: Piece, j: int, lo: float, hi: float) -> float:
    if hi <= lo:
        return 0.0
    return float(piece_integral(p, lambda x: np.power(x, float(j)), lo=lo, hi=hi))


# ---------------------------------------------------------------------------
# Integrating against a density piece
# ---------------------------------------------------------------------------

def _endpoint_exponents(piece: Piece, lo: float, hi: float) -> tuple[float, float]:
    """Power-law exponents of the density at lo/hi (0.0 where regular)."""
    a_lo = a_hi = 0.0
    if isinstance(piece, CayleyPiece):
        if lo == -1.0 and piece.plus_exponent < 0.0:
            a_lo = piece.plus_exponent
        if hi == 1.0 and piece.minus_exponent < 0.0:
            a_hi = piece.minus_exponent
        return a_lo, a_hi
    e = piece.exponent
    if e >= 0.0:
        return 0.0, 0.0
    if piece.base in ("x", "lambda"):
        if lo == 0.0:
            a_lo = e
    elif piece.base == "one_minus_x":
        if hi == 1.0:
            a_hi = e
    else:  # one_plus_x
        if lo == -1.0:
            a_lo = e
    return a_lo, a_hi


def _density_sans_singularity(piece: Piece, side: str):
    """The density with its singular power factor at ``side`` removed.

    What remains is finite on the closed (sub-)interval, so it can be safely
    evaluated even when the substituted point rounds onto the endpoint itself.
    """
    if isinstance(piece, CayleyPiece):
        if side == "lo":  # drop (1+x)^plus, keep (1-x)^minus
            return lambda x: piece.coeff * np.power(1.0 - x, piece.minus_exponent)
        return lambda x: piece.coeff * np.power(1.0 + x, piece.plus_exponent)
    return lambda x: np.full(np.shape(x), piece.coeff)


def _power_sub_lo(f, piece: Piece, lo: float, hi: float, alpha: float, **tol):
    # x = lo + u^q with q = 2/(1+alpha): the singular factor (x - lo)^alpha
    # times the Jacobian q u^{q-1} is exactly q u, which we use directly —
    # evaluating (x - lo)^alpha in x-space would hit the pole once u^q
    # underflows below the endpoint's floating-point spacing.
    regular = _density_sans_singularity(piece, "lo")
    q = 2.0 / (1.0 + alpha)
    top = (hi - lo) ** (1.0 / q)

    def substituted(u):
        u = np.asarray(u, dtype=float)
        x = lo + u**q
        value = regular(x) * (q * u)
        return value if f is None else value * f(x)

    return integrate(substituted, 0.0, top, **tol)


def _power_sub_hi(f, piece: Piece, lo: float, hi: float, alpha: float, **tol):
    regular = _density_sans_singularity(piece, "hi")
    q = 2.0 / (1.0 + alpha)
    top = (hi - lo) ** (1.0 / q)

    def substituted(u):
        u = np.asarray(u, dtype=float)
        x = hi - u**q
        value = regular(x) * (q * u)
        return value if f is None else value * f(x)

    return integrate(substituted, 0.0, top, **tol)


def piece_integral(
    piece: Piece,
    f=None,
    *,
    lo: float | None = None,
    hi: float | None = None,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
):
    """``int f(x) piece.density(x) dx`` over the support (or a sub-interval).

    This is the one quadrature entry point for density pieces: integrable
    endpoint singularities of the density (exponent in (-1, 0)) are absorbed
    by a power substitution, which plain panel refinement handles poorly — it
    converges slowly there, and split points can collide with the endpoint in
    floating point, evaluating the density at its pole.  ``f`` must be
    vectorized and smooth on the closed interval (``None`` means 1); complex
    values pass through, and the return type follows the integrand.
    """
    p_lo, p_hi = piece.support
    lo = p_lo if lo is None else float(lo)
    hi = p_hi if hi is None else float(hi)
    if not (p_lo <= lo and hi <= p_hi):
        raise ValueError(f"[{lo}, {hi}] is not inside the support {piece.support}")
    if hi <= lo:
        return 0.0
    if f is None:
        g = piece.density
    else:
        def g(x):
            x = np.asarray(x, dtype=float)
            return f(x) * piece.density(x)

    a_lo, a_hi = _endpoint_exponents(piece, lo, hi)
    if a_lo <= -1.0 or a_hi <= -1.0:
        raise ValueError(f"non-integrable endpoint singularity in {piece}")
    tol = {"abs_tol": abs_tol, "rel_tol": rel_tol}
    if math.isinf(hi):
        if a_lo < 0.0:
            mid = lo + 1.0
            return _power_sub_lo(f, piece, lo, mid, a_lo, **tol) + integrate_halfline(
                g, mid, **tol
            )
        return integrate_halfline(g, lo, **tol)
    if a_lo < 0.0 and a_hi < 0.0:
        mid = 0.5 * (lo + hi)
        return _power_sub_lo(f, piece, lo, mid, a_lo, **tol) + _power_sub_hi(
            f, piece, mid, hi, a_hi, **tol
        )
    if a_lo < 0.0:
        return _power_sub_lo(f, piece, lo, hi, a_lo, **tol)
    if a_hi < 0.0:
        return _power_sub_hi(f, piece, lo, hi, a_hi, **tol)
    return integrate(g, lo, hi, **tol)


# ---------------------------------------------------------------------------
# Masses, tails, transforms
# ---------------------------------------------------------------------------

def total_mass(mu: Measure) -> float:
    """Total mass; ``math.inf`` for half-line measures with divergent pieces."""
    out = sum(a.mass for a in mu.atoms)
    for p in mu.pieces:
        lo, hi = p.support
        if isinstance(p, PowerPiece) and math.isinf(hi) and p.exponent >= -1.0:
            return math.inf
        out += _piece_mass(p, lo, hi)
    return out


def mass_interval(mu: Measure, lo: float, hi: float) -> float:
    """``mu([lo, hi])`` with closed endpoints (atoms at lo/hi included)."""
    if hi < lo:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    out = sum(a.mass for a in mu.atoms if lo <= a.position <= hi)
    for p in mu.pieces:
        a, b = max(p.support[0], lo), min(p.support[1], hi)
        if b > a:
            out += _piece_mass(p, a, b)
    return out


def _piece_mass(p: Piece, lo: float, hi: float) -> float:
    """``int_lo^hi density`` with [lo, hi] inside the support."""
    if isinstance(p, CayleyPiece):
        return float(piece_integral(p, lo=lo, hi=hi))
    e = p.exponent
    if p.base in ("x", "lambda"):
        if math.isinf(hi):
            if e >= -1.0:
                return math.inf
            return p.coeff * (0.0 - _signed_pow(lo, e + 1.0)) / (e + 1.0)
        if lo == 0.0 and e == -1.0:
            return math.inf
        return p.coeff * _power_primitive_diff(e, lo, hi)
    if p.base == "one_minus_x":
        if e == -1.0:
            return p.coeff * math.log((1.0 - lo) / (1.0 - hi))
        return p.coeff * ((1.0 - lo) ** (e + 1.0) - (1.0 - hi) ** (e + 1.0)) / (e + 1.0)
    if e == -1.0:
        return p.coeff * math.log((1.0 + hi) / (1.0 + lo))
    return p.coeff * ((1.0 + hi) ** (e + 1.0) - (1.0 + lo) ** (e + 1.0)) / (e + 1.0)


def laplace_transform(mu: Measure, t: float) -> float:
    """``phi(t) = int exp(-lambda t) d mu(lambda)`` for a half-line measure."""
    if mu.domain != "halfplane":
        raise ValueError("the Laplace transform is defined for half-line measures")
    if not t > 0:
        raise ValueError(f"need t > 0, got {t}")
    out = sum(a.mass * math.exp(-a.position * t) for a in mu.atoms)
    for p in mu.pieces:
        out += _piece_laplace(p, t)
    return out


def _piece_laplace(p: PowerPiece, t: float) -> float:
    lo, hi = p.support
    e = p.exponent
    if e > -1.0:
        # int lambda^e exp(-lambda t) = t^-(e+1) Gamma(e+1) [P(e+1, t hi) - P(e+1, t lo)]
        upper = 1.0 if math.isinf(hi) else gammainc(e + 1.0, t * hi)
        lower = gammainc(e + 1.0, t * lo)
        return p.coeff * math.gamma(e + 1.0) * (upper - lower) / t ** (e + 1.0)
    return float(piece_integral(p, lambda lam: np.exp(-t * lam)))


def rho_interval(mu: Measure, interval: tuple[float, float]) -> float:
    """``int_I d mu(lambda) / (1 + lambda^2)`` over ``I = (a, b]`` or ``[a, oo)``.

    A finite upper endpoint makes the interval half-open on the left (atoms at
    ``a`` excluded, at ``b`` included); an infinite one closes the left end
    (atoms at ``a`` included).  These are exactly the interval shapes entering
    the head/tail constants ``rho((0, eps]) <= beta eps`` and
    ``rho([t, oo)) <= gamma / t``.
    """
    if mu.domain != "halfplane":
        raise ValueError("rho-integrals are defined for half-line measures")
    a, b = interval
    if b <= a:
        raise ValueError(f"empty interval {interval}")
    closed_left = math.isinf(b)
    out = 0.0
    for at in mu.atoms:
        inside = (at.position >= a) if closed_left else (a < at.position <= b)
        if inside:
            out += at.mass / (1.0 + at.position**2)
    for p in mu.pieces:
        lo, hi = max(p.support[0], a), min(p.support[1], b)
        if hi > lo:
            out += _piece_rho(p, lo, hi)
    return out


def _piece_rho(p: PowerPiece, lo: float, hi: float) -> float:
    if p.exponent == 0.0:
        upper = 0.5 * math.pi if math.isinf(hi) else math.atan(hi)
        return p.coeff * (upper - math.atan(lo))
    return float(
        piece_integral(p, lambda lam: 1.0 / (1.0 + lam * lam), lo=lo, hi=hi)
    )


def rho_total(mu: Measure) -> float:
    """``rho((0, oo))`` — finite for every valid half-line measure."""
    return rho_interval(mu, (0.0, math.inf))


# ---------------------------------------------------------------------------
# Widom-type boundedness check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    """Probe grids for the boundedness scan.

    The coarse grid spans the inner dyad of the fine grid so that the
    refinement step widens the window as well as the resolution — a supremum
    that keeps growing when the window widens is the signature of a failed
    O(.) condition.
    """

    coarse: int = 64
    fine: int = 128
    coarse_span: tuple[float, float] = (1e-3, 1e3)
    fine_span: tuple[float, float] = (1e-6, 1e6)

    def __post_init__(self):
        if self.coarse < 16:
            raise ValueError("need at least 16 log-spaced probe points")
        if self.fine < self.coarse:
            raise ValueError("the fine grid must refine the coarse one")


@dataclass(frozen=True)
class WidomReport:
    """Outcome of the head/tail boundedness scan.

    ``beta`` bounds the head behaviour (``rho((0, eps]) / eps`` on the
    half-line; ``(j+1) c_j`` on the disc), ``gamma`` the tail behaviour
    (``t rho([t, oo))``; boundary mass ratios ``mu([x,1])/(1-x)`` and
    ``mu([-1,x])/(1+x)``).  ``alpha_estimate`` is the induced Carleson
    embedding estimate ``(1/2) sup (j+1) c_j`` (via Hilbert's inequality and
    the length-measure dictionary); it is reported as an estimate only.
    ``rho_total`` carries ``rho((0, oo))`` for half-line measures and the
    total mass for disc measures.
    """

    domain: str
    beta: float
    gamma: float
    alpha_estimate: float
    rho_total: float
    verdict: str
    grid: dict = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "beta": self.beta,
            "gamma": self.gamma,
            "alpha_estimate": self.alpha_estimate,
            "rho_total": self.rho_total,
            "verdict": self.verdict,
            "grid": dict(self.grid),
        }


def _log_grid(span: tuple[float, float], n: int) -> np.ndarray:
    return np.logspace(math.log10(span[0]), math.log10(span[1]), n)


def _hp_constants(mu: Measure, span: tuple[float, float], n: int) -> tuple[float, float]:
    probes = set(_log_grid(span, n).tolist())
    # The suprema of the piecewise-smooth ratios sit at atoms and support
    # endpoints; probing them keeps closed-form cases exact.
    probes.update(a.position for a in mu.atoms)
    for p in mu.pieces:
        probes.update(e for e in p.support if math.isfinite(e) and e > 0)
    grid = sorted(probes)
    beta = 0.0
    gamma = 0.0
    for eps in grid:
        beta = max(beta, rho_interval(mu, (0.0, eps)) / eps)
        gamma = max(gamma, eps * rho_interval(mu, (eps, math.inf)))
    return beta, gamma


def _moment_j_grid(hi: float, n: int) -> list[int]:
    js = {0}
    js.update(int(round(v)) for v in _log_grid((1.0, min(hi, float(MOMENT_CAP))), n))
    return sorted(js)


def _disc_constants(
    mu: Measure, span: tuple[float, float], n: int
) -> tuple[float, float]:
    j_grid = _moment_j_grid(span[1], n)
    beta = max((j + 1) * abs(moment(mu, j)) for j in j_grid)
    gaps = set(np.clip(_log_grid(span, n), None, 2.0).tolist())
    for a in mu.atoms:
        gaps.update((1.0 - a.position, 1.0 + a.position))
    for p in mu.pieces:
        gaps.update((1.0 - p.support[0], 1.0 - p.support[1],
                     1.0 + p.support[0], 1.0 + p.support[1]))
    gamma = 0.0
    for g in sorted(x for x in gaps if 0.0 < x <= 2.0):
        gamma = max(gamma, mass_interval(mu, 1.0 - g, 1.0) / g)
        gamma = max(gamma, mass_interval(mu, -1.0, -1.0 + g) / g)
    return beta, gamma


@lru_cache(maxsize=64)
def widom_check(mu: Measure, grid: GridSpec = GridSpec()) -> WidomReport:
    """Estimate the boundedness constants and classify the measure.

    The head/tail suprema are evaluated on the coarse grid and again on the
    finer, wider grid.  Verdict: ``bounded`` when both constants move by less
    than 1 % under refinement, ``unbounded`` when either grows by 10 % or
    more, ``inconclusive`` otherwise.
    """
    constants = _hp_constants if mu.domain == "halfplane" else _disc_constants
    beta_c, gamma_c = constants(mu, grid.coarse_span, grid.coarse)
    beta_f, gamma_f = constants(mu, grid.fine_span, grid.fine)

    tiny = 1e-300
    growth = max(
        (beta_f - beta_c) / max(beta_c, tiny),
        (gamma_f - gamma_c) / max(gamma_c, tiny),
    )
    change = max(
        abs(beta_f - beta_c) / max(beta_f, tiny),
        abs(gamma_f - gamma_c) / max(gamma_f, tiny),
    )
    if mu.is_empty():
        verdict = "bounded"
    elif growth >= 0.10:
        verdict = "unbounded"
    elif change < 0.01:
        verdict = "bounded"
    else:
        verdict = "inconclusive"

    disc_side = mu if mu.domain == "disc" else cayley_pushforward(mu)
    j_grid = _moment_j_grid(grid.fine_span[1], grid.fine)
    alpha = 0.5 * max((j + 1) * abs(moment(disc_side, j)) for j in j_grid)

    return WidomReport(
        domain=mu.domain,
        beta=beta_f,
        gamma=gamma_f,
        alpha_estimate=alpha,
        rho_total=rho_total(mu) if mu.domain == "halfplane" else total_mass(mu),
        verdict=verdict,
        grid={
            "coarse": grid.coarse,
            "fine": grid.fine,
            "coarse_span": list(grid.coarse_span),
            "fine_span": list(grid.fine_span),
            "augmented_with": "atom positions and support endpoints",
        },
    )


# ---------------------------------------------------------------------------
# Cayley pushforward
# ---------------------------------------------------------------------------

def cayley_pushforward(mu: Measure) -> Measure:
    """Transport a half-line measure to the disc picture.

    The boundary change of variables ``gamma(lambda) = (lambda-1)/(lambda+1)``
    carries ``mu`` to ``(-1, 1)``; the Hardy-space identification weights the
    image by ``(1-t)^2 / 2``, so an atom ``(lambda, m)`` lands at
    ``gamma(lambda)`` with mass ``m (1-gamma(lambda))^2 / 2 = 2m/(1+lambda)^2``
    and a density ``f(lambda) dlambda`` lands as the density
    ``f((1+t)/(1-t))`` (the measure weight cancels the Jacobian
    ``dlambda/dt = 2/(1-t)^2`` exactly).  Moments of the result reproduce the
    disc-side quadratic form of the same Hankel operator.
    """
    if mu.domain != "halfplane":
        raise ValueError("cayley_pushforward expects a half-line measure")
    atoms = []
    for a in mu.atoms:
        t = (a.position - 1.0) / (a.position + 1.0)
        atoms.append(Atom(t, a.mass * (1.0 - t) ** 2 / 2.0))
    pieces: list[Piece] = []
    for p in mu.pieces:
        lo = (p.support[0] - 1.0) / (p.support[0] + 1.0)
        hi = 1.0 if math.isinf(p.support[1]) else (p.support[1] - 1.0) / (p.support[1] + 1.0)
        if p.exponent == 0.0:
            pieces.append(PowerPiece(p.coeff, 0.0, "x", (lo, hi)))
        else:
            pieces.append(CayleyPiece(p.coeff, p.exponent, -p.exponent, (lo, hi)))
    return _validate(Measure("disc", tuple(atoms), tuple(pieces)))
