"""The graded Lie algebra inside A, its subalgebras and derivations.

The primitive Lie algebra g sits inside A with bracket the graded
commutator.  Degree 1 is spanned by the four generators; every higher degree
coincides with the Lie subalgebra h generated by delbar and del, so bases are
built degree by degree as graded commutators [delbar, -] and [del, -] against
the previous basis, with a greedy exact-rank selection making the result
deterministic.

Two derivations of the free Lie algebra on delbar, del are provided:

    D_mubar:  delbar -> 0,              del -> -1/2 [delbar, delbar]
    D_mu:     delbar -> -1/2 [del, del], del -> 0,  D_mubar -> -[del, delbar]

extended by the graded Leibniz rule.  They model the adjoint actions of mubar
and mu on h and serve as an independent cross-check of the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .algebra import (
    DEL,
    DELBAR,
    GENERATORS,
    AlgebraElement,
    coords_in_A,
    generator_element,
    graded_commutator,
)
from .errors import InvalidDegree, OutOfDomain
from .linalg import SpanReducer
from .scalars import Scalar, ZERO

#: nested-tuple bracket expressions over the leaves below
BracketWord = Union[str, tuple]

D_MUBAR = "D_mubar"
D_MU = "D_mu"


class LieElement:
    """A homogeneous element of g, certified to lie in span(lie_basis)."""

    __slots__ = ("value", "degree")

    def __init__(self, value: AlgebraElement, degree: int | None = None, *, _trusted=False):
        own_degree = value.degree()
        if degree is None:
            degree = own_degree if own_degree is not None else 1
        if own_degree is not None and own_degree != degree:
            raise InvalidDegree(f"element has degree {own_degree}, not {degree}")
        if degree < 1:
            raise InvalidDegree(f"Lie elements live in degrees >= 1, got {degree}")
        if not _trusted and not _in_lie_span(value, degree):
            raise OutOfDomain(f"not in the degree-{degree} Lie span: {value}")
        self.value = value
        self.degree = degree

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def scale(self, coeff) -> "LieElement":
        return LieElement(self.value.scale(coeff), self.degree, _trusted=True)

    def __add__(self, other: "LieElement") -> "LieElement":
        if self.degree != other.degree:
            raise InvalidDegree("cannot add Lie elements of different degrees")
        return LieElement(self.value + other.value, self.degree, _trusted=True)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"LieElement(degree={self.degree}, {self.value})"


def lie_generator(sym: str) -> LieElement:
    return LieElement(generator_element(sym), 1, _trusted=True)


def d_lie() -> LieElement:
    """d = mubar + delbar + del + mu as a degree-1 Lie element."""
    value = AlgebraElement.zero()
    for sym in GENERATORS:
        value = value + generator_element(sym)
    return LieElement(value, 1, _trusted=True)


def _in_lie_span(value: AlgebraElement, degree: int) -> bool:
    if value.is_zero():
        return True
    reducer = SpanReducer(
        coords_in_A(b.value, degree) for b in lie_basis(degree)
    )
    return reducer.contains(coords_in_A(value, degree))


@lru_cache(maxsize=None)
def lie_basis(k: int) -> tuple[LieElement, ...]:
    """Deterministic basis of the degree-k piece of g.

    Degree 1 is the four generators.  For k >= 2 the candidates are the
    commutators [delbar, h] then [del, h] over the degree k-1 basis, and a
    maximal independent subset is selected greedily in that order.
    """
    if k < 1:
        raise InvalidDegree(f"lie_basis needs a positive degree, got {k}")
    if k == 1:
        return tuple(lie_generator(sym) for sym in GENERATORS)
    reducer = SpanReducer()
    selected: list[LieElement] = []
    for g in (DELBAR, DEL):
        g_elt = generator_element(g)
        for h in lie_basis(k - 1):
            candidate = graded_commutator(g_elt, h.value)
            if candidate.is_zero():
                continue
            if reducer.add(coords_in_A(candidate, k)):
                selected.append(LieElement(candidate, k, _trusted=True))
    return tuple(selected)


def dim_g(k: int) -> int:
    """Dimension of the degree-k piece of g."""
    return len(lie_basis(k))


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """Graded commutator of two Lie elements, re-certified on construction."""
    value = graded_commutator(a.value, b.value)
    return LieElement(value, a.degree + b.degree)


def lie_coordinates(value: AlgebraElement, k: int) -> list[Scalar] | None:
    """Coordinates in lie_basis(k), or None if outside the span."""
    from .linalg import solve_columns

    columns = [coords_in_A(b.value, k) for b in lie_basis(k)]
    return solve_columns(columns, [coords_in_A(value, k)])[0]


# -- the subalgebra h generated by delbar, del -------------------------------


def bracket_word_degree(expr: BracketWord) -> int:
    if isinstance(expr, str):
        return 1
    left, right = expr
    return bracket_word_degree(left) + bracket_word_degree(right)


def bracket_word_value(expr: BracketWord) -> AlgebraElement:
    """Realize a bracket expression over delbar/del inside A."""
    if isinstance(expr, str):
        if expr in (DELBAR, DEL):
            return generator_element(expr)
        raise OutOfDomain(f"not a delbar/del bracket expression leaf: {expr!r}")
    left, right = expr
    return graded_commutator(bracket_word_value(left), bracket_word_value(right))


def bracket_word_text(expr: BracketWord) -> str:
    if isinstance(expr, str):
        return expr
    left, right = expr
    return f"[{bracket_word_text(left)},{bracket_word_text(right)}]"


@lru_cache(maxsize=None)
def h_basis(k: int) -> tuple[tuple[BracketWord, LieElement], ...]:
    """Basis of the degree-k piece of h, with defining bracket expressions.

    Unlike :func:`lie_basis`, every element is produced by a bracket word in
    delbar and del only, which is what the derivations D_mubar and D_mu need.
    For k >= 2 the two constructions span the same space.
    """
    if k < 1:
        raise InvalidDegree(f"h_basis needs a positive degree, got {k}")
    if k == 1:
        return tuple(
            (sym, lie_generator(sym)) for sym in (DELBAR, DEL)
        )
    reducer = SpanReducer()
    selected: list[tuple[BracketWord, LieElement]] = []
    for g in (DELBAR, DEL):
        g_elt = generator_element(g)
        for expr, h in h_basis(k - 1):
            candidate = graded_commutator(g_elt, h.value)
            if candidate.is_zero():
                continue
            if reducer.add(coords_in_A(candidate, k)):
                selected.append(((g, expr), LieElement(candidate, k, _trusted=True)))
    return tuple(selected)


def dim_h(k: int) -> int:
    return len(h_basis(k))


# -- derivations --------------------------------------------------------------

_HALF = Scalar(1) / Scalar(2)


def _derivation_on_leaf(which: str, leaf: str) -> AlgebraElement:
    delbar = generator_element(DELBAR)
    del_ = generator_element(DEL)
    if which == D_MUBAR:
        if leaf == DELBAR:
            return AlgebraElement.zero()
        if leaf == DEL:
            return graded_commutator(delbar, delbar).scale(-_HALF)
    elif which == D_MU:
        if leaf == DELBAR:
            return graded_commutator(del_, del_).scale(-_HALF)
        if leaf == DEL:
            return AlgebraElement.zero()
        if leaf == D_MUBAR:
            return -graded_commutator(del_, delbar)
    else:
        raise OutOfDomain(f"unknown derivation: {which!r}")
    raise OutOfDomain(f"{which} is not defined on {leaf!r}")


def _derivation_value(which: str, expr: BracketWord) -> AlgebraElement:
    if isinstance(expr, str):
        return _derivation_on_leaf(which, expr)
    left, right = expr
    d_left = _derivation_value(which, left)
    d_right = _derivation_value(which, right)
    v_left = bracket_word_value(left)
    v_right = bracket_word_value(right)
    sign = -1 if bracket_word_degree(left) % 2 else 1
    return graded_commutator(d_left, v_right) + graded_commutator(
        v_left, d_right
    ).scale(sign)


def derivation_apply(which: str, h: BracketWord) -> LieElement:
    """Apply D_mubar or D_mu to a bracket expression over delbar, del.

    ``h`` is a leaf ('delbar', 'del', or 'D_mubar' when which == 'D_mu') or a
    nested pair of bracket expressions; the derivation is extended by the
    graded Leibniz rule D[x, y] = [Dx, y] + (-1)^|x| [x, Dy].
    """
    value = _derivation_value(which, h)
    degree = bracket_word_degree(h) + 1
    return LieElement(value, degree)


# -- the abelian quotient -----------------------------------------------------


@dataclass(frozen=True)
class HolElement:
    """An element of the two-dimensional abelian quotient, degree 1.

    The quotient kills mubar and mu; what is left is spanned by the classes
    of delbar and del, and every bracket vanishes.
    """

    coeff_delbar: Scalar = ZERO
    coeff_del: Scalar = ZERO

    def is_zero(self) -> bool:
        return not (self.coeff_delbar or self.coeff_del)

    def coords(self) -> list[Scalar]:
        return [self.coeff_delbar, self.coeff_del]

    def bracket(self, other: "HolElement") -> "HolElement":
        """The quotient is abelian: every bracket is zero."""
        return HOL_ZERO

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return f"{self.coeff_delbar}*delbar + {self.coeff_del}*del"


HOL_ZERO = HolElement()


def project_hol(a: LieElement) -> HolElement:
    """Quotient map onto the abelian pair: drop mubar/mu, keep delbar/del.

    In degrees >= 2 the quotient is zero, so everything maps to 0 there.
    """
    if a.degree != 1:
        return HOL_ZERO
    delbar_mono = generator_element(DELBAR).monomials()[0]
    del_mono = generator_element(DEL).monomials()[0]
    return HolElement(a.value.coefficient(delbar_mono), a.value.coefficient(del_mono))
