"""Adjoint differentials, cohomology, and the mapping-cone checks.

Three carriers are supported, named by the letters the CLI uses:

    'g'  the full graded Lie algebra (degree 0 is zero),
    'h'  the Lie subalgebra generated by delbar and del,
    'B'  its enveloping algebra: the span of pure delbar/del words
         (degree 0 is the span of 1).

For a degree-1 element a with [a, a] = 0, ``ad_matrix`` realizes [a, -] as an
exact matrix between consecutive graded pieces and ``cohomology`` returns the
degree-wise dimension together with deterministic representatives: the
earliest kernel vectors, in the kernel's reduced-echelon enumeration, that
complete the image to the kernel.

``les_check`` verifies the mapping-cone identity for ad_mubar on B, the skew
commutation of ad_mubar with left multiplication by delbar, and the
node-by-node exactness of the induced long sequence on cohomology.
``frolicher_E1`` computes the two-step page H(H(-, ad_mubar), ad_delbar).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .algebra import (
    DELBAR,
    MUBAR,
    AlgebraElement,
    NormalMonomial,
    coords_in_A,
    generator_element,
    graded_commutator,
    product,
    restrict_to_B,
    words_of_length,
)
from .errors import InvalidDegree, NotADifferential, NotWellDefined
from .lie import LieElement, h_basis, lie_basis
from .linalg import ExactMatrix, SpanReducer, Vector, solve_columns
from .scalars import ONE, ZERO, Scalar


class Carrier:
    """A graded coefficient space with a deterministic basis per degree."""

    name = "?"

    def basis(self, k: int) -> tuple[AlgebraElement, ...]:
        raise NotImplementedError

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def coordinates(self, elements: Sequence[AlgebraElement], k: int) -> list[Vector]:
        """Coordinates of degree-k elements in basis(k); raises if outside."""
        basis = self.basis(k)
        columns = [coords_in_A(b, k) for b in basis]
        rhs = [coords_in_A(e, k) for e in elements]
        solved = solve_columns(columns, rhs)
        for n, coords in enumerate(solved):
            if coords is None:
                raise NotWellDefined(
                    f"element is outside carrier {self.name} at degree {k}: {elements[n]}"
                )
        return solved

    def element(self, coords: Sequence[Scalar], k: int) -> AlgebraElement:
        out = AlgebraElement.zero()
        for c, b in zip(coords, self.basis(k)):
            if c:
                out = out + b.scale(c)
        return out


class _LieCarrier(Carrier):
    name = "g"

    def basis(self, k: int) -> tuple[AlgebraElement, ...]:
        if k < 1:
            return ()
        return tuple(b.value for b in lie_basis(k))


class _SubalgebraCarrier(Carrier):
    name = "h"

    def basis(self, k: int) -> tuple[AlgebraElement, ...]:
        if k < 1:
            return ()
        return tuple(b.value for _, b in h_basis(k))


class _WordCarrier(Carrier):
    """B: all words in delbar, del; degree 0 is spanned by the unit."""

    name = "B"

    def basis(self, k: int) -> tuple[AlgebraElement, ...]:
        if k < 0:
            return ()
        return tuple(
            AlgebraElement({NormalMonomial(word): ONE})
            for word in words_of_length(k)
        )

    def coordinates(self, elements: Sequence[AlgebraElement], k: int) -> list[Vector]:
        index = {word: n for n, word in enumerate(words_of_length(k))}
        out: list[Vector] = []
        for e in elements:
            restrict_to_B(e)
            coords = [ZERO] * len(index)
            for mono, coeff in e.terms():
                if mono.degree != k:
                    raise NotWellDefined(f"degree {mono.degree} term in B_{k}: {mono}")
                coords[index[mono.head]] = coeff
            out.append(coords)
        return out


CARRIERS = {"g": _LieCarrier(), "h": _SubalgebraCarrier(), "B": _WordCarrier()}


def get_carrier(which) -> Carrier:
    if isinstance(which, Carrier):
        return which
    try:
        return CARRIERS[which]
    except KeyError:
        raise ValueError(f"unknown carrier {which!r}; expected one of g, h, B") from None


@dataclass(frozen=True)
class GradedMap:
    """A linear map between graded pieces, in their deterministic bases."""

    source_basis: tuple[AlgebraElement, ...]
    target_basis: tuple[AlgebraElement, ...]
    matrix: ExactMatrix


def _as_degree_one(a) -> AlgebraElement:
    value = a.value if isinstance(a, LieElement) else a
    if not value.is_zero() and value.degree() != 1:
        raise InvalidDegree("adjoint differentials take a degree-1 element")
    return value


def ad_matrix(a, k: int, carrier="g") -> GradedMap:
    """Matrix of x -> [a, x] from carrier degree k to degree k + 1."""
    carrier = get_carrier(carrier)
    value = _as_degree_one(a)
    source = carrier.basis(k)
    target = carrier.basis(k + 1)
    images = [graded_commutator(value, x) for x in source]
    if carrier.name == "B":
        for img in images:
            restrict_to_B(img)
    columns = carrier.coordinates(images, k + 1) if source else []
    matrix = ExactMatrix.from_columns(columns, nrows=len(target))
    if not source:
        matrix = ExactMatrix.zeros(len(target), 0)
    return GradedMap(tuple(source), tuple(target), matrix)


@dataclass
class CohomologyData:
    """Everything about H^k(carrier, ad_a) needed to build induced maps."""

    degree: int
    dim: int
    representatives: tuple[AlgebraElement, ...]
    rep_coords: list[Vector]
    kernel: list[Vector]
    image: list[Vector]
    carrier: Carrier

    def class_coordinates(self, vec: Vector) -> Vector | None:
        """Express a kernel vector as rep-combination modulo the image."""
        columns = self.rep_coords + self.image
        solution = solve_columns(columns, [vec])[0]
        if solution is None:
            return None
        return solution[: len(self.rep_coords)]


def _check_differential(value: AlgebraElement) -> None:
    if not graded_commutator(value, value).is_zero():
        raise NotADifferential(f"[a, a] != 0 for a = {value}")


def cohomology_data(a, k: int, carrier="g") -> CohomologyData:
    carrier = get_carrier(carrier)
    value = _as_degree_one(a)
    _check_differential(value)
    if CARRIERS.get(carrier.name) is carrier:
        return _cohomology_data_cached(value, k, carrier.name)
    return _cohomology_data_raw(value, k, carrier)


@lru_cache(maxsize=None)
def _cohomology_data_cached(value: AlgebraElement, k: int, carrier_name: str) -> CohomologyData:
    return _cohomology_data_raw(value, k, CARRIERS[carrier_name])


def _cohomology_data_raw(value: AlgebraElement, k: int, carrier: Carrier) -> CohomologyData:
    outgoing = ad_matrix(value, k, carrier).matrix
    kernel = outgoing.nullspace()
    if carrier.dim(k - 1):
        incoming = ad_matrix(value, k - 1, carrier).matrix
        image = [incoming.column(j) for j in range(incoming.ncols)]
    else:
        image = []
    reducer = SpanReducer(image)
    rep_coords: list[Vector] = []
    for vec in kernel:
        if reducer.add(vec):
            rep_coords.append(vec)
    reps = tuple(carrier.element(vec, k) for vec in rep_coords)
    return CohomologyData(
        degree=k,
        dim=len(rep_coords),
        representatives=reps,
        rep_coords=rep_coords,
        kernel=kernel,
        image=image,
        carrier=carrier,
    )


def cohomology(a, k: int, carrier="g") -> tuple[int, tuple[AlgebraElement, ...]]:
    """Dimension and representative basis of H^k(carrier, ad_a)."""
    data = cohomology_data(a, k, carrier)
    return data.dim, data.representatives


def cohomology_dims(a, k_max: int, carrier="g") -> dict[int, int]:
    carrier = get_carrier(carrier)
    k_min = 0 if carrier.name == "B" else 1
    return {k: cohomology_data(a, k, carrier).dim for k in range(k_min, k_max + 1)}


def induced_map(
    source: CohomologyData,
    target: CohomologyData,
    raw_map: Callable[[AlgebraElement], AlgebraElement],
) -> ExactMatrix:
    """Matrix of the map induced on cohomology classes by ``raw_map``.

    Verifies well-definedness first: the raw map must send kernel into
    kernel and image into image (exactly, at the span level).
    """
    carrier = source.carrier
    kernel_span = SpanReducer(target.kernel)
    image_span = SpanReducer(target.image)
    for vec in source.kernel:
        mapped = raw_map(carrier.element(vec, source.degree))
        coords = target.carrier.coordinates([mapped], target.degree)[0]
        if not kernel_span.contains(coords):
            raise NotWellDefined(
                f"induced map does not preserve kernels at degree {source.degree}"
            )
    for vec in source.image:
        mapped = raw_map(carrier.element(vec, source.degree))
        coords = target.carrier.coordinates([mapped], target.degree)[0]
        if not image_span.contains(coords):
            raise NotWellDefined(
                f"induced map does not preserve images at degree {source.degree}"
            )
    columns: list[Vector] = []
    for vec in source.rep_coords:
        mapped = raw_map(carrier.element(vec, source.degree))
        coords = target.carrier.coordinates([mapped], target.degree)[0]
        cls = target.class_coordinates(coords)
        if cls is None:
            raise NotWellDefined("image of a cocycle is not a cocycle")
        columns.append(cls)
    return ExactMatrix.from_columns(columns, nrows=target.dim) if columns else ExactMatrix.zeros(target.dim, 0)


def frolicher_E1(carrier, k_max: int) -> dict[int, int]:
    """Dimensions of H(H(carrier, ad_mubar), ad_delbar) for degrees <= k_max.

    The induced ad_delbar is checked to be well defined on the ad_mubar
    cohomology before the second cohomology is taken.
    """
    carrier = get_carrier(carrier)
    mubar = generator_element(MUBAR)
    delbar = generator_element(DELBAR)
    k_min = 0 if carrier.name == "B" else 1

    data: dict[int, CohomologyData] = {}
    for k in range(k_min - 1, k_max + 2):
        data[k] = cohomology_data(mubar, k, carrier) if carrier.dim(k) else _empty_data(k, carrier)

    raw = lambda x: graded_commutator(delbar, x)
    maps: dict[int, ExactMatrix] = {}
    for k in range(k_min - 1, k_max + 1):
        maps[k] = induced_map(data[k], data[k + 1], raw)

    out: dict[int, int] = {}
    for k in range(k_min, k_max + 1):
        outgoing = maps[k]
        incoming = maps.get(k - 1)
        kernel_dim = len(outgoing.nullspace()) if outgoing.ncols else 0
        image_rank = incoming.rank() if incoming is not None and incoming.ncols else 0
        out[k] = kernel_dim - image_rank
    return out


def _empty_data(k: int, carrier: Carrier) -> CohomologyData:
    return CohomologyData(
        degree=k,
        dim=0,
        representatives=(),
        rep_coords=[],
        kernel=[],
        image=[],
        carrier=carrier,
    )


# -- the mapping-cone decomposition of B --------------------------------------


def split_B(k: int, b: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """The inverse of (x, y) -> del*x + delbar*y on B_k, k >= 1.

    Strips the leading letter of each monomial and groups by it.
    """
    if k < 1:
        raise InvalidDegree("split_B needs degree >= 1")
    restrict_to_B(b)
    x_terms: list[tuple[NormalMonomial, Scalar]] = []
    y_terms: list[tuple[NormalMonomial, Scalar]] = []
    for mono, coeff in b.terms():
        if mono.degree != k:
            raise InvalidDegree(f"degree {mono.degree} term in split_B({k}): {mono}")
        rest = NormalMonomial(mono.head[1:])
        if mono.head[0] == DELBAR:
            y_terms.append((rest, coeff))
        else:
            x_terms.append((rest, coeff))
    return (
        AlgebraElement.from_terms(x_terms),
        AlgebraElement.from_terms(y_terms),
    )


def delta_map(k: int, b: AlgebraElement) -> AlgebraElement:
    """The connecting map B_k -> B_{k-1}: del*x + delbar*y -> x."""
    return split_B(k, b)[0]


@dataclass
class CheckRecord:
    name: str
    degree: int
    passed: bool
    witness: str | None = None


@dataclass
class LesReport:
    max_degree: int
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def first_failure(self) -> CheckRecord | None:
        return next((r for r in self.records if not r.passed), None)

    def add(self, name: str, degree: int, passed: bool, witness: str | None = None):
        self.records.append(CheckRecord(name, degree, passed, witness))

    def summary(self) -> str:
        bad = self.first_failure()
        if bad is None:
            return f"all {len(self.records)} checks pass up to degree {self.max_degree}"
        return f"FAIL {bad.name} at degree {bad.degree}: {bad.witness}"


def les_check(k_max: int) -> LesReport:
    """Verify the cone decomposition of ad_mubar on B and the induced
    long exact sequence, through degree ``k_max``."""
    if k_max < 2:
        raise InvalidDegree("les_check needs k_max >= 2")
    report = LesReport(k_max)
    carrier = get_carrier("B")
    mubar = generator_element(MUBAR)
    delbar = generator_element(DELBAR)
    del_ = generator_element("del")

    def ad_mubar(x: AlgebraElement) -> AlgebraElement:
        return graded_commutator(mubar, x)

    # (a) the 2x2 block identity through the splitting (x, y) -> del x + delbar y
    for k in range(1, k_max + 1):
        ok = True
        witness = None
        for base in carrier.basis(k - 1):
            lhs_x = split_B(k + 1, ad_mubar(product(del_, base)))
            want_x = (-ad_mubar(base), -product(delbar, base))
            lhs_y = split_B(k + 1, ad_mubar(product(delbar, base)))
            want_y = (AlgebraElement.zero(), -ad_mubar(base))
            if lhs_x != want_x or lhs_y != want_y:
                ok = False
                witness = f"block identity fails on {base}"
                break
        report.add("cone-block-identity", k, ok, witness)

    # (b) ad_mubar skew commutes with left multiplication by delbar
    for k in range(0, k_max):
        ok = True
        witness = None
        for base in carrier.basis(k):
            if ad_mubar(product(delbar, base)) != -product(delbar, ad_mubar(base)):
                ok = False
                witness = f"skew-commutation fails on {base}"
                break
        report.add("skew-commutation", k, ok, witness)

    # (c) exactness of the induced long sequence on cohomology
    data = {k: cohomology_data(mubar, k, carrier) for k in range(0, k_max + 1)}

    def left_delbar(x: AlgebraElement) -> AlgebraElement:
        return product(delbar, x)

    up: dict[int, ExactMatrix] = {-1: ExactMatrix.zeros(data[0].dim, 0)}
    down: dict[int, ExactMatrix] = {}
    for j in range(0, k_max):
        up[j] = induced_map(data[j], data[j + 1], left_delbar)
    for j in range(1, k_max + 1):
        down[j] = induced_map(data[j], data[j - 1], lambda x, j=j: delta_map(j, x))

    def exact(incoming: ExactMatrix, outgoing: ExactMatrix, middle_dim: int) -> bool:
        if incoming.ncols and outgoing.nrows:
            if not (outgoing @ incoming).is_zero():
                return False
        rank_in = incoming.rank() if incoming.ncols else 0
        rank_out = outgoing.rank() if outgoing.ncols else 0
        return rank_in + rank_out == middle_dim

    for j in range(0, k_max):
        # node H^j between delbar from below and delbar into degree j+1
        report.add(
            "exactness-at-delbar-node",
            j,
            exact(up[j - 1], up[j], data[j].dim),
        )
    for j in range(1, k_max + 1):
        # node H^j arrived by delbar, leaving by the connecting map
        report.add(
            "exactness-at-connecting-node",
            j,
            exact(up[j - 1], down[j], data[j].dim),
        )
    for j in range(0, k_max):
        # node H^j arrived by the connecting map from degree j+1, leaving by delbar
        report.add(
            "exactness-at-cone-node",
            j,
            exact(down[j + 1], up[j], data[j].dim),
        )
    return report
