"""The bigraded operator algebra A and its canonical normal form.

A is generated by the four odd operators

    mubar  (-1, 2)      delbar  (0, 1)      del  (1, 0)      mu  (2, -1)

subject to the seven quadratic relations obtained by expanding the graded
commutators

    [mubar,mubar] = 0                [mu,mu] = 0
    [mubar,delbar] = 0               [mu,del] = 0
    [mubar,del] + 1/2*[delbar,delbar] = 0
    [mu,delbar] + 1/2*[del,del] = 0
    [mubar,mu] + [delbar,del] = 0

with [x,y] = xy + yx for odd x, y.  Solving each relation for its
left-to-right latest word yields a terminating, confluent rewriting system
that pushes mubar/mu to the right of delbar/del.  The resulting normal
monomials have the shape

    (word in delbar, del) . tail          tail in {1, mubar, mu, mubar.mu}

and every element of A is a unique Q(i)-combination of such monomials.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import InvalidDegree, NonHomogeneousOperand, NotInSubalgebra
from .scalars import ONE, ZERO, Scalar, as_scalar, _frac_text

MUBAR = "mubar"
DELBAR = "delbar"
DEL = "del"
MU = "mu"

#: generator order used for degree-1 coordinates (x, y, z, w)
GENERATORS = (MUBAR, DELBAR, DEL, MU)

#: letters allowed in the head of a normal monomial
HEAD_LETTERS = (DELBAR, DEL)

#: admissible tails of a normal monomial, in their canonical order
TAILS = ((), (MUBAR,), (MU,), (MUBAR, MU))

BIDEGREE = {MUBAR: (-1, 2), DELBAR: (0, 1), DEL: (1, 0), MU: (2, -1)}

# The seven defining relations, written out as word combinations that must
# vanish in A.  Kept as data so the representation verifier can evaluate the
# same relations as operators on a bigraded vector space.
RELATIONS: tuple[tuple[str, tuple[tuple[int, tuple[str, str]], ...]], ...] = (
    ("[mubar,mubar]", ((2, (MUBAR, MUBAR)),)),
    ("[mu,mu]", ((2, (MU, MU)),)),
    ("[mubar,delbar]", ((1, (MUBAR, DELBAR)), (1, (DELBAR, MUBAR)))),
    ("[mu,del]", ((1, (MU, DEL)), (1, (DEL, MU)))),
    (
        "[mubar,del]+1/2*[delbar,delbar]",
        ((1, (MUBAR, DEL)), (1, (DEL, MUBAR)), (1, (DELBAR, DELBAR))),
    ),
    (
        "[mu,delbar]+1/2*[del,del]",
        ((1, (MU, DELBAR)), (1, (DELBAR, MU)), (1, (DEL, DEL))),
    ),
    (
        "[mubar,mu]+[delbar,del]",
        (
            (1, (MUBAR, MU)),
            (1, (MU, MUBAR)),
            (1, (DELBAR, DEL)),
            (1, (DEL, DELBAR)),
        ),
    ),
)

# Each relation above, solved for its reducible two-letter word.  A word is
# in normal form exactly when none of these patterns occurs.
REWRITE_RULES: dict[tuple[str, str], tuple[tuple[int, tuple[str, ...]], ...]] = {
    (MUBAR, MUBAR): (),
    (MU, MU): (),
    (MUBAR, DELBAR): ((-1, (DELBAR, MUBAR)),),
    (MU, DEL): ((-1, (DEL, MU)),),
    (MUBAR, DEL): ((-1, (DEL, MUBAR)), (-1, (DELBAR, DELBAR))),
    (MU, DELBAR): ((-1, (DELBAR, MU)), (-1, (DEL, DEL))),
    (MU, MUBAR): ((-1, (MUBAR, MU)), (-1, (DELBAR, DEL)), (-1, (DEL, DELBAR))),
}

Word = tuple[str, ...]


def word_bidegree(letters: Iterable[str]) -> tuple[int, int]:
    """Componentwise sum of the letter bidegrees; () has bidegree (0, 0)."""
    p = q = 0
    for sym in letters:
        dp, dq = BIDEGREE[sym]
        p += dp
        q += dq
    return p, q


_TAIL_INDEX = {t: n for n, t in enumerate(TAILS)}
_HEAD_INDEX = {DELBAR: 0, DEL: 1}


class NormalMonomial:
    """A normal-form monomial: head word over {delbar, del} times a tail."""

    __slots__ = ("head", "tail", "_hash")

    def __init__(self, head: Word = (), tail: Word = ()):
        head = tuple(head)
        tail = tuple(tail)
        if any(sym not in _HEAD_INDEX for sym in head):
            raise ValueError(f"head letters must be delbar/del: {head}")
        if tail not in _TAIL_INDEX:
            raise ValueError(f"tail must be one of (), (mubar,), (mu,), (mubar, mu): {tail}")
        self.head = head
        self.tail = tail
        self._hash = hash((head, tail))

    @classmethod
    def from_letters(cls, letters: Iterable[str]) -> "NormalMonomial":
        letters = tuple(letters)
        cut = len(letters)
        for n, sym in enumerate(letters):
            if sym in (MUBAR, MU):
                cut = n
                break
        return cls(letters[:cut], letters[cut:])

    @property
    def letters(self) -> Word:
        return self.head + self.tail

    @property
    def degree(self) -> int:
        return len(self.head) + len(self.tail)

    @property
    def bidegree(self) -> tuple[int, int]:
        return word_bidegree(self.letters)

    def sort_key(self) -> tuple:
        """Tail-major order: degree, then tail, then head lex (delbar < del)."""
        return (
            self.degree,
            _TAIL_INDEX[self.tail],
            tuple(_HEAD_INDEX[s] for s in self.head),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NormalMonomial)
            and self.head == other.head
            and self.tail == other.tail
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "NormalMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return ".".join(self.letters) if self.letters else "1"

    def __repr__(self) -> str:
        return f"NormalMonomial({self})"


UNIT_MONOMIAL = NormalMonomial()

_MONO_CACHE: dict[Word, NormalMonomial] = {}


def _cached_monomial(letters: Word) -> NormalMonomial:
    mono = _MONO_CACHE.get(letters)
    if mono is None:
        mono = NormalMonomial.from_letters(letters)
        _MONO_CACHE[letters] = mono
    return mono


def _is_redex(first: str, second: str) -> bool:
    # reducible pairs are exactly: mu followed by anything, or mubar followed
    # by anything except mu (mubar.mu is the normal two-letter tail)
    if first == MU:
        return True
    return first == MUBAR and second != MU


def rewrite_word(letters: Iterable[str], strategy: str = "leftmost") -> "AlgebraElement":
    """Normal form of a single word, as an element of A.

    The result is independent of ``strategy``; both orders are exposed so the
    confluence of the rule system can be tested rather than assumed.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy: {strategy!r}")
    leftmost = strategy == "leftmost"
    acc: dict[NormalMonomial, int] = {}
    word = tuple(letters)
    # worklist entries carry an integer coefficient and the position from
    # which the redex scan may safely resume (a rewrite at p only creates new
    # redexes within one letter of the replacement)
    start = 0 if leftmost else len(word) - 2
    work: list[tuple[int, Word, int]] = [(1, word, start)]
    while work:
        coeff, word, scan = work.pop()
        pos = -1
        if leftmost:
            last = len(word) - 1
            n = scan
            while n < last:
                if _is_redex(word[n], word[n + 1]):
                    pos = n
                    break
                n += 1
        else:
            n = min(scan, len(word) - 2)
            while n >= 0:
                if _is_redex(word[n], word[n + 1]):
                    pos = n
                    break
                n -= 1
        if pos < 0:
            mono = _cached_monomial(word)
            value = acc.get(mono, 0) + coeff
            if value:
                acc[mono] = value
            else:
                acc.pop(mono, None)
            continue
        prefix, suffix = word[:pos], word[pos + 2 :]
        for c, replacement in REWRITE_RULES[word[pos], word[pos + 1]]:
            branch = prefix + replacement + suffix
            resume = max(pos - 1, 0) if leftmost else pos + len(replacement) - 1
            work.append((coeff * c, branch, resume))
    return AlgebraElement({m: Scalar(c) for m, c in acc.items()})


@lru_cache(maxsize=1 << 17)
def _rewrite_cached(letters: Word) -> "AlgebraElement":
    return rewrite_word(letters)


class AlgebraElement:
    """A finite Q(i)-combination of normal monomials.

    Instances are immutable; all arithmetic returns fresh elements, so they
    are safe to share, hash and cache.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[NormalMonomial, Scalar] | None = None):
        data: dict[NormalMonomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = as_scalar(coeff)
                if coeff:
                    data[mono] = coeff
        self._terms = data
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return _ZERO_ELEMENT

    @classmethod
    def one(cls) -> "AlgebraElement":
        return _ONE_ELEMENT

    @classmethod
    def generator(cls, sym: str) -> "AlgebraElement":
        return generator_element(sym)

    @classmethod
    def from_word(cls, letters: Iterable[str], coeff=ONE) -> "AlgebraElement":
        return _rewrite_cached(tuple(letters)) * as_scalar(coeff)

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[NormalMonomial, Scalar]]) -> "AlgebraElement":
        acc: dict[NormalMonomial, Scalar] = {}
        for mono, coeff in pairs:
            value = acc.get(mono, ZERO) + as_scalar(coeff)
            if value:
                acc[mono] = value
            else:
                acc.pop(mono, None)
        return cls(acc)

    # -- inspection -----------------------------------------------------------

    def terms(self) -> tuple[tuple[NormalMonomial, Scalar], ...]:
        """The terms in the canonical monomial order."""
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def coefficient(self, mono: NormalMonomial) -> Scalar:
        return self._terms.get(mono, ZERO)

    def monomials(self) -> tuple[NormalMonomial, ...]:
        return tuple(m for m, _ in self.terms())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> tuple[int, ...]:
        """Sorted distinct total degrees present in this element."""
        return tuple(sorted({m.degree for m in self._terms}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Total degree of a homogeneous element; None for 0."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise NonHomogeneousOperand(f"element mixes degrees {degs}")
        return degs[0]

    def bidegrees(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted({m.bidegree for m in self._terms}))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = acc.get(mono, ZERO) + coeff
            if value:
                acc[mono] = value
            else:
                acc.pop(mono, None)
        return AlgebraElement(acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self._terms.items()})

    def scale(self, coeff) -> "AlgebraElement":
        coeff = as_scalar(coeff)
        if not coeff:
            return _ZERO_ELEMENT
        return AlgebraElement({m: c * coeff for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def conjugate(self) -> "AlgebraElement":
        """Operator conjugation: mirror the bidegree.

        Conjugates every coefficient and swaps mubar <-> mu, delbar <-> del
        (the conjugate of an operator on complex-valued forms acts on the
        mirrored bidegree).  This is an algebra automorphism, so the result
        is renormalized through the rewriting system.
        """
        out = _ZERO_ELEMENT
        for mono, coeff in self._terms.items():
            swapped = tuple(_CONJ_SWAP[s] for s in mono.letters)
            out = out + AlgebraElement.from_word(swapped, coeff.conjugate())
        return out

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.terms():
            body = str(mono)
            if coeff.im == 0:
                sign = "-" if coeff.re < 0 else "+"
                mag = _frac_text(abs(coeff.re))
                text = f"{mag}*{body}" if mono.letters else mag
                if not parts:
                    parts.append(text if sign == "+" else f"-{text}")
                else:
                    parts.append(f" {sign} {text}")
            else:
                text = f"({coeff})*{body}" if mono.letters else f"({coeff})"
                parts.append(text if not parts else f" + {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


_ZERO_ELEMENT = AlgebraElement()
_ONE_ELEMENT = AlgebraElement({UNIT_MONOMIAL: ONE})

_CONJ_SWAP = {MUBAR: MU, MU: MUBAR, DELBAR: DEL, DEL: DELBAR}


@lru_cache(maxsize=None)
def generator_element(sym: str) -> AlgebraElement:
    if sym not in BIDEGREE:
        raise ValueError(f"unknown generator: {sym!r}")
    return AlgebraElement({NormalMonomial.from_letters((sym,)): ONE})


def d_element() -> AlgebraElement:
    """The total operator d = mubar + delbar + del + mu."""
    out = _ZERO_ELEMENT
    for sym in GENERATORS:
        out = out + generator_element(sym)
    return out


def product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Multiplication in A: concatenate words, then rewrite to normal form."""
    acc: dict[NormalMonomial, Scalar] = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            coeff = c1 * c2
            for mono, c in _rewrite_cached(m1.letters + m2.letters)._terms.items():
                value = acc.get(mono, ZERO) + coeff * c
                if value:
                    acc[mono] = value
                else:
                    acc.pop(mono, None)
    return AlgebraElement(acc)


def graded_commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """[a, b] = a*b - (-1)^(|a||b|) b*a for homogeneous a, b."""
    da = a.degree()
    db = b.degree()
    if da is None or db is None:
        return _ZERO_ELEMENT
    if (da * db) % 2 == 0:
        return product(a, b) - product(b, a)
    return product(a, b) + product(b, a)


@lru_cache(maxsize=None)
def basis_A(k: int) -> tuple[NormalMonomial, ...]:
    """All normal monomials of total degree k, in the canonical order.

    Tail-major: tails run through 1, mubar, mu, mubar.mu and for each tail the
    heads run lexicographically with delbar < del.
    """
    if k < 0:
        raise InvalidDegree(f"degree must be nonnegative, got {k}")
    out: list[NormalMonomial] = []
    for tail in TAILS:
        body = k - len(tail)
        if body < 0:
            continue
        for head in itertools.product(HEAD_LETTERS, repeat=body):
            out.append(NormalMonomial(head, tail))
    return tuple(out)


def dim_A(k: int) -> int:
    return len(basis_A(k))


@lru_cache(maxsize=None)
def basis_A_index(k: int) -> dict[NormalMonomial, int]:
    return {mono: n for n, mono in enumerate(basis_A(k))}


def coords_in_A(elt: AlgebraElement, k: int) -> list[Scalar]:
    """Coordinates of a degree-k homogeneous element in basis_A(k)."""
    index = basis_A_index(k)
    coords = [ZERO] * len(index)
    for mono, coeff in elt._terms.items():
        coords[index[mono]] = coeff
    return coords


def element_from_coords(coords: Iterable[Scalar], k: int) -> AlgebraElement:
    basis = basis_A(k)
    return AlgebraElement.from_terms(
        (basis[n], c) for n, c in enumerate(coords) if c
    )


def restrict_to_B(a: AlgebraElement) -> AlgebraElement:
    """Return ``a`` unchanged if all its monomials are tail-free (a in B).

    B is the subalgebra spanned by pure delbar/del words.  Raises
    :class:`NotInSubalgebra` carrying the offending monomials otherwise.
    """
    offending = sorted(
        (m for m in a._terms if m.tail), key=NormalMonomial.sort_key
    )
    if offending:
        raise NotInSubalgebra(offending)
    return a


def words_of_length(k: int, alphabet: tuple[str, ...] = HEAD_LETTERS) -> Iterator[Word]:
    return itertools.product(alphabet, repeat=k)
