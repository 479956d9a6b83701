"""
Diagram IR
==========
A diagram is a source word plus a list of slices read bottom to top.  Every
slice holds exactly one generator at a strand position (1-based); all other
strands pass straight through.  Cups insert their two letters *before* the
letter at ``pos`` (``pos == len(word) + 1`` appends).

Boxes are the one non-primitive generator: ``box_up``/``box_down`` carry an
element of A_k and stand for the diagram of that element on k parallel
upward/downward strands.  They are how idempotent objects enter a diagram.

Usage
-----
    from heiscat.diagram.ir import ObjectWord, build, compose

    word = ObjectWord.parse("Q P")
    D = build(word, [(1, "dot_down", {0: 1}), (1, "cap_left")])
    D.target.letters                      # ()
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector
from heiscat.algebra.wreath import WreathElement
from heiscat.bimodule.local import SHAPES, generator_degree
from heiscat.errors import BoundaryMismatch, NotHomogeneous, ParseError

log = logging.getLogger(__name__)

Degree = Tuple[int, int]
BOX_KINDS = ("box_up", "box_down")
CROSSINGS = ("cross_pp", "cross_qq", "cross_pq", "cross_qp")
KINDS = tuple(SHAPES) + BOX_KINDS


@dataclass(frozen=True)
class ObjectWord:
    letters: Tuple[str, ...] = ()
    shift: Degree = (0, 0)

    def __post_init__(self):
        bad = [x for x in self.letters if x not in ("P", "Q")]
        if bad:
            raise BoundaryMismatch(f"letters must be P or Q, got {bad}")

    @classmethod
    def parse(cls, text: str) -> "ObjectWord":
        return cls(tuple(text.replace(" ", "").replace("1", "")))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "ObjectWord") -> "ObjectWord":
        shift = (self.shift[0] + other.shift[0], (self.shift[1] + other.shift[1]) % 2)
        return ObjectWord(self.letters + other.letters, shift)

    def __str__(self) -> str:
        return " ".join(self.letters) or "1"


@dataclass(frozen=True)
class Generator:
    kind: str
    label: Tuple[Tuple[int, Fraction], ...] = ()
    element: Optional[WreathElement] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BoundaryMismatch(f"unknown generator kind {self.kind!r}")
        if self.kind in BOX_KINDS and self.element is None:
            raise BoundaryMismatch(f"{self.kind} needs an element")

    @property
    def vector(self) -> Vector:
        return dict(self.label)

    @property
    def shape(self) -> Tuple[str, str]:
        if self.kind in BOX_KINDS:
            word = ("P" if self.kind == "box_up" else "Q") * self.element.n
            return word, word
        return SHAPES[self.kind]

    def degree(self, alg: FrobeniusAlgebra) -> Degree:
        if self.kind in BOX_KINDS:
            return self.element.grading() if self.element else (0, 0)
        if self.kind in ("dot_up", "dot_down") and not self.label:
            return 0, 0
        return generator_degree(alg, self.kind, self.vector)

    def __str__(self) -> str:
        if self.kind in BOX_KINDS:
            return f"{self.kind}[{self.element.format()}]"
        if self.label:
            return f"{self.kind} {dict(self.label)}"
        return self.kind


@dataclass(frozen=True)
class Slice:
    pos: int
    gen: Generator


Label = Union[None, Vector, WreathElement]
Step = Union[Slice, Tuple[int, str], Tuple[int, str, Label]]


def make_generator(kind: str, label: Label = None) -> Generator:
    if isinstance(label, WreathElement):
        return Generator(kind, (), label)
    if label:
        return Generator(kind, tuple(sorted((i, Fraction(c)) for i, c in label.items() if c)))
    return Generator(kind)


def apply_slice(word: Tuple[str, ...], sl: Slice) -> Tuple[str, ...]:
    """The word above ``sl`` given the word below it."""
    src, tgt = sl.gen.shape
    start = sl.pos - 1
    if start < 0 or start + len(src) > len(word):
        raise BoundaryMismatch(f"{sl.gen} at position {sl.pos} does not fit on {' '.join(word) or '1'}")
    if word[start:start + len(src)] != tuple(src):
        raise BoundaryMismatch(
            f"{sl.gen} at position {sl.pos} needs {src}, found {''.join(word[start:start + len(src)])}")
    return word[:start] + tuple(tgt) + word[start + len(src):]


@dataclass(frozen=True)
class Diagram:
    source: ObjectWord
    target: ObjectWord
    slices: Tuple[Slice, ...] = ()
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        word = self.source.letters
        for sl in self.slices:
            word = apply_slice(word, sl)
        if word != self.target.letters:
            raise BoundaryMismatch(f"slices end on {' '.join(word) or '1'}, target is {self.target}")

    def __len__(self) -> int:
        return len(self.slices)

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def scale(self, c) -> "Diagram":
        return replace(self, coefficient=self.coefficient * Fraction(c))

    def words(self) -> List[Tuple[str, ...]]:
        """Word below each slice, then the target word."""
        out = [self.source.letters]
        for sl in self.slices:
            out.append(apply_slice(out[-1], sl))
        return out

    def crossings(self) -> int:
        return sum(1 for sl in self.slices if sl.gen.kind in CROSSINGS)

    def __str__(self) -> str:
        lines = [f"src: {self.source}"]
        if self.coefficient != 1:
            lines.append(f"coeff: {self.coefficient}")
        lines.extend(f"{sl.pos} {sl.gen}" for sl in self.slices)
        return "\n".join(lines)


Combination = List[Tuple[Fraction, Diagram]]


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _as_slice(step: Step) -> Slice:
    if isinstance(step, Slice):
        return step
    if len(step) == 2:
        pos, kind = step
        return Slice(pos, make_generator(kind))
    pos, kind, label = step
    return Slice(pos, make_generator(kind, label))


def build(source: Union[ObjectWord, str], steps: Iterable[Step] = (), coefficient=1) -> Diagram:
    """Stack ``steps`` (bottom first) on ``source``; raises BoundaryMismatch."""
    if isinstance(source, str):
        source = ObjectWord.parse(source)
    slices = tuple(_as_slice(s) for s in steps)
    word = source.letters
    for sl in slices:
        word = apply_slice(word, sl)
    return Diagram(source, ObjectWord(word, source.shift), slices, Fraction(coefficient))


def identity(word: Union[ObjectWord, str]) -> Diagram:
    return build(word)


def degree(D: Diagram, alg: FrobeniusAlgebra) -> Degree:
    d, eps = 0, 0
    for sl in D.slices:
        a, b = sl.gen.degree(alg)
        d, eps = d + a, (eps + b) % 2
    return d, eps


def compose(top: Diagram, bottom: Diagram) -> Diagram:
    """``top`` stacked on ``bottom``."""
    if bottom.target.letters != top.source.letters:
        raise BoundaryMismatch(f"cannot stack {top.source} on {bottom.target}")
    return Diagram(bottom.source, top.target, bottom.slices + top.slices,
                   top.coefficient * bottom.coefficient)


def stack(*diagrams: Diagram) -> Diagram:
    """Compose bottom-first: stack(a, b, c) = c o b o a."""
    out = diagrams[0]
    for D in diagrams[1:]:
        out = compose(D, out)
    return out


def pad(D: Diagram, left: Sequence[str] = (), right: Sequence[str] = ()) -> Diagram:
    """id_left (x) D (x) id_right."""
    left, right = tuple(left), tuple(right)
    slices = tuple(Slice(sl.pos + len(left), sl.gen) for sl in D.slices)
    return Diagram(ObjectWord(left + D.source.letters + right, D.source.shift),
                   ObjectWord(left + D.target.letters + right, D.target.shift),
                   slices, D.coefficient)


def juxtapose(left: Diagram, right: Diagram) -> Diagram:
    """(left (x) id) o (id (x) right): the left diagram sits higher."""
    lower = pad(right, left=left.source.letters)
    upper = pad(left, right=right.target.letters)
    return compose(upper, lower)


def omega(D: Diagram) -> Diagram:
    """(-1)^{crossings} D, with boxes sent through the sign twist of A_k."""
    slices = []
    for sl in D.slices:
        if sl.gen.kind in BOX_KINDS:
            slices.append(Slice(sl.pos, Generator(sl.gen.kind, (), sign_twist(sl.gen.element))))
        else:
            slices.append(sl)
    sign = -1 if D.crossings() % 2 else 1
    return Diagram(D.source, D.target, tuple(slices), D.coefficient * sign)


def sign_twist(a: WreathElement) -> WreathElement:
    """b tau -> (-1)^{l(tau)} b tau."""
    return WreathElement(a.alg, a.n, {(t, p): (-c if wreath.length(p) % 2 else c) for (t, p), c in a.items()})


def check_homogeneous(D: Diagram, alg: FrobeniusAlgebra) -> None:
    for sl in D.slices:
        if sl.gen.kind in ("dot_up", "dot_down") and sl.gen.label:
            try:
                alg.grading(sl.gen.vector)
            except NotHomogeneous as exc:
                raise NotHomogeneous(f"dot label at position {sl.pos} is not homogeneous") from exc


# ---------------------------------------------------------------------------
# Linear combinations
# ---------------------------------------------------------------------------

def combination(*terms: Union[Diagram, Tuple[object, Diagram]]) -> Combination:
    out: Combination = []
    for t in terms:
        if isinstance(t, Diagram):
            out.append((Fraction(1), t))
        else:
            c, D = t
            out.append((Fraction(c), D))
    return out


def scale_combination(c, combo: Combination) -> Combination:
    return [(Fraction(c) * k, D) for k, D in combo]


def compose_combinations(top: Combination, bottom: Combination) -> Combination:
    return [(a * b, compose(D, E)) for a, D in top for b, E in bottom]


def boundary(combo: Combination) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    words = {(D.source.letters, D.target.letters) for _, D in combo}
    if len(words) > 1:
        raise BoundaryMismatch(f"terms disagree on source/target: {sorted(words)}")
    return words.pop()


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

_SLICE = re.compile(r"^(\d+)\s+([a-z_]+)(?:\s+(.+))?$")


def parse(text: str, alg: FrobeniusAlgebra) -> Diagram:
    """Parse the line-oriented diagram form.

        src: Q P          # source word, required, first non-comment line
        coeff: -1/2       # optional
        1 dot_down x      # pos kind [label], bottom slice first
        1 cap_left

    Boxes are not expressible in text.
    """
    source: Optional[ObjectWord] = None
    coeff = Fraction(1)
    steps: List[Step] = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        here = offset
        offset += len(raw)
        if not line:
            continue
        if line.startswith("src:"):
            if source is not None:
                raise ParseError("duplicate src line", here)
            source = ObjectWord.parse(line[4:])
            continue
        if source is None:
            raise ParseError("diagram must start with 'src: <word>'", here)
        if line.startswith("coeff:"):
            try:
                coeff = Fraction(line[6:].strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad coefficient {line[6:].strip()!r}", here)
            continue
        m = _SLICE.match(line)
        if not m:
            raise ParseError(f"expected 'pos kind [label]', got {line!r}", here)
        pos, kind, label_text = int(m.group(1)), m.group(2), m.group(3)
        if kind not in SHAPES:
            raise ParseError(f"unknown generator {kind!r}", here + raw.index(kind))
        label: Label = None
        if kind in ("dot_up", "dot_down"):
            if not label_text:
                raise ParseError(f"{kind} needs a label", here)
            try:
                label = alg.parse_element(label_text)
            except (KeyError, ValueError) as exc:
                raise ParseError(str(exc), here + raw.index(label_text))
        elif label_text:
            raise ParseError(f"{kind} takes no label", here + raw.index(label_text))
        steps.append((pos, kind, label))
    if source is None:
        raise ParseError("empty diagram", 0)
    D = build(source, steps, coeff)
    check_homogeneous(D, alg)
    return D


def dumps(D: Diagram, alg: FrobeniusAlgebra) -> str:
    lines = [f"src: {D.source}"]
    if D.coefficient != 1:
        lines.append(f"coeff: {D.coefficient}")
    for sl in D.slices:
        if sl.gen.kind in BOX_KINDS:
            raise BoundaryMismatch("boxes have no text form")
        label = f" {alg.format(sl.gen.vector).replace(' ', '')}" if sl.gen.label else ""
        lines.append(f"{sl.pos} {sl.gen.kind}{label}")
    return "\n".join(lines) + "\n"
