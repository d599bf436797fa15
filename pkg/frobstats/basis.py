# frobstats/basis.py
"""Test functions evaluated at Frobenius data, and named systems of them.

A test function reads one source of a sample entry (the polynomial it was
sampled from) and returns a rational number. It is one of

* an s-polynomial evaluated at the class point,
* a table of values per class point (characters without an interpolated form),
* a Kronecker character read at the prime, with optional per-class values
  so it can also be evaluated on a group.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from charparam import (
    ClassPoint,
    NotInRestrictionImageError,
    SPolynomial,
    SPolynomialError,
    alternating_basis,
    fiber_values,
    interpolate_character,
    parse_spolynomial,
    reduced_character_basis,
    s_vector,
    symmetric_basis,
)
from charparam.classpoint import class_points

from .kronecker import KroneckerCharacter
from .sampling import SampleEntry

logger = logging.getLogger(__name__)

COMPUTED_PRESETS = ("symmetric", "alternating", "reduced", "rational-irreducible", "a5-rational")


class BasisError(ValueError):
    """Raised for malformed test systems or functions that cannot be evaluated."""


@dataclass(frozen=True)
class TestFunction:
    """One test function; exactly one of the value sources is normally set.

    :param source: which polynomial of a joint sample the function reads
    :param point_values: ``((point, value), ...)`` for every class point of the group
    :param class_values: value on each class of the group, in class order
    """

    __test__ = False

    label: str
    source: int = 0
    polynomial: Optional[SPolynomial] = None
    point_values: Optional[Tuple[Tuple[ClassPoint, Fraction], ...]] = None
    kronecker: Optional[KroneckerCharacter] = None
    class_values: Optional[Tuple[Fraction, ...]] = None
    _lookup: Dict[ClassPoint, Fraction] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.polynomial is None and self.point_values is None and self.kronecker is None and self.class_values is None:
            raise BasisError(f"test function {self.label!r} has no values")
        if self.point_values is not None:
            self._lookup.update(self.point_values)
        if self.class_values is not None:
            object.__setattr__(self, "class_values", tuple(Fraction(v) for v in self.class_values))

    def is_constant_one(self) -> bool:
        if self.polynomial is not None:
            return self.polynomial == SPolynomial.constant(self.polynomial.nvars)
        if self.point_values is not None:
            return all(v == 1 for _, v in self.point_values)
        if self.class_values is not None and self.kronecker is None:
            return all(v == 1 for v in self.class_values)
        return False

    def value(self, entry: SampleEntry) -> Fraction:
        """Value at one sample entry."""
        if self.polynomial is not None:
            try:
                return self.polynomial.evaluate(entry.points[self.source])
            except (SPolynomialError, IndexError) as exc:
                raise BasisError(f"{self.label}: {exc}") from exc
        if self.point_values is not None:
            try:
                return self._lookup[entry.points[self.source]]
            except KeyError as exc:
                raise BasisError(f"{self.label} has no value at class point {entry.points[self.source]}") from exc
        if self.kronecker is not None and entry.prime:
            return Fraction(self.kronecker(entry.prime))
        if self.class_values is not None and entry.classes is not None:
            return self.class_values[entry.classes[self.source]]
        raise BasisError(f"{self.label} cannot be evaluated without a prime or class data")

    def class_value(self, G, k: int) -> Fraction:
        """Value on class ``k`` of ``G``, for exact expectations."""
        if self.polynomial is not None:
            return self.polynomial.evaluate(s_vector(G.cycle_types[k]))
        if self.point_values is not None:
            point = s_vector(G.cycle_types[k])
            if point not in self._lookup:
                raise BasisError(f"{self.label} has no value at class point {point} of {G.name}")
            return self._lookup[point]
        if self.class_values is not None:
            if len(self.class_values) != len(G.cycle_types):
                raise BasisError(
                    f"{self.label} has {len(self.class_values)} class values, {G.name} has {len(G.cycle_types)} classes"
                )
            return self.class_values[k]
        raise BasisError(f"{self.label} needs per-class values to be evaluated on {G.name}")


@dataclass(frozen=True)
class TestBasis:
    """Ordered system of test functions whose first member is the constant 1."""

    __test__ = False

    functions: Tuple[TestFunction, ...]
    name: str = "custom"

    def __post_init__(self):
        if not self.functions:
            raise BasisError("a test basis needs at least one function")
        if not self.functions[0].is_constant_one():
            raise BasisError(f"first test function of {self.name} must be the constant 1, got {self.functions[0].label}")

    @property
    def r(self) -> int:
        return len(self.functions)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f.label for f in self.functions)

    def evaluate(self, entry: SampleEntry) -> Tuple[Fraction, ...]:
        return tuple(f.value(entry) for f in self.functions)

    def class_matrix(self, G) -> Tuple[Tuple[Fraction, ...], ...]:
        """Row ``i`` holds function ``i`` on every class of ``G``."""
        h = len(G.cycle_types)
        return tuple(tuple(f.class_value(G, k) for k in range(h)) for f in self.functions)

    def with_source(self, source: int, prefix: str = "") -> "TestBasis":
        return TestBasis(
            tuple(replace(f, source=source, label=prefix + f.label) for f in self.functions), self.name
        )

    def extended(self, extra: Iterable[TestFunction]) -> "TestBasis":
        return TestBasis(self.functions + tuple(extra), self.name)


def polynomial_basis(
    polys: Sequence[SPolynomial], labels: Optional[Sequence[str]] = None, name: str = "custom"
) -> TestBasis:
    labels = list(labels) if labels is not None else [str(p) for p in polys]
    return TestBasis(tuple(TestFunction(lab, polynomial=p) for lab, p in zip(labels, polys)), name)


def parse_basis(text: str, degree: int) -> TestBasis:
    """Comma-separated s-polynomials, e.g. ``"1, s1, s2, s1^2 - s1 - s2 - 1"``."""
    parts = [t.strip() for t in text.split(",") if t.strip()]
    if not parts:
        raise BasisError("empty basis specification")
    try:
        polys = [parse_spolynomial(t, degree - 1) for t in parts]
    except SPolynomialError as exc:
        raise BasisError(str(exc)) from exc
    return polynomial_basis(polys, parts)


def joint_basis(basis_f: TestBasis, basis_g: TestBasis) -> TestBasis:
    """``basis_f`` on source 0 followed by ``basis_g`` on source 1."""
    first = basis_f.with_source(0, "f:")
    second = basis_g.with_source(1, "g:")
    return TestBasis(first.functions + second.functions, f"{basis_f.name}+{basis_g.name}")


def kronecker_function(d: int, class_values: Optional[Sequence[int]] = None, source: int = 0) -> TestFunction:
    character = KroneckerCharacter(d)
    return TestFunction(
        character.label,
        source=source,
        kronecker=character,
        class_values=None if class_values is None else tuple(Fraction(v) for v in class_values),
    )


def _character_function(label: str, values: Sequence[int], G, with_expression: bool) -> TestFunction:
    if with_expression:
        return TestFunction(label, polynomial=interpolate_character(values, G))
    points = [f.point for f in class_points(G)]
    return TestFunction(label, point_values=tuple(zip(points, fiber_values(values, G))))


def reduced_basis(G, max_degree: Optional[int] = None, with_expressions: bool = True) -> TestBasis:
    """Small genuine characters spanning the restriction image of ``R(Sym_n)``.

    :param max_degree: drop members of larger degree, keeping the trivial character
    """
    chars = reduced_character_basis(G, with_expressions=with_expressions)
    functions = []
    for i, vc in enumerate(chars):
        if i and max_degree is not None and vc.degree > max_degree:
            continue
        label = vc.label()
        if vc.expression is not None:
            functions.append(TestFunction(label, polynomial=vc.expression))
        else:
            functions.append(_character_function(label, vc.values, G, with_expression=False))
    logger.info("reduced basis of %s: %s", G.name, ", ".join(f.label for f in functions))
    return TestBasis(tuple(functions), "reduced")


def rational_irreducible_basis(G, with_expressions: bool = True) -> TestBasis:
    """Rational irreducible characters constant on cycle types, by increasing degree.

    Works for enumerated groups and for imported class data carrying rational rows.
    """
    rows = getattr(G, "rational_characters", None)
    if rows is None and not hasattr(G, "elements"):
        raise BasisError(f"imported data for {G.name} carries no rational characters")
    if rows is None:
        from chartab import character_table, rational_character_table

        rows = rational_character_table(character_table(G)).rows
    usable: List[Tuple[int, Tuple[int, ...]]] = []
    for i, row in enumerate(rows):
        try:
            fiber_values(row, G)
        except NotInRestrictionImageError:
            logger.debug("%s: rational row %d separates fused classes", G.name, i)
            continue
        usable.append((i, tuple(row)))
    if not usable:
        raise BasisError(f"{G.name} has no rational characters constant on cycle types")
    usable.sort(key=lambda t: (t[1][0], t[0]))
    functions = tuple(
        _character_function("1" if row[0] == 1 and all(v == 1 for v in row) else f"chi{i}", row, G, with_expressions)
        for i, row in usable
    )
    return TestBasis(functions, "rational-irreducible")


def resolve_basis(spec: str, degree: int, group=None) -> TestBasis:
    """Turn a preset name or an explicit s-polynomial list into a basis.

    :param degree: degree of the polynomial the basis is read on
    :param group: required by the group-dependent presets
    :raises BasisError: for unknown presets, missing groups or degree mismatches
    """
    # local import: the catalog pulls in the group engine
    from catalog import get_group, preset_data

    if spec == "symmetric":
        return polynomial_basis(symmetric_basis(degree), ["1"] + [f"s{k}" for k in range(1, degree)], spec)
    if spec == "alternating":
        polys = alternating_basis(degree)
        return polynomial_basis(polys, ["1"] + [f"s{k}" for k in range(1, len(polys))], spec)
    if spec in ("reduced", "rational-irreducible"):
        if group is None:
            raise BasisError(f"basis {spec!r} needs a group")
        if group.degree != degree:
            raise BasisError(f"{group.name} has degree {group.degree}, the polynomial has degree {degree}")
        return reduced_basis(group) if spec == "reduced" else rational_irreducible_basis(group)
    if spec == "a5-rational":
        if degree not in (5, 6):
            raise BasisError("the a5-rational basis exists for degrees 5 and 6 only")
        basis = rational_irreducible_basis(get_group("A5x5" if degree == 5 else "A5x6"))
        return TestBasis(basis.functions, spec)
    stored = preset_data(spec)
    if stored is not None:
        if int(stored["degree"]) != degree:
            raise BasisError(f"preset {spec!r} is for degree {stored['degree']}, not {degree}")
        try:
            polys = [parse_spolynomial(t, degree - 1) for t in stored["functions"]]
        except SPolynomialError as exc:
            raise BasisError(f"preset {spec!r}: {exc}") from exc
        return polynomial_basis(polys, stored.get("labels") or stored["functions"], spec)
    try:
        return parse_basis(spec, degree)
    except BasisError as exc:
        raise BasisError(f"{spec!r} is neither a basis preset nor an s-polynomial list: {exc}") from exc
