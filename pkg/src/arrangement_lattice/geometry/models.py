"""Exact rational points, lines and arrangements.

Coordinates are ``fractions.Fraction`` throughout; nothing in the geometry
layer ever touches floating point.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction

Rat = Fraction

RationalLike = int | str | Fraction


def to_rat(value: RationalLike) -> Fraction:
    """Convert an int, ``"p/q"`` string or Fraction to a Fraction.

    Examples:
        >>> to_rat("3/6")
        Fraction(1, 2)
        >>> to_rat(-4)
        Fraction(-4, 1)
    """
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    """A point of the affine plane with exact coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", to_rat(self.x))
        object.__setattr__(self, "y", to_rat(self.y))


@dataclass(frozen=True)
class Line:
    """The locus ``a*x + b*y + c = 0``.

    Coefficients are normalized on construction so that the first nonzero of
    ``(a, b)`` equals 1; equality and hashing are therefore equality of loci.
    The ``id`` is the position in the owning arrangement and does not take
    part in comparisons.

    Attributes:
        a: Coefficient of x
        b: Coefficient of y
        c: Constant term
        id: Index of the line in its arrangement
    """

    a: Fraction
    b: Fraction
    c: Fraction
    id: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        a, b, c = to_rat(self.a), to_rat(self.b), to_rat(self.c)
        if a == 0 and b == 0:
            raise ValueError(f"Line {self.id}: (a, b) must not both be zero")
        lead = a if a != 0 else b
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    @property
    def direction_class(self) -> tuple[Fraction, Fraction]:
        """Normalized normal vector; two lines are parallel iff these agree."""
        return (self.a, self.b)

    @property
    def direction(self) -> tuple[Fraction, Fraction]:
        """A direction vector along the line."""
        return (-self.b, self.a)

    def evaluate(self, point: Point) -> Fraction:
        """Value of the linear form at ``point``."""
        return self.a * point.x + self.b * point.y + self.c

    def foot_point(self) -> Point:
        """Point of the line closest to the origin."""
        norm = self.a * self.a + self.b * self.b
        return Point(-self.a * self.c / norm, -self.b * self.c / norm)

    def point_at(self, s: Fraction) -> Point:
        """Point ``foot_point + s * direction``."""
        foot = self.foot_point()
        dx, dy = self.direction
        return Point(foot.x + s * dx, foot.y + s * dy)

    def parameter(self, point: Point) -> Fraction:
        """Monotone coordinate of ``point`` along the line's direction."""
        dx, dy = self.direction
        return point.x * dx + point.y * dy

    def with_id(self, new_id: int) -> Line:
        """Copy of this line carrying a different id."""
        return Line(self.a, self.b, self.c, id=new_id)

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y + {self.c} = 0"


@dataclass(frozen=True)
class Arrangement:
    """An ordered finite set of real affine lines.

    Line ids equal their positions. Distinctness is not enforced here;
    ``validate`` reports repeated lines.
    """

    lines: tuple[Line, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))
        for position, line in enumerate(self.lines):
            if line.id != position:
                raise ValueError(f"Line at position {position} carries id {line.id}")

    @classmethod
    def from_coefficients(cls, rows: list[tuple[RationalLike, RationalLike, RationalLike]]) -> Arrangement:
        """Build an arrangement from ``(a, b, c)`` triples, numbering lines in order.

        Examples:
            >>> arr = Arrangement.from_coefficients([(0, 1, 0), (1, 0, 0), (1, 1, -1)])
            >>> arr.size
            3
        """
        return cls(tuple(Line(to_rat(a), to_rat(b), to_rat(c), id=i) for i, (a, b, c) in enumerate(rows)))

    @property
    def size(self) -> int:
        """Number of lines N."""
        return len(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator[Line]:
        return iter(self.lines)

    def __getitem__(self, index: int) -> Line:
        return self.lines[index]

    def defining_polynomial_sign(self, point: Point) -> int:
        """Sign of the product of all linear forms at ``point``."""
        sign = 1
        for line in self.lines:
            value = line.evaluate(point)
            if value == 0:
                return 0
            if value < 0:
                sign = -sign
        return sign
