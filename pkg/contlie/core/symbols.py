"""Parameters, degrees and generator symbols."""

from dataclasses import dataclass, replace

from ..exception import DegreeMismatch, ValidationError
from ..utils import parse_degree

__all__ = [
    "Param",
    "HolonomyWord",
    "Degree",
    "GenSymbol",
    "Factor",
    "params_key",
]

PARAM_KINDS = ("generic", "holonomy")


@dataclass(frozen=True, eq=False)
class Param:
    """A named parameter a symbol depends on.

    Two parameters are equal when their names are equal; `kind` and
    `component` are bookkeeping only.

    Parameters
    ----------
    name : str
        The parameter name.
    kind : str, optional
        Either "generic" (default) or "holonomy".
    component : int, optional
        Index of the degree component the parameter counts toward, by default 0.

    Examples
    --------
    >>> from contlie import Param
    >>> Param("h1", "holonomy") == Param("h1")
    True

    """

    name: str
    kind: str = "generic"
    component: int = 0

    def __post_init__(self):
        if self.kind not in PARAM_KINDS:
            raise ValidationError(f"Unknown parameter kind {self.kind!r}")

    def __eq__(self, other):
        return isinstance(other, Param) and self.name == other.name

    def __hash__(self):
        return hash(("param", self.name))

    def __str__(self):
        return self.name

    @property
    def letters(self):
        return (self,)


@dataclass(frozen=True)
class HolonomyWord:
    """A formal composite of holonomy parameters.

    The composition is written left to right in application order reversed,
    as for maps: ``HolonomyWord((h2, h1))`` is ``h2h1``, apply ``h1`` first.

    Examples
    --------
    >>> from contlie import HolonomyWord, Param
    >>> HolonomyWord((Param("h2"), Param("h1"))).name
    'h2h1'

    """

    composition: tuple

    def __post_init__(self):
        if not self.composition:
            raise ValidationError("A holonomy word needs at least one letter")
        object.__setattr__(self, "composition", tuple(self.composition))

    @property
    def name(self):
        return "".join(p.name for p in self.composition)

    @property
    def kind(self):
        return "holonomy"

    @property
    def component(self):
        return 0

    @property
    def letters(self):
        return self.composition

    def __str__(self):
        return self.name


def params_key(params):
    """Sort key of a parameter list: the tuple of names."""
    return tuple(p.name for p in params)


@dataclass(frozen=True)
class Degree:
    """A chain degree ``(n,)`` or a bidegree ``(p, q)``.

    Examples
    --------
    >>> from contlie import Degree
    >>> Degree.of("1,2") + Degree.of((0, 1))
    Degree(components=(1, 3))
    >>> Degree.of(4).total
    4

    """

    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))
        if len(self.components) not in (1, 2):
            raise ValidationError(
                f"A degree has 1 or 2 components, got {len(self.components)}"
            )

    @classmethod
    def of(cls, value):
        """Build a degree from a Degree, an int, a sequence, or ``"p,q"`` text."""
        if isinstance(value, Degree):
            return value
        if isinstance(value, int):
            return cls((value,))
        if isinstance(value, str):
            return cls(parse_degree(value))
        return cls(tuple(value))

    @classmethod
    def zero(cls, arity):
        return cls((0,) * arity)

    def _check(self, other):
        other = Degree.of(other)
        if len(other) != len(self):
            raise DegreeMismatch(
                f"Degrees {self} and {other} have different lengths"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        return Degree(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        other = self._check(other)
        return Degree(tuple(a - b for a, b in zip(self, other)))

    def __le__(self, other):
        other = self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def __ge__(self, other):
        other = self._check(other)
        return all(a >= b for a, b in zip(self, other))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, item):
        return self.components[item]

    def __str__(self):
        if len(self) == 1:
            return str(self.components[0])
        return "(" + ",".join(str(c) for c in self.components) + ")"

    @property
    def total(self):
        return sum(self.components)

    def text(self):
        """The ``"p"`` or ``"p,q"`` form used in documents."""
        return ",".join(str(c) for c in self.components)

    def is_nonnegative(self):
        return all(c >= 0 for c in self.components)


@dataclass(frozen=True)
class GenSymbol:
    """A graded generator symbol.

    Parameters
    ----------
    name : str
        Identifier of the symbol.
    degree : Degree
        Its degree, already including any formal de Rham marker.
    params : tuple of Param or HolonomyWord
        Ordered argument list.
    pullbacks : tuple of Param or HolonomyWord
        Applied pullback chain, outermost first.
    dmark : bool
        Whether the formal de Rham differential has been applied.

    """

    name: str
    degree: Degree
    params: tuple = ()
    pullbacks: tuple = ()
    dmark: bool = False

    def __post_init__(self):
        object.__setattr__(self, "degree", Degree.of(self.degree))
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "pullbacks", tuple(self.pullbacks))
        names = params_key(self.params)
        if len(set(names)) != len(names):
            raise ValidationError(f"Repeated parameter in {self.name}: {names}")

    def key(self):
        return (
            self.name,
            params_key(self.params),
            params_key(self.pullbacks),
            self.dmark,
            self.degree.components,
        )

    def with_params(self, params):
        return replace(self, params=tuple(params))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Factor:
    """A generator symbol, possibly under one unevaluated differential."""

    base: GenSymbol
    delta_applied: bool = False

    def key(self):
        return self.base.key() + (self.delta_applied,)

    def __str__(self):
        return f"d {self.base.name}" if self.delta_applied else self.base.name
