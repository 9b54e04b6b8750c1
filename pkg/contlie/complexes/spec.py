"""Chain and bicomplex signatures and their TOML documents."""

import re
from dataclasses import dataclass, replace

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from ..core.expr import SIGN_CONVENTIONS
from ..core.symbols import Degree
from ..exception import ParseError, ValidationError

__all__ = [
    "ComplexSpec",
    "CHAIN",
    "CECH_DE_RHAM",
    "parse_spec",
    "serialize_spec",
    "read_spec",
    "write_spec",
    "builtin_spec",
]

DOMAINS = ("integers", "nonnegative")
PRODUCT_RULES = ("additive-minus-overlap",)
DIFFERENTIALS = ("formal", "cech-de-rham")
KEYS = ("arity", "domain", "shift", "product", "sign", "differential", "grading")

_LOCATION_RE = re.compile(r"at line (\d+), column (\d+)")


@dataclass(frozen=True)
class ComplexSpec:
    """The signature of a chain complex (arity 1) or bicomplex (arity 2).

    Parameters
    ----------
    arity : int
        1 for a chain complex, 2 for a bicomplex.
    domain : str, optional
        "integers" (default) or "nonnegative".
    shift : Degree, optional
        Degree of the differential, by default one per component.
    product : str, optional
        Degree rule of the product; only "additive-minus-overlap".
    sign : str, optional
        Leibniz sign convention: "total-degree" (default),
        "first-component" or "shifted-total".
    differential : str, optional
        "formal" (default) keeps the differential unevaluated;
        "cech-de-rham" evaluates it on Čech–de Rham forms.
    grading : dict or tuple, optional
        Map from degree to integer grade.

    Raises
    ------
    ValidationError
        If any invariant of the signature is violated.

    Examples
    --------
    >>> from contlie import ComplexSpec
    >>> spec = ComplexSpec(2, "nonnegative")
    >>> print(spec.shift)
    (1,1)
    >>> ComplexSpec(1, shift=(1, 1))
    Traceback (most recent call last):
    contlie.exception.ValidationError: shift (1,1) has length 2 but arity is 1

    """

    arity: int
    domain: str = "integers"
    shift: Degree = None
    product: str = "additive-minus-overlap"
    sign: str = "total-degree"
    differential: str = "formal"
    grading: tuple = ()

    def __post_init__(self):
        if self.arity not in (1, 2) or isinstance(self.arity, bool):
            raise ValidationError(f"arity must be 1 or 2, got {self.arity!r}")
        if self.domain not in DOMAINS:
            raise ValidationError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        shift = self.shift
        if shift is None:
            shift = (1,) * self.arity
        try:
            shift = Degree.of(shift)
        except (TypeError, ValueError) as e:
            raise ValidationError(f"shift must be a list of integers, got {shift!r}") from e
        if len(shift) != self.arity:
            raise ValidationError(
                f"shift {shift} has length {len(shift)} but arity is {self.arity}"
            )
        object.__setattr__(self, "shift", shift)
        if self.product not in PRODUCT_RULES:
            raise ValidationError(f"Unsupported product rule {self.product!r}")
        if self.sign not in SIGN_CONVENTIONS:
            raise ValidationError(
                f"sign must be one of {SIGN_CONVENTIONS}, got {self.sign!r}"
            )
        if self.differential not in DIFFERENTIALS:
            raise ValidationError(
                f"differential must be one of {DIFFERENTIALS}, got {self.differential!r}"
            )
        if self.differential == "cech-de-rham" and (
            self.arity != 2
            or self.domain != "nonnegative"
            or shift.components != (1, 1)
        ):
            raise ValidationError(
                "the cech-de-rham differential needs arity 2, "
                "domain nonnegative and shift (1,1)"
            )
        object.__setattr__(self, "grading", self._grading_table(self.grading))

    def _grading_table(self, grading):
        items = grading.items() if isinstance(grading, dict) else grading
        table = {}
        for degree, grade in items:
            try:
                degree = Degree.of(degree)
            except ParseError as e:
                raise ValidationError(f"invalid grading key {degree!r}") from e
            if len(degree) != self.arity:
                raise ValidationError(
                    f"grading key {degree} does not have arity {self.arity}"
                )
            if isinstance(grade, bool) or not isinstance(grade, int):
                raise ValidationError(f"grade of {degree} must be an integer")
            table[degree] = grade
        return tuple(sorted(table.items(), key=lambda item: item[0].components))

    def formal(self):
        """The same signature with the differential kept unevaluated."""
        return replace(self, differential="formal")

    def in_domain(self, degree):
        if self.domain == "integers":
            return True
        return Degree.of(degree).is_nonnegative()

    def grade_of(self, degree):
        """Grade assigned to a degree, or None when the table has no entry."""
        degree = Degree.of(degree)
        for key, grade in self.grading:
            if key == degree:
                return grade
        return None


CHAIN = ComplexSpec(1)
CECH_DE_RHAM = ComplexSpec(
    2,
    domain="nonnegative",
    shift=(1, 1),
    sign="first-component",
    differential="cech-de-rham",
)


def builtin_spec(arity):
    """The built-in spec of a given arity: CHAIN or CECH_DE_RHAM."""
    if arity == 1:
        return CHAIN
    if arity == 2:
        return CECH_DE_RHAM
    raise ValidationError(f"No built-in spec of arity {arity}")


def parse_spec(text):
    """Parse a complex-spec TOML document.

    Parameters
    ----------
    text : str
        The document.

    Returns
    -------
    ComplexSpec

    Raises
    ------
    ParseError
        On TOML syntax errors (with line and column) or an empty document.
    ValidationError
        On unknown keys, a missing `arity`, or an invalid signature.

    Examples
    --------
    >>> from contlie import parse_spec, CECH_DE_RHAM
    >>> doc = 'arity = 2\\ndomain = "nonnegative"\\nshift = [1, 1]\\n'
    >>> parse_spec(doc).arity
    2
    >>> parse_spec("")
    Traceback (most recent call last):
    contlie.exception.ParseError: line 1, column 1: empty document

    """
    if not text.strip():
        raise ParseError("empty document", line=1, column=1)
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        match = _LOCATION_RE.search(str(e))
        line, column = (int(match[1]), int(match[2])) if match else (1, 1)
        raise ParseError(str(e), line=line, column=column) from e

    unknown = sorted(set(data) - set(KEYS))
    if unknown:
        raise ValidationError(f"Unknown keys: {', '.join(unknown)}")
    if "arity" not in data:
        raise ValidationError("Missing required key 'arity'")
    arity = data["arity"]
    if isinstance(arity, bool) or not isinstance(arity, int):
        raise ValidationError(f"arity must be an integer, got {arity!r}")
    shift = data.get("shift")
    if shift is not None and (
        not isinstance(shift, list)
        or not all(isinstance(s, int) and not isinstance(s, bool) for s in shift)
    ):
        raise ValidationError(f"shift must be an array of integers, got {shift!r}")
    grading = data.get("grading", {})
    if not isinstance(grading, dict):
        raise ValidationError("grading must be a table")
    for key in ("domain", "product", "sign", "differential"):
        if key in data and not isinstance(data[key], str):
            raise ValidationError(f"{key} must be a string")

    return ComplexSpec(
        arity,
        domain=data.get("domain", "integers"),
        shift=None if shift is None else tuple(shift),
        product=data.get("product", "additive-minus-overlap"),
        sign=data.get("sign", "total-degree"),
        differential=data.get("differential", "formal"),
        grading=grading,
    )


def serialize_spec(spec):
    """Write the canonical document of a spec.

    Every key is written, in a fixed order, so ``parse_spec`` of the
    result equals `spec` and serializing again reproduces the same text.

    Examples
    --------
    >>> from contlie import serialize_spec, CHAIN
    >>> print(serialize_spec(CHAIN))
    arity = 1
    domain = "integers"
    shift = [1]
    product = "additive-minus-overlap"
    sign = "total-degree"
    differential = "formal"
    <BLANKLINE>

    """
    lines = [
        f"arity = {spec.arity}",
        f'domain = "{spec.domain}"',
        "shift = [" + ", ".join(str(s) for s in spec.shift) + "]",
        f'product = "{spec.product}"',
        f'sign = "{spec.sign}"',
        f'differential = "{spec.differential}"',
    ]
    if spec.grading:
        lines.append("")
        lines.append("[grading]")
        for degree, grade in spec.grading:
            lines.append(f'"{degree.text()}" = {grade}')
    return "\n".join(lines) + "\n"


def read_spec(path):
    """Read a spec document from a UTF-8 file."""
    with open(path, encoding="utf-8") as f:
        return parse_spec(f.read())


def write_spec(spec, path):
    """Write the canonical document of a spec to a UTF-8 file."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_spec(spec))
