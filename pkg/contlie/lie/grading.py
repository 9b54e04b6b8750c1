"""The grading condition on bracket tables."""

from dataclasses import dataclass, field

from ..exception import ValidationError
from ..utils import format_grade

__all__ = ["GradingReport", "grading_check"]


@dataclass
class GradingReport:
    rule: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def lines(self):
        status = "pass" if self.passed else f"{len(self.violations)} violation(s)"
        out = [f"grading ({self.rule}): {self.checked} relations checked, {status}"]
        out += [f"  {v}" for v in self.violations]
        return out


def grading_check(p):
    """Check that every bracket lands in the sum of its input grades.

    Zero brackets satisfy the condition trivially. The two brackets of a
    mixed constraint must have the same grade sum.

    Parameters
    ----------
    p : LiePresentation

    Returns
    -------
    GradingReport

    Raises
    ------
    ValidationError
        If the presentation has no grading rule.

    Examples
    --------
    >>> from contlie import DiscreteE, sl2_kernels, principal_presentation
    >>> grading_check(principal_presentation(sl2_kernels(DiscreteE()))).passed
    True

    """
    if p.grading_rule is None:
        raise ValidationError("The presentation has no grading rule")
    report = GradingReport(p.grading_rule)
    grade = {g.name: g.grade for g in p.generators}
    for entry in p.brackets:
        report.checked += 1
        if entry.output is None:
            continue
        expected = grade[entry.left] + grade[entry.right]
        if grade[entry.output] != expected:
            report.violations.append(
                f"[{entry.left}, {entry.right}] -> {entry.output}: output grade "
                f"{format_grade(grade[entry.output])}, expected {format_grade(expected)}"
            )
    for constraint in p.mixed:
        report.checked += 1
        t1, t2 = constraint.terms
        s1 = grade[t1.left] + grade[t1.right]
        s2 = grade[t2.left] + grade[t2.right]
        if s1 != s2:
            report.violations.append(
                f"[{t1.left}, {t1.right}] + [{t2.left}, {t2.right}]: terms have "
                f"grades {format_grade(s1)} and {format_grade(s2)}"
            )
    return report
