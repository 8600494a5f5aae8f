"""Homogeneous forms in x0, x1, x2 with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.exactnum.rational import IntOrRational, as_rational

Exponent = Tuple[int, int, int]


def monomials_of_degree(degree: int) -> List[Exponent]:
    """Monomial basis of degree ``degree``, x0**degree first (lex descending)."""
    if degree < 0:
        raise InvalidInputError(f"degree must be >= 0, got {degree}")
    out = []
    for e0 in range(degree, -1, -1):
        for e1 in range(degree - e0, -1, -1):
            out.append((e0, e1, degree - e0 - e1))
    return out


@dataclass(frozen=True)
class Form:
    degree: int
    terms: Tuple[Tuple[Exponent, Fraction], ...]

    def __post_init__(self):
        if self.degree < 0:
            raise InvalidInputError(f"degree must be >= 0, got {self.degree}")
        for e, _ in self.terms:
            if len(e) != 3 or min(e) < 0 or sum(e) != self.degree:
                raise InvalidInputError(f"exponent {e} does not belong to a form of degree {self.degree}")

    @classmethod
    def from_dict(cls, degree: int, coefficients: Mapping[Exponent, IntOrRational]) -> "Form":
        items = []
        for e, c in coefficients.items():
            c = as_rational(c)
            if c != 0:
                items.append((tuple(e), c))
        return cls(degree, tuple(sorted(items, reverse=True)))

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: IntOrRational = 1) -> "Form":
        return cls.from_dict(sum(exponent), {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, index: int) -> "Form":
        e = [0, 0, 0]
        e[index] = 1
        return cls.monomial(tuple(e))

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls(degree, ())

    @classmethod
    def from_vector(cls, degree: int, vector) -> "Form":
        """Inverse of ``to_vector`` in the basis ``monomials_of_degree(degree)``."""
        basis = monomials_of_degree(degree)
        return cls.from_dict(degree, {e: c for e, c in zip(basis, vector) if c})

    @property
    def coefficients(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def to_vector(self) -> List[Fraction]:
        coeffs = self.coefficients
        return [coeffs.get(e, Fraction(0)) for e in monomials_of_degree(self.degree)]

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms)

    def _same_degree(self, other: "Form"):
        if self.degree != other.degree:
            raise InvalidInputError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "Form") -> "Form":
        self._same_degree(other)
        out = self.coefficients
        for e, c in other.terms:
            out[e] = out.get(e, Fraction(0)) + c
        return Form.from_dict(self.degree, out)

    def __neg__(self) -> "Form":
        return Form(self.degree, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def scale(self, factor: IntOrRational) -> "Form":
        f = as_rational(factor)
        if f == 0:
            return Form.zero(self.degree)
        return Form(self.degree, tuple((e, f * c) for e, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Form):
            return self.scale(other)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms:
            for f, d in other.terms:
                key = (e[0] + f[0], e[1] + f[1], e[2] + f[2])
                out[key] = out.get(key, Fraction(0)) + c * d
        return Form.from_dict(self.degree + other.degree, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Form":
        if exponent < 0:
            raise InvalidInputError("negative powers of forms are not forms")
        result = Form.monomial((0, 0, 0))
        for _ in range(exponent):
            result = result * self
        return result

    def swap_branches(self) -> "Form":
        """sigma: x2 -> -x2, which exchanges the branch coordinates z and w."""
        return Form(
            self.degree,
            tuple((e, -c if e[2] % 2 else c) for e, c in self.terms),
        )

    def dehomogenize(self) -> Dict[Tuple[int, int], Fraction]:
        """s(1, x, y) as a map (deg_x, deg_y) -> coefficient."""
        return {(e[1], e[2]): c for e, c in self.terms}

    def divide(self, divisor: "Form") -> Optional["Form"]:
        """Exact quotient, or None when ``divisor`` does not divide ``self``.

        Division by a single polynomial in lex order: the remainder vanishes
        exactly when the division is exact.
        """
        if divisor.is_zero:
            raise InvalidInputError("division by the zero form")
        if divisor.degree > self.degree:
            return None if not self.is_zero else Form.zero(0)
        lead_e, lead_c = max(divisor.terms)
        remainder = self.coefficients
        quotient: Dict[Exponent, Fraction] = {}
        while remainder:
            e = max(remainder)
            if any(e[i] < lead_e[i] for i in range(3)):
                return None
            shift = (e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2])
            factor = remainder[e] / lead_c
            quotient[shift] = factor
            for f, d in divisor.terms:
                key = (f[0] + shift[0], f[1] + shift[1], f[2] + shift[2])
                value = remainder.get(key, Fraction(0)) - factor * d
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return Form.from_dict(self.degree - divisor.degree, quotient)

    def multiplicity_of(self, divisor: "Form") -> int:
        """Largest k with divisor**k dividing self."""
        if self.is_zero:
            raise InvalidInputError("every power divides the zero form")
        if divisor.degree == 0:
            raise InvalidInputError("multiplicity along a constant is undefined")
        k, current = 0, self
        while True:
            q = current.divide(divisor)
            if q is None:
                return k
            k, current = k + 1, q

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        out = ""
        for e, c in self.terms:
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            size = abs(c)
            coeff = str(size.numerator) if size.denominator == 1 else f"{size.numerator}/{size.denominator}"
            body = coeff if not mono else (mono if size == 1 else f"{coeff}*{mono}")
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out


X0 = Form.variable(0)
X1 = Form.variable(1)
X2 = Form.variable(2)

# x0*x2^2 - x1^3 - x0*x1^2, the nodal cubic with node [1:0:0]
NODAL_CUBIC = X0 * X2 * X2 - X1 * X1 * X1 - X0 * X1 * X1
