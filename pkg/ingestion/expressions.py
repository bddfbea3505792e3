"""
Expression parsing for algebra files.
Provides parsers turning strings such as "(q - 1)*x2*x1 + 1" into algebra elements,
normal-ordered relation tables and cyclotomic scalars, using sympy's parser with
noncommutative generator symbols and a commutative q.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, rationalize, standard_transformations

from qtorus.elements import AlgebraElement, Monomial, NormalFormAlgebra
from scalar.cyclotomic import CycScalar
from scalar.laurent import QLaurent
from utils.errors import InvalidInputError

# Configure logging
logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)

Word = List[Tuple[int, int]]


def _sympify(text: str, symbols: Dict[str, sympy.Symbol], location: Optional[str]) -> sympy.Expr:
    if not isinstance(text, str) or not text.strip():
        raise InvalidInputError("Empty expression", location)
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError, AttributeError, sympy.SympifyError) as e:
        raise InvalidInputError(f"Cannot parse '{text}': {e}", location) from e
    if not isinstance(expr, sympy.Expr):
        raise InvalidInputError(f"'{text}' is not an arithmetic expression", location)
    unknown = expr.free_symbols - set(symbols.values())
    if unknown:
        names = ", ".join(sorted(str(s) for s in unknown))
        raise InvalidInputError(f"Unknown symbol(s) {names} in '{text}'", location)
    return sympy.expand(expr)


def _rational(value: sympy.Basic, text: str, location: Optional[str]) -> Fraction:
    if not value.is_Rational:
        raise InvalidInputError(f"Coefficient {value} in '{text}' is not rational", location)
    return Fraction(int(value.p), int(value.q))


def _laurent_from_factors(factors: Sequence[sympy.Basic], q: sympy.Symbol, text: str,
                          location: Optional[str]) -> QLaurent:
    coefficient = Fraction(1)
    exponent = 0
    for factor in factors:
        if factor == q:
            exponent += 1
        elif factor.is_Pow and factor.base == q and factor.exp.is_Integer:
            exponent += int(factor.exp)
        else:
            coefficient *= _rational(factor, text, location)
    return QLaurent.q_power(exponent, coefficient)


def _word_from_factors(factors: Sequence[sympy.Basic], index: Dict[sympy.Symbol, int], text: str,
                       location: Optional[str]) -> Word:
    word: Word = []
    for factor in factors:
        if factor.is_Pow:
            base, exp = factor.base, factor.exp
        else:
            base, exp = factor, sympy.Integer(1)
        if base not in index or not exp.is_Integer:
            raise InvalidInputError(f"Factor {factor} in '{text}' is not a generator power", location)
        k = index[base]
        if word and word[-1][0] == k:
            word[-1] = (k, word[-1][1] + int(exp))
        else:
            word.append((k, int(exp)))
    return word


def _terms(text: str, names: Sequence[str], location: Optional[str]) -> List[Tuple[QLaurent, Word]]:
    q = sympy.Symbol("q")
    generators = {name: sympy.Symbol(name, commutative=False) for name in names}
    if "q" in generators:
        raise InvalidInputError("'q' cannot be used as a generator name", location)
    symbols = {**generators, "q": q}
    index = {symbol: k for k, symbol in enumerate(generators.values())}
    expr = _sympify(text, symbols, location)
    terms = []
    for term in sympy.Add.make_args(expr):
        commutative, noncommutative = term.args_cnc()
        coefficient = _laurent_from_factors(commutative, q, text, location)
        word = _word_from_factors(noncommutative, index, text, location)
        terms.append((coefficient, word))
    return terms


def parse_element(text: str, algebra: NormalFormAlgebra, location: Optional[str] = None) -> AlgebraElement:
    """
    Parse an expression and multiply it out in the algebra.

    Args:
        text: Sum of terms coefficient * generator powers, coefficients Laurent in q
        algebra: Algebra whose generator names may appear
        location: Used in error messages

    Returns:
        The element in normal form

    Raises:
        InvalidInputError: On syntax errors, unknown symbols or negative powers of
            polynomial generators
    """
    result = algebra.zero()
    for coefficient, word in _terms(text, algebra.names, location):
        for k, e in word:
            if e < 0 and not algebra.is_invertible_generator(k):
                raise InvalidInputError(f"{algebra.names[k]} is not invertible in '{text}'", location)
        result = result + algebra.evaluate_word(word).scale(coefficient)
    return result


def parse_normal_ordered(text: str, names: Sequence[str], invertible_from: Optional[int] = None,
                         location: Optional[str] = None) -> Dict[Monomial, QLaurent]:
    """
    Parse an expression whose terms are already normal-ordered monomials.

    Args:
        text: Expression such as "q^-1*x1*x3^2 + 2"
        names: Generator names in index order
        invertible_from: First index of the invertible generators (all polynomial when None)
        location: Used in error messages

    Returns:
        {exponent vector: coefficient}

    Raises:
        InvalidInputError: If a term is not in increasing generator order
    """
    N = len(names)
    first_invertible = N if invertible_from is None else invertible_from
    out: Dict[Monomial, QLaurent] = {}
    for coefficient, word in _terms(text, names, location):
        indices = [k for k, _ in word]
        if indices != sorted(indices) or len(set(indices)) != len(indices):
            raise InvalidInputError(f"Term {coefficient}*{word} of '{text}' is not in normal order", location)
        mono = [0] * N
        for k, e in word:
            if e < 0 and k < first_invertible:
                raise InvalidInputError(f"{names[k]} is not invertible in '{text}'", location)
            mono[k] = e
        key = tuple(mono)
        value = out.get(key, QLaurent.zero()) + coefficient
        if value.is_zero:
            out.pop(key, None)
        else:
            out[key] = value
    return out


def parse_scalar(text: str, l: int, location: Optional[str] = None) -> CycScalar:
    """
    Parse a polynomial in e (= eps) with rational coefficients, e.g. "1 - e^2/2".

    Raises:
        InvalidInputError: On syntax errors or non-polynomial expressions
    """
    e = sympy.Symbol("e")
    expr = _sympify(str(text), {"e": e}, location)
    value = CycScalar.zero(l)
    for term in sympy.Add.make_args(expr):
        coefficient, power = term.as_coeff_Mul()
        if power == 1:
            k = 0
        elif power == e:
            k = 1
        elif power.is_Pow and power.base == e and power.exp.is_Integer:
            k = int(power.exp)
        else:
            raise InvalidInputError(f"Term {term} of '{text}' is not c*e^k", location)
        value = value + CycScalar.root_power(l, k) * _rational(coefficient, str(text), location)
    return value


def format_coefficient(coefficient: QLaurent) -> str:
    """Rational Laurent polynomial in q, in a form parse_normal_ordered reads back."""
    parts = []
    for k, c in coefficient.items():
        if isinstance(c, CycScalar):
            if not c.is_rational():
                raise ValueError(f"Coefficient {coefficient} is not rational and cannot be written to a file")
            c = c.rational_value()
        power = "" if k == 0 else ("q" if k == 1 else f"q^({k})")
        if not power:
            parts.append(f"({c})")
        elif c == 1:
            parts.append(power)
        else:
            parts.append(f"({c})*{power}")
    return " + ".join(parts) if parts else "0"


def format_terms(terms: Dict[Monomial, QLaurent], names: Sequence[str]) -> str:
    """Normal-ordered terms as an expression string."""
    parts = []
    for mono, coefficient in sorted(terms.items()):
        factors = [names[k] if e == 1 else f"{names[k]}^({e})" for k, e in enumerate(mono) if e]
        scalar = format_coefficient(coefficient)
        if not factors:
            parts.append(f"({scalar})")
        else:
            parts.append(f"({scalar})*" + "*".join(factors))
    return " + ".join(parts) if parts else "0"
