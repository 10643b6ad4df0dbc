"""Built-in example algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .exact.diffop import DiffOperator
from .exact.scalar import I, ZERO, as_scalar, param
from .lie import LieAlgebra, SymplecticForm, central_extension, semidirect_product, validate_lie


def _vec(m: int, entries: dict) -> list:
    v = [ZERO] * m
    for k, c in entries.items():
        v[k] = as_scalar(c)
    return v


def algebra_from_brackets(names, brackets: dict) -> LieAlgebra:
    """``brackets[(j, k)] = {l: coeff}`` with 1-based indices."""
    m = len(names)
    table = {(j - 1, k - 1): _vec(m, {l - 1: c for l, c in img.items()}) for (j, k), img in brackets.items()}
    return validate_lie(table, names)


def heisenberg3() -> LieAlgebra:
    return algebra_from_brackets(["X1", "X2", "X3"], {(3, 2): {1: 1}})


def heisenberg5() -> LieAlgebra:
    return algebra_from_brackets(
        ["X1", "X2", "X3", "X4", "X5"], {(4, 2): {1: 1}, (5, 3): {1: 1}}
    )


def filiform4() -> LieAlgebra:
    return algebra_from_brackets(["X1", "X2", "X3", "X4"], {(4, 3): {2: 1}, (4, 2): {1: 1}})


PEDERSEN6_BRACKETS = {
    (6, 5): {4: 1},
    (6, 4): {3: 1},
    (6, 3): {2: 1},
    (5, 4): {2: 1},
    (5, 2): {1: -1},
    (4, 3): {1: 1},
}


def pedersen6() -> LieAlgebra:
    return algebra_from_brackets([f"X{j}" for j in range(1, 7)], PEDERSEN6_BRACKETS)


def pedersen5() -> LieAlgebra:
    """The ideal spanned by X1..X5 of ``pedersen6``."""
    g = pedersen6()
    return g.subalgebra([g.basis(j) for j in range(5)], g.names[:5])


def pedersen_g0() -> LieAlgebra:
    """Quotient of ``pedersen5`` by its center, basis X2..X5."""
    return algebra_from_brackets(["X2", "X3", "X4", "X5"], {(4, 3): {1: 1}})


PEDERSEN_J = [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
PEDERSEN_D = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]


def pedersen_printed_drep(a=None, b=None) -> list:
    """The six operators listed for the pedersen6 representation, in t1, t2."""
    a = param("a") if a is None else as_scalar(a)
    b = param("b") if b is None else as_scalar(b)
    t1 = DiffOperator.coordinate(0, 2)
    t2 = DiffOperator.coordinate(1, 2)
    d1 = DiffOperator.partial(0, 2)
    d2 = DiffOperator.partial(1, 2)
    one = DiffOperator.identity(2)
    return [
        one * (I * a),
        t1 * I,
        t2 * I,
        d2 * a,
        (d1 * (-(a**2)) - t1 * t2 * I) / a,
        (t1 * d2 * (6 * a**2) + one * (6 * I * a * b) - t2 * t2 * (3 * I * a) + t1 * t1 * t1 * (2 * I)) / (6 * a**2),
    ]


def pedersen_printed_orbit_y6(y2, y3, y4, a=None, b=None):
    """The printed y6 relation, as a polynomial expression in its arguments."""
    a = param("a") if a is None else as_scalar(a)
    b = param("b") if b is None else as_scalar(b)
    return (6 * a**2 * b + 6 * a * y2 * y4 - 3 * a * y3**2 + 2 * y2**3) / 6


def lauret_g0(s=None, t=None) -> LieAlgebra:
    s = param("s") if s is None else as_scalar(s)
    t = param("t") if t is None else as_scalar(t)
    return algebra_from_brackets(
        [f"X{j}" for j in range(1, 7)],
        {(6, 5): {3: s}, (6, 4): {2: s + t}, (5, 4): {1: t}},
    )


LAURET_J = [
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, -1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0],
]


def lauret_D(A) -> list:
    """Block matrix ``[[0, A], [0, 0]]``."""
    A = [[as_scalar(x) for x in row] for row in A]
    D = [[ZERO] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            D[i][3 + j] = A[i][j]
    return D


IDENTITY3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def lauret6(s=None, t=None, A=None) -> LieAlgebra:
    """``S_A ⋉ (R +_omega g0(s, t))`` with basis X0 (center), X1..X6, D."""
    g0 = lauret_g0(s, t)
    g = central_extension(g0, SymplecticForm(LAURET_J), center_name="X0")
    D = lauret_D(A or IDENTITY3)
    Dext = [[ZERO] * 7] + [[ZERO] + row for row in D]
    s_alg = LieAlgebra.abelian(1, ["D"])
    return semidirect_product(s_alg, g, [Dext])


@dataclass
class Example:
    name: str
    build: Callable
    default_xi: dict
    nparams: int = 0
    description: str = ""
    extra: dict = field(default_factory=dict)


EXAMPLES = {
    "heisenberg3": Example("heisenberg3", heisenberg3, {"X1": "l"}, 0, "3-dimensional Heisenberg algebra"),
    "heisenberg5": Example("heisenberg5", heisenberg5, {"X1": "l"}, 0, "5-dimensional Heisenberg algebra"),
    "pedersen6": Example(
        "pedersen6", pedersen6, {"X1": "a", "X6": "b"}, 0, "6-dimensional 5-step algebra with 1-dimensional center"
    ),
    "lauret6": Example(
        "lauret6",
        lambda s=None, t=None, A=None: lauret6(s, t, A),
        {"X0": "l"},
        2,
        "S_A ⋉ (R +_omega g0(s,t)); positional arguments s t",
    ),
    "filiform4": Example("filiform4", filiform4, {"X1": "a", "X2": "b"}, 0, "4-dimensional filiform algebra"),
}


def pedersen_theorem_input(a=None, b=None):
    """Theorem data for ``pedersen6``: basis (Z, X2..X5, D) with ``Z = -X1`` and ``D = X6``."""
    from .theorems import Theorem42Input

    a = param("a") if a is None else as_scalar(a)
    b = param("b") if b is None else as_scalar(b)
    return Theorem42Input(pedersen_g0(), SymplecticForm(PEDERSEN_J), [PEDERSEN_D], [-a, 0, 0, 0, 0, b])


def lauret_theorem_input(s=None, t=None, A=None, l=None, d=0):
    """Theorem data for ``lauret6``: basis (X0, X1..X6, D), functional l*X0* + d*D*."""
    from .theorems import Theorem42Input

    l = param("l") if l is None else as_scalar(l)
    return Theorem42Input(
        lauret_g0(s, t), SymplecticForm(LAURET_J), [lauret_D(A or IDENTITY3)], [l] + [0] * 6 + [d], center_name="X0"
    )


def pedersen_scales(a=None) -> list:
    """Rescaling ``t1 -> -t1/a, t2 -> t2/a`` taking the induced model to the printed coordinates."""
    a = param("a") if a is None else as_scalar(a)
    return [-1 / a, 1 / a]


EXAMPLES["pedersen5"] = Example(
    "pedersen5", pedersen5, {"X1": "a"}, 0, "ideal spanned by X1..X5 of pedersen6 (3-step, 1-dimensional center)"
)
