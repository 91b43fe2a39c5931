"""Built-in golden reference values and the self-check behind `credal paper`.

The expected numbers are the published worked-example values this package
is verified against: the aerial-target discounting example, the two
temporal case tables and their rate vectors, and a fixed-input evaluation
of the comparative factor table. `check()` recomputes every cell from
scratch through the public API and compares at the given tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discount import (
    ContextVector,
    conservative_discount,
    contextual_discount,
    optimistic_discount,
    proportional_discount,
)
from .errors import InfeasibleAlphasError
from .frame import build_frame
from .mass import MassFunction, make_mass
from .temporal import (
    DecaySpec,
    contextual_alphas_from_kappa,
    kappa_at,
    lambda_from_half_life,
)

DEFAULT_TOLERANCE = 5e-4

_W = ("w1", "w2", "w1w2", "w3", "w1w3", "w2w3", "full")
_ROWS = ("empty",) + _W

# Expected values, keyed "group.column.row". Kept flat and mutable on
# purpose: the harness self-test perturbs single cells.
EXPECTED: dict[str, float] = {}


def _vec(group: str, values) -> None:
    for name, v in zip(("w1", "w2", "w3"), values):
        EXPECTED[f"{group}.{name}"] = v


_vec("lambda.c1", (0.6931, 0.1733, 0.0462))
_vec("lambda.c2", (0.1386, 0.1733, 0.0462))
_vec("kappa.c1", (0.0625, 0.5000, 0.8312))
_vec("kappa.c2", (0.5743, 0.5000, 0.8312))
_vec("alpha_raw.c1", (-1.5787, 0.6777, 0.8061))
EXPECTED["alpha_raw.c1.infeasible"] = 1.0
_vec("alpha.c2", (0.1493, 0.0228, 0.4122))

# Aerial-target example: m({a}) = m({r}) = 0.5, over-reliability 0.4 on
# {h, r}; the contextual column instead discounts {a} by 0.4. With a lone
# context and singleton focal sets the three schemes coincide (the factor
# table's singleton rows carry the same factor in every column), so the
# optimistic cells equal the conservative ones here.
for _scheme, _cells in {
    "conservative": {"a": 0.5, "r": 0.3, "full": 0.2},
    "proportional": {"a": 0.5, "r": 0.3, "full": 0.2},
    "optimistic": {"a": 0.5, "r": 0.3, "full": 0.2},
    "contextual": {"a": 0.5, "r": 0.3, "ar": 0.2, "full": 0.0},
}.items():
    for _row, _v in _cells.items():
        EXPECTED[f"targets.{_scheme}.{_row}"] = _v


def _table(
    group: str, columns: dict[str, tuple[float, ...]], rows: tuple[str, ...] = _ROWS
) -> None:
    for column, values in columns.items():
        for row, v in zip(rows, values):
            EXPECTED[f"{group}.{column}.{row}"] = v


_table(
    "case1",
    {
        "optimistic": (0, 0.28125, 0.1, 0.2, 0.03376, 0, 0, 0.38499),
        "proportional": (0, 0.28125, 0.1, 0.1453125, 0.03376, 0, 0, 0.4396775),
        "conservative": (0, 0.28125, 0.1, 0.09375, 0.03376, 0, 0, 0.49124),
    },
)
_table(
    "case2",
    {
        "optimistic": (0, 0.12771, 0.1, 0.2, 0.03376, 0, 0, 0.53853),
        "proportional": (0, 0.12771, 0.1, 0.1069275, 0.03376, 0, 0, 0.6316025),
        "conservative": (0, 0.12771, 0.1, 0.04257, 0.03376, 0, 0, 0.69596),
        "contextual": (0, 0.1723, 0.1, 0.1391, 0.1662, 0.15, 0.074, 0.1983),
    },
)

# Comparative factor table on a fixed input: contexts {w1} and {w2, w3}
# with rates 0.25 and 0.5. Expected cells are the symbolic factors times
# the input masses, worked out by hand.
_FACTOR_MASS = {
    "": 0.08,
    "w1": 0.12,
    "w2": 0.2,
    "w1w2": 0.16,
    "w3": 0.04,
    "w1w3": 0.1,
    "w2w3": 0.14,
    "full": 0.16,
}
# No full-frame row here: the comparative table leaves it implicit.
_table(
    "factors",
    {
        "optimistic": (0.03, 0.09, 0.1, 0.16, 0.02, 0.1, 0.07),
        "proportional": (0.03, 0.09, 0.1, 0.105, 0.02, 0.065625, 0.07),
        "conservative": (0.03, 0.09, 0.1, 0.06, 0.02, 0.0375, 0.07),
    },
    rows=_ROWS[:-1],
)


@dataclass(frozen=True)
class CellResult:
    name: str
    expected: float
    actual: float
    ok: bool

    @property
    def diff(self) -> float:
        return self.actual - self.expected


def _case_frame():
    return build_frame(["w1", "w2", "w3"])


def _case_mass(frame) -> MassFunction:
    return make_mass(
        frame, {"w1": 0.3, "w2": 0.2, ("w1", "w2"): 0.2, "w3": 0.2, "*": 0.1}
    )


def _singleton_ctx(frame, alphas) -> ContextVector:
    return ContextVector(frame, frame.singletons(), tuple(alphas))


def _fill_table(actuals, group, column, m: MassFunction) -> None:
    frame = m.frame
    rows = {
        "empty": frame.empty,
        "w1": frame.subset("w1"),
        "w2": frame.subset("w2"),
        "w1w2": frame.subset("w1", "w2"),
        "w3": frame.subset("w3"),
        "w1w3": frame.subset("w1", "w3"),
        "w2w3": frame.subset("w2", "w3"),
        "full": frame.full,
    }
    for row, subset in rows.items():
        name = f"{group}.{column}.{row}"
        if name in EXPECTED:
            actuals[name] = m.mass(subset)


def compute_actuals() -> dict[str, float]:
    """Recompute every golden cell through the public API."""
    actuals: dict[str, float] = {}
    frame = _case_frame()

    half_lives = {"c1": (1.0, 4.0, 15.0), "c2": (5.0, 4.0, 15.0)}
    kappas = {}
    for case, ts in half_lives.items():
        rates = [lambda_from_half_life(t) for t in ts]
        for name, rate in zip(("w1", "w2", "w3"), rates):
            actuals[f"lambda.{case}.{name}"] = rate
        spec = DecaySpec(frame, frame.singletons(), tuple(rates))
        kv = kappa_at(spec, 4.0)
        kappas[case] = kv
        for name, kappa in zip(("w1", "w2", "w3"), kv.kappas):
            actuals[f"kappa.{case}.{name}"] = kappa

    try:
        ctx = contextual_alphas_from_kappa(kappas["c1"])
        raw = ctx.alphas
        actuals["alpha_raw.c1.infeasible"] = 0.0
    except InfeasibleAlphasError as exc:
        raw = exc.raw_alphas
        actuals["alpha_raw.c1.infeasible"] = 1.0
    for name, alpha in zip(("w1", "w2", "w3"), raw):
        actuals[f"alpha_raw.c1.{name}"] = alpha
    ctx_c2 = contextual_alphas_from_kappa(kappas["c2"])
    for name, alpha in zip(("w1", "w2", "w3"), ctx_c2.alphas):
        actuals[f"alpha.c2.{name}"] = alpha

    targets = build_frame(["a", "h", "r"])
    m_targets = make_mass(targets, {"a": 0.5, "r": 0.5})
    over_hr = ContextVector.from_pairs(targets, [(("h", "r"), 0.4)])
    over_a = ContextVector.from_pairs(targets, [("a", 0.4)])
    target_rows = {
        "a": targets.subset("a"),
        "r": targets.subset("r"),
        "ar": targets.subset("a", "r"),
        "full": targets.full,
    }
    for scheme, result in {
        "conservative": conservative_discount(m_targets, over_hr),
        "proportional": proportional_discount(m_targets, over_hr),
        "optimistic": optimistic_discount(m_targets, over_hr),
        "contextual": contextual_discount(m_targets, over_a),
    }.items():
        for row, subset in target_rows.items():
            name = f"targets.{scheme}.{row}"
            if name in EXPECTED:
                actuals[name] = result.mass(subset)

    m_case = _case_mass(frame)
    case_alphas = {"case1": (0.0625, 0.5, 0.8312), "case2": (0.5743, 0.5, 0.8312)}
    for group, alphas in case_alphas.items():
        ctx = _singleton_ctx(frame, alphas)
        _fill_table(actuals, group, "optimistic", optimistic_discount(m_case, ctx))
        _fill_table(actuals, group, "proportional", proportional_discount(m_case, ctx))
        _fill_table(actuals, group, "conservative", conservative_discount(m_case, ctx))
    ctx = _singleton_ctx(frame, (0.1493, 0.0228, 0.4122))
    _fill_table(actuals, "case2", "contextual", contextual_discount(m_case, ctx))

    m_factors = make_mass(
        frame,
        {
            (): _FACTOR_MASS[""],
            "w1": _FACTOR_MASS["w1"],
            "w2": _FACTOR_MASS["w2"],
            ("w1", "w2"): _FACTOR_MASS["w1w2"],
            "w3": _FACTOR_MASS["w3"],
            ("w1", "w3"): _FACTOR_MASS["w1w3"],
            ("w2", "w3"): _FACTOR_MASS["w2w3"],
            "*": _FACTOR_MASS["full"],
        },
    )
    factor_ctx = ContextVector.from_pairs(frame, [("w1", 0.25), (("w2", "w3"), 0.5)])
    _fill_table(actuals, "factors", "optimistic", optimistic_discount(m_factors, factor_ctx))
    _fill_table(
        actuals, "factors", "proportional", proportional_discount(m_factors, factor_ctx)
    )
    _fill_table(
        actuals, "factors", "conservative", conservative_discount(m_factors, factor_ctx)
    )
    return actuals


def check(tolerance: float = DEFAULT_TOLERANCE) -> list[CellResult]:
    """Compare recomputed cells against the stored values, in table order."""
    actuals = compute_actuals()
    results = []
    for name, expected in EXPECTED.items():
        actual = actuals[name]
        results.append(
            CellResult(name, expected, actual, abs(actual - expected) <= tolerance)
        )
    return results
