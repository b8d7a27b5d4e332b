"""Hamming and homogeneous distances of chain-ring constacyclic codes.

Both minimum distances of C_i = <(x - alpha)^i> depend only on where i
falls among a fixed set of exponent bands.  The band tables are built
once per (a, p, s) and asserted to partition [0, a p^s] exactly, so a
lookup can never fall between bands.  Every formula here has a
brute-force counterpart that scans codewords directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .constacodes import ConstaCode, Word, enumerate_codewords
from .errors import CharacteristicTooSmallError, IndexOutOfRangeError
from .galois_ring import DEFAULT_ENUM_CAP, GrElement

HAMMING = "hamming"
HOMOGENEOUS = "homogeneous"

Band = tuple[int, int, int]  # (lo, hi, distance), inclusive bounds


def hamming_weight(word: Word) -> int:
    return sum(1 for el in word if not el.is_zero)


def homogeneous_weight(x: GrElement) -> int:
    """Homogeneous weight on GR(p^a, m), defined for a >= 2.

    Zero weighs 0; nonzero elements of p^(a-1) GR weigh p^(m(a-1));
    everything else weighs (p^m - 1) p^(m(a-2)).
    """
    p, a, m = x.ctx.params.p, x.ctx.params.a, x.ctx.params.m
    if a < 2:
        raise CharacteristicTooSmallError(
            "homogeneous weight needs a >= 2"
        )
    if x.is_zero:
        return 0
    top = p ** (a - 1)
    if all(c % top == 0 for c in x.coeffs):
        return p ** (m * (a - 1))
    return (p**m - 1) * p ** (m * (a - 2))


def homogeneous_word_weight(word: Word) -> int:
    return sum(homogeneous_weight(el) for el in word)


def _assert_partition(bands: tuple[Band, ...], top: int) -> tuple[Band, ...]:
    expect = 0
    for lo, hi, _ in bands:
        assert lo == expect and lo <= hi, bands
        expect = hi + 1
    assert expect == top + 1, bands
    return bands


@lru_cache(maxsize=None)
def _hamming_bands(a: int, p: int, s: int) -> tuple[Band, ...]:
    n = p**s
    bands: list[Band] = [(0, n * (a - 1), 1)]
    base = n * (a - 1)
    step = p ** (s - 1)
    for l in range(p - 1):
        bands.append((base + l * step + 1, base + (l + 1) * step, l + 2))
    for k in range(1, s):
        for t in range(1, p):
            lo = a * n - p ** (s - k) + (t - 1) * p ** (s - k - 1) + 1
            hi = a * n - p ** (s - k) + t * p ** (s - k - 1)
            bands.append((lo, hi, (t + 1) * p**k))
    bands.append((a * n, a * n, 0))
    return _assert_partition(tuple(bands), a * n)


@lru_cache(maxsize=None)
def _homogeneous_bands(a: int, p: int, m: int, s: int) -> tuple[Band, ...]:
    n = p**s
    w_free = (p**m - 1) * p ** (m * (a - 2))
    w_top = p ** (m * (a - 1))
    bands: list[Band] = [(0, n * (a - 2), w_free)]
    bands.append((n * (a - 2) + 1, n * (a - 1), w_top))
    base = n * (a - 1)
    step = p ** (s - 1)
    for l in range(p - 1):
        bands.append((base + l * step + 1, base + (l + 1) * step, (l + 2) * w_top))
    for k in range(1, s):
        for t in range(1, p):
            lo = a * n - p ** (s - k) + (t - 1) * p ** (s - k - 1) + 1
            hi = a * n - p ** (s - k) + t * p ** (s - k - 1)
            bands.append((lo, hi, (t + 1) * w_top * p**k))
    bands.append((a * n, a * n, 0))
    return _assert_partition(tuple(bands), a * n)


def _lookup(bands: tuple[Band, ...], i: int) -> int:
    top = bands[-1][1]
    if not 0 <= i <= top:
        raise IndexOutOfRangeError(f"exponent {i} outside [0, {top}]")
    for lo, hi, d in bands:
        if lo <= i <= hi:
            return d
    raise AssertionError(f"exponent {i} not covered by {bands}")


def hamming_distance_formula(a: int, p: int, s: int, i: int) -> int:
    return _lookup(_hamming_bands(a, p, s), i)


def field_hamming_distance_formula(p: int, s: int, i: int) -> int:
    """Hamming distance of <(x - alpha)^i> over a field, i.e. a = 1."""
    return _lookup(_hamming_bands(1, p, s), i)


def homogeneous_distance_formula(a: int, p: int, m: int, s: int, i: int) -> int:
    if a < 2:
        raise CharacteristicTooSmallError("homogeneous distance needs a >= 2")
    return _lookup(_homogeneous_bands(a, p, m, s), i)


def brute_force_min_weight(
    code: ConstaCode, kind: str = HAMMING, budget: int = DEFAULT_ENUM_CAP
) -> int:
    """Minimum weight over all nonzero codewords; 0 for the zero code."""
    weigh = {HAMMING: hamming_weight, HOMOGENEOUS: homogeneous_word_weight}[kind]
    words = enumerate_codewords(code, budget=budget)
    best = None
    for w in words:
        if all(el.is_zero for el in w):
            continue
        wt = weigh(w)
        if best is None or wt < best:
            best = wt
    return 0 if best is None else best


@dataclass(frozen=True)
class DistanceReport:
    """Formula value for one exponent, with the oracle verdict when it ran."""

    i: int
    formula_value: int
    oracle_value: int | None = None

    @property
    def agree(self) -> bool | None:
        if self.oracle_value is None:
            return None
        return self.formula_value == self.oracle_value


def distance_report(
    code: ConstaCode,
    kind: str = HAMMING,
    with_oracle: bool = False,
    budget: int = DEFAULT_ENUM_CAP,
) -> DistanceReport:
    params = code.ambient.ctx.params
    p, a, m, s = params.p, params.a, params.m, code.ambient.s
    if kind == HAMMING:
        formula = hamming_distance_formula(a, p, s, code.i)
    else:
        formula = homogeneous_distance_formula(a, p, m, s, code.i)
    oracle = brute_force_min_weight(code, kind, budget) if with_oracle else None
    return DistanceReport(i=code.i, formula_value=formula, oracle_value=oracle)


@dataclass(frozen=True)
class DistanceRow:
    """One row of the distance table for a fixed ambient ring."""

    p: int
    a: int
    m: int
    s: int
    gamma: int
    i: int
    cardinality: int
    d_hamming_formula: int
    d_hamming_oracle: int | None
    d_hom_formula: int | None
    d_hom_oracle: int | None

    COLUMNS = (
        "p",
        "a",
        "m",
        "s",
        "gamma",
        "i",
        "cardinality",
        "d_hamming_formula",
        "d_hamming_oracle",
        "d_hom_formula",
        "d_hom_oracle",
    )

    @property
    def agree(self) -> bool | None:
        if self.d_hamming_oracle is None:
            return None
        ham_ok = self.d_hamming_formula == self.d_hamming_oracle
        hom_ok = self.d_hom_oracle is None or self.d_hom_formula == self.d_hom_oracle
        return ham_ok and hom_ok

    def to_row(self) -> tuple:
        return tuple(getattr(self, c) for c in self.COLUMNS)

    def to_json_dict(self) -> dict:
        out = {c: getattr(self, c) for c in self.COLUMNS}
        out["agree"] = self.agree
        return out


def distance_table(
    ambient, with_oracle: bool = False, budget: int = DEFAULT_ENUM_CAP
) -> list[DistanceRow]:
    """One row per exponent i for a single Type1 ambient ring."""
    params = ambient.ctx.params
    p, a, m, s = params.p, params.a, params.m, ambient.s
    rows = []
    for i in range(a * ambient.n + 1):
        code = ConstaCode(ambient, i)
        d_ham = hamming_distance_formula(a, p, s, i)
        d_hom = homogeneous_distance_formula(a, p, m, s, i) if a >= 2 else None
        ham_oracle = hom_oracle = None
        if with_oracle:
            ham_oracle = brute_force_min_weight(code, HAMMING, budget)
            if a >= 2:
                hom_oracle = brute_force_min_weight(code, HOMOGENEOUS, budget)
        rows.append(
            DistanceRow(
                p=p,
                a=a,
                m=m,
                s=s,
                gamma=ambient.gamma.to_int(),
                i=i,
                cardinality=code.cardinality,
                d_hamming_formula=d_ham,
                d_hamming_oracle=ham_oracle,
                d_hom_formula=d_hom,
                d_hom_oracle=hom_oracle,
            )
        )
    return rows
