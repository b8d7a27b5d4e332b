"""Formula-vs-oracle verification sweeps over small parameter sets.

Every closed-form claim the package makes (chain structure, nilpotency,
cardinality, duality, self-duality, both distance formulas, shift
closure, unit algebra, p-th power congruences) is re-checked here
against exhaustive enumeration on rings small enough to scan.  The
default suite is what `galring verify` runs and what the acceptance
tests report on.

GR(9,1) with s = 2 appears only in the nilpotency checks: its ambient
ring has 9^9 elements, far beyond the enumeration budget, while
nilpotency needs nothing but repeated squaring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ambient_ring import (
    AmbientParams,
    freshman_congruence_check,
    nilpotency_index,
    verify_chain_structure,
)
from .constacodes import (
    ConstaCode,
    brute_force_dual,
    dual_code,
    enumerate_codewords,
    is_gamma2_constacyclic,
    is_self_orthogonal,
    self_dual_codes,
)
from .distances import (
    HAMMING,
    HOMOGENEOUS,
    brute_force_min_weight,
    hamming_distance_formula,
    homogeneous_distance_formula,
)
from .errors import GalringError
from .galois_ring import GrElement, RingParams, invert, ring
from .unit_types import (
    TYPE1,
    classify_unit,
    generic_inverse,
    is_chain_ambient,
    type0_inverse,
    type1_inverse,
    type_product_class,
)

# (p, a, m, s) rows small enough for exhaustive ideal/codeword scans.
CHAIN_SUITE = (
    (2, 2, 1, 1),
    (2, 2, 1, 2),
    (2, 3, 1, 1),
    (2, 3, 1, 2),
    (3, 2, 1, 1),
    (2, 2, 2, 1),
)
# Nilpotency is formula-cheap, so GR(9,1)/s=2 can come back in.
NILPOTENCY_SUITE = CHAIN_SUITE + ((3, 2, 1, 2),)
# Duality scans the full ambient module; keep |R|^(p^s) <= 2^16.
DUALITY_SUITE = (
    (2, 2, 1, 1),
    (2, 2, 1, 2),
    (2, 3, 1, 1),
    (3, 2, 1, 1),
)
SELF_DUALITY_SUITE = DUALITY_SUITE + ((2, 2, 2, 1),)
UNIT_ALGEBRA_RINGS = ((2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 2, 2))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}{suffix}"


def _type1_ambients(p: int, a: int, m: int, s: int):
    ctx = ring(p, a, m)
    for g in ctx.iter_units():
        if classify_unit(g).variant == TYPE1:
            yield AmbientParams(ctx, s, g)


def check_chain_classification() -> CheckResult:
    """Exhaustive ideal survey vs the unit-type verdict, for every unit."""
    bad = []
    for p, a, m, s in CHAIN_SUITE:
        ctx = ring(p, a, m)
        n = p**s
        for g in ctx.iter_units():
            amb = AmbientParams(ctx, s, g)
            predicted = is_chain_ambient(g, s)
            rep = verify_chain_structure(amb)
            ok = rep.is_chain == predicted
            if predicted:
                sizes = tuple(p ** (m * (a * n - i)) for i in range(a * n + 1))
                ok = ok and rep.ideal_count == a * n + 1
                ok = ok and rep.ideal_sizes == sizes
                ok = ok and rep.tower_match is True
                ok = ok and rep.maximal_ideal_principal is True
            else:
                ok = ok and rep.maximal_ideal_principal is False
            if not ok:
                bad.append(f"GR({p}^{a},{m}) s={s} gamma={g.to_int()}")
    detail = "GR(9,1) s=2 out of enumeration budget, skipped"
    if bad:
        detail = "; ".join(bad)
    return CheckResult("chain-classification", not bad, detail)


def check_nilpotency() -> CheckResult:
    """Nilpotency of x - alpha: a*p^s for Type1, lower for gamma in T."""
    bad = []
    for p, a, m, s in NILPOTENCY_SUITE:
        ctx = ring(p, a, m)
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            got = nilpotency_index(amb.x_minus(amb.alpha))
            if got != a * n:
                bad.append(f"Type1 gamma={amb.gamma.to_int()}: {got}")
        expect = a * n - (a - 1) * p ** (s - 1)
        for e in range(ctx.params.residue_size - 1):
            g = ctx.teich_exp(e)
            amb = AmbientParams(ctx, s, g)
            got = nilpotency_index(amb.x_minus(amb.alpha))
            if got != expect:
                bad.append(f"gamma=zeta^{e}: {got} != {expect}")
    return CheckResult("nilpotency", not bad, "; ".join(bad))


def check_cardinality_nesting() -> CheckResult:
    """|C_i| = p^(m(a p^s - i)) and strict nesting in i, by enumeration."""
    bad = []
    for p, a, m, s in CHAIN_SUITE:
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            prev = None
            for i in range(a * n + 1):
                words = enumerate_codewords(ConstaCode(amb, i))
                if len(words) != p ** (m * (a * n - i)):
                    bad.append(f"gamma={amb.gamma.to_int()} i={i}: {len(words)}")
                if prev is not None and not words < prev:
                    bad.append(f"gamma={amb.gamma.to_int()} i={i}: not nested")
                prev = words
    return CheckResult("cardinality-nesting", not bad, "; ".join(bad))


def check_duality() -> CheckResult:
    """brute_force_dual == enumerate(dual_code) and the cardinality product."""
    bad = []
    for p, a, m, s in DUALITY_SUITE:
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            for i in range(a * n + 1):
                code = ConstaCode(amb, i)
                dual = dual_code(code)
                if brute_force_dual(code) != enumerate_codewords(dual):
                    bad.append(f"gamma={amb.gamma.to_int()} i={i}: sets differ")
                if code.cardinality * dual.cardinality != p ** (a * m * n):
                    bad.append(f"gamma={amb.gamma.to_int()} i={i}: cardinality")
                if code.alpha * dual.alpha != amb.ctx.one:
                    bad.append(f"gamma={amb.gamma.to_int()} i={i}: alpha")
    return CheckResult("duality", not bad, "; ".join(bad))


def check_self_duality() -> CheckResult:
    """Threshold decisions vs the C subset-of C-dual oracle, and the
    self-dual inventory for the pinned rings."""
    bad = []
    for p, a, m, s in SELF_DUALITY_SUITE:
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            for i in range(a * n + 1):
                code = ConstaCode(amb, i)
                words = enumerate_codewords(code)
                dual_words = brute_force_dual(code)
                if is_self_orthogonal(code) != (words <= dual_words):
                    bad.append(
                        f"self-orth gamma={amb.gamma.to_int()} i={i}"
                    )
            found = {c.i for c in self_dual_codes(amb)}
            oracle = {
                i
                for i in range(a * n + 1)
                if enumerate_codewords(ConstaCode(amb, i))
                == brute_force_dual(ConstaCode(amb, i))
            }
            if found != oracle:
                bad.append(
                    f"self-dual gamma={amb.gamma.to_int()}: {found} != {oracle}"
                )

    # Pinned inventory: Z4/s=2/gamma=3 has exactly <(x-1)^4> = <2>.
    z4 = ring(2, 2, 1)
    amb = AmbientParams(z4, 2, z4.from_int(3))
    sd = self_dual_codes(amb)
    if [c.i for c in sd] != [4]:
        bad.append("Z4 s=2 gamma=3 self-dual list")
    else:
        words = enumerate_codewords(sd[0])
        doubles = frozenset(
            w
            for w in (f.to_word() for f in amb.iter_elements())
            if all(el.to_int() % 2 == 0 for el in w)
        )
        if words != doubles:
            bad.append("Z4 s=2 self-dual code is not <2>")

    # Z27/s=1: a*p = 9 odd, so no self-dual code exists for any Type1 gamma.
    z27 = ring(3, 3, 1)
    amb27 = AmbientParams(z27, 1, z27.from_int(4))
    if self_dual_codes(amb27):
        bad.append("Z27 s=1 gamma=4 should have no self-dual code")
    else:
        for i in range(10):
            c = ConstaCode(amb27, i)
            if enumerate_codewords(c) == brute_force_dual(c):
                bad.append(f"Z27 oracle found self-dual at i={i}")
    return CheckResult("self-duality", not bad, "; ".join(bad))


def check_hamming_distances() -> CheckResult:
    """Band formula vs exhaustive minimum weight, all suites and exponents."""
    bad = []
    for p, a, m, s in CHAIN_SUITE:
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            for i in range(a * n + 1):
                formula = hamming_distance_formula(a, p, s, i)
                oracle = brute_force_min_weight(ConstaCode(amb, i), HAMMING)
                if formula != oracle:
                    bad.append(
                        f"GR({p}^{a},{m}) s={s} gamma={amb.gamma.to_int()}"
                        f" i={i}: {formula} != {oracle}"
                    )
    profile = [hamming_distance_formula(2, 2, 2, i) for i in range(9)]
    if profile != [1, 1, 1, 1, 1, 2, 2, 4, 0]:
        bad.append(f"Z4 s=2 profile {profile}")
    return CheckResult("hamming-distances", not bad, "; ".join(bad))


def check_homogeneous_distances() -> CheckResult:
    bad = []
    for p, a, m, s in CHAIN_SUITE:
        n = p**s
        for amb in _type1_ambients(p, a, m, s):
            for i in range(a * n + 1):
                formula = homogeneous_distance_formula(a, p, m, s, i)
                oracle = brute_force_min_weight(ConstaCode(amb, i), HOMOGENEOUS)
                if formula != oracle:
                    bad.append(
                        f"GR({p}^{a},{m}) s={s} gamma={amb.gamma.to_int()}"
                        f" i={i}: {formula} != {oracle}"
                    )
    if [homogeneous_distance_formula(2, 2, 1, 2, i) for i in range(9)] != [
        1, 2, 2, 2, 2, 4, 4, 8, 0,
    ]:
        bad.append("Z4 s=2 profile")
    if [homogeneous_distance_formula(3, 2, 1, 1, i) for i in range(7)] != [
        2, 2, 2, 4, 4, 8, 0,
    ]:
        bad.append("Z8 s=1 profile")
    return CheckResult("homogeneous-distances", not bad, "; ".join(bad))


def check_multi_constacyclicity() -> CheckResult:
    """Type1 constants sharing zeta0 carry the same codes (Z8, s=1)."""
    bad = []
    z8 = ring(2, 3, 1)
    type1 = [g for g in z8.iter_units() if classify_unit(g).variant == TYPE1]
    pairs = [
        (g1, g2)
        for g1 in type1
        for g2 in type1
        if classify_unit(g1).zeta0 == classify_unit(g2).zeta0
    ]
    for g1, g2 in pairs:
        amb1 = AmbientParams(z8, 1, g1)
        amb2 = AmbientParams(z8, 1, g2)
        for i in range(7):
            c1 = ConstaCode(amb1, i)
            if not is_gamma2_constacyclic(c1, g2):
                bad.append(f"i={i} {g1.to_int()}->{g2.to_int()} not closed")
            if enumerate_codewords(c1) != enumerate_codewords(
                ConstaCode(amb2, i)
            ):
                bad.append(f"i={i} {g1.to_int()} vs {g2.to_int()} sets differ")
    detail = f"{len(pairs)} ordered pairs" if not bad else "; ".join(bad)
    return CheckResult("multi-constacyclicity", not bad, detail)


def check_unit_algebra() -> CheckResult:
    """Structured inverses vs Newton inversion, and the product type rules,
    exhaustively over Z4, Z8, Z16, GR(4,2)."""
    bad = []
    for p, a, m in UNIT_ALGEBRA_RINGS:
        ctx = ring(p, a, m)
        units = list(ctx.iter_units())
        for g in units:
            cls = classify_unit(g)
            inv = invert(g)
            structured = (
                type1_inverse(g) if cls.variant == TYPE1 else type0_inverse(g)
            )
            if structured != inv or g * structured != ctx.one:
                bad.append(f"GR({p}^{a},{m}) inverse of {g.to_int()}")
            if generic_inverse(g) != inv:
                bad.append(f"GR({p}^{a},{m}) generic inverse of {g.to_int()}")
            if classify_unit(structured).variant != cls.variant:
                bad.append(f"GR({p}^{a},{m}) inverse type of {g.to_int()}")
        for x in units:
            cx = classify_unit(x)
            for y in units:
                rule = type_product_class(cx, classify_unit(y))
                if rule is None:
                    continue
                if classify_unit(x * y).variant != rule:
                    bad.append(
                        f"GR({p}^{a},{m}) {x.to_int()}*{y.to_int()} != {rule}"
                    )
    return CheckResult("unit-algebra", not bad, "; ".join(bad))


def check_freshman_congruence() -> CheckResult:
    """(x+b)^(p^n) congruences for every unit constant, unit b, n <= s."""
    bad = []
    for p, a, m, s in CHAIN_SUITE:
        ctx = ring(p, a, m)
        for g in ctx.iter_units():
            amb = AmbientParams(ctx, s, g)
            for b in ctx.iter_units():
                for n in range(1, s + 1):
                    if not freshman_congruence_check(amb, b, n):
                        bad.append(
                            f"GR({p}^{a},{m}) s={s} gamma={g.to_int()}"
                            f" b={b.to_int()} n={n}"
                        )
    return CheckResult("freshman-congruence", not bad, "; ".join(bad))


ALL_CHECKS = (
    check_chain_classification,
    check_nilpotency,
    check_cardinality_nesting,
    check_duality,
    check_self_duality,
    check_hamming_distances,
    check_homogeneous_distances,
    check_multi_constacyclicity,
    check_unit_algebra,
    check_freshman_congruence,
)


def run_default_verification() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]


@dataclass
class SweepConfig:
    """A configured verification sweep: which rings, which constants,
    what budget, and how to report."""

    rings: list[tuple[int, int, int, int]]
    gammas: str | list[int] = "all-units"
    budget: int | None = None
    format: str = "json"
    output: str | None = None

    def __post_init__(self):
        for row in self.rings:
            if len(row) != 4:
                raise ValueError(f"ring row must be (p, a, m, s): {row!r}")
            p, a, m, s = row
            RingParams(p, a, m).validate()
            if s < 1:
                raise ValueError(f"s must be >= 1, got {s}")
        if isinstance(self.gammas, str):
            if self.gammas not in ("all-units", "all-type1"):
                raise ValueError(f"unknown gamma selection {self.gammas!r}")
        if self.budget is not None and self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")

    @classmethod
    def from_json_dict(cls, data: dict) -> "SweepConfig":
        known = {"rings", "gammas", "budget", "format", "output"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        if "rings" not in data:
            raise ValueError("config must list rings")
        return cls(
            rings=[tuple(row) for row in data["rings"]],
            gammas=data.get("gammas", "all-units"),
            budget=data.get("budget"),
            format=data.get("format", "json"),
            output=data.get("output"),
        )


def _selected_gammas(ctx, selection) -> list[GrElement]:
    if selection == "all-units":
        return list(ctx.iter_units())
    if selection == "all-type1":
        return [
            g for g in ctx.iter_units() if classify_unit(g).variant == TYPE1
        ]
    out = []
    for enc in selection:
        g = ctx.from_int(enc)
        if not g.is_unit:
            raise GalringError(f"gamma encoding {enc} is not a unit")
        out.append(g)
    return out


def run_sweep(config: SweepConfig) -> list[CheckResult]:
    """Chain survey plus formula-vs-oracle distance rows for each selected
    (ring, gamma).  Budget errors propagate to the caller."""
    results = []
    for p, a, m, s in config.rings:
        ctx = ring(p, a, m)
        n = p**s
        for g in _selected_gammas(ctx, config.gammas):
            amb = AmbientParams(ctx, s, g)
            label = f"p={p} a={a} m={m} s={s} gamma={g.to_int()}"
            kwargs = {}
            if config.budget is not None:
                kwargs["budget"] = config.budget
            rep = verify_chain_structure(amb, **kwargs)
            predicted = is_chain_ambient(g, s)
            results.append(
                CheckResult(
                    f"chain {label}",
                    rep.is_chain == predicted,
                    "chain" if predicted else "expected-non-chain",
                )
            )
            if classify_unit(g).variant != TYPE1:
                continue
            agree = True
            for i in range(a * n + 1):
                code = ConstaCode(amb, i)
                oracle_kwargs = {}
                if config.budget is not None:
                    oracle_kwargs["budget"] = config.budget
                if hamming_distance_formula(a, p, s, i) != brute_force_min_weight(
                    code, HAMMING, **oracle_kwargs
                ):
                    agree = False
                if a >= 2 and homogeneous_distance_formula(
                    a, p, m, s, i
                ) != brute_force_min_weight(code, HOMOGENEOUS, **oracle_kwargs):
                    agree = False
            results.append(CheckResult(f"distances {label}", agree))
    return results
