"""Scenario table, batch runner and report emission.

Each scenario binds a statement about the generating functions to an exact
check.  ``provenance`` says how much weight a failure carries: a failing
``theorem`` row is an artifact bug, anything else is data.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Callable

from . import catalog as cat
from . import oracles
from .membership import (
    T1,
    T2,
    U1,
    U2,
    ClassSpec,
    Witness,
    centered,
    check_membership,
    check_slice,
)
from .series import BiSeries, ZPoly

__all__ = [
    "Scenario",
    "ScanResult",
    "SCENARIOS",
    "PROVENANCES",
    "CATEGORIES",
    "UnknownScenario",
    "get_scenario",
    "run_scenario",
    "run_suite",
    "select",
    "emit_report",
    "exit_status",
]

PROVENANCES = ("theorem", "conjecture", "paper-numerics", "external-cited")
CATEGORIES = ("theorem", "conjecture", "witness", "oracle")
PASS, FAIL, WITNESS_OK = "pass", "fail", "witness-found-as-expected"


class UnknownScenario(KeyError):
    pass


@dataclass(frozen=True)
class Scenario:
    id: str
    description: str
    reference: str
    expectation: str  # member | not-member-with-witness | oracle-match | identity
    provenance: str
    cls: ClassSpec | None
    bounds: dict[str, Any]
    runner: Callable[[dict[str, Any]], "Outcome"] = field(repr=False, compare=False)
    scan_key: str | None = None

    @property
    def category(self) -> str:
        if self.expectation == "not-member-with-witness":
            return "witness"
        if self.expectation == "oracle-match":
            return "oracle"
        if self.provenance == "theorem":
            return "theorem"
        return "conjecture"


@dataclass(frozen=True)
class Outcome:
    ok: bool
    witness: Witness | None = None
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ScanResult:
    scenario: str
    provenance: str
    cls: ClassSpec | None
    bounds: dict[str, Any]
    status: str
    witness: Witness | None = None
    detail: dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status in (PASS, WITNESS_OK)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scenario": self.scenario,
            "provenance": self.provenance,
            "class": None if self.cls is None else {"nu": self.cls.nu, "strict": self.cls.strict},
            "bounds": {k: _jsonable(v) for k, v in self.bounds.items()},
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "detail": _jsonable(self.detail),
        }


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    if isinstance(v, ClassSpec):
        return v.label
    if isinstance(v, Witness):
        return v.to_dict()
    return v


# ---------------------------------------------------------------------- check helpers


def _members(checks: list[tuple[str, BiSeries | ZPoly, ClassSpec]]) -> Outcome:
    """All ``(label, series, class)`` must be members; stop at the first failure."""
    done = []
    for label, s, spec in checks:
        rep = check_membership(s, spec)
        if not rep.member:
            return Outcome(False, rep.witness, {"failed": label, "class": spec.label, "checked": done})
        done.append(f"{label} in {spec.label}")
    return Outcome(True, None, {"checked": len(done)})


def _ints(v: Any) -> tuple[int, ...]:
    return tuple(v) if isinstance(v, (tuple, list)) else (v,)


# ---------------------------------------------------------------------- runners


def _t_ck(b):
    for k in range(1, b["k"] + 1):
        for m in range(b["m"] + 1):
            for n in range(b["n"] + 1):
                p = cat.gen_gauss("c", k, m, n)
                rep = check_slice(centered(p), U2)
                if not rep.member:
                    w = replace(rep.witness, outer=None)
                    return Outcome(False, w, {"k": k, "m": m, "n": n})
    return Outcome(True)


def _c_gkn(b):
    checked = []
    for k in _ints(b["k"]):
        for n in range(b["n"] + 1):
            rep = check_membership(cat.g_series(k, n, b["zmax"]), U2)
            if not rep.member:
                return Outcome(False, rep.witness, {"k": k, "n": n, "checked": checked})
            checked.append([k, n])
    return Outcome(True, None, {"checked": len(checked)})


def _p_r3(b):
    for m in range(1, b["m"] + 1):
        for n in range(1, b["n"] + 1):
            if (m + n) % 2 == 0:
                continue
            p = cat.gen_gauss("r", 3, m, n).shift(-(3 * m * n) // 2)
            rep = check_slice(p, U2)
            if not rep.member:
                return Outcome(False, rep.witness, {"m": m, "n": n})
    return Outcome(True)


def _pp(spec):
    def run(b):
        return _members([("b_0", cat.plane_partition_series(0, b["omax"]), spec)])

    return run


def _color_samples(count: int, seed: int) -> list[tuple[int, Any, tuple[int, ...]]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = rng.choice((1, 2))
        bb = rng.choice((0, 1, 2, 3, cat.INF))
        S = tuple(sorted(rng.randint(1, 6) for _ in range(rng.randint(1, 4))))
        out.append((a, bb, S))
    return out


def _t_color(b):
    checks = []
    for a, bb, S in _color_samples(b["samples"], b["seed"]):
        spec = U1 if a == 1 else U2
        checks.append((f"P(a={a},b={bb},S={S})", cat.color_series("P", a, bb, S, b["omax"]), spec))
        checks.append((f"R(a={a},b={bb},S={S})", cat.color_series("R", a, bb, S, b["omax"]), ClassSpec(a, True)))
    return _members(checks)


def _t_d(b):
    rng = random.Random(b["seed"])
    sets = [tuple(range(1, b["omax"] + 1))]
    for _ in range(b["samples"]):
        sets.append(tuple(sorted(rng.randint(1, 8) for _ in range(rng.randint(1, 5)))))
    return _members([(f"D(S={S})", cat.color_series("D", None, None, S, b["omax"]), T2) for S in sets])


def _t_krank(b):
    return _members([(f"R_{k}", cat.k_rank_series(k, b["omax"]), U2) for k in _ints(b["k"])])


def _comp(kinds_specs):
    def run(b):
        return _members([(k, cat.composition_series(k, b["omax"]), s) for k, s in kinds_specs])

    return run


def _witness(build: Callable[[int], BiSeries], spec: ClassSpec, pinned: Witness):
    def run(b):
        rep = check_membership(build(b["omax"]), spec)
        if rep.member:
            return Outcome(False, None, {"expected": pinned.to_dict(), "found": None})
        ok = rep.witness == pinned
        return Outcome(ok, rep.witness, {"expected": pinned.to_dict()})

    return run


def _t_kll(b):
    checks = []
    for k in cat.KLL_KINDS:
        s = cat.kll_series(k, b["omax"])
        checks += [(k, s, U1), (k, s, T2)]
    return _members(checks)


def _hilb(strict: bool):
    def run(b):
        mismatches = []
        tally = {"both": 0, "neither": 0}
        r = range(b["bmax"] + 1)
        for b0, b1, b2 in itertools.product(r, r, r):
            s = cat.hilbert_series(b0, b1, b2, b["omax"])
            p = cat.poincare_unsigned(b0, b1, b2)
            for nu in (1, 2):
                spec = ClassSpec(nu, strict)
                lhs = check_membership(s, spec).member
                rhs = check_slice(p, spec).member
                if lhs != rhs:
                    mismatches.append({"b": [b0, b1, b2], "nu": nu, "series": lhs, "poly": rhs})
                tally["both" if lhs else "neither"] += lhs == rhs
        return Outcome(not mismatches, None, {"agree": tally, "mismatches": mismatches[:10]})

    return run


def _t_ob(b):
    return _members([
        ("A", cat.oberdieck_series("A", None, b["omax"]), T1),
        ("B", cat.oberdieck_series("B", None, b["omax"]), U1),
    ])


def _t_ob_n(b):
    checks = []
    omax = b["h"] - 1  # N_{d,h,k} sits at q^{h-1}
    for d in _ints(b["d"]):
        checks.append((f"N(d={d})", cat.oberdieck_series("N", d, omax), T1))
        checks.append((f"N1(d={d})", cat.oberdieck_series("N1", d, omax), U1))
        checks.append((f"N3(d={d})", cat.oberdieck_series("N3", d, omax), U1))
    return _members(checks)


def _slice_mismatch(label: str, n: int, got: ZPoly, want: ZPoly) -> Outcome:
    diff = got - want
    i = min(diff.terms())
    return Outcome(False, Witness(n, i, (got[i], want[i]), "oracle-mismatch"), {"failed": label})


def _o_all(b):
    counts = {}
    pp_max = b["plane"]
    for delta in (0, 1, -1):
        s = cat.plane_partition_series(delta, pp_max)
        for n in range(pp_max + 1):
            h = oracles.plane_partition_histogram(delta, n).to_zpoly()
            if h != s.slice(n):
                return _slice_mismatch(f"plane(delta={delta})", n, s.slice(n), h)
    counts["plane"] = 3 * (pp_max + 1)
    cmax = b["comp"]
    for kind in cat.COMPOSITION_KINDS:
        s = cat.composition_series(kind, cmax)
        for n in range(cmax + 1):
            h = oracles.enum_compositions(kind, n).to_zpoly()
            if h != s.slice(n):
                return _slice_mismatch(kind, n, s.slice(n), h)
    counts["compositions"] = len(cat.COMPOSITION_KINDS) * (cmax + 1)
    kmax = b["color"]
    cases = [("P", a, bb, S) for a, bb, S in _color_samples(6, b["seed"])]
    cases += [("R", a, bb, S) for a, bb, S in _color_samples(6, b["seed"] + 1)]
    cases += [("D", None, None, (1, 2, 3, 5)), ("D", None, None, (1, 1, 2))]
    for kind, a, bb, S in cases:
        s = cat.color_series(kind, a, bb, S, kmax)
        for n in range(kmax + 1):
            h = oracles.enum_color_partitions(kind, a, bb, S, n).to_zpoly()
            if h != s.slice(n):
                return _slice_mismatch(f"{kind}(a={a},b={bb},S={S})", n, s.slice(n), h)
    counts["color"] = len(cases) * (kmax + 1)
    pmax = b["partitions"]
    p = [oracles.count_partitions(n) for n in range(pmax + 1)]
    for label, s in (("crank", cat.crank_series(pmax)), ("rank", cat.k_rank_series(2, pmax)),
                     ("3-rank", cat.k_rank_series(3, pmax))):
        sums = s.column_sums()
        for n in range(pmax + 1):
            if sums[n] != p[n]:
                return Outcome(False, Witness(n, 0, (sums[n], p[n]), "oracle-mismatch"), {"failed": label})
    counts["partition-sums"] = 3 * (pmax + 1)
    return Outcome(True, None, {"compared_slices": counts})


def _i_fgauss(b):
    for m in range(b["m"] + 1):
        for n in range(b["n"] + 1):
            g = cat.gauss_binomial(m + n, m)
            for j in range(m * n + 1):
                c = oracles.enum_f_partitions(m, n, j)
                if c != g[j]:
                    return Outcome(False, Witness(j, m, (c, g[j]), "oracle-mismatch"), {"m": m, "n": n})
    return Outcome(True)


def _i_ggpv(b):
    for k in range(1, b["k"] + 1):
        for m in range(b["m"] + 1):
            for n in range(b["n"] + 1):
                if cat.gen_gauss_q2("r", k, m, n) != cat.gen_gauss_r_direct(k, m, n).substitute_power(2):
                    return Outcome(False, None, {"k": k, "m": m, "n": n})
    return Outcome(True)


def _i_obnorm(b):
    omax = b["omax"]
    if cat.a_from_theta(omax) != cat.oberdieck_series("A", None, omax):
        return Outcome(False, None, {"failed": "A"})
    for d in _ints(b["d"]):
        if cat.n_from_theta(d, omax) != cat.oberdieck_series("N", d, omax):
            return Outcome(False, None, {"failed": f"N(d={d})"})
    return Outcome(True)


def _i_ccc(b):
    r = range(b["bmax"] + 1)
    n_max = b["n"]
    for b0, b1, b2 in itertools.product(r, r, r):
        for nu in (1, 2):
            f = cat.f_nu(nu, b0, b1, b2, n_max)
            for n in range(n_max + 1):
                for i in range(-2 * n - 1, 2 * n + 2):
                    want = cat.c_coefficient(nu, b0, b1, b2, i, n)
                    if f.coeff(i, n) != want:
                        return Outcome(False, Witness(n, i, (f.coeff(i, n), want), "formula-mismatch"),
                                       {"b": [b0, b1, b2], "nu": nu})
    return Outcome(True)


# ---------------------------------------------------------------------- the table


def _sc(id, description, reference, expectation, provenance, cls, bounds, runner, scan_key=None):
    return Scenario(id, description, reference, expectation, provenance, cls, dict(bounds), runner, scan_key)


_CRANK_WITNESS = Witness(1, 0, (-1, 0), "negative-coefficient")
_X_WITNESS = Witness(5, 0, (2, 3), "non-monotone")

_TABLE = [
    _sc("T-CK", "c_k generalized Gauss polynomials are symmetric and unimodal",
        "Theorem: c_k-Gauss polynomials unimodal for all k, m, n", "member", "theorem", U2,
        {"k": 4, "m": 8, "n": 8}, _t_ck),
    _sc("C-GKN", "G_{k,n} lies in U^2_{q,z} for odd k",
        "Conjecture on G_{k,n}, numerically verified for k in {3,5,7,9,11}, n <= 10", "member",
        "conjecture", U2, {"k": (3, 5, 7, 9, 11), "n": 10, "zmax": 20}, _c_gkn, "n"),
    _sc("P-R3", "r_3 polynomials recentred by q^{-3mn/2} lie in U^2 when m + n is odd",
        "Proposition: parity unimodality of r_3-Gauss polynomials", "member", "theorem", U2,
        {"m": 8, "n": 8}, _p_r3),
    _sc("T-PP", "b_0(m, n) >= b_0(m + 2, n)", "Theorem on the refined plane partition function",
        "member", "theorem", U2, {"omax": 30}, _pp(U2)),
    _sc("C-PP", "(b_0(m, n))_m is symmetric and unimodal",
        "Conjecture on b_0, numerically verified for n <= 30", "member", "conjecture", U1,
        {"omax": 30}, _pp(U1), "omax"),
    _sc("T-COLOR", "three-colour series in U^a, four-colour series in T^a",
        "Theorem on refined colour partitions", "member", "theorem", U1,
        {"omax": 20, "samples": 12, "seed": 7}, _t_color),
    _sc("T-D", "prod (1 + z q^l)(1 + z^-1 q^l) over S lies in T^2",
        "Theorem on bicoloured distinct partitions", "member", "theorem", T2,
        {"omax": 25, "samples": 8, "seed": 11}, _t_d),
    _sc("T-KRANK", "k-rank series lie in U^2", "Theorem: N_k(m, n) >= N_k(m + 2, n)", "member",
        "theorem", U2, {"k": (2, 3, 4), "omax": 40}, _t_krank),
    _sc("W-CRANK", "the crank series is not in U^2", "Remark: crank generating function not in U",
        "not-member-with-witness", "theorem", U2, {"omax": 10}, _witness(cat.crank_series, U2, _CRANK_WITNESS)),
    _sc("T-COMP-U", "concave and convex composition series lie in U^2",
        "Theorem on concave/convex composition ranks", "member", "theorem", U2, {"omax": 50},
        _comp([("V", U2), ("X", U2)])),
    _sc("T-COMP-T", "strict concave and convex composition series lie in T^2",
        "Theorem on strict concave/convex composition ranks", "member", "theorem", T2, {"omax": 50},
        _comp([("VD", T2), ("XD", T2)])),
    _sc("N-COMP-T", "concave and convex composition series lie in T^2",
        "Numerical claim for n <= 50", "member", "paper-numerics", T2, {"omax": 50},
        _comp([("V", T2), ("X", T2)]), "omax"),
    _sc("C-V1", "concave composition series lie in U^1",
        "Conjecture: V(m, n) >= V(m + 1, n), verified for n <= 50", "member", "conjecture", U1,
        {"omax": 50}, _comp([("V", U1), ("VD", U1)]), "omax"),
    _sc("E-XD1", "strongly unimodal sequence ranks lie in U^1",
        "Cited external result u(m, n) >= u(m + 1, n)", "member", "external-cited", U1,
        {"omax": 40}, _comp([("XD", U1)]), "omax"),
    _sc("W-X1", "the convex composition series is not in U^1", "Remark: X(z, q) not in U^1",
        "not-member-with-witness", "theorem", U1, {"omax": 10},
        _witness(lambda o: cat.composition_series("X", o), U1, _X_WITNESS)),
    _sc("T-ODD", "odd concave/convex series in U^2, strict variants in T^2",
        "Theorems on odd concave/convex compositions", "member", "theorem", U2, {"omax": 50},
        _comp([("VO", U2), ("XO", U2), ("VOD", T2), ("XOD", T2)])),
    _sc("N-ODD-T", "odd concave and convex composition series lie in T^2",
        "Numerical claim for n <= 50", "member", "paper-numerics", T2, {"omax": 50},
        _comp([("VO", T2), ("XO", T2)]), "omax"),
    _sc("T-KLL", "U_ob, W(x, -q) and Z lie in U^1 and T^2",
        "Theorems on odd-balanced unimodal sequences and W, Z", "member", "theorem", U1,
        {"omax": 40}, _t_kll),
    _sc("T-HILB", "Betti series in U^nu iff the unsigned z^-2 p(X, z) is",
        "Theorem on Betti numbers of Hilbert schemes (unimodal)", "identity", "theorem", U1,
        {"bmax": 5, "omax": 12}, _hilb(False)),
    _sc("T-HILB-S", "Betti series in T^nu iff the unsigned z^-2 p(X, z) is",
        "Theorem on Betti numbers of Hilbert schemes (strict)", "identity", "theorem", T1,
        {"bmax": 5, "omax": 12}, _hilb(True)),
    _sc("T-OB", "A in T^1_{y,q} and B in U^1_{y,q}", "Proposition on the two Jacobi-form factors",
        "member", "theorem", T1, {"omax": 30}, _t_ob),
    _sc("T-OB-N", "N-series strictly unimodal per h; N^(1), N^(3) unimodal",
        "Theorem on genus-0 invariants of Hilb^d(K3)", "member", "theorem", T1,
        {"d": (2, 3), "h": 15}, _t_ob_n),
    _sc("O-ALL", "catalog series agree with brute-force enumeration",
        "Counting interpretations of the plane partition, composition and colour series",
        "oracle-match", "theorem", None,
        {"plane": 10, "comp": 18, "color": 15, "partitions": 30, "seed": 3}, _o_all),
    _sc("I-FGAUSS", "F-partition counts equal Gauss polynomial coefficients",
        "Frobenius-partition interpretation of the Gauss polynomials", "oracle-match", "theorem", None,
        {"m": 6, "n": 6}, _i_fgauss),
    _sc("I-GGPV", "r_k polynomial via G_{k,m+n} equals the direct constant term",
        "Reduction of r_k to G_{k,m+n}", "identity", "theorem", None, {"k": 4, "m": 4, "n": 4}, _i_ggpv),
    _sc("I-OBNORM", "integral closed forms of A and N equal the eta/theta products",
        "Normalization of the Jacobi-form series", "identity", "theorem", None,
        {"omax": 10, "d": (2,)}, _i_obnorm),
    _sc("I-CCC", "binomial-sum formula for c_{i,n}(nu) equals the f_nu expansion",
        "Closed formula for the coefficients of f_nu", "identity", "theorem", None,
        {"bmax": 3, "n": 6}, _i_ccc),
]

SCENARIOS: dict[str, Scenario] = {s.id: s for s in _TABLE}


def get_scenario(sid: str) -> Scenario:
    try:
        return SCENARIOS[sid]
    except KeyError:
        raise UnknownScenario(sid) from None


def _merge(sc: Scenario, overrides: dict[str, Any] | None) -> dict[str, Any]:
    bounds = dict(sc.bounds)
    for k, v in (overrides or {}).items():
        if k not in bounds:
            raise ValueError(f"scenario {sc.id} has no bound {k!r}; known: {sorted(bounds)}")
        if isinstance(bounds[k], tuple):
            v = _ints(v)
        bounds[k] = v
    return bounds


def run_scenario(sid: str, overrides: dict[str, Any] | None = None) -> ScanResult:
    """Run one scenario with optional bound overrides; deterministic for fixed bounds."""
    sc = get_scenario(sid)
    bounds = _merge(sc, overrides)
    t0 = time.perf_counter()
    out = sc.runner(bounds)
    elapsed = (time.perf_counter() - t0) * 1000
    if sc.expectation == "not-member-with-witness":
        status = WITNESS_OK if out.ok else FAIL
    else:
        status = PASS if out.ok else FAIL
    return ScanResult(sc.id, sc.provenance, sc.cls, bounds, status, out.witness, out.detail, elapsed)


def select(filter: str | None = None) -> list[str]:
    if filter is None:
        return sorted(SCENARIOS)
    if filter not in CATEGORIES:
        raise ValueError(f"filter must be one of {CATEGORIES}")
    return sorted(s.id for s in SCENARIOS.values() if s.category == filter)


def run_suite(filter: str | None = None, jobs: int = 1) -> list[ScanResult]:
    """Run every scenario in a category (all when ``filter`` is None), sorted by id."""
    ids = select(filter)
    if jobs <= 1 or len(ids) <= 1:
        results = [run_scenario(i) for i in ids]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_scenario, ids))
    return sorted(results, key=lambda r: r.scenario)


def exit_status(results: list[ScanResult]) -> int:
    """1 when a theorem-provenance scenario failed, else 0."""
    return int(any(r.provenance == "theorem" and not r.passed for r in results))


def emit_report(results: list[ScanResult], format: str = "text") -> str:
    if format == "json":
        return json.dumps([r.to_dict() for r in results], indent=2, ensure_ascii=False)
    if format != "text":
        raise ValueError("format must be 'text' or 'json'")
    head = f"{'scenario':<10} {'provenance':<15} {'class':<6} {'status':<26} {'ms':>10}  witness"
    lines = [head, "-" * len(head)]
    for r in results:
        cls = r.cls.label if r.cls else "-"
        w = "-"
        if r.witness is not None:
            w = f"outer={r.witness.outer} inner={r.witness.inner} pair={r.witness.pair} {r.witness.reason}"
        lines.append(f"{r.scenario:<10} {r.provenance:<15} {cls:<6} {r.status:<26} {r.elapsed_ms:>10.1f}  {w}")
    return "\n".join(lines)
