"""Acceptance checks runnable from the CLI (`coquat selftest`) and pytest.

Each criterion is one function returning a CheckResult; run_all prints one
PASS/FAIL line per criterion. Tolerances are fixed here, next to the checks
that use them. Every closed form is compared against an independent
brute-force oracle (repeated multiplication or the Taylor series), never
against itself.
"""

from __future__ import annotations

import math
import random
import sys
from dataclasses import dataclass
from importlib import resources

from .algebra import (
    CausalCharacter,
    SplitQuaternion,
    Vector3M,
    format_quaternion,
    lorentz_cross,
    lorentz_inner,
    mul,
)
from .bench import bench_pow
from .errors import ExprError
from .evaluator import evaluate_source, render_error, render_text
from .matrix import (
    Mat4,
    apply,
    coords,
    left_matrix,
    mat_max_abs_diff,
    mat_mul,
    right_matrix,
)
from .polar import PolarKind, decompose, reconstruct
from .powers import (
    exp_left_closed,
    exp_right_closed,
    left_pow_closed,
    mat_exp_series,
    mat_pow_naive,
    pow_closed,
    pow_naive,
    right_pow_closed,
)
from .sampling import (
    CAUSAL_CLASSES,
    random_quaternion,
    sample_by_class,
    sample_non_lightlike,
    sample_unit_spacelike_vector,
    sample_unit_timelike_vector,
)

GOLDEN_RESOURCE = "data/expressions.golden"

MAX_POWER = 20
DEMOIVRE_TOL = 1e-9
EULER_TOL = 1e-10
REPRESENTATION_TOL = 1e-13
HOMOMORPHISM_TOL = 1e-12
ROUND_TRIP_TOL = 1e-12
IDENTITY_TOL = 1e-12
BENCH_SPEEDUP = 50.0


@dataclass
class CheckResult:
    cid: int
    title: str
    ok: bool
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"[{tag}] {self.cid:02d} {self.title}: {self.detail}"


def _quat_diff(a: SplitQuaternion, b: SplitQuaternion) -> float:
    return max(abs(x - y) for x, y in zip(a.components(), b.components()))


def _quat_max_abs(q: SplitQuaternion) -> float:
    return max(abs(c) for c in q.components())


# -- criterion 1 -------------------------------------------------------------

_BASIS = {
    "1": SplitQuaternion(1.0),
    "i": SplitQuaternion(0.0, 1.0),
    "j": SplitQuaternion(0.0, 0.0, 1.0),
    "k": SplitQuaternion(0.0, 0.0, 0.0, 1.0),
}

# Row label is the left factor: i*j = k but j*i = -k, etc.
_PRODUCT_TABLE = {
    ("1", "1"): (1.0, 0.0, 0.0, 0.0), ("1", "i"): (0.0, 1.0, 0.0, 0.0),
    ("1", "j"): (0.0, 0.0, 1.0, 0.0), ("1", "k"): (0.0, 0.0, 0.0, 1.0),
    ("i", "1"): (0.0, 1.0, 0.0, 0.0), ("i", "i"): (-1.0, 0.0, 0.0, 0.0),
    ("i", "j"): (0.0, 0.0, 0.0, 1.0), ("i", "k"): (0.0, 0.0, -1.0, 0.0),
    ("j", "1"): (0.0, 0.0, 1.0, 0.0), ("j", "i"): (0.0, 0.0, 0.0, -1.0),
    ("j", "j"): (1.0, 0.0, 0.0, 0.0), ("j", "k"): (0.0, -1.0, 0.0, 0.0),
    ("k", "1"): (0.0, 0.0, 0.0, 1.0), ("k", "i"): (0.0, 0.0, 1.0, 0.0),
    ("k", "j"): (0.0, 1.0, 0.0, 0.0), ("k", "k"): (1.0, 0.0, 0.0, 0.0),
}


def check_product_table() -> CheckResult:
    bad = []
    for (a, b), expected in _PRODUCT_TABLE.items():
        got = mul(_BASIS[a], _BASIS[b]).components()
        if got != expected:
            bad.append(f"{a}*{b} -> {got}")
    ok = not bad
    detail = "all 16 basis products exact" if ok else "; ".join(bad)
    return CheckResult(1, "product table", ok, detail)


# -- criterion 2 -------------------------------------------------------------


def check_representation_laws(pairs: int = 1000, seed: int = 1002) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(pairs):
        q = random_quaternion(rng)
        p = random_quaternion(rng)
        left = apply(left_matrix(q), coords(p))
        right = apply(right_matrix(q), coords(p))
        qp = coords(mul(q, p))
        pq = coords(mul(p, q))
        worst = max(worst, *(abs(x - y) for x, y in zip(left, qp)),
                    *(abs(x - y) for x, y in zip(right, pq)))
    ok = worst <= REPRESENTATION_TOL
    return CheckResult(2, "representation laws", ok,
                       f"max |deviation| {worst:.3e} (tol {REPRESENTATION_TOL:.0e}, {pairs} pairs)")


# -- criterion 3 -------------------------------------------------------------


def check_propositions(pairs: int = 1000, seed: int = 1003) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(pairs):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        prod = mul(p, q)
        lhs_l = left_matrix(prod)
        rhs_l = mat_mul(left_matrix(p), left_matrix(q))
        lhs_r = right_matrix(prod)
        rhs_r = mat_mul(right_matrix(q), right_matrix(p))
        for lhs, rhs in ((lhs_l, rhs_l), (lhs_r, rhs_r)):
            scale = max(1.0, rhs.max_abs())
            worst = max(worst, mat_max_abs_diff(lhs, rhs) / scale)
    ok = worst <= HOMOMORPHISM_TOL
    return CheckResult(3, "product homomorphism", ok,
                       f"max relative deviation {worst:.3e} (tol {HOMOMORPHISM_TOL:.0e})")


# -- criteria 4 and 5 --------------------------------------------------------


def _power_inputs(per_class: int, seed: int):
    rng = random.Random(seed)
    for which in CAUSAL_CLASSES:
        for _ in range(per_class):
            yield which, sample_by_class(rng, which)


def check_demoivre_quaternion(per_class: int = 100, seed: int = 1004) -> CheckResult:
    worst = 0.0
    for _, q in _power_inputs(per_class, seed):
        n_q = q.norm()
        for n in range(MAX_POWER + 1):
            naive = pow_naive(q, n)
            closed = pow_closed(q, n)
            scale = max(n_q ** n, _quat_max_abs(naive))
            diff = _quat_diff(closed, naive)
            rel = diff / scale if scale > 0.0 else (0.0 if diff == 0.0 else float("inf"))
            worst = max(worst, rel)
    ok = worst <= DEMOIVRE_TOL
    return CheckResult(4, "closed-form powers (quaternion)", ok,
                       f"max relative deviation {worst:.3e} (tol {DEMOIVRE_TOL:.0e}, "
                       f"{per_class} per class, n 0..{MAX_POWER})")


def check_demoivre_matrix(per_class: int = 100, seed: int = 1004) -> CheckResult:
    worst = 0.0
    parity_ok = True
    for which, q in _power_inputs(per_class, seed):
        n_q = q.norm()
        l_mat = left_matrix(q)
        r_mat = right_matrix(q)
        for n in range(MAX_POWER + 1):
            qn = pow_closed(q, n)
            for closed, naive_base, rebuilt in (
                (left_pow_closed(q, n), l_mat, left_matrix(qn)),
                (right_pow_closed(q, n), r_mat, right_matrix(qn)),
            ):
                naive = mat_pow_naive(naive_base, n)
                scale = max(n_q ** n, naive.max_abs())
                for other in (naive, rebuilt):
                    diff = mat_max_abs_diff(closed, other)
                    rel = diff / scale if scale > 0.0 else (0.0 if diff == 0.0 else float("inf"))
                    worst = max(worst, rel)
            if which == "spacelike" and n >= 1:
                # Parity of the branch taken: odd powers stay spacelike,
                # even powers turn timelike (sign of the quadratic form).
                sign = qn.iq()
                if n % 2 == 1 and not sign < 0.0:
                    parity_ok = False
                if n % 2 == 0 and not sign > 0.0:
                    parity_ok = False
    ok = worst <= DEMOIVRE_TOL and parity_ok
    detail = (f"max relative deviation {worst:.3e} (tol {DEMOIVRE_TOL:.0e}); "
              f"spacelike parity {'consistent' if parity_ok else 'VIOLATED'}")
    return CheckResult(5, "closed-form powers (matrix)", ok, detail)


# -- criterion 6 -------------------------------------------------------------


def check_euler_exponentials(instances: int = 10, seed: int = 1006) -> CheckResult:
    rng = random.Random(seed)
    axes = [sample_unit_timelike_vector(rng) for _ in range(instances)]
    axes += [sample_unit_spacelike_vector(rng) for _ in range(instances)]
    axes.append(Vector3M(1.0, 1.0, 0.0))
    thetas = [i / 10 for i in range(-30, 31)]
    worst = 0.0
    for eps in axes:
        l_axis = left_matrix(eps.as_quaternion())
        r_axis = right_matrix(eps.as_quaternion())
        for theta in thetas:
            for closed, axis_rep in (
                (exp_left_closed(eps, theta), l_axis),
                (exp_right_closed(eps, theta), r_axis),
            ):
                series = mat_exp_series(axis_rep * theta, 1e-14, 200)
                worst = max(worst, mat_max_abs_diff(closed, series))
    pi_axis = Vector3M(1.0, 0.0, 0.0)
    minus_identity = Mat4.identity() * -1.0
    pi_dev = max(
        mat_max_abs_diff(exp_left_closed(pi_axis, math.pi), minus_identity),
        mat_max_abs_diff(exp_right_closed(pi_axis, math.pi), minus_identity),
    )
    ok = worst <= EULER_TOL and pi_dev <= 1e-12
    return CheckResult(6, "closed-form exponentials", ok,
                       f"max |closed - series| {worst:.3e} (tol {EULER_TOL:.0e}); "
                       f"half-turn deviation {pi_dev:.3e} (tol 1e-12)")


# -- criterion 7 -------------------------------------------------------------

_KIND_FOR = {
    (CausalCharacter.TIMELIKE, CausalCharacter.SPACELIKE): PolarKind.TIMELIKE_SPACELIKE_VEC,
    (CausalCharacter.TIMELIKE, CausalCharacter.TIMELIKE): PolarKind.TIMELIKE_TIMELIKE_VEC,
}


def check_polar_round_trip(count: int = 1000, seed: int = 1007) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    kinds_ok = True
    for _ in range(count):
        q = sample_non_lightlike(rng)
        form = decompose(q)
        back = reconstruct(form)
        worst = max(worst, _quat_diff(back, q) / _quat_max_abs(q))
        char = q.classify()
        if char is CausalCharacter.SPACELIKE:
            expected = PolarKind.SPACELIKE
        else:
            expected = _KIND_FOR[(char, q.vector_part.classify())]
        if form.kind is not expected:
            kinds_ok = False
    ok = worst <= ROUND_TRIP_TOL and kinds_ok
    return CheckResult(7, "polar round trip", ok,
                       f"max relative deviation {worst:.3e} (tol {ROUND_TRIP_TOL:.0e}); "
                       f"kinds {'agree' if kinds_ok else 'DISAGREE'}")


# -- criterion 8 -------------------------------------------------------------


def check_algebraic_identities(pairs: int = 1000, seed: int = 1008) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(pairs):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        prod = mul(p, q)
        anti = mul(q.conjugate(), p.conjugate())
        scale = max(1.0, _quat_max_abs(prod))
        worst = max(worst, _quat_diff(prod.conjugate(), anti) / scale)
        iq_prod = prod.iq()
        iq_split = p.iq() * q.iq()
        worst = max(worst, abs(iq_prod - iq_split) / max(1.0, abs(iq_split)))
        u = p.vector_part
        v = q.vector_part
        w = lorentz_cross(u, v)
        worst = max(worst, abs(lorentz_inner(w, u)), abs(lorentz_inner(w, v)))
    null = SplitQuaternion(0.0, 1.0, 1.0, 0.0)
    nilpotent_exact = mul(null, null).components() == (0.0, 0.0, 0.0, 0.0)
    ok = worst <= IDENTITY_TOL and nilpotent_exact
    return CheckResult(8, "algebraic identities", ok,
                       f"max deviation {worst:.3e} (tol {IDENTITY_TOL:.0e}); "
                       f"(i+j)^2 {'== 0 exactly' if nilpotent_exact else 'NOT exactly 0'}")


# -- criterion 9 -------------------------------------------------------------


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n")


def _unescape(text: str) -> str:
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "n":
                out.append("\n")
                i += 2
                continue
            if nxt == "\\":
                out.append("\\")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def load_golden_cases() -> list[tuple[str, str, str]]:
    """(expression, status, payload) triples from the packaged golden file."""
    text = resources.files("coquat").joinpath(GOLDEN_RESOURCE).read_text(encoding="utf-8")
    cases = []
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        expr, status, payload = line.split(" ;; ", 2)
        cases.append((_unescape(expr), status, _unescape(payload)))
    return cases


def run_expression(src: str) -> tuple[str, str]:
    """Status/payload pair exactly as the CLI would report it."""
    try:
        value = evaluate_source(src)
    except ExprError as err:
        return "ERROR", render_error(src, err)
    return "OK", render_text(value)


def golden_line(src: str) -> str:
    status, payload = run_expression(src)
    return f"{_escape(src)} ;; {status} ;; {_escape(payload)}"


def check_expression_golden(count: int = 1000, seed: int = 1009) -> CheckResult:
    cases = load_golden_cases()
    failures = []
    for expr, status, payload in cases:
        got_status, got_payload = run_expression(expr)
        if (got_status, got_payload) != (status, payload):
            failures.append(expr)
    rng = random.Random(seed)
    round_trip_bad = 0
    for _ in range(count):
        comps = [0.0 if rng.random() < 0.25 else rng.uniform(-2.0, 2.0) for _ in range(4)]
        if rng.random() < 0.25:
            comps[rng.randrange(4)] = float(rng.randint(-3, 3))
        q = SplitQuaternion(*comps)
        value = evaluate_source(format_quaternion(q))
        if not isinstance(value, SplitQuaternion) or value.components() != q.components():
            round_trip_bad += 1
    ok = not failures and round_trip_bad == 0
    detail = (f"{len(cases)} golden cases, {len(failures)} mismatched; "
              f"{count} print/parse round trips, {round_trip_bad} inexact")
    if failures:
        detail += f" (first: {failures[0]!r})"
    return CheckResult(9, "expression golden suite", ok, detail)


# -- criterion 10 ------------------------------------------------------------


def check_bench_speedup(seed: int = 1010, reps: int = 3) -> CheckResult:
    csv_text = bench_pow([10, MAX_POWER, 1_000_000], reps=reps, seed=seed)
    medians: dict[tuple[int, str], int] = {}
    flagged_small_n = []
    big_cell = ""
    for line in csv_text.strip().splitlines()[1:]:
        n_str, method, median_ns, cell = line.split(",", 3)
        n = int(n_str)
        medians[(n, method)] = int(median_ns)
        if n <= MAX_POWER and (cell.startswith("FAIL") or cell == "overflow"):
            flagged_small_n.append(line)
        if n == 1_000_000 and method == "closed":
            big_cell = cell
    closed = max(1, medians[(1_000_000, "closed")])
    naive = medians[(1_000_000, "naive")]
    ratio = naive / closed
    finite_or_flagged = bool(big_cell)  # numeric, FAIL(...) or overflow all count
    ok = ratio >= BENCH_SPEEDUP and not flagged_small_n and finite_or_flagged
    return CheckResult(10, "closed-form speedup", ok,
                       f"median naive/closed at n=10^6: {ratio:.0f}x (need >= {BENCH_SPEEDUP:.0f}x); "
                       f"cross-check at n<=20 {'clean' if not flagged_small_n else 'FLAGGED'}")


ALL_CHECKS = (
    check_product_table,
    check_representation_laws,
    check_propositions,
    check_demoivre_quaternion,
    check_demoivre_matrix,
    check_euler_exponentials,
    check_polar_round_trip,
    check_algebraic_identities,
    check_expression_golden,
    check_bench_speedup,
)


def run_all(stream=None) -> bool:
    stream = stream if stream is not None else sys.stdout
    all_ok = True
    for check in ALL_CHECKS:
        result = check()
        print(result.line(), file=stream)
        all_ok = all_ok and result.ok
    return all_ok
