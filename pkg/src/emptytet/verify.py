"""Desk-scale verification suites: fast criteria vs brute-force oracles.

Each suite sweeps every case in a bounded range, tallies per-check
pass/fail counts and returns a VerificationReport whose counterexample
list must come back empty.  All suites are deterministic; the randomized
normalization suite is driven entirely by a seeded generator.
"""

import math
import random
import time
from dataclasses import dataclass, field

from .geometry import (
    Tetrahedron,
    bruteforce_verdicts,
    parallelepiped_interior_bruteforce,
    parallelepiped_interior_points,
    standard_tetrahedron,
    volume6,
)
from .intlin import E1, E2, IDENTITY, ZERO, AffineUnimodularMap, Mat3, mat_mul
from .normalize import canonical_form, canonicalize
from .white import (
    CanonicalForm,
    clean_forms,
    empty_forms,
    floor_step,
    floor_step_support,
    is_clean_form,
    white_empty,
)

_MAX_COUNTEREXAMPLES = 50


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0


@dataclass
class VerificationReport:
    """Outcome of one suite: parameters, per-check tallies, counterexamples.

    The counterexample list is empty exactly when every tally has zero
    failures; it is capped at 50 entries while the failure counts keep
    counting, so a broken criterion cannot flood the report.
    """

    suite: str
    params: dict
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    duration_seconds: float = 0.0

    def record(self, check: str, ok: bool, detail: str) -> None:
        tally = self.tallies.setdefault(check, Tally())
        if ok:
            tally.passed += 1
        else:
            tally.failed += 1
            if len(self.counterexamples) < _MAX_COUNTEREXAMPLES:
                self.counterexamples.append(f"{check}: {detail}")

    @property
    def ok(self) -> bool:
        return all(tally.failed == 0 for tally in self.tallies.values())

    @property
    def cases(self) -> int:
        return sum(t.passed + t.failed for t in self.tallies.values())

    def to_dict(self, include_duration: bool = False) -> dict:
        """Plain-data view; duration is opt-in so byte-stable consumers can skip it."""
        out = {
            "suite": self.suite,
            "params": dict(self.params),
            "ok": self.ok,
            "cases": self.cases,
            "checks": {
                name: {"passed": t.passed, "failed": t.failed}
                for name, t in self.tallies.items()
            },
            "counterexamples": list(self.counterexamples),
        }
        if include_duration:
            out["duration_seconds"] = self.duration_seconds
        return out


def verify_white(c_max: int = 25) -> VerificationReport:
    """Compare White's criterion and the gcd clean test against the oracle
    for every form with c <= c_max."""
    if c_max < 1:
        raise ValueError(f"c_max must be >= 1, got {c_max}")
    report = VerificationReport("white", {"c_max": c_max})
    start = time.perf_counter()
    for c in range(1, c_max + 1):
        for a in range(c):
            for b in range(c):
                form = CanonicalForm(a, b, c)
                empty_oracle, clean_oracle = bruteforce_verdicts(
                    standard_tetrahedron(a, b, c)
                )
                report.record(
                    "empty_criterion_vs_oracle",
                    white_empty(form) == empty_oracle,
                    f"T({a},{b},{c}): criterion {white_empty(form)}, oracle {empty_oracle}",
                )
                report.record(
                    "clean_criterion_vs_oracle",
                    is_clean_form(form) == clean_oracle,
                    f"T({a},{b},{c}): criterion {is_clean_form(form)}, oracle {clean_oracle}",
                )
    report.duration_seconds = time.perf_counter() - start
    return report


def verify_coplanarity(c_max: int = 25) -> VerificationReport:
    """Interior points of the spanned parallelepiped for every clean form
    with c <= c_max: the generator must match the scanning oracle and
    produce exactly c - 1 points, and for empty forms each unit-parameter
    clause pins the points to its plane."""
    if c_max < 2:
        raise ValueError(f"c_max must be >= 2, got {c_max}")
    report = VerificationReport("coplanar", {"c_max": c_max})
    start = time.perf_counter()
    for c in range(1, c_max + 1):
        for form in clean_forms(c):
            a, b = form.a, form.b
            points = parallelepiped_interior_points(a, b, c)
            report.record(
                "interior_count_is_c_minus_1",
                len(points) == c - 1,
                f"P({a},{b},{c}): {len(points)} points",
            )
            report.record(
                "generator_matches_scan",
                sorted(points) == parallelepiped_interior_bruteforce(a, b, c),
                f"P({a},{b},{c})",
            )
            if not white_empty(form):
                continue
            if a == 1:
                report.record(
                    "plane_x", all(p[0] == 1 for p in points), f"P({a},{b},{c})"
                )
            if b == 1:
                report.record(
                    "plane_y", all(p[1] == 1 for p in points), f"P({a},{b},{c})"
                )
            if form.d == 1:
                report.record(
                    "plane_x_plus_y_minus_z",
                    all(p[0] + p[1] - p[2] == 1 for p in points),
                    f"P({a},{b},{c})",
                )
    report.duration_seconds = time.perf_counter() - start
    return report


def verify_floor_steps(c_max: int = 100) -> VerificationReport:
    """Staircase-increment properties for every coprime 0 < n < c <= c_max:
    slope 1/c has empty support, larger slopes have the closed-form support
    of size n - 1, and complementary slopes have complementary steps."""
    if c_max < 3:
        raise ValueError(f"c_max must be >= 3, got {c_max}")
    report = VerificationReport("fn", {"c_max": c_max})
    start = time.perf_counter()
    for c in range(2, c_max + 1):
        for n in (n for n in range(1, c) if math.gcd(n, c) == 1):
            support = floor_step_support(n, c)
            if n == 1:
                report.record(
                    "unit_slope_empty_support", support == set(), f"n=1, c={c}"
                )
            else:
                closed_form = {k * c // n for k in range(1, n)}
                report.record(
                    "support_closed_form",
                    support == closed_form,
                    f"n={n}, c={c}: {sorted(support)} vs {sorted(closed_form)}",
                )
                report.record(
                    "support_size",
                    len(support) == n - 1,
                    f"n={n}, c={c}: |support| = {len(support)}",
                )
            report.record(
                "complement_identity",
                all(
                    floor_step(c - n, c, k) == 1 - floor_step(n, c, k)
                    for k in range(1, c - 1)
                ),
                f"n={n}, c={c}",
            )
    report.duration_seconds = time.perf_counter() - start
    return report


def random_unimodular_map(
    rng: random.Random,
    min_factors: int = 6,
    max_factors: int = 12,
    shear_bound: int = 3,
    translation_bound: int = 5,
) -> AffineUnimodularMap:
    """Random product of elementary shears, axis permutations and sign flips,
    plus a bounded translation; unimodular by construction."""
    m: Mat3 = IDENTITY
    for _ in range(rng.randint(min_factors, max_factors)):
        kind = rng.randrange(3)
        if kind == 0:
            i, j = rng.sample(range(3), 2)
            q = rng.randint(-shear_bound, shear_bound)
            factor = [[1 if r == s else 0 for s in range(3)] for r in range(3)]
            factor[i][j] = q
        elif kind == 1:
            perm = rng.sample(range(3), 3)
            factor = [[1 if s == perm[r] else 0 for s in range(3)] for r in range(3)]
        else:
            signs = [rng.choice((-1, 1)) for _ in range(3)]
            factor = [
                [signs[r] if r == s else 0 for s in range(3)] for r in range(3)
            ]
        m = mat_mul(tuple(tuple(row) for row in factor), m)
    translation = tuple(
        rng.randint(-translation_bound, translation_bound) for _ in range(3)
    )
    return AffineUnimodularMap(m, translation)


def verify_normalization(
    trials: int = 1000, seed: int = 0, c_max: int = 10
) -> VerificationReport:
    """Round-trip: scramble a random empty form with a random unimodular map,
    re-normalize, and demand the canonical form survives along with volume,
    witness-map soundness and the clean gcd conclusion."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if c_max < 1:
        raise ValueError(f"c_max must be >= 1, got {c_max}")
    report = VerificationReport(
        "normalize", {"trials": trials, "seed": seed, "c_max": c_max}
    )
    start = time.perf_counter()
    rng = random.Random(seed)
    forms = [form for c in range(1, c_max + 1) for form in empty_forms(c)]
    base_forms: dict[CanonicalForm, CanonicalForm] = {}
    for trial in range(trials):
        form = rng.choice(forms)
        scramble = random_unimodular_map(rng)
        t = standard_tetrahedron(form.a, form.b, form.c)
        if form not in base_forms:
            base_forms[form] = canonical_form(t)
        image = t.transformed(scramble)
        result = canonicalize(image)
        tag = f"trial {trial}: T({form.a},{form.b},{form.c})"
        report.record(
            "volume_preserved",
            volume6(image) == form.c and result.form.c == form.c,
            f"{tag}: volume6 {volume6(image)}, got c {result.form.c}",
        )
        report.record(
            "canonical_form_round_trip",
            result.form == base_forms[form],
            f"{tag}: {result.form} vs {base_forms[form]}",
        )
        witness_image = {result.map(p) for p in image.vertices()}
        expected = {ZERO, E1, E2, (result.form.a, result.form.b, result.form.c)}
        report.record(
            "witness_map_sound", witness_image == expected, f"{tag}: {witness_image}"
        )
        report.record(
            "result_form_clean",
            is_clean_form(result.form),
            f"{tag}: {result.form}",
        )
    report.duration_seconds = time.perf_counter() - start
    return report
