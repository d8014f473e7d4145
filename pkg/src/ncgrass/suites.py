"""Verification suites: run identity checks over seeds and sizes and collect records.

Each record covers one ``(identity, size, trial)`` or one deterministic
instance.  Checks that count instances report ``instances`` (defined
evaluations) and ``undefined`` (skipped because a quasideterminant or
inverse did not exist).  A record is ``fail`` if any instance failed,
``undefined`` if no instance was defined, and ``pass`` otherwise.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from math import comb
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .classical import cofactor_det
from .quasi_plucker import (
    CoordinateCache,
    normalization_convention,
    qp_coord,
    verify_gl_invariance,
    verify_qp_properties,
    verify_qp_relation,
    verify_s_independence,
)
from .quasidet import (
    DivMatrix,
    QuasidetCache,
    Singular,
    Undefined,
    commutative_ratio_check,
    dr_inverse,
    quasidet,
    transformed_matrix,
    verify_col_expansion,
    verify_dependent_column,
    verify_dependent_row,
    verify_elem_transform,
    verify_homological,
    verify_inversion_law,
    verify_row_homological,
)
from .quantum.algebra import AlgebraContext, confluence_smoke, pbw_normal_word_count
from .quantum.identities import (
    verify_antipode,
    verify_boxed_identities,
    verify_centrality,
    verify_classical_laplace,
    verify_inverse_genericity,
    verify_last_minor_commutation,
    verify_multiplicativity,
    verify_q_alternating,
    verify_quant_via_quasi,
    verify_reduction,
    verify_weak_qcommute,
    verify_young_symmetry,
)
from .quantum.minors import NoCommutationCertificate, nested_pairs, q_commute_exponent
from .quantum.specialization import verify_specialization
from .scalars import Quaternion

SUITES = ("quasidet", "quasiplucker", "quantum", "specialization", "classical")
STATUSES = ("pass", "fail", "undefined", "degenerate")


@dataclass
class CheckRecord:
    suite: str
    identity: str
    anchor: str
    params: Dict
    status: str
    elapsed_ms: Optional[float] = None

    def as_dict(self) -> Dict:
        return {"suite": self.suite, "identity": self.identity, "anchor": self.anchor,
                "params": self.params, "status": self.status, "elapsed_ms": self.elapsed_ms}


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    undefined: int = 0

    def run(self, check: Callable[[], bool]) -> None:
        try:
            ok = check()
        except Undefined:
            self.undefined += 1
            return
        if ok:
            self.passed += 1
        else:
            self.failed += 1

    def add(self, ok: bool, defined: int = 1) -> None:
        """Fold in a pre-counted result that covered ``defined`` evaluations."""
        if not defined:
            self.undefined += 1
        elif ok:
            self.passed += defined
        else:
            self.failed += defined

    @property
    def status(self) -> str:
        if self.failed:
            return "fail"
        return "pass" if self.passed else "undefined"

    def params(self, **extra) -> Dict:
        out = dict(extra)
        out.update(instances=self.passed + self.failed, undefined=self.undefined)
        return out


class Recorder:
    """Collects records; ``timing`` switches elapsed time on (it breaks byte-determinism)."""

    def __init__(self, suite: str, timing: bool = False):
        self.suite = suite
        self.timing = timing
        self.records: List[CheckRecord] = []

    def tally(self, identity: str, anchor: str, params: Dict, body: Callable[[Tally], None]) -> None:
        t0 = time.perf_counter()
        tally = Tally()
        body(tally)
        self._push(identity, anchor, tally.params(**params), tally.status, t0)

    def single(self, identity: str, anchor: str, params: Dict, check: Callable[[], object]) -> None:
        """``check`` returns a bool or a status string; ``Undefined`` maps to ``undefined``."""
        t0 = time.perf_counter()
        try:
            out = check()
            status = out if isinstance(out, str) else ("pass" if out else "fail")
        except Undefined:
            status = "undefined"
        except NoCommutationCertificate:
            status = "fail"
        self._push(identity, anchor, params, status, t0)

    def _push(self, identity, anchor, params, status, t0) -> None:
        elapsed = round((time.perf_counter() - t0) * 1000, 3) if self.timing else None
        self.records.append(CheckRecord(self.suite, identity, anchor, params, status, elapsed))


def trial_rng(seed: int, *labels) -> random.Random:
    """Independent, reproducible stream per (seed, labels)."""
    return random.Random("/".join(map(str, (seed,) + labels)))


def _nonzero_quaternion(rng: random.Random) -> Quaternion:
    while True:
        x = Quaternion.random(rng)
        if not x.is_zero():
            return x


def sizes_from_dims(dims: Sequence[Tuple[int, int]]) -> List[int]:
    """Every matrix size named in ``dims``, skipping 1."""
    return sorted({k for nd in dims for k in nd if k >= 2})


# ---------------------------------------------------------------------------
# quasideterminants over the quaternions
# ---------------------------------------------------------------------------


def quasidet_trial(rec: Recorder, n: int, trial: int, seed: int) -> None:
    rng = trial_rng(seed, "quasidet", n, trial)
    A = DivMatrix.random_quaternion(rng, n)
    cache = QuasidetCache(A, "recursive")
    cells = list(itertools.product(range(1, n + 1), repeat=2))
    base = {"n": n, "trial": trial}

    def definitions(t: Tally):
        for i, j in cells:
            t.run(lambda: quasidet(A, i, j, "border") == cache.full(i, j))

    def inversion(t: Tally):
        try:
            inv = dr_inverse(A)
        except Singular:
            t.undefined += len(cells)
            return
        for i, j in cells:
            t.run(lambda: verify_inversion_law(A, i, j, inv, cache))

    def homological(verify):
        def body(t: Tally):
            for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
                if i != k and j != l:
                    t.run(lambda: verify(A, i, j, k, l, cache))
        return body

    def expansion(t: Tally):
        for r, s, l in itertools.product(range(1, n + 1), repeat=3):
            if l != s:
                t.run(lambda: verify_col_expansion(A, r, s, l, cache))

    def dependent(verify):
        def body(t: Tally):
            s = rng.randint(1, n)
            coeffs = {c: Quaternion.random(rng) for c in range(1, n + 1) if c != s}
            ok, defined = verify(A, s, coeffs, "border")
            t.add(ok, defined)
        return body

    def transforms(t: Tally):
        tau = list(range(1, n + 1))
        rng.shuffle(tau)
        r, s = rng.sample(range(1, n + 1), 2)
        rho = _nonzero_quaternion(rng)
        i = rng.randint(1, n)
        for kind, kw in (("permute", {"tau": tau}), ("rescale", {"r": r, "rho": rho}),
                         ("add", {"r": r, "s": s, "rho": rho})):
            cache_b = QuasidetCache(transformed_matrix(A, kind, **kw))
            for j in range(1, n + 1):
                if kind == "add" and j == r:
                    continue
                t.run(lambda: verify_elem_transform(A, kind, i, j, cache=cache, cache_b=cache_b, **kw))

    rec.tally("definitions-agree", "quasidet.recursive-vs-border", base, definitions)
    rec.tally("inversion-law", "quasidet.inverse-entry", base, inversion)
    rec.tally("homological-column", "quasidet.homological.column", base, homological(verify_homological))
    rec.tally("homological-row", "quasidet.homological.row", base, homological(verify_row_homological))
    rec.tally("column-expansion", "quasidet.one-column-expansion", base, expansion)
    rec.tally("dependent-column", "quasidet.dependent-column-vanishes", base, dependent(verify_dependent_column))
    rec.tally("dependent-row", "quasidet.dependent-row-vanishes", base, dependent(verify_dependent_row))
    rec.tally("elementary-transforms", "quasidet.column-operations", base, transforms)


def quasidet_suite(config) -> List[CheckRecord]:
    rec = Recorder("quasidet", config.timing)
    for n in sizes_from_dims(config.dims):
        for trial in range(config.trials):
            quasidet_trial(rec, n, trial, config.seed)
    return rec.records


# ---------------------------------------------------------------------------
# commutative collapse
# ---------------------------------------------------------------------------


def classical_suite(config) -> List[CheckRecord]:
    rec = Recorder("classical", config.timing)
    for n in sizes_from_dims(config.dims):
        for trial in range(config.trials):
            rng = trial_rng(config.seed, "classical", n, trial)
            A = DivMatrix.random_rational(rng, n)

            def body(t: Tally, A=A, n=n):
                for i, j in itertools.product(range(1, n + 1), repeat=2):
                    t.run(lambda: commutative_ratio_check(A, i, j))

            rec.tally("commutative-ratio", "classical.quasidet-as-determinant-ratio",
                      {"n": n, "trial": trial}, body)
    if config.trials:
        for m in range(2, 5):
            for J in itertools.permutations(range(1, m + 1)):
                for p in range(1, m):
                    rec.single("laplace-expansion", "classical.laplace", {"m": m, "J": list(J), "p": p},
                               lambda: verify_classical_laplace(m, J, p))
    return rec.records


# ---------------------------------------------------------------------------
# quasi-Plucker coordinates
# ---------------------------------------------------------------------------


def qp_trial(rec: Recorder, n: int, d: int, trial: int, seed: int) -> None:
    rng = trial_rng(seed, "quasiplucker", n, d, trial)
    A = DivMatrix.random_quaternion(rng, n, d)
    cache = CoordinateCache(A)
    base = {"n": n, "d": d, "trial": trial}
    rows = range(1, n + 1)
    triples = [(j, i, M) for M in itertools.combinations(rows, d - 1)
               for i in rows if i not in M for j in rows]

    def s_independence(t: Tally):
        for j, i, M in triples:
            t.run(lambda: verify_s_independence(A, j, i, M, cache))

    def gl_invariance(t: Tally):
        g = DivMatrix.random_quaternion(rng, d)
        try:
            dr_inverse(g)
        except Singular:
            t.undefined += 1
            return
        cache_g = CoordinateCache(A @ g)
        for j, i, M in triples:
            t.run(lambda: verify_gl_invariance(A, g, j, i, M, cache, cache_g, g_checked=True))

    def relations(t: Tally):
        for L in itertools.combinations(rows, d):
            for M in itertools.combinations(rows, d - 1):
                for i in rows:
                    if i not in M:
                        t.run(lambda: verify_qp_relation(A, i, L, M, cache) == 1)

    rec.tally("s-independence", "quasiplucker.column-choice", base, s_independence)
    rec.tally("gl-invariance", "quasiplucker.right-action-invariance", base, gl_invariance)
    props = verify_qp_properties(A, cache)
    for name in ("m_order", "j_in_m", "j_eq_i", "cocycle", "inverse_pair", "triple_product"):
        passed, failed, undefined = props.get(name, [0, 0, 0])
        t = Tally(passed, failed, undefined)
        rec._push("property-" + name.replace("_", "-"), "quasiplucker.properties",
                  t.params(**base), t.status, time.perf_counter())
    rec.tally("relation-sums-to-one", "quasiplucker.relations", base, relations)
    rec.single("normalization", "quasiplucker.normalized-entries", base,
               lambda: normalization_convention(A) == ["C[j,k] = r_{jk}^{[d]-k}"])


def four_by_two_identity(A: DivMatrix) -> bool:
    """The relation with ``i=1, L={2,3}, M={4}`` on a commutative ``4 x 2`` matrix.

    Checks each term against its ratio of ``2 x 2`` determinants, the sum
    against 1, and the equivalent three-term relation among the minors.
    """
    p = lambda a, b: cofactor_det(A.keep((a, b)).tolist())
    if any(p(a, b) == 0 for a, b in itertools.combinations(range(1, 5), 2)):
        raise Undefined("a 2x2 minor vanishes")
    first = qp_coord(A, 1, 3, (2,)) * qp_coord(A, 3, 1, (4,))
    second = qp_coord(A, 1, 2, (3,)) * qp_coord(A, 2, 1, (4,))
    ok = first == Fraction(p(1, 2) * p(3, 4), p(3, 2) * p(1, 4))
    ok &= second == Fraction(p(1, 3) * p(2, 4), p(2, 3) * p(1, 4))
    ok &= first + second == 1 == verify_qp_relation(A, 1, (2, 3), (4,))
    ok &= p(1, 2) * p(3, 4) - p(1, 3) * p(2, 4) + p(2, 3) * p(1, 4) == 0
    return ok


def _with_redraws(check: Callable[[], bool], attempts: int = 10) -> bool:
    """Retry a randomized check whose sample hit a vanishing denominator."""
    for _ in range(attempts - 1):
        try:
            return check()
        except Undefined:
            continue
    return check()


def quasiplucker_suite(config) -> List[CheckRecord]:
    rec = Recorder("quasiplucker", config.timing)
    for n, d in config.dims:
        for trial in range(config.trials):
            qp_trial(rec, n, d, trial, config.seed)
    for trial in range(min(config.trials, 20)):
        rng = trial_rng(config.seed, "four-by-two", trial)
        rec.single("four-by-two-relation", "quasiplucker.commutative-example", {"trial": trial},
                   lambda: _with_redraws(lambda: four_by_two_identity(DivMatrix.random_rational(rng, 4, 2))))
    return rec.records


# ---------------------------------------------------------------------------
# quantum algebra (deterministic)
# ---------------------------------------------------------------------------


def young_instances(d: int, n: int) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    for r in range(1, d + 1):
        if d + r > n:
            break
        for I in itertools.combinations(range(1, n + 1), d + r):
            for J in itertools.combinations(range(1, n + 1), d - r):
                yield r, I, J


def young_sample(d: int, n: int, count: int, seed: int = 0) -> List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    pool = list(young_instances(d, n))
    return random.Random(seed).sample(pool, min(count, len(pool)))


def quantum_suite(config) -> List[CheckRecord]:
    rec = Recorder("quantum", config.timing)
    if not config.trials:
        return rec.records
    for n in range(1, config.max_n + 1):
        ctx = AlgebraContext(n)
        rec.single("centrality", "quantum.det-central", {"n": n}, lambda: verify_centrality(ctx))
        rec.single("antipode", "quantum.antipode", {"n": n}, lambda: verify_antipode(ctx))
        rec.single("inverse-genericity", "quantum.antipode-inverse-q", {"n": n},
                   lambda: verify_inverse_genericity(ctx))
        rec.tally("q-alternating", "quantum.row-permutation", {"n": n},
                  lambda t: [t.run(lambda: verify_q_alternating(ctx, rows))
                             for rows in itertools.product(range(1, n + 1), repeat=n)])
        orders = list(itertools.permutations(range(1, n + 1)))
        rec.tally("quant-via-quasi", "quantum.det-as-quasidet-product", {"n": n},
                  lambda t: [t.run(lambda: verify_quant_via_quasi(ctx, r, c)) for r in orders for c in orders])
        if n <= 2:
            rec.single("multiplicativity", "quantum.product-of-generic", {"n": n},
                       lambda: verify_multiplicativity(n))
    nested = AlgebraContext(4, 3)
    rec.tally("nested-minors-commute", "quantum.nested-minors", {"n": 4, "d": 3},
              lambda t: [t.run(lambda: q_commute_exponent(nested, I, J) == 0)
                         for I, J in nested_pairs(range(1, 5), 3)])
    for n, d in config.dims:
        ctx = AlgebraContext(n, d)
        params = {"n": n, "d": d}
        rows = range(1, n + 1)

        def weak(t: Tally):
            for M in itertools.combinations(rows, d - 1):
                for i, j in itertools.combinations([x for x in rows if x not in M], 2):
                    t.run(lambda: verify_weak_qcommute(ctx, i, j, M))

        def young(t: Tally):
            for r, I, J in young_instances(d, n):
                t.run(lambda: verify_young_symmetry(ctx, d, r, I, J))

        reducible = [(r, I, J) for r, I, J in young_instances(d, n) if r >= 2]

        def reduction(t: Tally):
            for r, I, J in reducible:
                t.run(lambda: verify_reduction(ctx, d, r, I, J))

        def last_minor(t: Tally):
            for I in itertools.combinations(rows, d):
                t.run(lambda: verify_last_minor_commutation(ctx, d, n, I))

        def boxed(t: Tally):
            for I in itertools.permutations(rows, d):
                t.run(lambda: verify_boxed_identities(ctx, I))
            for M in itertools.permutations(rows, d - 1):
                for i, j in itertools.permutations([x for x in rows if x not in M], 2):
                    t.run(lambda: verify_boxed_identities(ctx, (i,) + M, i, j, M))

        rec.tally("weak-q-commute", "quantum.weak-q-commute", params, weak)
        rec.tally("young-symmetry", "quantum.young-symmetry", params, young)
        if reducible:
            rec.tally("reduction", "quantum.young-reduction", params, reduction)
        rec.tally("last-minor-commutation", "quantum.last-minor", params, last_minor)
        rec.tally("boxed-identities", "quantum.first-column-quasidet", params, boxed)
    return rec.records


# ---------------------------------------------------------------------------
# quasi -> quantum
# ---------------------------------------------------------------------------


def specialization_instances(d: int, n: int):
    """Every ``(I, J, i)`` with ``i`` in ``I \\ J``, then one repeated-index ``I`` per ``J``."""
    rows = range(1, n + 1)
    for I in itertools.combinations(rows, d + 1):
        for J in itertools.combinations(rows, d - 1):
            for i in I:
                if i not in J:
                    yield I, J, i
    if d >= 2:
        for J in itertools.combinations(rows, d - 1):
            yield tuple(sorted((J * (d + 1))[:d + 1])), J, None


def specialization_suite(config) -> List[CheckRecord]:
    rec = Recorder("specialization", config.timing)
    if not config.trials:
        return rec.records
    for n, d in config.dims:
        ctx = AlgebraContext(n, d)
        for I, J, i in specialization_instances(d, n):
            def check(I=I, J=J, i=i):
                res = verify_specialization(ctx, d, n, I, J, i)
                if not res.ok:
                    return "fail"
                return "degenerate" if res.degenerate else "pass"
            rec.single("quasi-to-quantum", "specialization.replay",
                       {"n": n, "d": d, "I": list(I), "J": list(J), "i": i}, check)
    return rec.records


SUITE_RUNNERS: Dict[str, Callable] = {
    "quasidet": quasidet_suite,
    "quasiplucker": quasiplucker_suite,
    "quantum": quantum_suite,
    "specialization": specialization_suite,
    "classical": classical_suite,
}


def infrastructure_checks(seed: int = 0) -> Dict[str, bool]:
    """Rewriting-engine sanity: strategy agreement and PBW word counts."""
    out = {"confluence": not confluence_smoke(AlgebraContext(3), seed, 100, max_length=6)}
    ctx = AlgebraContext(2)
    for k in range(1, 6):
        out["pbw-degree-%d" % k] = pbw_normal_word_count(ctx, k) == comb(k + 3, 3)
    return out
