"""Full-scale exact checks, one test per acceptance criterion.

Each test records a ``PASS``/``FAIL`` line (with wall time against its
budget) that is printed in the terminal summary.
"""

import itertools
import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from ncgrass.cli import main
from ncgrass.quasidet import DivMatrix, Undefined, commutative_ratio_check
from ncgrass.quantum.algebra import AlgebraContext
from ncgrass.quantum.identities import (
    reduction_scalar_identity,
    verify_antipode,
    verify_centrality,
    verify_classical_laplace,
    verify_inverse_genericity,
    verify_multiplicativity,
    verify_q_alternating,
    verify_reduction,
    verify_young_symmetry,
    young_relation_at_q1,
)
from ncgrass.quantum.specialization import verify_specialization
from ncgrass.suites import (
    Recorder,
    four_by_two_identity,
    infrastructure_checks,
    qp_trial,
    quasidet_trial,
    specialization_instances,
    young_instances,
    young_sample,
)

TRIALS = 200
SEED = 0
QP_DIMS = [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3)]
GOLDEN = Path(__file__).parent / "data" / "golden_report.json"


@contextmanager
def criterion(number, title, budget_s):
    state = {"ok": False, "detail": ""}
    t0 = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - t0
        ok = state["ok"] and elapsed < budget_s
        line = "%s  %d. %s (%.1fs, budget %ds)%s" % (
            "PASS" if ok else "FAIL", number, title, elapsed, budget_s,
            " " + state["detail"] if state["detail"] else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert state["ok"], state["detail"]
    assert elapsed < budget_s, "over budget: %.1fs" % elapsed


def summarize(records):
    failed = [r for r in records if r.status == "fail"]
    instances = sum(r.params.get("instances", 0) for r in records)
    return failed, instances


def test_quasideterminant_identities():
    with criterion(1, "quasideterminant identities, 200 trials per size 2..5", 60) as st:
        rec = Recorder("quasidet")
        for n in range(2, 6):
            for trial in range(TRIALS):
                quasidet_trial(rec, n, trial, SEED)
        failed, instances = summarize(rec.records)
        identities = {r.identity for r in rec.records if r.params["instances"]}
        st["ok"] = not failed and len(identities) == 8
        st["detail"] = "%d instances, %d failing records" % (instances, len(failed))


def test_commutative_collapse_and_laplace():
    with criterion(2, "commutative collapse up to 5x5 and Laplace for m <= 4", 10) as st:
        rng = random.Random(SEED)
        checked, bad = 0, 0
        for n in range(1, 6):
            for _ in range(20):
                A = DivMatrix.random_rational(rng, n)
                for i, j in itertools.product(range(1, n + 1), repeat=2):
                    try:
                        ok = commutative_ratio_check(A, i, j)
                    except Undefined:
                        continue
                    checked += 1
                    bad += not ok
        laplace = [verify_classical_laplace(m, J, p) for m in range(2, 5)
                   for J in itertools.permutations(range(1, m + 1)) for p in range(1, m)]
        st["ok"] = bad == 0 and checked > 0 and all(laplace)
        st["detail"] = "%d positions, %d Laplace expansions" % (checked, len(laplace))


def test_quasi_plucker_identities():
    with criterion(3, "quasi-Plucker identities, 200 trials at 5 shapes", 60) as st:
        rec = Recorder("quasiplucker")
        for n, d in QP_DIMS:
            for trial in range(TRIALS):
                qp_trial(rec, n, d, trial, SEED)
        failed, instances = summarize(rec.records)
        rng = random.Random(SEED)
        commutative = []
        while len(commutative) < 20:
            try:
                commutative.append(four_by_two_identity(DivMatrix.random_rational(rng, 4, 2)))
            except Undefined:
                continue
        triple = [r for r in rec.records if r.identity == "property-triple-product"]
        st["ok"] = (not failed and all(commutative)
                    and sum(r.params["instances"] for r in triple) > 0)
        st["detail"] = "%d instances, %d failing records" % (instances, len(failed))


def test_quantum_kernel():
    with criterion(4, "quantum determinant kernel n <= 3, multiplicativity n <= 2", 120) as st:
        results = []
        for n in range(1, 4):
            ctx = AlgebraContext(n)
            results += [verify_centrality(ctx), verify_antipode(ctx), verify_inverse_genericity(ctx)]
            results += [verify_q_alternating(ctx, rows)
                        for rows in itertools.product(range(1, n + 1), repeat=n)]
        results += [verify_multiplicativity(n) for n in (1, 2)]
        st["ok"] = all(results)
        st["detail"] = "%d checks" % len(results)


def test_young_symmetry():
    with criterion(5, "symmetry relations, exhaustive plus a (3,6) sample", 300) as st:
        count, bad = 0, 0
        for d, n in [(1, 3), (2, 4), (2, 5)]:
            ctx = AlgebraContext(n, d)
            for r, I, J in young_instances(d, n):
                count += 1
                bad += not verify_young_symmetry(ctx, d, r, I, J)
        ctx = AlgebraContext(6, 3)
        sample = young_sample(3, 6, 20, seed=SEED)
        for r, I, J in sample:
            count += 1
            bad += not verify_young_symmetry(ctx, 3, r, I, J)
        text = young_relation_at_q1(1, (1, 2, 3), (4,))
        st["ok"] = bad == 0 and len(sample) == 20 and text == "p12p34 - p13p24 + p23p14"
        st["detail"] = "%d instances; q=1 form %r" % (count, text)


def test_reduction_identity():
    with criterion(6, "size-two reduction and coefficient identity", 60) as st:
        results = []
        for n in (4, 5):
            ctx = AlgebraContext(n, 2)
            results += [verify_reduction(ctx, 2, r, I, J)
                        for r, I, J in young_instances(2, n) if r == 2]
        scalar = [reduction_scalar_identity(tuple(range(1, size + 1)), lam)
                  for size in range(1, 7) for r in range(1, 4)
                  for lam in itertools.combinations(range(1, size + 1), r)]
        st["ok"] = all(results) and all(scalar) and len(results) == 6
        st["detail"] = "%d polynomial, %d coefficient instances" % (len(results), len(scalar))


def test_specialization_replay():
    with criterion(7, "quasi-Plucker to quantum replay at (2,4) and (2,5)", 300) as st:
        total, lines, degenerate, failures = 0, 0, 0, []
        for n in (4, 5):
            ctx = AlgebraContext(n, 2)
            for I, J, i in specialization_instances(2, n):
                res = verify_specialization(ctx, 2, n, I, J, i)
                total += 1
                lines += len(res.lines)
                degenerate += res.degenerate
                if not res.ok:
                    failures.append((I, J, i, res.failed()))
        st["ok"] = not failures and degenerate > 0 and total > degenerate
        st["detail"] = "%d instances (%d degenerate), %d lines" % (total, degenerate, lines)


def test_infrastructure_and_golden(tmp_path):
    with criterion(8, "rewriting confluence, PBW counts, golden report", 30) as st:
        infra = infrastructure_checks(SEED)
        out = tmp_path / "report.json"
        code = main(["--seed", "42", "--dims", "4:2", "--trials", "2", "--max-n", "2", "--out", str(out)])
        same = out.read_bytes() == GOLDEN.read_bytes()
        st["ok"] = all(infra.values()) and code == 0 and same
        st["detail"] = "%s; golden %s" % (", ".join(k for k, v in infra.items() if v), "identical" if same else "differs")
