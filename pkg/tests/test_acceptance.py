"""Acceptance gate: seven criteria, one pass/fail line each.

Run with pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lambertkit import factorization as fz
from lambertkit import lambert as lm
from lambertkit import qseries as qs
from lambertkit import special_sums as ss
from lambertkit.arith import builtin as B, partition_p, r2
from lambertkit.fps import DomainError, TruncatedSeries
from lambertkit.harness import bench as bm
from lambertkit.harness import load_catalog, verify_all
from lambertkit.harness.catalog import STATUSES
from lambertkit.harness.specs import catalog_specs
import oracles as o

LINES: list[str] = []


def _record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    LINES.append(line)
    print(line)


# -- 1 ------------------------------------------------------------------------

def classical_listing():
    records = load_catalog()
    ids = {r.id for r in records if r.anchor == "classical-listing"}
    t0 = time.perf_counter()
    rep = verify_all(records, ids=ids)
    dt = time.perf_counter() - t0
    # independent brute-force expansion for the integer-valued entries
    N = 100
    oracle_fns = {"mu": o.mu, "phi": o.phi, "liouville": o.liouville,
                  "absmu": lambda n: abs(o.mu(n))}
    for a in range(4):
        oracle_fns[f"id{a}"] = (lambda a: lambda n: n ** a)(a)
    lib = {"mu": B("mu"), "phi": B("phi"), "liouville": B("liouville"), "absmu": B("absmu")}
    for a in range(4):
        lib[f"id{a}"] = B("id", a)
    bad_oracle = [k for k, f in oracle_fns.items() if list(lm.lambert(lib[k], N)) != o.lambert_expand(f, N)]
    orders = {r.order for r in rep.results}
    not_verified = [r.id for r in rep.results if r.status != "verified"]
    ok = not not_verified and not bad_oracle and orders == {100} and dt < 10
    detail = (f"{len(rep.results)} identities at order {sorted(orders)}, not verified {not_verified}, "
              f"oracle mismatches {bad_oracle}, {dt:.2f} s")
    return ok, detail


# -- 2 ------------------------------------------------------------------------

def factorization_suite():
    s = fz.s_triangle("minus", 1, 0, 30)
    inverse_ok = s.matmul(fz.s_inverse_closed(30)).is_identity()
    pent_ok = fz.pentagonal_table(B("id", 1), 100)[1:] == [o.sigma(1, n) for n in range(1, 101)]
    gen_bad = [name for name, f in (("one", B("one")), ("mu", B("mu")), ("id1", B("id", 1)))
               if fz.generalized_factorization(f, 2, 1, 24) != lm.generalized(f, 2, 1, 24)]
    ok = inverse_ok and pent_ok and not gen_bad
    return ok, (f"s*s^-1 = I at N=30: {inverse_ok}; pentagonal sigma_1 to 100: {pent_ok}; "
                f"(2,1) failures {gen_bad}")


# -- 3 ------------------------------------------------------------------------

def oracle_equivalences():
    specs = catalog_specs(load_catalog())
    spec_bad = [(rid, call) for rid, call, spec, order in specs
                if lm.series(spec, order) != TruncatedSeries([0] + [lm.coefficient(spec, n) for n in range(1, order + 1)])]
    tri = fz.s_triangle("minus", 1, 0, 18)
    tri_ok = all(tri.entry(n, k) == o.signed_part_count(n, k) for n in range(1, 19) for k in range(1, n + 1))
    p_ok = all(partition_p(n) == len(o.partitions(n)) for n in range(41))
    r2_ok = all(r2(n) == o.lattice_r2(n) for n in range(1, 201))
    ok = not spec_bad and tri_ok and p_ok and r2_ok
    return ok, (f"{len(specs)} catalog specs, disagreeing {spec_bad}; s_(n,k) n<=18: {tri_ok}; "
                f"p(n) n<=40: {p_ok}; r2 n<=200: {r2_ok}")


# -- 4 ------------------------------------------------------------------------

TRIPLES = [("id1", "mu", 6), ("phi", "id1", 4), ("one", "mu", 12)]


def _fn(name):
    return B("id", 1) if name == "id1" else B(name)


def apostol_gcd_lcm():
    failing = []
    for kind in ("S1", "S2"):
        for f, g, m in TRIPLES:
            got = ss.apostol_lambert_check(ss.ApostolSpec(kind, _fn(f), _fn(g), m), 40)["mismatch"]
            if got is not None:
                failing.append(f"{kind}({f},{g},{m})@{got}")
    hecke_ok = all(ss.hecke_sigma_check(a, 30) is None for a in range(4)) and ss.hecke_tau_check(12) is None
    kamp_bad = []
    for a in range(1, 7):
        got = ss.kamp_identities(a, 60)
        kamp_bad += [f"{k}(a={a})@{got[k]}" for k in ("minus", "plus") if got[k] is not None]
    lcm_ok = ss.lcm_identity_checks(1, 40)["first"] is None
    ok = not failing and hecke_ok and not kamp_bad and lcm_ok
    return ok, (f"Apostol failures {failing or 'none'}; Hecke: {hecke_ok}; "
                f"Kamp failures {kamp_bad or 'none'}; LCM first: {lcm_ok}")


# -- 5 ------------------------------------------------------------------------

def mock_theta():
    t0 = time.perf_counter()
    outcome = {}
    for i, name in enumerate(qs.MOCK_NAMES, 1):
        try:
            e = qs.mock_eulerian(name, 30)
        except DomainError as exc:
            outcome[f"MT{i}"] = f"undefined ({exc})"
            continue
        d = e.first_difference(qs.mock_bilateral(name, 30))
        outcome[f"MT{i}"] = "equal" if d is None else f"differs at q^{d}"
    dt = time.perf_counter() - t0
    ok = all(v == "equal" for v in outcome.values()) and dt < 30
    return ok, "; ".join(f"{k} {v}" for k, v in outcome.items()) + f"; {dt:.2f} s"


# -- 6 ------------------------------------------------------------------------

def adjudication_integrity():
    records = load_catalog()
    rep = verify_all(records)
    not_caught = [(r.id, s) for r in records for s in STATUSES
                  if s != r.expected and verify_all([r.with_expected(s)]).exit_code != 1]
    errata = [r for r in rep.results if r.status == "erratum"]
    unlocated = [r.id for r in errata if r.mismatch_index is None]
    ok = rep.exit_code == 0 and not not_caught and not unlocated
    return ok, (f"exit {rep.exit_code} over {len(records)} records {rep.counts}; "
                f"uncaught flips {not_caught}; {len(errata)} errata, unlocated {unlocated}")


# -- 7 ------------------------------------------------------------------------

def bench_sanity():
    rows = bm.bench([10_000])
    agree = all(r.agree for r in rows)
    N = 100_000
    t0 = time.perf_counter()
    got = bm.divisor_sums(B("id", 1), N, "sieve")
    dt = time.perf_counter() - t0
    want = [0] * (N + 1)
    for d in range(1, N + 1):
        for m in range(d, N + 1, d):
            want[m] += d
    ok = agree and got == want[1:] and dt < 1
    return ok, f"three routes agree at N=10^4: {agree}; sieve sigma_1 to 10^5 in {dt:.3f} s"


CRITERIA = [
    (1, "classical listing", classical_listing),
    (2, "factorization suite", factorization_suite),
    (3, "oracle equivalences", oracle_equivalences),
    (4, "Apostol/GCD/LCM", apostol_gcd_lcm),
    (5, "mock theta", mock_theta),
    (6, "adjudication integrity", adjudication_integrity),
    (7, "benchmark sanity", bench_sanity),
]


def _run(num):
    _, title, fn = CRITERIA[num - 1]
    ok, detail = fn()
    _record(num, title, ok, detail)
    assert ok, detail


def test_criterion_1_classical_listing():
    _run(1)


def test_criterion_2_factorization_suite():
    _run(2)


def test_criterion_3_oracle_equivalences():
    _run(3)


def test_criterion_4_apostol_gcd_lcm():
    _run(4)


def test_criterion_5_mock_theta():
    _run(5)


def test_criterion_6_adjudication_integrity():
    _run(6)


def test_criterion_7_bench_sanity():
    _run(7)


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        _record(num, title, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
