"""Acceptance suite: one test per criterion, each reporting a single pass/fail line."""
import itertools
import random
import subprocess
import sys
import time

from rlcm.boundary import BoundaryPoint, fixed_sets, in_basic_set, minimality_probe, theta_apply
from rlcm.germs import topological_freeness_probe
from rlcm.hull import ZERO, InverseHull
from rlcm.instances import parse_instance
from rlcm.instances.free import words_upto
from rlcm.instances.selfsimilar import msf_enumerate, pseudo_free_faithful_probe
from rlcm.report import analyze, render_report
from rlcm.semigroup import condition_H, core_contains, meets, right_cancellative_probe

from conftest import fixture_path
from oracles import msf_bruteforce

SEED = 20240917


def _random_triple(rng, H, alphabet, max_len=3, exp=6):
    P = H.P
    word = lambda: "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
    return H.triple(word(), P.group.parse(f"z^{rng.randint(-exp, exp)}"), word())


def _random_hull(rng, H, alphabet):
    if H.P.group is None:
        word = lambda: "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 3)))
        return H.pair(word(), word())
    return _random_triple(rng, H, alphabet)


def _random_point(rng, alphabet, stem=""):
    word = lambda lo, hi: "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))
    return BoundaryPoint(stem + word(0, 3), word(1, 3))


# 1

def test_hull_associativity(acceptance_line, hull_free, hull_odo, hull_mod):
    start = time.perf_counter()
    H = hull_free
    W = list(words_upto("01", 3))
    outer = list(words_upto("01", 1))
    violations = []
    # [a,b] = [a,1][1,b]: outer coordinates of length <= 1 generate the rest
    for a, f in itertools.product(outer, repeat=2):
        for b, c, d, e in itertools.product(W, repeat=4):
            s, t, u = H.pair(a, b), H.pair(c, d), H.pair(e, f)
            if H.mul(H.mul(s, t), u) != H.mul(s, H.mul(t, u)):
                violations.append((s, t, u))
    for s, t, u in itertools.product([H.pair(a, b) for a in outer for b in outer], repeat=3):
        if H.mul(H.mul(s, t), u) != H.mul(s, H.mul(t, u)):
            violations.append((s, t, u))
    rng = random.Random(SEED)
    for Hz, alphabet in ((hull_odo, "01"), (hull_mod, "01B")):
        for _ in range(10_000):
            s, t, u = (_random_triple(rng, Hz, alphabet) for _ in range(3))
            if Hz.mul(Hz.mul(s, t), u) != Hz.mul(s, Hz.mul(t, u)):
                violations.append((s, t, u))
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 30
    acceptance_line(1, "hull associativity", ok, f"{len(violations)} violations, {elapsed:.1f}s")
    assert not violations
    assert elapsed < 30


# 2

def _proposition_checks(H, elems):
    bad = 0
    for s in elems:
        t = H.star(s)
        if H.mul(H.mul(s, t), s) != s:
            bad += 1
        if (H.mul(s, s) == s) != (s.p == s.q):
            bad += 1
    return bad


def test_hull_propositions(acceptance_line, hull_free, hull_odo, hull_mod):
    H = hull_free
    W = list(words_upto("01", 3))
    elems = [H.pair(a, b) for a in W for b in W]
    bad = _proposition_checks(H, elems)
    idem = [s for s in elems if H.mul(s, s) == s]
    bad += sum(1 for s in idem if s.p != s.q)
    for e, f in itertools.product(idem, repeat=2):
        if H.mul(e, f) != H.mul(f, e):
            bad += 1
    rng = random.Random(SEED + 2)
    for Hz, alphabet in ((hull_odo, "01"), (hull_mod, "01B")):
        sample = [_random_triple(rng, Hz, alphabet) for _ in range(10_000)]
        bad += _proposition_checks(Hz, sample)
        for _ in range(10_000):
            w1 = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 3)))
            w2 = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 3)))
            e, f = Hz.triple(w1, Hz.P.group.identity, w1), Hz.triple(w2, Hz.P.group.identity, w2)
            if Hz.mul(e, f) != Hz.mul(f, e):
                bad += 1
    acceptance_line(2, "idempotents, commutation, regularity", bad == 0, f"{bad} failures")
    assert bad == 0


# 3

def test_star_not_identity(acceptance_line, hull_free):
    H, P = hull_free, hull_free.P
    mismatches = 0
    W = list(words_upto("01", 4))
    for p, q in itertools.product(W, repeat=2):
        prod = H.mul(H.pair(P.identity, p), H.pair(q, P.identity))
        if q.startswith(p):
            expected = H.pair(q[len(p):], "")
        elif p.startswith(q):
            expected = H.pair("", p[len(q):])
        else:
            expected = ZERO
        if prod != expected:
            mismatches += 1
        try:
            H.starnot_identity(p, q)
        except AssertionError:
            mismatches += 1
    acceptance_line(3, "[1,p][q,1] from right_lcm", mismatches == 0, f"{mismatches} mismatches")
    assert mismatches == 0


# 4

def test_odometer_facts(acceptance_line, odo):
    probe = pseudo_free_faithful_probe(odo, 8)
    G = odo.group
    nonempty = [m for m in range(-8, 9) if m and msf_enumerate(odo, G.parse(f"z^{m}"), 8).words]
    ok = probe["pseudo_free"].is_holds and probe["faithful"].is_holds and not nonempty
    acceptance_line(4, "odometer pseudo-free, faithful, empty MSF", ok,
                    f"pseudo-free {probe['pseudo_free'].status.name}, "
                    f"faithful {probe['faithful'].status.name}, nonempty MSF for {nonempty}")
    assert probe["pseudo_free"].is_holds and probe["faithful"].is_holds
    assert not nonempty


# 5

def test_modified_odometer_msf(acceptance_line, mododo):
    G = mododo.group
    z, z2 = G.parse("z"), G.parse("z^2")
    got1, got2 = msf_enumerate(mododo, z, 8).words, msf_enumerate(mododo, z2, 8).words
    oracle1, oracle2 = msf_bruteforce(1, "01B", 8), msf_bruteforce(2, "01B", 8)
    hs = [condition_H(mododo, b) for b in range(3, 7)]
    ok = (list(got1) == oracle1 == ["B"] and list(got2) == oracle2 == ["B", "0B", "1B"]
          and all(v.is_holds for v in hs))
    acceptance_line(5, "modified odometer MSF tables and condition (H)", ok,
                    f"MSF_z={list(got1)}, MSF_z2={list(got2)}")
    assert list(got1) == oracle1 == ["B"]
    assert list(got2) == oracle2 == ["B", "0B", "1B"]
    assert all(v.is_holds for v in hs)


# 6

def test_hausdorff_equivalence(acceptance_line, free01, mododo, non_faithful):
    disagreements = []
    for P in (free01, mododo):
        H = InverseHull(P)
        for b in range(2, 7):
            hull_side, lcm_side = H.hausdorff_probe(b), condition_H(P, b)
            if not (hull_side.is_holds and lcm_side.is_holds):
                disagreements.append((P.name, b, hull_side.status.name, lcm_side.status.name))
    H = InverseHull(non_faithful)
    for b in range(2, 7):
        hull_side, lcm_side = H.hausdorff_probe(b), condition_H(non_faithful, b)
        if hull_side.status != lcm_side.status:
            disagreements.append((non_faithful.name, b, hull_side.status.name,
                                  lcm_side.status.name))
        # no strongly fixed words, and hence no idempotent below a non-idempotent
        if any(lcm_side.witness.values()):
            disagreements.append((non_faithful.name, b, "MSF nonempty"))
        for s in H.elements(2):
            if s.p != s.q and H.j_set(s, b):
                disagreements.append((non_faithful.name, b, H.format(s)))
    ok = not disagreements
    acceptance_line(6, "hull covers agree with condition (H)", ok,
                    f"{len(disagreements)} disagreements")
    assert not disagreements


# 7

def test_core_computations(acceptance_line, free01, odo, nat2):
    errors = []
    if not core_contains(free01, "", 6).is_holds:
        errors.append("empty word")
    for w in words_upto("01", 6):
        if w and not core_contains(free01, w, 6).is_fails:
            errors.append(w)
    G = odo.group
    for m in range(-6, 7):
        if not core_contains(odo, ("", G.parse(f"z^{m}")), 6).is_holds:
            errors.append(("", m))
    slowest = 0.0
    for w in words_upto("01", 4):
        if not w:
            continue
        for m in range(-3, 4):
            t0 = time.perf_counter()
            v = core_contains(odo, (w, G.parse(f"z^{m}")), 6)
            slowest = max(slowest, time.perf_counter() - t0)
            if not (v.is_fails and v.witness is not None):
                errors.append((w, m))
    rng = random.Random(SEED + 7)
    for _ in range(100):
        p = (rng.randint(0, 50), rng.randint(0, 50))
        if not core_contains(nat2, p, 6).is_holds:
            errors.append(p)
    ok = not errors and slowest <= 1.0
    acceptance_line(7, "core computations", ok,
                    f"{len(errors)} errors, slowest witness {slowest * 1000:.1f}ms")
    assert not errors
    assert slowest <= 1.0


# 8

def test_e_star_unitary_vs_cancellative(acceptance_line, hull_free, hull_mod):
    free_e, free_c = hull_free.e_star_unitary_probe(4), right_cancellative_probe(hull_free.P, 4)
    H, P = hull_mod, hull_mod.P
    mod_e, mod_c = H.e_star_unitary_probe(4), right_cancellative_probe(P, 4)
    statuses_ok = (free_e.is_holds and free_c.is_holds and mod_e.is_fails and mod_c.is_fails)
    matched = False
    if statuses_ok:
        e, s = mod_e.witness
        p, q, b = mod_c.witness
        matched = (H.format(e) == "(B,e,B)" and H.format(s) == "(ε,z,ε)" and H.leq(e, s)
                   and s in (H.pair(p, q), H.pair(q, p))
                   and e == H.idempotent(P.mul(p, b)) == H.idempotent(P.mul(q, b)))
    ok = statuses_ok and matched
    acceptance_line(8, "E*-unitary iff cancellative", ok,
                    f"free {free_e.status.name}/{free_c.status.name}, "
                    f"modified odometer {mod_e.status.name}/{mod_c.status.name}")
    assert statuses_ok
    assert matched


# 9

def test_locally_contracting_witness(acceptance_line, hull_free, hull_odo):
    rng = random.Random(SEED + 9)
    failures, tried = 0, 0
    for H in (hull_free, hull_odo):
        P = H.P
        elems = list(P.elements(3))
        count = 0
        while count < 20:
            r, p, q = (rng.choice(elems) for _ in range(3))
            if meets(P, p, q):
                continue
            count += 1
            w = H.locally_contracting_witness(r, p, q)
            if not (w.ok and w.f1 == w.a == P.mul(r, p)
                    and w.f0 == P.mul(P.mul(P.mul(r, p), r), q)):
                failures += 1
        tried += count
    acceptance_line(9, "locally contracting witnesses", failures == 0,
                    f"{failures} failures in {tried}")
    assert failures == 0


# 10

def _basic_set_nonempty(stem, Y, alphabet):
    depth = max([len(y) for y in Y] + [len(stem)])
    for t in words_upto(alphabet, depth - len(stem)):
        if len(stem + t) == depth and not any((stem + t).startswith(y) for y in Y):
            return True
    return False


def test_boundary_and_germs(acceptance_line, hull_free, hull_odo, hull_mod, non_faithful):
    rng = random.Random(SEED + 10)
    problems = []

    composable = 0
    while composable < 1000:
        H, alphabet = rng.choice(((hull_free, "01"), (hull_mod, "01B")))
        s, t = _random_hull(rng, H, alphabet), _random_hull(rng, H, alphabet)
        x = _random_point(rng, alphabet, H.P.word(t.q))
        y = theta_apply(H, t, x, 32)
        if not theta_apply(H, s, y.point, 32).defined:
            continue
        composable += 1
        if theta_apply(H, H.mul(s, t), x, 32).take(32) != theta_apply(H, s, y.point, 32).take(32):
            problems.append(("theta", H.format(s), H.format(t), str(x)))

    probes = 0
    while probes < 1000:
        H, alphabet = rng.choice(((hull_free, "01"), (hull_mod, "01B")))
        stem = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 2)))
        X = [stem[:i] for i in sorted(rng.sample(range(len(stem) + 1), k=rng.randint(0, len(stem) + 1)))]
        Y = ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
             for _ in range(rng.randint(0, 2))]
        Y = [y for y in Y if not stem.startswith(y)]
        if not _basic_set_nonempty(stem, Y, alphabet):
            continue
        probes += 1
        x = _random_point(rng, alphabet)
        g = minimality_probe(H, x, X, Y)
        img = theta_apply(H, g, x)
        if not (img.defined and img.point is not None and in_basic_set(img.point, X, Y)):
            problems.append(("minimality", str(x), X, Y))

    for H in (hull_free, hull_odo, hull_mod):
        for s in H.elements(3):
            for depth in range(1, 7):
                try:
                    fixed_sets(H, s, depth)
                except AssertionError as exc:
                    problems.append(("TF not in F", H.format(s), depth, str(exc)))

    for H in (hull_odo, hull_mod):
        P = H.P
        core = [s for s in H.elements(4) if core_contains(P, s.p, 6).is_holds
                and core_contains(P, s.q, 6).is_holds]
        for s in core:
            if not topological_freeness_probe(H, s, 6).is_holds:
                problems.append(("topological freeness", P.name, H.format(s)))
    Hn = InverseHull(non_faithful)
    z = Hn.triple("", non_faithful.group.parse("z"), "")
    nf = topological_freeness_probe(Hn, z, 6)
    if not nf.is_fails:
        problems.append(("non-faithful fixture", nf.status.name))

    acceptance_line(10, "boundary and germ suite", not problems, f"{len(problems)} problems")
    assert not problems, problems[:5]


# 11

def _cli(*args):
    return subprocess.run([sys.executable, "-m", "rlcm", *args], capture_output=True,
                          text=True, check=True).stdout


def test_end_to_end_reports(acceptance_line, free01, mododo, nat2):
    start = time.perf_counter()
    problems = []
    free_r = analyze(free01)
    mod_r = analyze(mododo, depth=6)
    nat_r = analyze(nat2)
    for r in (free_r, mod_r):
        simple = r.check("simplicity")
        if not simple.describe().startswith("HOLDS modulo C*=C*_r"):
            problems.append((r.instance, "simplicity", simple.describe()))
        if r.check("pure_infiniteness").status != "HOLDS":
            problems.append((r.instance, "pure infiniteness"))
    if nat_r.check("locally_contracting").status != "FAILS":
        problems.append(("nat:2", "locally contracting"))

    for instance, golden in (("free:X01", "free_X01.txt"), ("odometer", "odometer.txt"),
                             ("modified-odometer", "modified-odometer.txt"), ("nat:2", "nat_2.txt")):
        with open(fixture_path(f"../golden/{golden}"), encoding="utf-8") as fh:
            expected = fh.read()
        first, second = _cli("analyze", instance), _cli("analyze", instance)
        if not (first == second == expected):
            problems.append((instance, "golden drift"))
    for name in ("non_faithful.spec", "lamplighter_portrait.spec", "klein_table.spec"):
        render_report(analyze(parse_instance(fixture_path(name))), "machine")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 60
    acceptance_line(11, "end-to-end golden reports", ok,
                    f"{len(problems)} problems, battery {elapsed:.1f}s")
    assert not problems
    assert elapsed < 60
