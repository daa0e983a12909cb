"""The acceptance checks, runnable from the CLI (``dgw verify all``) and from pytest.

Every check is exact; there are no numeric tolerances.  Random inputs come
from ``random.Random(seed * 1000 + index)`` so checks are reproducible one by one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from dgw import diagrams as dg
from dgw.families import A, B, basic_atoms, basic_bottom, fibonacci_presentation, instance
from dgw.geometry import parity_violations, realize
from dgw.isomorphisms import phi, psi
from dgw.plmaps import compose_pl, diagram_to_plmap, identity, pl_equal, validate_fr
from dgw.presentations import parse_presentation
from dgw.sampling import bfs_loops, random_diagram, random_fword, random_walk
from dgw.semigroups import count_elements
from dgw.thompson import FWord, generator, pr, relation_holds, word_to_diagram

P23_TEXT = "<a,b | a=bab, b=aba>"
EXAMPLE_TEXT = "base: aaaaa\n+0@1\n+0@5\n-1@0\n-0@1\n-1@2\n-0@0\n"

# the instances exercised by the homomorphism and round-trip checks
INSTANCES = (("fib3", None), ("fib4", None), ("johnson-even", 1), ("johnson-even", 2), ("johnson-odd", 2))


@dataclass
class CheckResult:
    index: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.index:2d} {self.name}: {self.detail}"


def example_diagram() -> dg.Diagram:
    return dg.parse_diagram(EXAMPLE_TEXT, parse_presentation(P23_TEXT))


def check_example(rng):
    g = realize(example_diagram())
    got = (g.num_vertices, len(g.edges), len(g.cells))
    return got == (10, 15, 6), f"vertices={got[0]} edges={got[1]} cells={got[2]}"


def check_reduction_uniqueness(rng):
    pres = [parse_presentation(P23_TEXT), pr(2)]
    failures = 0
    for k in range(1000):
        d = random_diagram(pres[k % 2], rng, max_atoms=30)
        ref = dg.reduce(d)
        for _ in range(5):
            if dg.reduce(d, rng=rng).atoms != ref.atoms:
                failures += 1
    return failures == 0, f"1000 diagrams x 5 random orders, {failures} disagreements"


def check_group_axioms(rng):
    pres = [parse_presentation(P23_TEXT), pr(2), pr(3)]
    failures = 0
    for k in range(200):
        p = pres[k % len(pres)]
        a = random_diagram(p, rng, max_atoms=20)
        b = random_walk(p, a.bottom, rng.randint(0, 10), rng, 12)
        c = random_walk(p, b.bottom, rng.randint(0, 10), rng, 12)
        if dg.reduce(dg.compose(a, dg.invert(a))).atoms:
            failures += 1
        lhs = dg.canon(dg.compose(dg.compose(a, b), c))
        rhs = dg.canon(dg.compose(a, dg.compose(b, c)))
        red_l = dg.reduce(dg.compose(dg.reduce(dg.compose(a, b)), c))
        red_r = dg.reduce(dg.compose(a, dg.reduce(dg.compose(b, c))))
        if lhs != rhs or red_l != red_r:
            failures += 1
    return failures == 0, f"200 triples, {failures} failures"


def check_thompson_relations(rng):
    failures = [(r, i, j) for r in (2, 3, 7, 9, 11, 25)
                for j in range(1, 7) for i in range(j) if not relation_holds(r, i, j)]
    return not failures, f"126 relations, failing: {failures[:5]}"


def check_phi_homomorphism(rng):
    failures = []
    for fam, s in INSTANCES:
        inst = instance(fam, s)
        r = inst.rprime
        for j in range(1, 5):
            for i in range(j):
                lhs = dg.compose(phi(inst, generator(r, j)), phi(inst, generator(r, i)))
                rhs = dg.compose(phi(inst, generator(r, i)), phi(inst, generator(r, j + r - 1)))
                if not dg.equal(lhs, rhs):
                    failures.append((inst.name, i, j))
    return not failures, f"{len(INSTANCES)} instances x 10 relations, failing: {failures[:5]}"


def check_roundtrip_psi_phi(rng):
    failures = []
    for fam, s in INSTANCES:
        inst = instance(fam, s)
        for _ in range(200):
            w = random_fword(inst.rprime, rng)
            d = word_to_diagram(inst.rprime, w)
            if not dg.equal(psi(inst, phi(inst, d)), d):
                failures.append((inst.name, str(w)))
    return not failures, f"{len(INSTANCES)} instances x 200 words, failing: {failures[:3]}"


def check_roundtrip_phi_psi(rng):
    inst = instance("fib3")
    loops = bfs_loops(inst.target, (A,), 60, rng, depth=8)
    failures = sum(1 for d in loops if not dg.equal(phi(inst, psi(inst, d)), d))
    ok = len(loops) >= 50 and failures == 0
    return ok, f"{len(loops)} search-built (a,a)-diagrams, {failures} failures"


def check_basic_metrics(rng):
    problems = []
    cases = [instance("fib3"), instance("fib4")]
    cases += [instance("johnson-odd", s) for s in (1, 2, 3)]
    cases += [instance("johnson-even", s) for s in (1, 2, 3, 4)]
    for inst in cases:
        for x in (A, B):
            bot = basic_bottom(inst, x)
            cells = len(basic_atoms(inst, x))
            if inst.family == "johnson-odd":
                r = inst.r
                want_len, want_cells = r * r, r + 1
            elif inst.family == "johnson-even":
                want_len, want_cells = 4 * inst.s - 1, 2
            elif inst.family == "fib3":
                want_len, want_cells = 9, 4
            else:
                want_len, want_cells = 11, 2
            alternating = all(u != v for u, v in zip(bot, bot[1:])) and bot[0] == bot[-1] == x
            if (len(bot), cells) != (want_len, want_cells) or not alternating or len(bot) != inst.rprime:
                problems.append((inst.name, x, len(bot), cells))
    return not problems, f"{len(cases)} instances x 2 letters, problems: {problems}"


def check_pl_representation(rng):
    bad_fr = 0
    for k in range(200):
        r = (2, 9)[k % 2]
        d = word_to_diagram(r, random_fword(r, rng))
        if not validate_fr(diagram_to_plmap(d), r):
            bad_fr += 1
    f0 = diagram_to_plmap(generator(2, 0))
    want = ((0, 0), (Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 2), Fraction(3, 4)), (1, 1))
    gen_ok = f0.points == tuple((Fraction(x), Fraction(y)) for x, y in want)
    bad_fun = 0
    pres = [pr(2), pr(9), parse_presentation(P23_TEXT)]
    for k in range(200):
        p = pres[k % len(pres)]
        d1 = random_diagram(p, rng, max_atoms=12)
        d2 = random_walk(p, d1.bottom, rng.randint(0, 12), rng, 14)
        lhs = diagram_to_plmap(dg.compose(d1, d2))
        if not pl_equal(lhs, compose_pl(diagram_to_plmap(d1), diagram_to_plmap(d2))):
            bad_fun += 1
    ok = bad_fr == 0 and gen_ok and bad_fun == 0
    return ok, f"F_r validation failures={bad_fr}, x0 breakpoints {'ok' if gen_ok else f0}, functoriality failures={bad_fun}"


def check_faithfulness(rng):
    seen = 0
    identities = 0
    one = identity(1)
    while seen < 500:
        d = word_to_diagram(2, random_fword(2, rng))
        if not d.atoms:
            continue
        seen += 1
        if pl_equal(diagram_to_plmap(d), one):
            identities += 1
    return identities == 0, f"500 nontrivial reduced (x,x)-diagrams, {identities} identity maps"


def check_semigroup_counts(rng):
    q8 = count_elements(fibonacci_presentation(3))
    ten = count_elements(instance("fib4").target)
    return (q8, ten) == (8, 10), f"P_3 -> {q8}, fib4 target -> {ten}"


def check_non_abelian(rng):
    commuting = []
    for fam, s in INSTANCES:
        inst = instance(fam, s)
        x0, x1 = phi(inst, generator(inst.rprime, 0)), phi(inst, generator(inst.rprime, 1))
        if dg.equal(dg.compose(x0, x1), dg.compose(x1, x0)):
            commuting.append(inst.name)
    return not commuting, f"{len(INSTANCES)} instances, commuting images: {commuting}"


def check_parity_laws(rng):
    p = parse_presentation(P23_TEXT)
    bad = 0
    for k in range(100):
        d = random_walk(p, ((A, B)[k % 2],), rng.randint(0, 25), rng, 40, positive=True)
        if parity_violations(realize(d)):
            bad += 1
    return bad == 0, f"100 positive diagrams, {bad} with violations"


CHECKS: tuple[tuple[str, Callable], ...] = (
    ("example diagram counts", check_example),
    ("reduction uniqueness", check_reduction_uniqueness),
    ("group axioms", check_group_axioms),
    ("Thompson relations", check_thompson_relations),
    ("phi homomorphism", check_phi_homomorphism),
    ("round trip psi(phi)", check_roundtrip_psi_phi),
    ("round trip phi(psi) on search-built diagrams", check_roundtrip_phi_psi),
    ("basic diagram metrics", check_basic_metrics),
    ("PL representation", check_pl_representation),
    ("faithfulness sampling", check_faithfulness),
    ("semigroup counts", check_semigroup_counts),
    ("non-abelian image", check_non_abelian),
    ("parity laws", check_parity_laws),
)


def run_check(index: int, seed: int = 0) -> CheckResult:
    name, fn = CHECKS[index - 1]
    t0 = time.perf_counter()
    try:
        passed, detail = fn(random.Random(seed * 1000 + index))
    except Exception as exc:  # a crash is a failed check, reported with its message
        passed, detail = False, f"error: {type(exc).__name__}: {exc}"
    return CheckResult(index, name, passed, detail, time.perf_counter() - t0)


def run_all(seed: int = 0) -> list[CheckResult]:
    return [run_check(k, seed) for k in range(1, len(CHECKS) + 1)]
