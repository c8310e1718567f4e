"""Exhaustive checks of every counting identity and bijection in the package.

The brute-force generators in this module are written against the
definitions of the families alone and never call the constructors, so
comparing them with the constructor-driven enumeration is a real test.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Iterable

from . import terms as T
from .alpha import alpha
from .beta import beta, beta_inv, check_beta_rules
from .classical import (
    arcs_to_planar,
    binary_to_tiling,
    induced,
    planar_to_arcs,
    tiling_to_binary,
)
from .codec import TERM, format_literal, parse_literal
from .model import (
    LEAF,
    RECURSIVE_FAMILIES,
    ArcTree,
    BinaryTree,
    CatalanError,
    Family,
    Node,
    PlanarTree,
    Rect,
    StaircaseTiling,
    staircase_cells,
    validate,
)

MAX_CATALAN_N = 35
INT64_MAX = 2**63 - 1

WORKED_EXAMPLE = "f(m(l(r(m(m(E))))),r(f(m(E),r(r(m(E))))))"
KNOWN_CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)


class CatalanOverflow(CatalanError, OverflowError):
    pass


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number by the convolution recursion, kept inside the signed 64-bit range."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_CATALAN_N:
        raise CatalanOverflow(f"c_{n} exceeds the 64-bit range (largest supported n is {MAX_CATALAN_N})")
    if n == 0:
        return 1
    total = 0
    for k in range(n):
        total += catalan(k) * catalan(n - 1 - k)
        if total > INT64_MAX:
            raise CatalanOverflow(f"c_{n} exceeds the 64-bit range")
    return total


def catalan_closed(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ------------------------------------------------------------ brute force


@lru_cache(maxsize=None)
def _labelled_trees(n: int) -> tuple:
    """All slot-labelled unary-binary trees of size n, unfiltered."""
    if n == 0:
        return (None,)
    if n == 1:
        return (LEAF,)
    out = []
    for sub in _labelled_trees(n - 1):
        out += [Node(mid=sub), Node(right=sub), Node(left=sub)]
    for a in range(1, n - 1):
        for x, y in product(_labelled_trees(a), _labelled_trees(n - 1 - a)):
            out.append(Node(left=x, right=y))
    return tuple(out)


def _brute_tilings(n: int) -> Iterable[StaircaseTiling]:
    cells = sorted(staircase_cells(n))
    free = set(cells)
    chosen: list[Rect] = []

    def search():
        if not free:
            yield StaircaseTiling(n, tuple(chosen))
            return
        r, c = min(free)
        # rectangles with top-left (r, c) and bottom-right on the diagonal
        for r2 in range(r, n + 2 - c):
            c2 = n + 1 - r2
            if c2 < c:
                break
            block = {(i, j) for i in range(r, r2 + 1) for j in range(c, c2 + 1)}
            if block <= free:
                free.difference_update(block)
                chosen.append(Rect(r, c, r2, c2))
                yield from search()
                chosen.pop()
                free.update(block)

    yield from search()


def _brute_arcs(n: int) -> Iterable[ArcTree]:
    for rend in product(*(range(p + 1, n + 1) for p in range(n))):
        a = ArcTree(rend)
        if not validate(Family.A, a):
            yield a


def brute_force_family(family, n: int) -> set:
    """Every valid size-``n`` shape, found without the constructors."""
    family = Family(family)
    if n > 8:
        raise ValueError("brute force is limited to n <= 8")
    if family is Family.T:
        return {t for t in _labelled_trees(n) if not validate(Family.T, t)}
    if family is Family.S:
        return {s for s in _brute_tilings(n) if not validate(Family.S, s)}
    if family is Family.A:
        return set(_brute_arcs(n))
    if family is Family.B:
        return set(_all_binary(n))
    return set(_all_planar(n))


@lru_cache(maxsize=None)
def _all_binary(n: int) -> tuple:
    if n == 0:
        return (None,)
    return tuple(
        BinaryTree(a, b)
        for k in range(n)
        for a in _all_binary(k)
        for b in _all_binary(n - 1 - k)
    )


@lru_cache(maxsize=None)
def _all_planar(n: int) -> tuple:
    # first child's subtree has size k, the rest of the root has n - 1 - k
    if n == 0:
        return (PlanarTree(()),)
    return tuple(
        PlanarTree((first,) + rest.children)
        for k in range(n)
        for first in _all_planar(k)
        for rest in _all_planar(n - 1 - k)
    )


def all_binary(n: int) -> tuple:
    return _all_binary(n)


def all_planar(n: int) -> tuple:
    return _all_planar(n)


def rectangulations(n: int, limit: int) -> set[StaircaseTiling]:
    """All tilings of the size-n staircase by at most ``limit`` axis-parallel rectangles."""
    free = set(staircase_cells(n))
    chosen: list[Rect] = []
    found = set()

    def search():
        if not free:
            found.add(StaircaseTiling(n, tuple(chosen)))
            return
        if len(chosen) == limit:
            return
        r, c = min(free)
        width = 0
        while (r, c + width) in free:
            width += 1
        for w in range(1, width + 1):
            r2 = r
            while all((r2 + 1, j) in free for j in range(c, c + w)):
                r2 += 1
            for bottom in range(r, r2 + 1):
                block = {(i, j) for i in range(r, bottom + 1) for j in range(c, c + w)}
                free.difference_update(block)
                chosen.append(Rect(r, c, bottom, c + w - 1))
                search()
                chosen.pop()
                free.update(block)

    search()
    return found


# ----------------------------------------------------------------- checks


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"CHECK {self.name} n={self.n} {'PASS' if self.passed else 'FAIL'} {self.detail}".rstrip()


def _result(name: str, n: int, problems: list[str], ok_detail: str) -> CheckResult:
    if problems:
        extra = f" (+{len(problems) - 3} more)" if len(problems) > 3 else ""
        return CheckResult(name, n, False, "; ".join(problems[:3]) + extra)
    return CheckResult(name, n, True, ok_detail)


def check_catalan(n: int) -> CheckResult:
    problems = []
    value = catalan(n)
    if value != catalan_closed(n):
        problems.append(f"recursion {value} != closed form {catalan_closed(n)}")
    if n < len(KNOWN_CATALAN) and value != KNOWN_CATALAN[n]:
        problems.append(f"c_{n}={value}, expected {KNOWN_CATALAN[n]}")
    return _result("catalan", n, problems, f"c_{n}={value}")


def check_count(family, n: int) -> CheckResult:
    family = Family(family)
    problems = []
    seen = set()
    for shape in T.enumerate_family(family, n):
        bad = validate(family, shape)
        if bad:
            problems.append(f"invalid shape {format_literal(family, shape)}: {bad[0]}")
        seen.add(shape)
    if len(seen) != catalan(n):
        problems.append(f"{len(seen)} distinct shapes, expected {catalan(n)}")
    return _result(f"count[{family.value}]", n, problems, f"{len(seen)} distinct valid shapes")


def class_counts(size: int) -> dict[str, int]:
    counts = dict.fromkeys(T.OPS, 0)
    for t in T.enum_terms(size):
        counts[t.op] += 1
    return counts


def check_class_counts(n: int) -> CheckResult:
    """Class sizes among terms of size n + 1 (requires n >= 1)."""
    c = catalan
    got = class_counts(n + 1)
    want = {
        "r": c(n),
        "m": c(n),
        "l": c(n) - c(n - 1),
        "f": sum(c(n - k) * (c(k) - c(k - 1)) for k in range(2, n)),
    }
    problems = [f"#{op}-rooted={got[op]}, expected {want[op]}" for op in T.OPS if got[op] != want[op]]
    if sum(want.values()) != c(n + 1):
        problems.append(f"class sizes sum to {sum(want.values())}, not c_{n + 1}={c(n + 1)}")
    lhs = sum(c(k) * c(n - k) for k in range(1, n))
    if lhs != c(n + 1) - 2 * c(n):
        problems.append(f"sum c_k c_(n-k) = {lhs} != c_(n+1) - 2c_n = {c(n + 1) - 2 * c(n)}")
    detail = " ".join(f"{op}={got[op]}" for op in T.OPS)
    return _result("class-counts", n + 1, problems, detail)


def _alpha_problems(terms_: list[T.Term], functorial: bool = True, commute: bool = True) -> list[str]:
    fams = RECURSIVE_FAMILIES
    problems: list[str] = []
    shapes = {X: [T.evaluate(X, t) for t in terms_] for X in fams}
    index = {X: {s: i for i, s in enumerate(shapes[X])} for X in fams}
    for X in fams:
        if len(index[X]) != len(terms_):
            problems.append(f"{X.value}: distinct terms evaluate to equal shapes")
    image = {}
    for X in fams:
        for Y in fams:
            imgs = [alpha(X, Y, s) for s in shapes[X]]
            image[X, Y] = imgs
            if imgs != shapes[Y]:
                bad = sum(a != b for a, b in zip(imgs, shapes[Y]))
                problems.append(f"alpha({X.value}->{Y.value}) disagrees with the term on {bad} shapes")
            if len(set(imgs)) != len(imgs) or set(imgs) != set(shapes[Y]):
                problems.append(f"alpha({X.value}->{Y.value}) is not a bijection")
    for X in fams:
        for Y in fams:
            back = image[Y, X]
            for i, y in enumerate(image[X, Y]):
                j = index[Y].get(y)
                if j is None or back[j] != shapes[X][i]:
                    problems.append(f"alpha({Y.value}->{X.value}) does not invert alpha({X.value}->{Y.value})")
                    break
    if functorial:
        for X, Y, Z in product(fams, repeat=3):
            for i, s in enumerate(shapes[X]):
                j = index[Y].get(image[X, Y][i])
                if j is None or image[Y, Z][j] != image[X, Z][i]:
                    problems.append(f"functoriality fails for {X.value}->{Y.value}->{Z.value}")
                    break
    if commute:
        smaller: dict = {}
        for X in fams:
            for i, s in enumerate(shapes[X]):
                if T.size(X, s) == 0:
                    continue
                op, ins = T.decompose(X, s, check=False)
                for Y in fams:
                    mapped = []
                    for x in ins:
                        if (X, Y, x) not in smaller:
                            smaller[X, Y, x] = alpha(X, Y, x)
                        mapped.append(smaller[X, Y, x])
                    if image[X, Y][i] != T.step(Y, op, mapped):
                        problems.append(f"alpha({X.value}->{Y.value}) does not commute with step {op}")
                        break
    return problems


def check_alpha(n: int) -> CheckResult:
    terms_ = list(T.enum_terms(n))
    problems = _alpha_problems(terms_)
    return _result("alpha", n, problems, f"6 directions bijective on {len(terms_)} shapes; functorial; commutes with step")


def check_alpha_random(n: int, count: int = 1000, seed: int = 12) -> CheckResult:
    rng = random.Random(seed)
    pool = list(T.enum_terms(n))
    sample = rng.sample(pool, min(count, len(pool)))
    problems = _alpha_problems(sample)
    return _result("alpha-random", n, problems, f"{len(sample)} random terms")


def check_oracle(family, n: int) -> CheckResult:
    family = Family(family)
    built = set(T.enumerate_family(family, n))
    oracle = brute_force_family(family, n)
    problems = []
    if built != oracle:
        problems.append(f"{len(built - oracle)} built-only, {len(oracle - built)} oracle-only")
    return _result(f"oracle[{family.value}]", n, problems, f"{len(oracle)} shapes agree")


def check_beta(n: int) -> CheckResult:
    problems = []
    images = set()
    count = 0
    for t in T.enumerate_family(Family.T, n):
        count += 1
        s = beta(t)
        images.add(s)
        if validate(Family.S, s):
            problems.append(f"beta({format_literal('T', t)}) invalid")
        elif beta_inv(s) != t:
            problems.append(f"beta_inv(beta({format_literal('T', t)})) differs")
    if len(images) != count:
        problems.append("beta is not injective")
    # injective into S and onto every enumerated tiling: beta_inv is then its two-sided inverse
    missing = sum(1 for s in T.enumerate_family(Family.S, n) if s not in images)
    if missing:
        problems.append(f"{missing} tilings are not beta images")
    return _result("beta", n, problems, f"mutually inverse on {count} shapes")


def check_beta_local_rules(n: int) -> CheckResult:
    problems = []
    for t in T.enumerate_family(Family.T, n):
        report = check_beta_rules(t, beta(t))
        if report:
            problems.append(f"{format_literal('T', t)}: {report[0]}")
    return _result("beta-rules", n, problems, "five local rules hold")


def compare_alpha_beta(n: int) -> tuple[list, list]:
    """Trees where alpha and beta agree, and those where they differ."""
    same, differ = [], []
    for t in T.enumerate_family(Family.T, n):
        (same if alpha("T", "S", t) == beta(t) else differ).append(t)
    return same, differ


def check_alpha_vs_beta(n: int) -> CheckResult:
    same, differ = compare_alpha_beta(n)
    problems = []
    if n <= 2 and differ:
        problems.append(f"{len(differ)} trees differ")
    if n == 3:
        if (len(same), len(differ)) != (3, 2):
            problems.append(f"{len(same)} equal / {len(differ)} differ, expected 3 / 2")
        else:
            a, b = differ
            if not (alpha("T", "S", a) == beta(b) and alpha("T", "S", b) == beta(a)):
                problems.append("the two differing images are not transposed")
    detail = f"{len(same)} equal, {len(differ)} swapped" if n == 3 else f"{len(same)} equal, {len(differ)} differ"
    return _result("alpha-vs-beta", n, problems, detail)


def check_worked_example() -> CheckResult:
    problems = []
    term = parse_literal(TERM, WORKED_EXAMPLE)
    s = T.evaluate(Family.S, term)
    again = format_literal(TERM, T.term_of(Family.S, s))
    if again != WORKED_EXAMPLE:
        problems.append(f"re-extracted term {again}")
    for X in (Family.T, Family.A):
        img = alpha(Family.S, X, s)
        if T.size(X, img) != 12:
            problems.append(f"alpha image in {X.value} has size {T.size(X, img)}")
        if format_literal(TERM, T.term_of(X, img)) != WORKED_EXAMPLE:
            problems.append(f"alpha image in {X.value} decomposes differently")
    return _result("worked-example", 12, problems, format_literal(Family.S, s))


def check_classical(n: int) -> CheckResult:
    problems = []
    tilings = list(T.enumerate_family(Family.S, n))
    binaries = [tiling_to_binary(s) for s in tilings]
    if set(binaries) != set(all_binary(n)) or len(set(binaries)) != len(tilings):
        problems.append("tiling_to_binary is not a bijection")
    if any(binary_to_tiling(b) != s for b, s in zip(binaries, tilings)):
        problems.append("binary_to_tiling does not invert tiling_to_binary")
    arcs = list(T.enumerate_family(Family.A, n))
    planars = [arcs_to_planar(a) for a in arcs]
    if set(planars) != set(all_planar(n)) or len(set(planars)) != len(arcs):
        problems.append("arcs_to_planar is not a bijection")
    if any(planar_to_arcs(p) != a for p, a in zip(planars, arcs)):
        problems.append("planar_to_arcs does not invert arcs_to_planar")
    return _result("classical", n, problems, f"{len(tilings)} binary and planar trees")


def check_induced(n: int) -> CheckResult:
    problems = []
    bins = all_binary(n)
    planars = [induced("B", "P", b) for b in bins]
    if len(set(planars)) != len(bins) or set(planars) != set(all_planar(n)):
        problems.append("induced B->P is not a bijection")
    if any(induced("P", "B", p) != b for p, b in zip(planars, bins)):
        problems.append("induced P->B does not invert B->P")
    return _result("induced", n, problems, f"{len(bins)} pairs")


def check_codec(n: int) -> CheckResult:
    problems = []
    for t in T.enum_terms(n):
        if parse_literal(TERM, format_literal(TERM, t)) != t:
            problems.append(f"term {t} does not round-trip")
    for fam in RECURSIVE_FAMILIES:
        for x in T.enumerate_family(fam, n):
            if parse_literal(fam, format_literal(fam, x)) != x:
                problems.append(f"{fam.value} literal {format_literal(fam, x)} does not round-trip")
    for fam, pool in ((Family.B, all_binary(n)), (Family.P, all_planar(n))):
        for x in pool:
            if parse_literal(fam, format_literal(fam, x)) != x:
                problems.append(f"{fam.value} literal {format_literal(fam, x)} does not round-trip")
    return _result("codec", n, problems, "parse(format(x)) == x for every family")


def random_term(size: int, rng: random.Random) -> T.Term:
    """A random well-formed term of the given size (not uniform)."""
    if size == 0:
        return T.E
    options = ["m"]
    if size >= 2:
        options.append("r")
    if size >= 3:
        options.append("l")
    if size >= 4:
        options.append("f")
    op = rng.choice(options)
    if op == "m":
        return T.m(random_term(size - 1, rng))
    if op == "r":
        return T.r(random_term(size - 1, rng))
    if op == "l":
        return T.l(_random_unmarked(size - 1, rng))
    k = rng.randint(2, size - 2)
    return T.f(random_term(size - 1 - k, rng), _random_unmarked(k, rng))


def _random_unmarked(size: int, rng: random.Random) -> T.Term:
    while True:
        t = random_term(size, rng)
        if t.op != "m":
            return t


def check_codec_fuzz(count: int = 10_000, seed: int = 7, max_size: int = 20) -> CheckResult:
    rng = random.Random(seed)
    problems = []
    for _ in range(count):
        t = random_term(rng.randint(0, max_size), rng)
        text = format_literal(TERM, t)
        spaced = " ".join(text)
        if parse_literal(TERM, text) != t or parse_literal(TERM, spaced) != t:
            problems.append(f"{text} does not round-trip")
    return _result("codec-fuzz", max_size, problems, f"{count} random terms")


def check_rectangulations(n: int) -> CheckResult:
    found = rectangulations(n, n)
    exact = {s for s in found if len(s.rects) == n}
    diagonal = set(T.enumerate_family(Family.S, n))
    problems = []
    if exact != diagonal:
        problems.append(f"{len(exact)} n-rectangle tilings vs {len(diagonal)} diagonal tilings")
    if any(len(s.rects) < n for s in found):
        problems.append("a tiling with fewer than n rectangles exists")
    return _result("rectangulations", n, problems, f"{len(exact)} tilings with exactly {n} rectangles")


# ------------------------------------------------------------------ suite


def suite_jobs(max_n: int, oracle_n: int | None = None) -> list[tuple[str, tuple]]:
    """The ordered list of (check function name, args) that make up the suite."""
    if oracle_n is None:
        oracle_n = min(max_n, 8)
    oracle_n = min(oracle_n, 8)
    jobs: list[tuple[str, tuple]] = []
    jobs += [("check_catalan", (n,)) for n in range(max_n + 2)]
    jobs += [("check_count", (X.value, n)) for X in RECURSIVE_FAMILIES for n in range(max_n + 1)]
    jobs += [("check_class_counts", (n,)) for n in range(1, max_n + 1)]
    jobs += [("check_alpha", (n,)) for n in range(min(max_n, 10) + 1)]
    if max_n > 10:
        jobs.append(("check_alpha_random", (max_n,)))
    jobs += [("check_oracle", (X.value, n)) for X in RECURSIVE_FAMILIES for n in range(oracle_n + 1)]
    jobs += [("check_beta", (n,)) for n in range(max_n + 1)]
    jobs += [("check_beta_local_rules", (n,)) for n in range(min(max_n, 8) + 1)]
    jobs += [("check_alpha_vs_beta", (n,)) for n in range(min(max_n, 3) + 1)]
    jobs.append(("check_worked_example", ()))
    jobs += [("check_classical", (n,)) for n in range(max_n + 1)]
    jobs += [("check_induced", (n,)) for n in range(min(max_n, 10) + 1)]
    jobs += [("check_codec", (n,)) for n in range(min(max_n, 10) + 1)]
    jobs.append(("check_codec_fuzz", ()))
    jobs += [("check_rectangulations", (n,)) for n in range(min(max_n, 6) + 1)]
    return jobs


def run_job(job: tuple[str, tuple]) -> CheckResult:
    name, args = job
    fn: Callable[..., CheckResult] = globals()[name]
    try:
        return fn(*args)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return CheckResult(name.removeprefix("check_"), args[-1] if args else 0, False, f"error: {exc!r}")


def run_suite(max_n: int, oracle_n: int | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run every check up to ``max_n``; results come back in a fixed order."""
    work = suite_jobs(max_n, oracle_n)
    if jobs <= 1:
        return [run_job(j) for j in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_job, work, chunksize=1))


def format_table(results: list[CheckResult]) -> str:
    name_w = max([len("check")] + [len(r.name) for r in results])
    lines = [f"{'check':<{name_w}}  {'n':>3}  status  detail"]
    for r in results:
        lines.append(f"{r.name:<{name_w}}  {r.n:>3}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
