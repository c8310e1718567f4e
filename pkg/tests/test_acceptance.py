"""Acceptance criteria, one test per criterion.

Every criterion is an exact statement (integer counts, set equality,
structural equality), so the tolerance is pinned to zero everywhere.
Each test records one ``ACCEPTANCE <k> PASS|FAIL`` line that is repeated
in the terminal summary.
"""
import io

from catalan_bijections import verify as V
from catalan_bijections.cli import main
from catalan_bijections.model import RECURSIVE_FAMILIES

TOLERANCE = 0  # exact: no criterion admits approximation
N_EXHAUSTIVE = 12
N_ALPHA = 10
N_ORACLE = 8
N_RULES = 8
N_INDUCED = 10
N_CODEC = 10
N_RECT = 6
FUZZ_TERMS = 10_000
RANDOM_ALPHA_TERMS = 1_000


def _settle(acceptance, number, title, results):
    failed = [r.line() for r in results if not r.passed]
    acceptance(number, title, not failed, f"{len(results)} checks, tolerance {TOLERANCE}")
    assert not failed, "\n".join(failed)


def test_criterion_01_counts(acceptance):
    results = [V.check_count(X, n) for X in RECURSIVE_FAMILIES for n in range(N_EXHAUSTIVE + 1)]
    prefix = [V.catalan(n) for n in range(11)]
    known = prefix == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    results.append(V.CheckResult("known-prefix", 10, known, str(prefix)))
    _settle(acceptance, 1, "counts: T, S, A yield c_n distinct valid shapes, n <= 12", results)


def test_criterion_02_class_counts(acceptance):
    results = [V.check_class_counts(n) for n in range(1, N_EXHAUSTIVE + 1)]
    _settle(acceptance, 2, "class counts and the convolution identity, n + 1 <= 13", results)


def test_criterion_03_alpha(acceptance):
    results = [V.check_alpha(n) for n in range(N_ALPHA + 1)]
    results.append(V.check_alpha_random(N_EXHAUSTIVE, RANDOM_ALPHA_TERMS, seed=12))
    _settle(acceptance, 3, "alpha bijective, invertible, functorial, commutes with step", results)


def test_criterion_04_oracle(acceptance):
    results = [V.check_oracle(X, n) for X in RECURSIVE_FAMILIES for n in range(N_ORACLE + 1)]
    _settle(acceptance, 4, "constructor enumeration equals brute force, n <= 8", results)


def test_criterion_05_beta(acceptance):
    results = [V.check_beta(n) for n in range(N_EXHAUSTIVE + 1)]
    results += [V.check_beta_local_rules(n) for n in range(N_RULES + 1)]
    _settle(acceptance, 5, "beta and beta_inv mutually inverse n <= 12; local rules n <= 8", results)


def test_criterion_06_alpha_vs_beta(acceptance):
    results = [V.check_alpha_vs_beta(n) for n in range(4)]
    same, differ = V.compare_alpha_beta(3)
    results.append(V.CheckResult("split", 3, (len(same), len(differ)) == (3, 2), f"{len(same)}/{len(differ)}"))
    _settle(acceptance, 6, "alpha = beta for n <= 2; 3 agree and 2 transposed at n = 3", results)


def test_criterion_07_worked_example(acceptance):
    _settle(acceptance, 7, "size-12 worked example round-trips in S, T and A", [V.check_worked_example()])


def test_criterion_08_classical(acceptance):
    results = [V.check_classical(n) for n in range(N_EXHAUSTIVE + 1)]
    results += [V.check_induced(n) for n in range(N_INDUCED + 1)]
    _settle(acceptance, 8, "tiling/binary and arcs/planar n <= 12; induced map n <= 10", results)


class _LineCounter(io.TextIOBase):
    def __init__(self):
        self.lines = 0

    def write(self, text):
        self.lines += text.count("\n")
        return len(text)


def _cli(*argv) -> str:
    out = io.StringIO()
    assert main(list(argv), out=out) == 0
    return out.getvalue()


def test_criterion_09_codec_and_cli(acceptance):
    results = [V.check_codec(n) for n in range(N_CODEC + 1)]
    results.append(V.check_codec_fuzz(FUZZ_TERMS, seed=7, max_size=20))
    for family in ("T", "S", "A", "B", "P", "terms"):
        bad = []
        for n in range(N_EXHAUSTIVE + 1):
            counter = _LineCounter()
            main(["enum", "--family", family, "--n", str(n)], out=counter)
            if counter.lines != int(_cli("count", "--family", family, "--n", str(n))):
                bad.append(n)
        results.append(V.CheckResult(f"enum-lines[{family}]", N_EXHAUSTIVE, not bad, f"mismatch at {bad}"))
    serial = _cli("verify", "--max-n", "5", "--jobs", "1")
    parallel = _cli("verify", "--max-n", "5", "--jobs", "3")
    results.append(V.CheckResult("jobs-determinism", 5, serial == parallel, f"{len(serial)} bytes"))
    _settle(acceptance, 9, "codec round trips, enum line counts, output independent of --jobs", results)


def test_criterion_10_rectangulations(acceptance):
    results = [V.check_rectangulations(n) for n in range(N_RECT + 1)]
    _settle(acceptance, 10, "n-rectangle staircase tilings are exactly the diagonal ones, n <= 6", results)
