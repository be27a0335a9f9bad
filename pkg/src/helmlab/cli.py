"""Command-line verification harness.

Three subcommands:

    verify --n N [--format text|json]      run the full per-n check suite
    sweep --min A --max B [--parallel]     one report per n, merged ascending
    eig --matrix S|B|A --n N               circulant spectra vs analytic values

Exit codes: 0 all checks pass, 1 at least one check failed, 2 invalid
arguments.  Rationals are serialized as exact "p/q" strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .characterization import (
    build_kernel_projector,
    check_conditions_i_vi,
    check_equiv_formulation,
    check_uniqueness,
    rank_l_check,
    schur_psd_check,
)
from .circulant import (
    CirculantSpec,
    circulant_eigenvalues,
    cycle_signless_laplacian_spec,
    materialize,
)
from .closed_form import (
    closed_form_inverse,
    closed_form_mp_inverse,
    make_even_case,
    make_odd_case,
    make_w_alpha,
    rank_one_scale,
)
from .exact_core import (
    Decomposition,
    InertiaTriple,
    RatMatrix,
    determinant,
    inertia,
    penrose_check,
    rank,
    vec,
)
from .graphs import NTooSmallError, bfs_distance_matrix, build_helm, helm_distance_block

EIG_TOLERANCE = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerificationReport:
    n: int
    parity: str
    checks: list[CheckResult]
    det: Fraction
    rank_d: int
    inertia_triple: InertiaTriple
    rank_l: int
    elapsed_ms: float

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "parity": self.parity,
            "checks": [
                {"name": c.name, "pass": c.passed, "detail": c.detail} for c in self.checks
            ],
            "summary": {
                "det": str(self.det),
                "rank": self.rank_d,
                "inertia": list(self.inertia_triple),
                "rank_L": self.rank_l,
                "elapsed_ms": self.elapsed_ms,
            },
        }

    def to_text(self) -> str:
        lines = [f"helm n={self.n} ({self.parity}), {2 * self.n - 1} vertices"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}: {c.detail}")
        tri = self.inertia_triple
        lines.append(
            f"  summary: det={self.det} rank={self.rank_d} "
            f"inertia=({tri.i_plus},{tri.i_minus},{tri.i_zero}) "
            f"rank_L={self.rank_l} elapsed={self.elapsed_ms:.1f}ms"
        )
        lines.append(f"  result: {'OK' if self.all_passed else 'FAILED'}")
        return "\n".join(lines)


def run_verification(n: int) -> VerificationReport:
    """Run every check for one n and collect the results.

    A check that raises is recorded as failed with the exception text;
    the report itself is always produced.
    """
    if n < 4:
        raise NTooSmallError(f"helm graphs need n >= 4, got {n}")
    start = time.perf_counter()
    even = n % 2 == 0
    parity = "even" if even else "odd"
    order = 2 * n - 1
    k = n - 1
    checks: list[CheckResult] = []

    def run_check(name: str, fn) -> None:
        try:
            passed, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        checks.append(CheckResult(name, passed, detail))

    d = helm_distance_block(n)
    det_val = determinant(d)
    rank_val = rank(d)
    inertia_val = inertia(d)

    def chk_block():
        ok = d == bfs_distance_matrix(build_helm(n))
        return ok, f"block formula vs BFS on {order} vertices"

    def chk_det():
        if even:
            expected = Fraction(3 * (n - 1) * 2 ** (n - 1))
            return det_val == expected, f"det(D) = {det_val}, expected 3(n-1)2^(n-1) = {expected}"
        return det_val == 0, f"det(D) = {det_val}, expected 0 (singular)"

    def chk_rank():
        expected = order if even else order - 1
        return rank_val == expected, f"rank(D) = {rank_val}, expected {expected}"

    def chk_inertia():
        expected = InertiaTriple(1, 2 * n - 2, 0) if even else InertiaTriple(1, 2 * n - 3, 1)
        return inertia_val == expected, f"inertia(D) = {tuple(inertia_val)}, expected {tuple(expected)}"

    run_check("distance_block_vs_bfs", chk_block)
    run_check("determinant", chk_det)
    run_check("rank", chk_rank)
    run_check("inertia", chk_inertia)

    vectors = make_w_alpha(n)
    case = make_even_case(n) if even else make_odd_case(n)
    lap = case.laplacian_like
    coupling = -RatMatrix.identity(k) if even else case.coupling_block
    ident = RatMatrix.identity(order)
    s_mat = materialize(cycle_signless_laplacian_spec(k))

    if even:

        def chk_closed():
            x = closed_form_inverse(n)
            ok = x @ d == ident
            return ok, "-L/2 + alpha ww' times D equals I; matches elimination inverse"

    else:

        def chk_closed():
            x = closed_form_mp_inverse(n)
            ok = penrose_check(d, x)
            return ok, "-L/2 + alpha ww' satisfies all four Penrose conditions; matches factorization pseudoinverse"

    run_check("closed_form_inverse" if even else "closed_form_mp_inverse", chk_closed)

    def chk_six():
        report = check_conditions_i_vi(case.rim_block, coupling, s_mat)
        held = sum(1 for b in report if b)
        return report.all_hold(), f"{held}/6 block conditions hold"

    run_check("six_conditions", chk_six)

    def chk_kernel():
        two_we = 2 * RatMatrix.outer(vectors.w, (Fraction(1),) * order)
        if even:
            ok = lap @ d + 2 * ident == two_we
            return ok, "L D + 2I = 2we' (correction vanishes: D nonsingular)"
        projector = build_kernel_projector(n).matrix
        ok = lap @ d + 2 * ident - two_we == projector
        return ok, "D V = 0, V L = 0, V w = 0, and L D + 2I - 2we' = V"

    run_check("kernel_projector", chk_kernel)

    dec = Decomposition(lap, vectors.w, vectors.alpha)

    def chk_equiv():
        ok = check_equiv_formulation(d, dec)
        return ok, "witness identities certify -L/2 + alpha ww' as the MP inverse"

    run_check("equiv_formulation", chk_equiv)

    def chk_unique():
        alpha, w = check_uniqueness(d, dec)
        expected_w = vec(
            [Fraction(5 - n, 4)] + [Fraction(-1, 4)] * k + [Fraction(1, 2)] * k
        )
        ok = alpha == rank_one_scale(n) and w == expected_w
        return ok, f"recovered alpha = {alpha} and w = (5-n, -e', 2e')'/4"

    run_check("uniqueness", chk_unique)

    rank_l_val = rank(lap)
    if not even:

        def chk_psd():
            ok = schur_psd_check(lap, n)
            return ok, f"inertia(L) = {tuple(inertia(lap))}; Schur chain verified"

        def chk_rank_l():
            r = rank_l_check(n)
            return r == 2 * n - 3, f"rank(L) = {r}, expected 2n-3 = {2 * n - 3}"

        run_check("psd_via_schur", chk_psd)
        run_check("rank_of_l", chk_rank_l)

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        n=n,
        parity=parity,
        checks=checks,
        det=det_val,
        rank_d=rank_val,
        inertia_triple=inertia_val,
        rank_l=rank_l_val,
        elapsed_ms=elapsed_ms,
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n < 4:
        print(f"error: --n must be >= 4, got {args.n}", file=sys.stderr)
        return 2
    report = run_verification(args.n)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.all_passed else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.min < 4 or args.min > args.max:
        print(f"error: need 4 <= min <= max, got {args.min}..{args.max}", file=sys.stderr)
        return 2
    values = list(range(args.min, args.max + 1))
    if args.parallel and len(values) > 1:
        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(run_verification, values))
    else:
        reports = [run_verification(n) for n in values]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        header = f"{'n':>3} {'parity':>6} {'det':>12} {'rank':>5} {'inertia':>12} {'rank_L':>6} {'ms':>8} result"
        print(header)
        print("-" * len(header))
        for r in reports:
            tri = f"({r.inertia_triple.i_plus},{r.inertia_triple.i_minus},{r.inertia_triple.i_zero})"
            status = "OK" if r.all_passed else "FAILED"
            print(
                f"{r.n:>3} {r.parity:>6} {str(r.det):>12} {r.rank_d:>5} {tri:>12} "
                f"{r.rank_l:>6} {r.elapsed_ms:>8.1f} {status}"
            )
        total = sum(1 for r in reports if r.all_passed)
        print(f"{total}/{len(reports)} parameter values fully verified")
    return 0 if all(r.all_passed for r in reports) else 1


def _cmd_eig(args: argparse.Namespace) -> int:
    n = args.n
    name = args.matrix
    if n < 4:
        print(f"error: --n must be >= 4, got {n}", file=sys.stderr)
        return 2
    if name in ("A", "B") and (n % 2 == 0 or n < 5):
        print(f"error: matrix {name} requires odd n >= 5, got {n}", file=sys.stderr)
        return 2
    k = n - 1
    if name == "S":
        spec = cycle_signless_laplacian_spec(k)
        analytic = [4 * math.cos(math.pi * j / k) ** 2 for j in range(k)]
        label = "4cos^2(pi j/(n-1))"
    else:
        data = make_odd_case(n)
        if name == "B":
            spec = CirculantSpec(data.coupling_spec)
            analytic = [0.0 if j == k // 2 else -1.0 for j in range(k)]
            label = "0 at j=(n-1)/2, else -1"
        else:
            spec = CirculantSpec(data.rim_spec)
            analytic = [
                1.5
                if j == 0
                else (0.0 if j == k // 2 else 1.0 + 1.0 / (2 * math.cos(math.pi * j / k) ** 2))
                for j in range(k)
            ]
            label = "3/2 at j=0, 0 at j=(n-1)/2, else 1 + 1/(2cos^2(pi j/(n-1)))"
    computed = circulant_eigenvalues(spec)
    print(f"eigenvalues of {name} for n={n} (order {k}); analytic: {label}")
    print(f"{'j':>3} {'computed':>24} {'analytic':>24} {'deviation':>12}")
    max_dev = 0.0
    for j, (c, a) in enumerate(zip(computed, analytic)):
        dev = abs(c - a)
        max_dev = max(max_dev, dev)
        print(f"{j:>3} {c.real:>24.17g} {a:>24.17g} {dev:>12.3e}")
    print(f"max deviation = {max_dev:.3e} (tolerance {EIG_TOLERANCE:.0e})")
    return 0 if max_dev < EIG_TOLERANCE else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helmlab",
        description="Exact verification of helm graph distance matrix identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full check suite for one n")
    p_verify.add_argument("--n", type=int, required=True, help="helm parameter, n >= 4")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="verify a range of n")
    p_sweep.add_argument("--min", type=int, default=4)
    p_sweep.add_argument("--max", type=int, default=13)
    p_sweep.add_argument("--parallel", action="store_true", help="one process per n")
    p_sweep.add_argument("--format", choices=("text", "json"), default="text")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_eig = sub.add_parser("eig", help="circulant spectra vs analytic values")
    p_eig.add_argument("--matrix", choices=("S", "B", "A"), required=True,
                       help="S: rim cycle signless Laplacian; A/B: odd-case rim/coupling blocks")
    p_eig.add_argument("--n", type=int, required=True)
    p_eig.set_defaults(func=_cmd_eig)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
