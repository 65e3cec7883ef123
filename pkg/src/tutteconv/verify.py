"""The identity suite run by ``tutteconv verify``, one named check at a time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import convolution as conv
from . import engines as eng
from . import hopf
from .errors import MatroidError
from .matroid import Matroid
from .poly import Poly

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED(size)"

DECOMPOSITION_CAP = 10
VANISHING_CAP = 10
HOPF_CAP = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f"  ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class Check:
    name: str
    cap: int
    run: Callable[[Matroid, Poly], bool]


def engine_agreement(M: Matroid, T: Poly) -> bool:
    rng = np.random.default_rng(M.n)
    for engine in eng.TutteEngine:
        if not eng.within_cap(engine, M):
            continue
        if engine is eng.TutteEngine.ACTIVITIES:
            orders = eng.all_orderings_sample(M.n, 3, rng)
            if any(eng.tutte_activities(M, o) != T for o in orders):
                return False
        elif eng.tutte(M, engine) != T:
            return False
    return True


def vanishing_terms(M: Matroid, T: Poly) -> bool:
    """Non-flats kill the contraction factor; isthmuses kill the restriction factor."""
    closures = M.closures()
    isthmuses = M.isthmuses_of_restrictions(np.arange(1 << M.n))
    for A in range(1 << M.n):
        if closures[A] != A and eng.tutte_ranksum(M.contract(A)).subst(y=0):
            return False
        if isthmuses[A] and eng.tutte_ranksum(M.restrict(A)).subst(x=0):
            return False
    return True


def evaluations(M: Matroid, T: Poly) -> bool:
    s = eng.specializations(M, T)
    return (s.bases == len(M.bases())
            and s.independent_sets == M.independent_count()
            and s.spanning_sets == M.spanning_count()
            and s.subsets == 1 << M.n)


def basis_decomposition(M: Matroid, T: Poly) -> bool:
    orders = [list(range(M.n)), list(range(M.n))[::-1]]
    orders += eng.all_orderings_sample(M.n, 3, np.random.default_rng(7))[1:2]
    for order in orders:
        for B in M.bases():
            eng.decompose_basis(M, order, B)
    return True


def _hopf(fn: Callable[[Matroid], bool]) -> Callable[[Matroid, Poly], bool]:
    return lambda M, T: fn(M)


CHECKS: list[Check] = [
    Check("engine-agreement", 24, engine_agreement),
    Check("evaluations", 24, evaluations),
    Check("duality", 24, lambda M, T: eng.reference_tutte(M.dual()) == T.swap_xy()),
    Check("subset-convolution", eng.SIZE_CAPS[eng.TutteEngine.CONV_SUBSETS],
          lambda M, T: eng.tutte_conv_subsets(M) == T),
    Check("isthmus-free-flats", eng.SIZE_CAPS[eng.TutteEngine.CONV_FLATS],
          lambda M, T: eng.tutte_conv_flats(M) == T),
    Check("vanishing-terms", VANISHING_CAP, vanishing_terms),
    Check("zeta-inverse", conv.MAX_SINGLE, lambda M, T: conv.verify_zeta_inverse(M)),
    Check("shift-bridge", conv.MAX_SINGLE, conv.verify_shift_bridge),
    Check("tutte-factorization", 14, conv.verify_tutte_product),
    Check("inverse-recursion", eng.SIZE_CAPS[eng.TutteEngine.RECURSION],
          lambda M, T: eng.tutte_recursion(M) == T),
    Check("rho-specializations", conv.MAX_SINGLE, conv.rho_specializations_hold),
    Check("rho-factorization", 10, lambda M, T: conv.verify_rho_factorization(M)),
    Check("recursion-functional", 12, lambda M, T: conv.verify_recursion_functional(M)),
    Check("basis-decomposition", DECOMPOSITION_CAP, basis_decomposition),
    Check("hopf-counit", hopf.COASSOCIATIVITY_CAP, _hopf(hopf.check_counit)),
    Check("hopf-coassociativity", hopf.COASSOCIATIVITY_CAP, _hopf(hopf.check_coassociativity)),
    Check("hopf-bidegree", HOPF_CAP, _hopf(hopf.check_bidegree_additivity)),
    Check("hopf-involution", HOPF_CAP, _hopf(hopf.check_phi_involution)),
    Check("hopf-duality", HOPF_CAP, _hopf(hopf.check_phi_compatibility)),
    Check("hopf-unit-zeta-inverse", HOPF_CAP, lambda M, T: conv.verify_unit_zeta_inverse(M)),
    Check("tutte-functional", hopf.TUTTE_FUNCTIONAL_CAP, _hopf(hopf.check_tutte_functional)),
]


def run_checks(M: Matroid) -> list[CheckResult]:
    T = eng.reference_tutte(M)
    results = []
    for check in CHECKS:
        if M.n > check.cap:
            results.append(CheckResult(check.name, SKIPPED, f"n > {check.cap}"))
            continue
        try:
            ok = check.run(M, T)
            detail = ""
        except MatroidError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check.name, PASS if ok else FAIL, detail))
    return results
