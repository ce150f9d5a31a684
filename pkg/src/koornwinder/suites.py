"""Named verification suites shared by the command line and the test-suite.

Each suite takes a :class:`Config` and returns a list of
:class:`~koornwinder.polynomials.Check` records.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import closedforms as cf
from . import torusquad as tq
from .heckeops import check_relations, random_poly
from .params import DEFAULT, ParamSet
from .polynomials import (
    Check,
    check_central_character,
    check_duality,
    check_duality_sym,
    check_eigen,
    check_expansions,
    check_gwcf,
    check_idempotents,
    check_intertwiner,
    check_spectral_action,
    check_Ti_action,
    compute_ns,
    compute_sym,
    in_downset,
)
from .rootsys import is_dominant, kappa, weights_with_plus_sum
from .spectrum import inverse_point, x0


@dataclass
class Config:
    n: int = 2
    params: ParamSet = DEFAULT
    box: int = 2
    seed: int = 0
    trials: int = 20
    tol_abs: float = 1e-8
    tol_rel: float = 1e-6
    grid: tq.GridSpec | None = None
    quad_box: int = 1

    def weights(self) -> list[tuple[int, ...]]:
        return weights_with_plus_sum(self.n, self.box)

    def dominant_weights(self) -> list[tuple[int, ...]]:
        return [lam for lam in self.weights() if is_dominant(lam)]

    def quad_grid(self) -> tq.GridSpec:
        return self.grid if self.grid is not None else tq.auto_grid(self.params)


def relations(cfg: Config) -> list[Check]:
    results = check_relations(cfg.params, cfg.n, trials=cfg.trials, seed=cfg.seed)
    return [Check(r.relation, r.passed, {} if r.passed else {"witness": str(r.witness)}) for r in results]


def eigen(cfg: Config) -> list[Check]:
    out = []
    for lam in cfg.weights():
        kp = compute_ns(lam, cfg.params)
        ok = kp.poly.coeff(lam) == 1 and in_downset(kp.poly, lam) and check_eigen(kp) and kp.info["kernel_dim"] == 1
        out.append(Check(f"eigenpolynomial {lam}", ok, {"terms": len(kp.poly.terms)}))
    return out


def hecke_structure(cfg: Config) -> list[Check]:
    p, n = cfg.params, cfg.n
    out = []
    for lam in cfg.weights():
        for i in range(1, n + 1):
            out.append(check_Ti_action(lam, i, p))
            out.append(check_intertwiner(lam, i, p))
        for i in range(n + 1):
            out.append(check_spectral_action(lam, i, p))
        out.append(check_central_character(lam, p))
    for lam in cfg.dominant_weights():
        out.extend(check_expansions(lam, p))
    rng = random.Random(cfg.seed)
    for k in range(3):
        for c in check_idempotents(random_poly(n, rng, degree=2, terms=4), p):
            c.name = f"{c.name} (sample {k})"
            out.append(c)
    return out


def duality(cfg: Config) -> list[Check]:
    p = cfg.params
    out = [check_duality(lam, mu, p) for lam in cfg.weights() for mu in cfg.weights()]
    dom = cfg.dominant_weights()
    out += [check_duality_sym(lam, mu, p) for lam in dom for mu in dom]
    return out


def evaluation(cfg: Config) -> list[Check]:
    p, n = cfg.params, cfg.n
    point = x0(p, n)
    out = []
    for lam in cfg.weights():
        solver = compute_ns(lam, p).poly.eval_at(inverse_point(point))
        formula = cf.eval_formula_ns(lam, p)
        out.append(Check(f"evaluation of P{lam}", solver == formula, {"solver": str(solver), "formula": str(formula)}))
    for lam in cfg.dominant_weights():
        solver = compute_sym(lam, p).poly.eval_at(point)
        roots, poch = cf.eval_sym_roots(lam, p), cf.eval_sym_pochhammer(lam, p)
        out.append(Check(f"symmetric evaluation of P+{lam}", solver == roots == poch,
                         {"solver": str(solver), "root_product": str(roots), "pochhammer": str(poch)}))
    return out


def character_formula(cfg: Config) -> list[Check]:
    return [check_gwcf(lam, cfg.params) for lam in cfg.dominant_weights()]


def _norm_relation_weights(cfg: Config) -> list[tuple[int, ...]]:
    k = kappa(cfg.n)
    return [tuple(a + b for a, b in zip(mu, k)) for mu in cfg.dominant_weights()]


def norm_relations(cfg: Config) -> list[Check]:
    """Closed-form route, then a quadrature route when the parameters allow it."""
    p, n = cfg.params, cfg.n
    out = []
    for lam in _norm_relation_weights(cfg):
        r = cf.norm_relation_check(lam, p, cfg.tol_rel)
        out.append(Check(f"norm relation {lam} (closed forms)", r.passed,
                         {"left": r.left, "right": float(r.right), "rel_error": r.rel_error, "tol": cfg.tol_rel}))
    try:
        p.check_quadrature()
        p.qshift().check_quadrature()
    except ValueError:
        return out
    grid = cfg.quad_grid()
    shifted = p.qshift()
    for lam in _norm_relation_weights(cfg)[: max(1, cfg.quad_box)]:
        lower = tuple(a - b for a, b in zip(lam, kappa(n)))
        upper = compute_sym(lam, p).poly
        below = compute_sym(lower, shifted).poly
        num = tq.pairing(upper, upper, p, grid, symmetric=True)
        den = tq.pairing(below, below, shifted, grid, symmetric=True)
        left = float(cf.t_sigma(p, n) ** 2) * num / den
        right = float(cf.norm_relation_sides(lam, p)["right"])
        err = abs(left - right) / abs(right)
        out.append(Check(f"norm relation {lam} (quadrature)", err < cfg.tol_rel,
                         {"left": tq.as_json_number(left), "right": right, "rel_error": err, "tol": cfg.tol_rel, "N": grid.N}))
    return out


def _quad_weights(cfg: Config) -> list[tuple[int, ...]]:
    return weights_with_plus_sum(cfg.n, cfg.quad_box)


def biorthogonality(cfg: Config) -> list[Check]:
    return tq.biorthogonality_check(_quad_weights(cfg), cfg.params, cfg.quad_grid(), cfg.tol_abs, cfg.tol_rel)


def orthogonality(cfg: Config) -> list[Check]:
    lams = weights_with_plus_sum(cfg.n, cfg.quad_box + 1)
    return tq.orthogonality_check(lams, cfg.params, cfg.quad_grid(), cfg.tol_abs, cfg.tol_rel)


def constant_term(cfg: Config) -> list[Check]:
    return [tq.constant_term_check(cfg.params, cfg.n, cfg.quad_grid(), tol_rel=min(cfg.tol_abs, cfg.tol_rel))]


def symmetric_reduction(cfg: Config) -> list[Check]:
    grid = cfg.quad_grid()
    out = tq.weight_identity_check(cfg.params, cfg.n, seed=cfg.seed, M=grid.M)
    out += tq.symmetric_reduction_check(cfg.params, cfg.n, grid, trials=5, seed=cfg.seed, tol_rel=cfg.tol_abs)
    return out


def adjointness(cfg: Config) -> list[Check]:
    grid = cfg.quad_grid()
    return [tq.adjoint_check(i, cfg.params, cfg.n, grid, trials=3, seed=cfg.seed, tol_abs=cfg.tol_abs)
            for i in range(cfg.n + 1)]


def convergence(cfg: Config) -> list[Check]:
    return [tq.convergence_check(cfg.params, cfg.n, _quad_weights(cfg), cfg.quad_grid())]


def residues(cfg: Config) -> list[Check]:
    n = cfg.n
    lams = [lam for lam in _quad_weights(cfg)] + [tuple([1] * n)]
    out = tq.residue_check(sorted(set(lams)), cfg.params, cfg.quad_grid(), cfg.tol_rel)
    out.append(tq.shifted_residue_check(cfg.params, n, cfg.quad_grid(), cfg.tol_rel))
    return out


def transform(cfg: Config) -> list[Check]:
    top = (1,) + (0,) * (cfg.n - 1)
    return tq.transform_roundtrip(tq.roundtrip_support(cfg.n, top), cfg.params, cfg.quad_grid(), cfg.tol_rel)


@dataclass(frozen=True)
class Suite:
    name: str
    identity: str
    numeric: bool
    run: Callable[[Config], list[Check]]


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("relations", "defining relations of the double affine Hecke algebra in the difference-reflection representation", False, relations),
        Suite("eigen", "monic joint Y-eigenpolynomials supported on the downset", False, eigen),
        Suite("hecke", "Hecke generators and intertwiners on eigenpolynomials, central character, orbit expansions, idempotents", False, hecke_structure),
        Suite("duality", "duality between polynomial degree and spectral parameter, non-symmetric and symmetric", False, duality),
        Suite("evaluation", "closed-form values at the base point, non-symmetric and two symmetric routes", False, evaluation),
        Suite("character-formula", "anti-symmetric polynomial as Weyl denominator times shifted symmetric polynomial", False, character_formula),
        Suite("norm-relations", "quadratic norms of symmetric polynomials at t and at the shifted parameters", False, norm_relations),
        Suite("biorthogonality", "vanishing of the non-symmetric pairing off the diagonal and its diagonal values", True, biorthogonality),
        Suite("orthogonality", "vanishing of the symmetric pairing off the diagonal and its diagonal values", True, orthogonality),
        Suite("constant-term", "constant term of the symmetric weight against Gustafson's product", True, constant_term),
        Suite("symmetric-reduction", "reduction of the non-symmetric pairing to the symmetric one on invariants", True, symmetric_reduction),
        Suite("adjointness", "adjoint of each T_i is the inverse generator at inverted parameters", True, adjointness),
        Suite("convergence", "stability of pairings under grid refinement", True, convergence),
        Suite("residues", "discrete weights as iterated residues of the dual weights", True, residues),
        Suite("transform", "discrete inverse transform undoes the torus transform up to a constant", True, transform),
    )
}


def run_suite(name: str, cfg: Config) -> list[Check]:
    return SUITES[name].run(cfg)
