"""Batteries of checks behind the CLI commands, and fixture property vectors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arings import coring_from_separable_aring, firmness_checks, induce_firm_module, product_from_cointegral
from .checks import FAIL, INAPPLICABLE, INFEASIBLE, PASS, Check, compare
from .corings import (
    Coring,
    check_coring,
    check_retraction,
    cointegral_status,
    gamma_to_pi,
    grouplike_comodule,
    is_cosplit,
    is_grouplike,
    regular_comodule,
    solve_cointegral,
)
from .duality import (
    check_dual_ring,
    dual_ring,
    is_biseparable_coring,
    is_centrally_projective,
    is_coring_frobenius,
    is_frobenius_ext,
    is_separable_ext,
    is_split_ext,
    transfer_checks,
)
from .extension import RingExtension, check_extension
from .findim import is_fgp
from .morita import MoritaContext, adjunction_checks, dual_bases, end_c_of_a, is_strict, omega_theta


@dataclass
class Section:
    name: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)


def _verdict(name: str, ok: bool, detail=None) -> Check:
    return Check(name, PASS if ok else INFEASIBLE, detail or {})


def coring_sections(c: Coring, seed: int = 0) -> list[Section]:
    """Axioms, coseparability, cosplitting, projectivity, biseparability, Frobenius, transfer."""
    out = [Section("coring axioms", check_coring(c))]
    if out[0].failed or c.counit is None:
        return out
    sec = Section("coseparable", [cointegral_status(c)])
    gi = solve_cointegral(c, seed=seed)
    if gi is not None:
        sec.checks += gi.checks
        pi = gamma_to_pi(c, gi.gamma)
        sec.checks += check_retraction(c, pi)
        induced = product_from_cointegral(c, gi.gamma)
        sec.checks += induced.checks
        back, round_trip = coring_from_separable_aring(induced.ring, c.coproduct)
        sec.checks += [Check(f"round trip: {x.name}", x.status, x.detail) for x in round_trip]
        sec.checks.append(compare("round trip reproduces coproduct", back.coproduct, c.coproduct, c.label, c.cc.label))
        reg = induce_firm_module(c, gi.gamma, regular_comodule(c), induced.ring)
        sec.checks += [Check(f"C as module: {x.name}", x.status, x.detail) for x in firmness_checks(reg)]
        sec.data["family_dim"] = gi.family_dim
    out.append(sec)
    cs = is_cosplit(c)
    sec = Section("cosplit", [_verdict("cosplit", cs is not None)])
    if cs is not None:
        sec.checks += cs.checks
    out.append(sec)
    fl, fr = is_fgp(c.carrier, "left"), is_fgp(c.carrier, "right")
    out.append(Section("projective", [_verdict("fgp left", fl is not None), _verdict("fgp right", fr is not None)]))
    bis = is_biseparable_coring(c)
    out.append(Section("biseparable", bis.checks() + [_verdict("biseparable", bis.biseparable)]))
    fro = is_coring_frobenius(c, cross_check=True, seed=seed)
    sec = Section("frobenius", [Check("frobenius", fro.status, {"route": fro.route})])
    if fro.agree is not None:
        sec.checks.append(Check("routes agree", PASS if fro.agree else FAIL))
    if fro.result is not None and fro.result.certificate is not None:
        sec.checks += fro.result.certificate.checks
    out.append(sec)
    cp = is_centrally_projective(c)
    sec = Section("centrally projective", [_verdict("centrally projective", cp is not None)])
    if cp is not None:
        sec.data["n"] = cp.n
        if cs is not None and gi is not None:
            sec.checks.append(Check("central projectivity forces Frobenius", PASS if fro.frobenius else FAIL))
    out.append(sec)
    duals = Section("duals")
    for side in ("right", "left"):
        duals.checks += [Check(f"{side} dual: {x.name}", x.status, x.detail) for x in check_dual_ring(dual_ring(c, side))]
    out.append(duals)
    out.append(Section("transfer", transfer_checks(c, [regular_comodule(c)])))
    return out


def extension_sections(ext: RingExtension, seed: int = 0) -> list[Section]:
    out = [Section("extension axioms", check_extension(ext))]
    if out[0].failed:
        return out
    e = is_split_ext(ext)
    s = is_separable_ext(ext)
    sec = Section("extension properties", [_verdict("split", e is not None), _verdict("separable", s is not None)])
    if s is not None:
        sec.checks += s.checks
    fr = is_frobenius_ext(ext, seed=seed)
    sec.checks.append(_verdict("frobenius extension", fr.frobenius, {"reason": fr.reason} if fr.reason else None))
    if fr.certificate is not None:
        sec.checks += fr.certificate.checks
    out.append(sec)
    return out


def morita_sections(c: Coring, g, seed: int | None = None) -> list[Section]:
    """The context of a cointegral and grouplike, end to end."""
    gl = is_grouplike(c, g)
    out = [Section("grouplike", [gl])]
    if not gl:
        return out
    gi = solve_cointegral(c, seed=seed)
    if gi is None:
        out.append(Section("cointegral", [Check("coseparable", INFEASIBLE)]))
        return out
    ctx = MoritaContext(c, gi.gamma, g)
    st = is_strict(ctx)
    summ = ctx.summary()
    summ.update(strict=st.strict, g_left_unit=st.g_left_unit)
    out.append(Section("context", list(ctx.checks), summ))
    out.append(Section("strictness", st.checks))
    for which in ("A", "C"):
        out.append(Section(f"omega/theta {which}", omega_theta(ctx, which).checks))
    db = dual_bases(ctx)
    out.append(Section("dual bases", db.checks if db else [Check("dual bases", INFEASIBLE)], {"pairs": len(db.a_elems) if db else 0}))
    out.append(Section("adjunction", adjunction_checks(ctx)))
    end = end_c_of_a(ctx)
    out.append(
        Section(
            "End_C(A)",
            [Check("End_C(A) is B", PASS if end.isomorphic else FAIL, {"end_dim": end.end_dim, "b_dim": end.b_dim})],
        )
    )
    return out


def property_vector(c: Coring, ext: RingExtension | None = None, g=None, seed: int = 0) -> dict:
    """The fixture-level yes/no answers frozen as golden data."""
    v: dict = {"coring": all(x.status != FAIL for x in check_coring(c))}
    if not v["coring"] or c.counit is None:
        return v
    gi = solve_cointegral(c)
    v["coseparable"] = gi is not None
    v["cosplit"] = is_cosplit(c) is not None
    v["fgp_left"] = is_fgp(c.carrier, "left") is not None
    v["fgp_right"] = is_fgp(c.carrier, "right") is not None
    v["biseparable"] = is_biseparable_coring(c).biseparable
    v["frobenius"] = is_coring_frobenius(c, seed=seed).status
    cp = is_centrally_projective(c)
    v["centrally_projective"] = cp.n if cp else None
    if ext is not None:
        v["split"] = is_split_ext(ext) is not None
        v["separable"] = is_separable_ext(ext) is not None
        v["ext_frobenius"] = is_frobenius_ext(ext, seed=seed).frobenius
    if g is not None:
        v["grouplike"] = bool(is_grouplike(c, g))
        if v["grouplike"] and gi is not None:
            ctx = MoritaContext(c, gi.gamma, g)
            st = is_strict(ctx)
            v.update(g_left_unit=st.g_left_unit, strict=st.strict, B_dim=ctx.B.dim, Q_dim=ctx.Q.dim)
    return v


def firm_module_checks(c: Coring, g, seed: int | None = None) -> list[Check]:
    """λ-exactness and firmness for C and for A with the grouplike coaction."""
    gi = solve_cointegral(c, seed=seed)
    if gi is None:
        return [Check("firm modules", INAPPLICABLE, {"reason": "no cointegral"})]
    out = []
    for name, m in (("C", regular_comodule(c)), ("A", grouplike_comodule(c, g))):
        mod = induce_firm_module(c, gi.gamma, m)
        out += [Check(f"{name}: {x.name}", x.status, x.detail) for x in firmness_checks(mod)]
    return out
