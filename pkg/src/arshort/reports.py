"""Serialization of verdicts, certificates and reports to JSON-ready dicts."""

from __future__ import annotations

from .exactla import format_rational
from .formats import FORMAT_VERSION, algebra_to_dict, matrix_to_json, module_to_dict, morphism_to_dict
from .shortchain import Corollary12Report, ShortChainVerdict, ShortCycleVerdict, Theorem1Certificate


def _clean(value):
    """Recursively turn tuples and non-string keys into JSON-friendly values."""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def verdict_to_dict(v: ShortChainVerdict) -> dict:
    out = {
        "format": FORMAT_VERSION,
        "kind": "short_chain_verdict",
        "answer": v.answer,
        "module": module_to_dict(v.module),
        "bound": v.bound,
        "provenance": _clean(v.provenance),
    }
    if v.is_middle:
        out["witness"] = module_to_dict(v.witness)
        out["tau_witness"] = module_to_dict(v.tau_witness)
        out["hom_witness_to_module"] = morphism_to_dict(v.hom_in)
        out["hom_module_to_tau_witness"] = morphism_to_dict(v.hom_out)
        out["witness_verified"] = v.verify()
    return out


def cycle_verdict_to_dict(v: ShortCycleVerdict) -> dict:
    out = {
        "format": FORMAT_VERSION,
        "kind": "short_cycle_verdict",
        "on_short_cycle": v.on_cycle,
        "complete": v.complete,
        "module": module_to_dict(v.module),
        "provenance": _clean(v.provenance),
    }
    if v.on_cycle:
        out["witness"] = module_to_dict(v.witness)
        out["forward"] = morphism_to_dict(v.forward)
        out["backward"] = morphism_to_dict(v.backward)
    return out


def certificate_to_dict(c: Theorem1Certificate, checks: dict | None = None) -> dict:
    checks = checks if checks is not None else c.verify()
    frag = c.fragment
    return {
        "format": FORMAT_VERSION,
        "kind": "theorem1_certificate",
        "input": {"algebra": algebra_to_dict(c.algebra), "module": module_to_dict(c.module)},
        "verdict": {"answer": c.verdict.answer, "bound": c.verdict.bound,
                    "provenance": _clean(c.verdict.provenance)},
        "quotient": {
            "algebra": algebra_to_dict(c.quotient),
            "module": module_to_dict(c.module_over_quotient),
            "annihilator_dimension": len(c.quotient_map.ideal_basis),
            "images": matrix_to_json(c.quotient_map.images),
        },
        "fragment": {"status": frag.status, "size": len(frag.vertices)},
        "section": {
            "vertices": list(c.section.vertices),
            "labels": [frag.label(i) for i in c.section.vertices],
            "modules": [module_to_dict(frag.vertices[i]) for i in c.section.vertices],
        },
        "H": algebra_to_dict(c.h),
        "T": module_to_dict(c.t),
        "tilting": {
            "summand_count": c.tilting.summand_count,
            "rank": c.tilting.rank,
            "summands": [module_to_dict(p) for p in c.tilting.summands],
            "ext_evidence": [{"i": i, "j": j, "dim_hom_tj_tau_ti": d}
                             for (i, j), d in sorted(c.tilting.ext_evidence.items())],
        },
        "B": algebra_to_dict(c.b.algebra),
        "phi": matrix_to_json(c.phi),
        "I": {"multiplicities": dict(c.injective_multiplicities), "module": module_to_dict(c.i)},
        "image": module_to_dict(c.image),
        "transported_module": module_to_dict(c.transported_module),
        "module_witness": morphism_to_dict(c.module_witness),
        "fingerprints": {"quotient_vs_B": c.quotient_fingerprint, "tilted_vs_quotient": c.tilted_fingerprint},
        "injective_solutions": c.all_injective_solutions,
        "checks": checks,
    }


def not_applicable_to_dict(v: ShortChainVerdict) -> dict:
    return {"format": FORMAT_VERSION, "kind": "not_applicable", "verdict": verdict_to_dict(v)}


def corollary12_to_dict(r: Corollary12Report) -> dict:
    e = r.endomorphism
    return {
        "format": FORMAT_VERSION,
        "kind": "corollary12_report",
        "module": module_to_dict(r.module),
        "verdict": {"answer": r.verdict.answer, "bound": r.verdict.bound,
                    "provenance": _clean(r.verdict.provenance)},
        "strength": r.strength,
        "endomorphism_algebra": algebra_to_dict(e.algebra),
        "summand_multiplicities": list(e.multiplicities),
        "hereditary": r.hereditary,
    }


def rational(x) -> str:
    return format_rational(x)
