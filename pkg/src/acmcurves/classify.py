"""The aCM verdict engine.

classify_numeric decides from (degree, genus) alone: the unconditional ACM
pairs, the pairs where a non-aCM curve exists and a witness would settle
the instance, and everything else as OUT_OF_TABLE with the necessary
conditions and unchecked cohomological obligations recorded in the trace.
check_witness verifies a proposed decomposition against the numeric clauses
of the matching equivalence rule, and search_witness enumerates candidate
decompositions over a model's registered effective classes.

Soundness policy: absence of a witness never upgrades CONDITIONAL to ACM,
because emptiness of the relevant linear systems is not decidable from
lattice data; only the tabulated pairs receive an unconditional ACM.
"""

from dataclasses import dataclass
from enum import Enum

from .divisors import (
    Decomposition,
    certify_effective,
    degree,
    genus,
    pair,
)


class Status(Enum):
    ACM = "ACM"
    NOT_ACM = "NOT_ACM"
    CONDITIONAL = "CONDITIONAL"
    OUT_OF_TABLE = "OUT_OF_TABLE"
    INVALID = "INVALID"


@dataclass(frozen=True)
class TraceLine:
    name: str
    value: object = None
    expected: object = None
    ok: bool | None = None


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: str | None
    trace: tuple = ()
    witness: Decomposition | None = None


def render_verdict(v):
    """Line-oriented report: status line, then indented trace lines."""
    head = f"{v.status.value}"
    if v.rule:
        head += f" rule={v.rule}"
    lines = [head]
    for t in v.trace:
        if t.expected is not None:
            lines.append(f"  check {t.name}: {t.value} (expected {t.expected})")
        elif t.value is not None:
            lines.append(f"  check {t.name}: {t.value}")
        else:
            lines.append(f"  note {t.name}")
    if v.witness is not None:
        lines.append(f"  witness: {v.witness}")
    return "\n".join(lines)


def verdict_json(v):
    return {
        "status": v.status.value,
        "rule": v.rule,
        "trace": [
            {"name": t.name, "value": _plain(t.value), "expected": _plain(t.expected), "ok": t.ok}
            for t in v.trace
        ],
        "witness": None
        if v.witness is None
        else [{"class": str(cls), "mult": mult} for cls, mult in v.witness.parts],
    }


def _plain(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


# (k, deg) -> rule, for the unconditional ACM pairs on a quintic
QUINTIC_ACM = {
    (2, 1): "Thm1.2(i)",
    (2, 4): "Thm1.2(i)",
    (3, 2): "Thm1.2(ii)",
    (3, 3): "Thm1.2(ii)",
    (3, 5): "Thm1.2(ii)",
    (3, 6): "Thm1.2(ii)",
    (4, 3): "Thm1.2(iii)",
    (4, 4): "Thm1.2(iii)",
}

# pairs also settled by a dedicated statement; recorded in the trace
QUINTIC_ACM_ALIASES = {
    (4, 4): "Prop4.2",
    (3, 5): "Prop4.3",
    (3, 6): "Cor4.1",
}

# (k, deg) -> witness rule that would certify a non-aCM curve
QUINTIC_CONDITIONAL = {
    (0, 10): "P4.5",
    (1, 9): "C4.2",
    (2, 7): "P4.4",
    (2, 8): "C4.3",
    (3, 7): "P4.7",
    (4, 5): "P4.8",
    (4, 6): "P4.6",
}

# (genus, deg) -> rule, for the quartic table
QUARTIC_ACM = {
    (0, 1): "Prop2.1(a)",
    (0, 2): "Prop2.1(a)",
    (0, 3): "Prop2.1(a)",
    (1, 3): "Prop2.1(b)",
    (1, 4): "Prop2.1(b)",
    (2, 5): "Prop2.1(c)",
}

QUARTIC_CONDITIONAL = {(3, 6): "P2.2"}


def nonacm_exists(d, k):
    """Whether a non-aCM curve of degree d and k-invariant k exists on a
    smooth quintic (table lookup)."""
    return (k, d) in QUINTIC_CONDITIONAL


def _quintic_obligations(k, deg):
    """Unchecked cohomological obligations attached to OUT_OF_TABLE traces."""
    notes = []
    if k in (0, 1):
        notes.append(TraceLine(f"unchecked: h0(O_C(D-C)) = 0 required when k = {k}"))
    if k == 2 and deg == 7:
        notes.append(TraceLine("unchecked: h0(O_X(2C-D)) = 1 required"))
    if k == 2 and deg == 8:
        notes.append(TraceLine("unchecked: h0(O_C(D-C)) = 0 and h0(O_C(D)) = 3 required"))
    if k in (3, 4) and 8 - k <= deg <= 10 - k:
        notes.append(TraceLine(f"unchecked: h0(O_C(D)) = {5 - k} required"))
    return notes


def classify_numeric(kind, deg, genus_value):
    """Verdict from (degree, genus) alone on a quartic or quintic."""
    if kind not in ("quartic", "quintic"):
        raise ValueError(f"kind must be 'quartic' or 'quintic', got {kind!r}")
    if not isinstance(deg, int) or not isinstance(genus_value, int):
        raise ValueError("degree and genus must be integers")
    if deg <= 0:
        return Verdict(
            Status.INVALID,
            None,
            (TraceLine("degree must be positive", deg, ">= 1", False),),
        )
    if kind == "quartic":
        return _classify_quartic(deg, genus_value)
    return _classify_quintic(deg, genus_value)


def _classify_quintic(deg, g):
    k = deg + 1 - g
    trace = [TraceLine("k = deg + 1 - genus", k, None, None)]
    key = (k, deg)
    if key in QUINTIC_ACM:
        rule = QUINTIC_ACM[key]
        alias = QUINTIC_ACM_ALIASES.get(key)
        if alias:
            trace.append(TraceLine(f"also established by {alias}"))
        return Verdict(Status.ACM, rule, tuple(trace))
    if key in QUINTIC_CONDITIONAL:
        prop = QUINTIC_CONDITIONAL[key]
        trace.append(
            TraceLine(
                f"a non-aCM curve of this degree and genus exists; "
                f"a {prop} witness would certify this instance"
            )
        )
        return Verdict(Status.CONDITIONAL, prop, tuple(trace))
    trace.append(TraceLine("0 <= k <= 4", k, "in [0, 4]", 0 <= k <= 4))
    if 0 <= k <= 4:
        if k in (0, 1):
            trace.append(TraceLine("deg = 10 - k", deg, 10 - k, deg == 10 - k))
        elif k == 2:
            trace.append(
                TraceLine("deg in {1,4,7,8}", deg, "{1, 4, 7, 8}", deg in (1, 4, 7, 8))
            )
        else:
            window = k - 1 <= deg <= 10 - k and not (k == 3 and deg == 4)
            expected = f"in [{k - 1}, {10 - k}]" + (", deg != 4" if k == 3 else "")
            trace.append(TraceLine("degree window", deg, expected, window))
        trace.extend(_quintic_obligations(k, deg))
    trace.append(
        TraceLine(
            "outside both tables: no initialized aCM line bundle has these "
            "invariants, but a non-initialized aCM twist is not excluded"
        )
    )
    return Verdict(Status.OUT_OF_TABLE, "Thm1.1", tuple(trace))


def _classify_quartic(deg, g):
    key = (g, deg)
    trace = []
    if key in QUARTIC_ACM:
        trace.append(
            TraceLine("assumption: |D-C| is empty (initialization hypothesis)")
        )
        return Verdict(Status.ACM, QUARTIC_ACM[key], tuple(trace))
    if key in QUARTIC_CONDITIONAL:
        prop = QUARTIC_CONDITIONAL[key]
        trace.append(
            TraceLine(
                f"degree 6, genus 3 is settled by a {prop} witness: a skew line "
                f"pair in |D-C| or |2C-D| certifies non-aCM"
            )
        )
        return Verdict(Status.CONDITIONAL, prop, tuple(trace))
    trace.append(TraceLine("(genus, degree) outside the quartic table", key))
    return Verdict(Status.OUT_OF_TABLE, "Prop2.1", tuple(trace))


# -- witness machinery -------------------------------------------------


@dataclass(frozen=True)
class ClauseSpec:
    clause_id: str
    shape: str  # see _SHAPE_MATCHERS
    twist: str  # D | D-C | 2C-D | 3C-D


@dataclass(frozen=True)
class WitnessSpec:
    prop_id: str
    display: str
    surface_degree: int
    deg: int
    genus: int
    clauses: tuple


WITNESS_SPECS = {
    "P2.2": WitnessSpec(
        "P2.2", "Prop2.2", 4, 6, 3,
        (
            ClauseSpec("b", "two_skew_lines", "D-C"),
            ClauseSpec("b", "two_skew_lines", "2C-D"),
        ),
    ),
    "P4.4": WitnessSpec(
        "P4.4", "Prop4.4", 5, 7, 6,
        (ClauseSpec("b", "two_skew_lines", "D-C"),),
    ),
    "P4.5": WitnessSpec(
        "P4.5", "Prop4.5", 5, 10, 11,
        (
            ClauseSpec("b", "effective_sum", "D-C"),
            ClauseSpec("b", "effective_sum", "3C-D"),
        ),
    ),
    "P4.6": WitnessSpec(
        "P4.6", "Prop4.6", 5, 6, 3,
        (
            ClauseSpec("b1", "effective_sum", "2C-D"),
            ClauseSpec("b2", "quartic_plus_two_skew_lines", "D"),
            ClauseSpec("b3", "quartic_plus_conic", "D"),
        ),
    ),
    "C4.2": WitnessSpec(
        "C4.2", "Cor4.2", 5, 9, 9,
        (
            ClauseSpec("b1", "effective_sum", "D-C"),
            ClauseSpec("b2", "quartic_plus_two_skew_lines", "3C-D"),
            ClauseSpec("b3", "quartic_plus_conic", "3C-D"),
        ),
    ),
    "P4.7": WitnessSpec(
        "P4.7", "Prop4.7", 5, 7, 5,
        (ClauseSpec("b", "line_plus_conic", "2C-D"),),
    ),
    "C4.3": WitnessSpec(
        "C4.3", "Cor4.3", 5, 8, 7,
        (ClauseSpec("b", "line_plus_conic", "D-C"),),
    ),
    "P4.8": WitnessSpec(
        "P4.8", "Prop4.8", 5, 5, 2,
        (
            ClauseSpec("b", "quartic_plus_line", "D"),
            ClauseSpec("b", "quartic_plus_line", "2C-D"),
        ),
    ),
}


def _twist_class(tag, target):
    H = target.model.hyperplane_class
    if tag == "D":
        return target
    if tag == "D-C":
        return target - H
    if tag == "2C-D":
        return 2 * H - target
    if tag == "3C-D":
        return 3 * H - target
    raise ValueError(f"unknown twist tag {tag!r}")


_TWIST_TEXT = {"D": "|D|", "D-C": "|D-C|", "2C-D": "|2C-D|", "3C-D": "|3C-D|"}


def _is_line(cls):
    return degree(cls) == 1 and genus(cls) == 0


def _sum_check(parts, twist, tag, trace):
    total = parts[0].model.zero_class()
    for p in parts:
        total = total + p
    ok = total == twist
    trace.append(
        TraceLine(f"witness sum lies in {_TWIST_TEXT[tag]}", str(total), str(twist), ok)
    )
    return ok


def _match_two_skew_lines(parts, twist, tag, trace):
    if len(parts) != 2:
        trace.append(TraceLine("witness shape", f"{len(parts)} parts", "2 lines", False))
        return False
    ok = True
    for i, p in enumerate(parts, 1):
        good = _is_line(p)
        trace.append(
            TraceLine(
                f"Gamma{i} is a line",
                f"deg {degree(p)}, genus {genus(p)}",
                "deg 1, genus 0",
                good,
            )
        )
        ok = ok and good
    prod = pair(parts[0], parts[1])
    trace.append(TraceLine("Gamma1.Gamma2", prod, 0, prod == 0))
    ok = ok and prod == 0
    return _sum_check(parts, twist, tag, trace) and ok


def _pick_quartic(parts):
    for i, p in enumerate(parts):
        if degree(p) == 4 and genus(p) == 3:
            return i
    return None


def _match_quartic_plus_two_skew_lines(parts, twist, tag, trace):
    if len(parts) != 3:
        trace.append(
            TraceLine("witness shape", f"{len(parts)} parts", "plane quartic + 2 lines", False)
        )
        return False
    qi = _pick_quartic(parts)
    trace.append(
        TraceLine(
            "some part is a plane quartic",
            "found" if qi is not None else "none with deg 4, genus 3",
            "deg 4, genus 3",
            qi is not None,
        )
    )
    if qi is None:
        return False
    rest = [p for i, p in enumerate(parts) if i != qi]
    ok = True
    for i, p in enumerate(rest, 1):
        good = _is_line(p)
        trace.append(
            TraceLine(
                f"Gamma{i} is a line",
                f"deg {degree(p)}, genus {genus(p)}",
                "deg 1, genus 0",
                good,
            )
        )
        ok = ok and good
    prod = pair(rest[0], rest[1])
    trace.append(TraceLine("Gamma1.Gamma2", prod, 0, prod == 0))
    ok = ok and prod == 0
    return _sum_check(parts, twist, tag, trace) and ok


def _match_quartic_plus_conic(parts, twist, tag, trace):
    if len(parts) < 2:
        trace.append(
            TraceLine("witness shape", f"{len(parts)} parts", "plane quartic + conic", False)
        )
        return False
    qi = _pick_quartic(parts)
    trace.append(
        TraceLine(
            "some part is a plane quartic",
            "found" if qi is not None else "none with deg 4, genus 3",
            "deg 4, genus 3",
            qi is not None,
        )
    )
    if qi is None:
        return False
    delta = None
    for i, p in enumerate(parts):
        if i != qi:
            delta = p if delta is None else delta + p
    dd = pair(delta, delta)
    trace.append(TraceLine("Delta^2", dd, -4, dd == -4))
    ddeg = degree(delta)
    trace.append(TraceLine("deg Delta", ddeg, 2, ddeg == 2))
    ok = dd == -4 and ddeg == 2
    return _sum_check(parts, twist, tag, trace) and ok


def _match_line_plus_conic(parts, twist, tag, trace):
    # one part of degree 1 plays Gamma1; the rest sum to Gamma2
    for gi in range(len(parts)):
        g1 = parts[gi]
        if degree(g1) != 1:
            continue
        g2 = None
        for i, p in enumerate(parts):
            if i != gi:
                g2 = p if g2 is None else g2 + p
        if g2 is None:
            continue
        sub = []
        c1 = pair(g1, g1)
        sub.append(TraceLine("Gamma1^2", c1, -3, c1 == -3))
        d2 = degree(g2)
        sub.append(TraceLine("deg Gamma2", d2, 2, d2 == 2))
        c2 = pair(g2, g2)
        sub.append(TraceLine("Gamma2^2", c2, -4, c2 == -4))
        prod = pair(g1, g2)
        sub.append(TraceLine("Gamma1.Gamma2", prod, 0, prod == 0))
        if all(t.ok for t in sub):
            trace.extend(sub)
            return _sum_check(parts, twist, tag, trace)
        if gi == len(parts) - 1 or all(degree(p) != 1 for p in parts[gi + 1 :]):
            trace.extend(sub)
            return False
    trace.append(
        TraceLine("witness shape", "no degree-1 part", "line + degree-2 divisor", False)
    )
    return False


def _match_quartic_plus_line(parts, twist, tag, trace):
    if len(parts) != 2:
        trace.append(
            TraceLine("witness shape", f"{len(parts)} parts", "plane quartic + line", False)
        )
        return False
    qi = _pick_quartic(parts)
    trace.append(
        TraceLine(
            "some part is a plane quartic",
            "found" if qi is not None else "none with deg 4, genus 3",
            "deg 4, genus 3",
            qi is not None,
        )
    )
    if qi is None:
        return False
    dt, gamma = parts[qi], parts[1 - qi]
    good = _is_line(gamma)
    trace.append(
        TraceLine(
            "Gamma is a line",
            f"deg {degree(gamma)}, genus {genus(gamma)}",
            "deg 1, genus 0",
            good,
        )
    )
    prod = pair(dt, gamma)
    trace.append(TraceLine("Dtilde.Gamma", prod, 0, prod == 0))
    ok = good and prod == 0
    return _sum_check(parts, twist, tag, trace) and ok


def _match_effective_sum(parts, twist, tag, trace):
    # parts were already certified effective; only the sum matters here
    return _sum_check(parts, twist, tag, trace)


_SHAPE_MATCHERS = {
    "two_skew_lines": _match_two_skew_lines,
    "quartic_plus_two_skew_lines": _match_quartic_plus_two_skew_lines,
    "quartic_plus_conic": _match_quartic_plus_conic,
    "line_plus_conic": _match_line_plus_conic,
    "quartic_plus_line": _match_quartic_plus_line,
    "effective_sum": _match_effective_sum,
}


def _witness_spec(prop_id):
    spec = WITNESS_SPECS.get(prop_id)
    if spec is None:
        raise ValueError(
            f"unknown witness rule {prop_id!r}; choose from {sorted(WITNESS_SPECS)}"
        )
    return spec


def check_witness(prop_id, target, witness):
    """Verify a proposed non-aCM witness decomposition against a rule.

    Returns NOT_ACM when some clause is fully satisfied, CONDITIONAL with
    the failing checks in the trace when the witness is rejected, and
    INVALID when the target does not fit the rule's header.
    """
    spec = _witness_spec(prop_id)
    trace = [
        TraceLine(
            "effectivity policy: parts must be nonnegative combinations of "
            "registered effective classes or certified degree-1 classes"
        )
    ]
    if target.model.degree != spec.surface_degree:
        trace.append(
            TraceLine(
                "surface degree",
                target.model.degree,
                spec.surface_degree,
                False,
            )
        )
        return Verdict(Status.INVALID, spec.prop_id, tuple(trace))
    tdeg, tgen = degree(target), genus(target)
    header_ok = (tdeg, tgen) == (spec.deg, spec.genus)
    trace.append(
        TraceLine(
            "target (deg, genus)", (tdeg, tgen), (spec.deg, spec.genus), header_ok
        )
    )
    if not header_ok:
        return Verdict(Status.INVALID, spec.prop_id, tuple(trace))
    if witness.model is not target.model:
        raise ValueError("witness parts and target must share one model instance")
    parts = witness.expanded()
    for p in parts:
        if p.is_zero():
            trace.append(TraceLine("witness part", "0", "nonzero effective class", False))
            return Verdict(Status.CONDITIONAL, spec.prop_id, tuple(trace))
        cert = certify_effective(p)
        if not cert.ok:
            trace.append(
                TraceLine(f"effectivity of {p}", cert.reason, "certified", False)
            )
            return Verdict(Status.CONDITIONAL, spec.prop_id, tuple(trace))
    for clause in spec.clauses:
        sub = []
        twist = _twist_class(clause.twist, target)
        matched = _SHAPE_MATCHERS[clause.shape](parts, twist, clause.twist, sub)
        label = f"{spec.display}({clause.clause_id})"
        if matched:
            trace.append(TraceLine(f"clause {label} satisfied"))
            trace.extend(sub)
            return Verdict(Status.NOT_ACM, label, tuple(trace), witness)
        trace.append(TraceLine(f"clause {label} not satisfied"))
        trace.extend(sub)
    trace.append(TraceLine("witness rejected; the verdict stays conditional"))
    return Verdict(Status.CONDITIONAL, spec.prop_id, tuple(trace))


def _line_parts_from(residual):
    """Read a nonnegative atlas-line vector as (class, mult) parts, or None."""
    model = residual.model
    if residual.coeffs[0] != 0 or any(c < 0 for c in residual.coeffs[1:]):
        return None
    parts = []
    for i, c in enumerate(residual.coeffs[1:], start=1):
        if c:
            parts.append((model.gen_class(model.generators[i]), c))
    return tuple(parts) or None


def search_witness(prop_id, target, bound=None):
    """Bounded deterministic search for a witness over the model's atlas.

    Candidates are assembled from H, the atlas lines, and the residual
    plane curves H - L, in lexicographic generator order; the first
    candidate accepted by check_witness wins.  Returning None means the
    search was exhausted without a certificate; it does NOT prove the
    curve aCM.
    """
    spec = _witness_spec(prop_id)
    model = target.model
    if model.lines is None:
        raise ValueError(f"model {model.name} has no line atlas to search")
    if model.degree != spec.surface_degree:
        return None
    if (degree(target), genus(target)) != (spec.deg, spec.genus):
        return None
    H = model.hyperplane_class
    for clause in spec.clauses:
        twist = _twist_class(clause.twist, target)
        for cand in _candidates(clause, twist, model, H):
            if bound is not None and degree(cand.total) > bound:
                continue
            if check_witness(prop_id, target, cand).status is Status.NOT_ACM:
                return cand
    return None


def _candidates(clause, twist, model, H):
    shape = clause.shape
    if shape in ("two_skew_lines", "line_plus_conic"):
        parts = _line_parts_from(twist)
        if parts is not None:
            yield Decomposition(parts)
        return
    if shape in ("quartic_plus_two_skew_lines", "quartic_plus_conic", "quartic_plus_line"):
        for i, name in enumerate(model.generators[1:], start=1):
            quartic = H - model.gen_class(name)
            rest = _line_parts_from(twist - quartic)
            if rest is not None:
                yield Decomposition(((quartic, 1),) + rest)
        return
    if shape == "effective_sum":
        cert = certify_effective(twist)
        if cert.ok and cert.parts:
            yield Decomposition(cert.parts)
        return
    raise AssertionError(f"unhandled shape {shape}")
