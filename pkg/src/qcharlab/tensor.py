"""Tensor products of a minimal affinization with an extreme-node KR module.

The product q-character is computed by brute-force convolution and its
dominant spectrum D extracted and sorted along the loop-root order.  On top
of that, the classifier evaluates the closed-form reducibility conditions,
derives the extra simple factor's highest loop weight through several
independent formulas, and cross-checks every prediction against D.  Brute
force is always the arbiter: a disagreement raises TheoremViolation, which
signals an implementation bug and is counted as a violation by the sweep
harness.

Normal form is an increasing minimal affinization tensored with a KR module
at the last node.  The three other direction/node combinations are settled
by transporting the problem through a duality map (star for decreasing-at-1,
kappa for increasing-at-1, minus for decreasing-at-n), classifying the
transported normal-form problem, and carrying the answer back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput, TheoremViolation
from .lweight import (
    LMonomial,
    expand_lroot_path,
    le,
    transform,
    y_string,
)
from .minaff import (
    KRSpec,
    MinAffSpec,
    QChar,
    _seg,
    drinfeld_of_spec,
    highest_tableau,
    qchar,
    qchar_kr,
    recognize_kr,
    recognize_minaff,
)
from .tableaux import Shape, Tableau, monomial_of_tableau


@dataclass(frozen=True)
class Resonance:
    """A solution of one of the two spectral resonance equations.

    ``kind`` is "i" (KR string meets a node string) or "ii" (top node string
    meets the KR string).  A resonance makes the dominant spectrum grow past
    the top term; the tensor product is reducible only when ``kprime`` also
    clears the tighter bound recorded in CaseTag.  ``p`` is None for kind
    "ii" resonances whose kprime exceeds the weight total.
    """

    kind: str
    kprime: int
    p: Optional[int]


@dataclass(frozen=True)
class CaseTag:
    kind: str  # "irreducible" | "case_i" | "case_ii"
    p: Optional[int] = None
    kprime: Optional[int] = None

    @property
    def reducible(self) -> bool:
        return self.kind != "irreducible"

    def case_json(self) -> Optional[str]:
        return {"irreducible": "irred", "case_i": "i", "case_ii": "ii"}[self.kind]


@dataclass(frozen=True)
class DominantSpectrum:
    entries: tuple[tuple[LMonomial, int], ...]
    totally_ordered: bool


@dataclass(frozen=True)
class TensorReport:
    """Classifier output for one (minimal affinization, KR module) pair."""

    variant: str
    spec: MinAffSpec
    kr: KRSpec
    lam: LMonomial
    D: tuple[tuple[LMonomial, int], ...]
    totally_ordered: bool
    tag: CaseTag
    resonance: Optional[Resonance]
    lambda_prime: Optional[LMonomial]
    socle_head: dict[str, tuple[LMonomial, LMonomial]]

    def to_json(self) -> dict:
        return {
            "n": self.spec.n,
            "variant": self.variant,
            "spec": self.spec.to_json(),
            "kr": self.kr.to_json(),
            "lambda": self.lam.to_json(),
            "D": [{"m": m.to_json(), "mult": c} for m, c in self.D],
            "totally_ordered": self.totally_ordered,
            "case": self.tag.case_json(),
            "p": self.tag.p,
            "kprime": self.tag.kprime,
            "resonance": None
            if self.resonance is None
            else {
                "kind": self.resonance.kind,
                "kprime": self.resonance.kprime,
                "p": self.resonance.p,
            },
            "lambda_prime": None if self.lambda_prime is None else self.lambda_prime.to_json(),
            "socle_head": {
                order: {"socle": s.to_json(), "head": h.to_json()}
                for order, (s, h) in self.socle_head.items()
            },
        }


def product_qchar(q1: QChar, q2: QChar) -> QChar:
    """Convolution product of two q-characters (tensor product character)."""
    if q1.n != q2.n:
        raise InvalidInput(f"rank mismatch: {q1.n} != {q2.n}")
    terms: dict[LMonomial, int] = {}
    for m1, c1 in q1.terms().items():
        for m2, c2 in q2.terms().items():
            m = m1 * m2
            terms[m] = terms.get(m, 0) + c1 * c2
    return QChar(q1.n, terms)


def dominant_spectrum(qc: QChar) -> DominantSpectrum:
    """Dominant terms of a q-character, sorted descending along the order.

    The sort key strictly refines the loop-root partial order; the flag
    records whether consecutive entries are actually comparable, i.e.
    whether the spectrum is a chain.
    """
    entries = qc.dominant_terms()
    chain = all(
        le(entries[j + 1][0], entries[j][0]) for j in range(len(entries) - 1)
    )
    return DominantSpectrum(tuple(entries), chain)


# ---------------------------------------------------------------------------
# distinguished tableau families
# ---------------------------------------------------------------------------


def family_S(spec: MinAffSpec, c: int, f: int, p: int) -> tuple[Tableau, LMonomial]:
    """Raise the last boxes of columns c..f of the highest tableau to content p.

    Columns of the (increasing) highest tableau are numbered from 1, longest
    first.  Conventions: f < c, c beyond the last column, or p = 0 return the
    highest tableau unchanged; f past the last column is clamped.  A p that
    does not exceed the length of column c would not raise anything and is
    rejected.

    The returned monomial is verified against the inverse loop-root product
    over the modified columns before being handed back.
    """
    if spec.direction != "inc":
        raise InvalidInput("the raised-box family is built from increasing specs")
    if c < 1:
        raise InvalidInput(f"column index must be positive, got {c}")
    if not 0 <= p <= spec.n + 1:
        raise InvalidInput(f"content bound {p} out of range 0..{spec.n + 1}")
    S = highest_tableau(spec)
    omega = drinfeld_of_spec(spec)
    total = spec.total
    if p == 0 or c > total or f < c:
        return S, omega
    f = min(f, total)
    lengths = [k for k, _ in S.shape]
    if p <= lengths[c - 1]:
        raise InvalidInput(
            f"content bound {p} does not exceed the length {lengths[c - 1]} of column {c}"
        )
    anchors = spec.anchors()
    new_cols = list(S.cols)
    roots = LMonomial.identity(spec.n)
    for j in range(c, f + 1):
        lj = lengths[j - 1]
        col = list(new_cols[j - 1])
        col[-1] = p
        new_cols[j - 1] = tuple(col)
        dj = j - _seg(spec.lam, lj + 1, spec.n)
        roots = roots * expand_lroot_path(
            spec.n, lj, p - 1, anchors[lj] + 2 * (spec.lam[lj - 1] - dj)
        )
    t = Tableau(spec.n, S.shape, tuple(new_cols))
    mono = monomial_of_tableau(t)
    if mono != omega * roots.inverse():
        raise TheoremViolation(
            f"box product and loop-root product disagree for S_({c},{f},{p})"
        )
    return t, mono


def family_T(kr: KRSpec, m: int, p: int) -> tuple[Tableau, LMonomial]:
    """The KR tableau with a gap at the p-th box of each of the first m columns.

    Conventions: m is clamped to the number of columns, and m = 0 or
    p = n + 1 return the highest tableau.  The monomial is computed from the
    boxes and verified against both the inverse loop-root product and the
    closed three-string form before being returned.
    """
    n = kr.n
    if kr.node != n:
        raise InvalidInput("the gap family is built from KR modules at the last node")
    if not 1 <= p <= n + 1:
        raise InvalidInput(f"gap position {p} out of range 1..{n + 1}")
    m = min(max(m, 0), kr.k)
    r, k = kr.r, kr.k
    shape = Shape(tuple((n, r + 1 + 2 * (k - j) - n) for j in range(1, k + 1)))
    plain = tuple(range(1, n + 1))
    gapped = tuple(range(1, p)) + tuple(range(p + 1, n + 2))
    varpi = kr.drinfeld()
    if p == n + 1 or m == 0:
        return Tableau(n, shape, (plain,) * k), varpi
    cols = (gapped,) * m + (plain,) * (k - m)
    t = Tableau(n, shape, cols)
    mono = monomial_of_tableau(t)

    roots = LMonomial.identity(n)
    for l in range(1, m + 1):
        roots = roots * expand_lroot_path(n, n, p, r + 2 * (k - l))
    from_roots = varpi * roots.inverse()

    s = r + 2 * (k - p) + n - 1
    closed = y_string(n, p, s + p - 2 * m + 3, m).inverse() * y_string(n, n, r, k - m)
    if p >= 2:
        closed = closed * y_string(n, p - 1, s + p - 2 * (m - 1), m)
    if not (mono == from_roots == closed):
        raise TheoremViolation(f"gap-family formulas disagree for T_({m},{p})")
    return t, mono


# ---------------------------------------------------------------------------
# resonance conditions
# ---------------------------------------------------------------------------


def _even_quotient(num: int) -> Optional[int]:
    return num // 2 if num % 2 == 0 else None


def _suffix_argmax(lam: tuple[int, ...], kp: int) -> Optional[int]:
    """max{i : lam_i + ... + lam_n >= kp}, None when kp exceeds the total."""
    if kp > sum(lam):
        return None
    return max(i for i in range(1, len(lam) + 1) if _seg(lam, i, len(lam)) >= kp)


def _prefix_argmin(lam: tuple[int, ...], kp: int) -> Optional[int]:
    """min{i : lam_1 + ... + lam_i >= kp}, None when kp exceeds the total."""
    if kp > sum(lam):
        return None
    return min(i for i in range(1, len(lam) + 1) if _seg(lam, 1, i) >= kp)


def _resonance(variant: str, spec: MinAffSpec, kr: KRSpec) -> Optional[Resonance]:
    """Solve the variant's two resonance equations.

    Kind "i" requires 1 <= k' <= lam_p at a supported node p, kind "ii"
    requires 1 <= k' <= k; the solution is unique and the two kinds exclude
    each other.  Reducibility needs the extra caps (k' <= k resp. k' <= |lam|),
    which is decided by the caller; a resonance beyond the cap still grows
    the dominant spectrum.
    """
    n, lam = spec.n, spec.lam
    anchors = spec.anchors()
    r, k = kr.r, kr.k
    i0, i1 = spec.i0, spec.i1

    cands_i: list[tuple[int, int]] = []
    for p in spec.supp():
        if variant == "normal":
            num = r + 2 * k + n - p + 2 - anchors[p]
        elif variant == "a":
            num = r + 2 * k + p + 1 - anchors[p]
        elif variant == "b":
            num = anchors[p] + 2 * lam[p - 1] + p + 1 - r
        else:  # "c"
            num = anchors[p] + 2 * lam[p - 1] + n - p + 2 - r
        kp = _even_quotient(num)
        if kp is not None and 1 <= kp <= lam[p - 1]:
            cands_i.append((p, kp))
    if len(cands_i) > 1:
        raise TheoremViolation(f"resonance pair not unique: {cands_i}")

    if variant == "normal":
        num = anchors[i0] + 2 * lam[i0 - 1] + n - i0 + 2 - r
    elif variant == "a":
        num = anchors[i1] + 2 * lam[i1 - 1] + i1 + 1 - r
    elif variant == "b":
        num = r + 2 * k + i1 + 1 - anchors[i1]
    else:  # "c"
        num = r + 2 * k + n - i0 + 2 - anchors[i0]
    kp_ii = _even_quotient(num)
    res_ii: Optional[Resonance] = None
    if kp_ii is not None and 1 <= kp_ii <= k:
        if variant in ("normal", "c"):
            p_ii = _suffix_argmax(lam, kp_ii)
        else:
            p_ii = _prefix_argmin(lam, kp_ii)
        res_ii = Resonance("ii", kp_ii, p_ii)

    if cands_i and res_ii is not None:
        raise TheoremViolation("resonance conditions (i) and (ii) hold simultaneously")
    if cands_i:
        p, kp = cands_i[0]
        return Resonance("i", kp, p)
    return res_ii


def _tag_of(spec: MinAffSpec, kr: KRSpec, res: Optional[Resonance]) -> CaseTag:
    if res is None:
        return CaseTag("irreducible")
    if res.kind == "i":
        if res.kprime <= kr.k:
            return CaseTag("case_i", res.p, res.kprime)
    else:
        if res.kprime <= spec.total:
            return CaseTag("case_ii", res.p, res.kprime)
    return CaseTag("irreducible")


def expected_dominants(
    spec: MinAffSpec, kr: KRSpec, resonance: Optional[Resonance]
) -> list[LMonomial]:
    """Closed-form dominant spectrum of the normal-form product, descending.

    Without a resonance this is the top term alone.  A kind-"ii" resonance
    contributes the raised-column family times the KR top term; a kind-"i"
    resonance interleaves the raised-column and gap families.  Duplicates
    arising from the clamping conventions collapse.
    """
    omega = drinfeld_of_spec(spec)
    varpi = kr.drinfeld()
    if resonance is None:
        return [omega * varpi]
    total = spec.total
    out: list[LMonomial] = []
    if resonance.kind == "ii":
        for f in range(resonance.kprime + 1):
            out.append(family_S(spec, 1, min(f, total), spec.n + 1)[1] * varpi)
    else:
        p, kp = resonance.p, resonance.kprime
        c = 1 + _seg(spec.lam, p, spec.n)
        m_max = min(kr.k, _seg(spec.lam, 1, p - 1) + kp)
        for m in range(m_max + 1):
            gap_part = family_T(kr, m, p)[1]
            for eps in (1, 0):
                f = c + m - kp - eps
                if f < c:
                    s_part = omega
                else:
                    s_part = family_S(spec, c, min(f, total), p)[1]
                out.append(s_part * gap_part)
    return list(dict.fromkeys(out))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _socle_head(
    variant: str, tag: CaseTag, lam: LMonomial, lam_prime: Optional[LMonomial]
) -> dict[str, tuple[LMonomial, LMonomial]]:
    """Socle/head pairs for both tensor orders (V = affinization first).

    For variants normal and a, condition (i) makes V highest-loop-weight
    (socle the extra factor, head the top factor) and condition (ii) the
    reverse; for b and c the roles of (i) and (ii) swap.  The rule for c is
    forced by the rank-1 collapse onto the normal form: transporting the
    exact sequences through dual-then-pullback composes two order swaps, so
    c patterns with b, not with a.
    """
    if not tag.reducible:
        return {"V": (lam, lam), "Vprime": (lam, lam)}
    assert lam_prime is not None
    v_hlw = tag.kind == "case_i"
    if variant in ("b", "c"):
        v_hlw = not v_hlw
    if v_hlw:
        return {"V": (lam_prime, lam), "Vprime": (lam, lam_prime)}
    return {"V": (lam, lam_prime), "Vprime": (lam_prime, lam)}


def _lambda_prime_normal(
    spec: MinAffSpec, kr: KRSpec, tag: CaseTag, lam: LMonomial
) -> LMonomial:
    """Extra factor's highest loop weight, computed two independent ways."""
    n = spec.n
    p, kp = tag.p, tag.kprime
    assert p is not None and kp is not None
    omega = drinfeld_of_spec(spec)
    varpi = kr.drinfeld()
    if tag.kind == "case_i":
        via_family = omega * family_T(kr, kp, p)[1]
        roots = LMonomial.identity(n)
        for l in range(1, kp + 1):
            roots = roots * expand_lroot_path(n, n, p, kr.r + 2 * (kr.k - l))
        via_alpha = lam * roots.inverse()
    else:
        via_family = family_S(spec, 1, kp, n + 1)[1] * varpi
        anchors = spec.anchors()
        roots = LMonomial.identity(n)
        for i in range(p + 1, spec.i0 + 1):
            for mm in range(1, spec.lam[i - 1] + 1):
                roots = roots * expand_lroot_path(
                    n, i, n, anchors[i] + 2 * (spec.lam[i - 1] - mm)
                )
        d = kp - _seg(spec.lam, p + 1, n)
        for mm in range(1, d + 1):
            roots = roots * expand_lroot_path(
                n, p, n, anchors[p] + 2 * (spec.lam[p - 1] - mm)
            )
        via_alpha = lam * roots.inverse()
    if via_family != via_alpha:
        raise TheoremViolation(
            f"extra-factor formulas disagree: {via_family} vs {via_alpha}"
        )
    return via_family


def classify_normal(spec: MinAffSpec, kr: KRSpec) -> TensorReport:
    """Classify (increasing affinization) x (KR at the last node).

    Computes D by brute force, solves the resonance equations, checks D
    against the closed-form list, derives the extra factor independently and
    verifies its position in D (condition (i): just below the top family;
    condition (ii): the minimum of D).
    """
    if spec.direction != "inc":
        raise InvalidInput("normal form requires an increasing spec")
    if kr.n != spec.n or kr.node != spec.n:
        raise InvalidInput("normal form requires a KR module at the last node")
    omega = drinfeld_of_spec(spec)
    varpi = kr.drinfeld()
    lam = omega * varpi

    spectrum = dominant_spectrum(product_qchar(qchar(spec), qchar_kr(kr)))
    if not spectrum.totally_ordered:
        raise TheoremViolation("dominant spectrum is not a chain")
    if any(c != 1 for _, c in spectrum.entries):
        raise TheoremViolation("dominant spectrum has a multiplicity above one")
    D = [m for m, _ in spectrum.entries]

    res = _resonance("normal", spec, kr)
    expected = expected_dominants(spec, kr, res)
    if D != expected:
        raise TheoremViolation(
            "brute-force dominant spectrum disagrees with the closed form: "
            f"{[str(m) for m in D]} vs {[str(m) for m in expected]}"
        )
    tag = _tag_of(spec, kr, res)

    lam_prime: Optional[LMonomial] = None
    if tag.reducible:
        lam_prime = _lambda_prime_normal(spec, kr, tag, lam)
        pos = tag.kprime if tag.kind == "case_i" else len(D) - 1
        if pos >= len(D) or D[pos] != lam_prime:
            raise TheoremViolation(
                f"extra factor {lam_prime} not at position {pos} of D"
            )

    return TensorReport(
        variant="normal",
        spec=spec,
        kr=kr,
        lam=lam,
        D=spectrum.entries,
        totally_ordered=spectrum.totally_ordered,
        tag=tag,
        resonance=res,
        lambda_prime=lam_prime,
        socle_head=_socle_head("normal", tag, lam, lam_prime),
    )


_VARIANT_TRANSFORMS = {"a": ("star", "star_inv"), "b": ("kappa", "kappa"), "c": ("minus", "minus")}


def _dispatch_variant(spec: MinAffSpec, kr: KRSpec) -> str:
    if kr.node == spec.n:
        return "normal" if spec.direction == "inc" else "c"
    return "a" if spec.direction == "dec" else "b"


def _map_resonance(variant: str, n: int, res: Optional[Resonance]) -> Optional[Resonance]:
    """Carry a normal-form resonance back to the variant's node labels."""
    if res is None or variant in ("normal", "c"):
        return res
    p = None if res.p is None else n + 1 - res.p
    return Resonance(res.kind, res.kprime, p)


def classify_variant(spec: MinAffSpec, kr: KRSpec) -> TensorReport:
    """Classify any direction/node combination.

    Normal form is classified directly.  Otherwise the pair is transported
    through the branch's duality map, classified in normal form, and the
    answer carried back; the branch's own closed-form conditions are
    evaluated directly on the untransformed data and must agree with the
    transported classification.  D is always recomputed by brute force on
    the variant's own q-characters and must contain the transported extra
    factor.
    """
    if kr.n != spec.n:
        raise InvalidInput("rank mismatch between spec and KR module")
    variant = _dispatch_variant(spec, kr)
    if variant == "normal":
        return classify_normal(spec, kr)
    fwd, inv = _VARIANT_TRANSFORMS[variant]

    omega = drinfeld_of_spec(spec)
    varpi = kr.drinfeld()
    lam = omega * varpi

    rec = recognize_minaff(transform(omega, inv))
    if rec is None or -1 not in rec.epsilons:
        raise TheoremViolation("transported affinization is not increasing")
    spec_t = rec.spec("inc")
    kr_t = recognize_kr(transform(varpi, inv))
    if kr_t is None or kr_t.node != spec.n:
        raise TheoremViolation("transported KR module is not at the last node")
    rep_t = classify_normal(spec_t, kr_t)

    res_direct = _resonance(variant, spec, kr)
    if res_direct != _map_resonance(variant, spec.n, rep_t.resonance):
        raise TheoremViolation(
            f"direct conditions {res_direct} disagree with transported "
            f"{rep_t.resonance} on variant {variant}"
        )
    tag_direct = _tag_of(spec, kr, res_direct)
    if tag_direct.reducible != rep_t.tag.reducible:
        raise TheoremViolation("reducibility verdicts disagree across the transport")

    spectrum = dominant_spectrum(product_qchar(qchar(spec), qchar_kr(kr)))
    D = [m for m, _ in spectrum.entries]

    if variant == "a":
        # star commutes with q-characters termwise, so D must transport exactly
        expected = [transform(m, "star") for m, _ in rep_t.D]
        if D != expected:
            raise TheoremViolation("dominant spectrum does not transport under star")

    lam_prime: Optional[LMonomial] = None
    if tag_direct.reducible:
        assert rep_t.lambda_prime is not None
        lam_prime = transform(rep_t.lambda_prime, fwd)
        if lam_prime not in D:
            raise TheoremViolation(
                f"transported extra factor {lam_prime} missing from brute-force "
                f"D = {[str(m) for m in D]} (possible spectral-shift discrepancy)"
            )

    return TensorReport(
        variant=variant,
        spec=spec,
        kr=kr,
        lam=lam,
        D=spectrum.entries,
        totally_ordered=spectrum.totally_ordered,
        tag=tag_direct,
        resonance=res_direct,
        lambda_prime=lam_prime,
        socle_head=_socle_head(variant, tag_direct, lam, lam_prime),
    )


def resonance_window(spec: MinAffSpec, node: int, k: int, pad: int = 2) -> range:
    """Inclusive range of KR anchors covering every resonance of (spec, k).

    Solves both resonance equations for r over all admissible (p, k') and
    pads by ``pad`` on each side so that nearby irreducible points are swept
    as well.
    """
    if pad < 0:
        raise InvalidInput("pad must be nonnegative")
    variant = _dispatch_variant(spec, KRSpec(spec.n, node, 0, k))
    n, lam = spec.n, spec.lam
    anchors = spec.anchors()
    i0, i1 = spec.i0, spec.i1
    values: list[int] = []
    for p in spec.supp():
        for kp in range(1, lam[p - 1] + 1):
            if variant == "normal":
                values.append(anchors[p] + 2 * kp - 2 * k - n + p - 2)
            elif variant == "a":
                values.append(anchors[p] + 2 * kp - 2 * k - p - 1)
            elif variant == "b":
                values.append(anchors[p] + 2 * lam[p - 1] + p + 1 - 2 * kp)
            else:
                values.append(anchors[p] + 2 * lam[p - 1] + n - p + 2 - 2 * kp)
    for kp in range(1, k + 1):
        if variant == "normal":
            values.append(anchors[i0] + 2 * lam[i0 - 1] + n - i0 + 2 - 2 * kp)
        elif variant == "a":
            values.append(anchors[i1] + 2 * lam[i1 - 1] + i1 + 1 - 2 * kp)
        elif variant == "b":
            values.append(anchors[i1] + 2 * kp - 2 * k - i1 - 1)
        else:
            values.append(anchors[i0] + 2 * kp - 2 * k - n + i0 - 2)
    return range(min(values) - pad, max(values) + pad + 1)
